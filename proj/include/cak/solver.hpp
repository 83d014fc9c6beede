#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cak/graph.hpp"
#include "cak/naive.hpp"
#include "cak/nd.hpp"
#include "cak/parameters.hpp"
#include "cak/subset.hpp"
#include "cak/tree.hpp"
#include "cak/vc.hpp"

namespace cak {

enum class Engine { Naive, Subset, Vc, Nd, Tree, Auto };

inline std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Naive: return "naive";
    case Engine::Subset: return "subset";
    case Engine::Vc: return "vc";
    case Engine::Nd: return "nd";
    case Engine::Tree: return "tree";
    case Engine::Auto: return "auto";
  }
  return "?";
}

inline std::optional<Engine> parse_engine(std::string_view name) {
  for (Engine e : {Engine::Naive, Engine::Subset, Engine::Vc, Engine::Nd, Engine::Tree, Engine::Auto})
    if (engine_name(e) == name) return e;
  return std::nullopt;
}

struct EngineConfig {
  std::size_t max_n = 32;
  std::optional<VertexCover> cover;
  std::optional<ModulePartition> partition;
  bool count_mode = false;  // disable short-circuit everywhere
  bool restrict_clique_edges = false;  // nd only
  std::size_t auto_vc_threshold = 12;
};

/// Auto choice: tree for gray forests, vc when the minimum cover is small, subset otherwise.
inline Engine choose_engine(const ColoredGraph& g, const EngineConfig& cfg) {
  const VertexSet all = all_vertices(g);
  if (g.all_gray() && is_forest(g, all)) return Engine::Tree;
  if (min_vertex_cover(g).size() <= cfg.auto_vc_threshold) return Engine::Vc;
  return Engine::Subset;
}

struct EngineRun {
  Engine engine;  // the engine that actually ran (never Auto)
  Outcome outcome;
};

inline EngineRun run_engine(Engine engine, const ColoredGraph& g, Player turn, const EngineConfig& cfg = {}) {
  if (engine == Engine::Auto) engine = choose_engine(g, cfg);
  SolveOptions base;
  base.short_circuit = !cfg.count_mode;
  switch (engine) {
    case Engine::Naive: return {engine, solve_naive(g, turn, base)};
    case Engine::Subset: {
      SubsetOptions o;
      o.short_circuit = base.short_circuit;
      o.max_n = cfg.max_n;
      return {engine, solve_subset(g, turn, o)};
    }
    case Engine::Vc: return {engine, solve_vc(g, turn, cfg.cover, base)};
    case Engine::Nd: {
      NdOptions o;
      o.short_circuit = base.short_circuit;
      o.restrict_clique_edges = cfg.restrict_clique_edges;
      return {engine, solve_nd(g, turn, cfg.partition, o)};
    }
    case Engine::Tree: return {engine, solve_tree(g, turn)};
    case Engine::Auto: break;
  }
  throw Error("unreachable engine");
}

}  // namespace cak
