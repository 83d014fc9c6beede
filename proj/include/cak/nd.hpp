#pragma once

// Neighborhood-diversity solver. With V split into modules of (colored) twins, a position is
// determined up to isomorphism by how many vertices remain in each module, and it suffices to play
// one edge per adjacent module pair (or inside a clique module) between minimum-id alive members.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cak/graph.hpp"
#include "cak/outcome.hpp"
#include "cak/parameters.hpp"
#include "cak/search.hpp"

namespace cak {

struct NdOptions : SolveOptions {
  /// Only play edges whose endpoints both lie in clique modules (internally adjacent modules of
  /// size >= 2). Used to explore the sub-game behind the module-count lower bound.
  bool restrict_clique_edges = false;
};

struct NdKey {
  std::vector<std::uint32_t> counts;  // aligned with the root partition's modules
  Player turn = Player::B;
  friend bool operator==(const NdKey&, const NdKey&) = default;
};

namespace detail {

class NdModel {
 public:
  using State = VertexSet;
  using Key = std::string;
  using KeyHash = std::hash<std::string>;

  NdModel(const ColoredGraph& g, ModulePartition partition, bool restrict_cliques)
      : g_(g), partition_(std::move(partition)), module_of_(g.order(), 0) {
    const std::size_t k = partition_.size();
    between_.assign(k * k, kNoEdge);
    allowed_.assign(k, !restrict_cliques);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& mi = partition_.modules[i];
      for (Vertex v : mi) module_of_[v] = static_cast<std::uint32_t>(i);
      for (std::size_t j = 0; j < k; ++j) {
        const auto& mj = partition_.modules[j];
        if (i != j) between_[i * k + j] = g.cell(mi.front(), mj.front());
        else if (mi.size() >= 2) between_[i * k + i] = g.cell(mi[0], mi[1]);
      }
      if (restrict_cliques && mi.size() >= 2 && between_[i * k + i] != kNoEdge) allowed_[i] = true;
    }
  }

  const ModulePartition& partition() const { return partition_; }

  NdKey counts(const VertexSet& alive, Player turn) const {
    NdKey key{std::vector<std::uint32_t>(partition_.size(), 0), turn};
    alive.for_each([&](Vertex v) { ++key.counts[module_of_[v]]; });
    return key;
  }

  Key key(const VertexSet& alive, Player turn) const {
    const NdKey k = counts(alive, turn);
    std::string s(1, static_cast<char>(turn));
    for (auto c : k.counts)
      for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((c >> (8 * b)) & 0xFF));
    return s;
  }

  void moves(const VertexSet& alive, Player turn, std::vector<Edge>& out) const {
    const std::size_t k = partition_.size();
    // two smallest alive members of each module
    std::vector<std::optional<Vertex>> first(k), second(k);
    alive.for_each([&](Vertex v) {
      const auto m = module_of_[v];
      if (!first[m]) first[m] = v;
      else if (!second[m]) second[m] = v;
    });
    for (std::size_t i = 0; i < k; ++i) {
      if (!first[i] || !allowed_[i]) continue;
      const Cell inside = between_[i * k + i];
      if (second[i] && inside != kNoEdge && playable(static_cast<Color>(inside), turn))
        out.emplace_back(*first[i], *second[i]);
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!first[j] || !allowed_[j]) continue;
        const Cell c = between_[i * k + j];
        if (c != kNoEdge && playable(static_cast<Color>(c), turn)) out.emplace_back(*first[i], *first[j]);
      }
    }
    std::sort(out.begin(), out.end());
  }

  VertexSet child(const VertexSet& alive, Edge e) const {
    VertexSet next = alive;
    next.erase(e.u);
    next.erase(e.v);
    return next;
  }

 private:
  const ColoredGraph& g_;
  ModulePartition partition_;
  std::vector<std::uint32_t> module_of_;
  std::vector<Cell> between_;
  std::vector<bool> allowed_;
};

inline ModulePartition resolve_partition(const ColoredGraph& g, const std::optional<ModulePartition>& partition) {
  ModulePartition p = partition ? *partition : nd_partition(g, false);
  if (!is_valid_partition(g, p, true)) throw GraphError("partition is not a valid colored-twin partition");
  for (auto& m : p.modules) std::sort(m.begin(), m.end());
  return p;
}

}  // namespace detail

/// 2 * prod(|M_i| + 1): the number of (count vector, turn) keys.
inline double nd_key_bound(const ModulePartition& p) {
  double b = 2.0;
  for (const auto& m : p.modules) b *= static_cast<double>(m.size() + 1);
  return b;
}

inline NdKey nd_key(const ColoredGraph& g, const VertexSet& alive, const ModulePartition& p, Player turn) {
  return detail::NdModel(g, detail::resolve_partition(g, p), false).counts(alive, turn);
}

inline std::vector<Edge> nd_candidate_moves(const ColoredGraph& g, const VertexSet& alive, const ModulePartition& p,
                                            Player turn, bool restrict_clique_edges = false) {
  std::vector<Edge> out;
  detail::NdModel(g, detail::resolve_partition(g, p), restrict_clique_edges).moves(alive, turn, out);
  return out;
}

inline Outcome solve_nd(const ColoredGraph& g, const VertexSet& alive, Player turn,
                        const std::optional<ModulePartition>& partition = std::nullopt, NdOptions opts = {}) {
  detail::NdModel model(g, detail::resolve_partition(g, partition), opts.restrict_clique_edges);
  return detail::MemoSearch<detail::NdModel>(model, opts).solve(alive, turn);
}

inline Outcome solve_nd(const ColoredGraph& g, Player turn, const std::optional<ModulePartition>& partition = std::nullopt,
                        NdOptions opts = {}) {
  return solve_nd(g, all_vertices(g), turn, partition, opts);
}

inline SearchStats count_nd_positions(const ColoredGraph& g, Player turn,
                                      const std::optional<ModulePartition>& partition = std::nullopt,
                                      bool restrict_clique_edges = false) {
  NdOptions opts;
  opts.short_circuit = false;
  opts.restrict_clique_edges = restrict_clique_edges;
  return solve_nd(g, turn, partition, opts).stats;
}

}  // namespace cak
