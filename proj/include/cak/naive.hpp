#pragma once

// Reference evaluator: the plain winner recursion over all playable edges, with no memoization and
// no decomposition. Exponential; meant as the oracle for small instances.

#include <vector>

#include "cak/graph.hpp"
#include "cak/outcome.hpp"

namespace cak {
namespace detail {

class NaiveSearch {
 public:
  NaiveSearch(const ColoredGraph& g, SolveOptions opts) : g_(g), opts_(opts) {}

  bool mover_wins(const VertexSet& alive, Player turn) {
    ++stats.node_expansions;
    bool win = false;
    for (const auto& e : g_.edges()) {
      if (!playable(e.color, turn) || !alive.contains(e.u) || !alive.contains(e.v)) continue;
      VertexSet child = alive;
      child.erase(e.u);
      child.erase(e.v);
      if (!mover_wins(child, opponent(turn))) {
        win = true;
        if (opts_.short_circuit) break;
      }
    }
    return win;
  }

  Outcome solve(const VertexSet& alive, Player turn) {
    StopWatch clock;
    ++stats.node_expansions;
    Outcome out;
    for (const auto& e : g_.edges()) {
      if (!playable(e.color, turn) || !alive.contains(e.u) || !alive.contains(e.v)) continue;
      VertexSet child = alive;
      child.erase(e.u);
      child.erase(e.v);
      if (!mover_wins(child, opponent(turn)) && !out.winning_move) {
        out.winning_move = e.edge();
        if (opts_.short_circuit) break;
      }
    }
    out.winner = out.winning_move ? turn : opponent(turn);
    out.stats = stats;
    out.stats.elapsed = clock.elapsed();
    return out;
  }

  SearchStats stats;

 private:
  const ColoredGraph& g_;
  SolveOptions opts_;
};

inline std::uint32_t naive_component_grundy(const ColoredGraph& g, const VertexSet& comp);

/// XOR of component values of the alive subgraph.
inline std::uint32_t naive_position_grundy(const ColoredGraph& g, const VertexSet& alive) {
  std::uint32_t x = 0;
  for (const auto& comp : components(g, alive)) {
    if (comp.size() < 2) continue;
    x ^= naive_component_grundy(g, VertexSet::of(g.order(), comp));
  }
  return x;
}

inline std::uint32_t naive_component_grundy(const ColoredGraph& g, const VertexSet& comp) {
  std::vector<std::uint32_t> options;
  for (const auto& e : g.edges()) {
    if (!comp.contains(e.u) || !comp.contains(e.v)) continue;
    VertexSet child = comp;
    child.erase(e.u);
    child.erase(e.v);
    options.push_back(naive_position_grundy(g, child));
  }
  return mex(options);
}

}  // namespace detail

/// Winner of the position by exhaustive recursion; winning_move is the smallest winning edge.
inline Outcome solve_naive(const ColoredGraph& g, const VertexSet& alive, Player turn, SolveOptions opts = {}) {
  return detail::NaiveSearch(g, opts).solve(alive, turn);
}

inline Outcome solve_naive(const ColoredGraph& g, Player turn, SolveOptions opts = {}) {
  return solve_naive(g, all_vertices(g), turn, opts);
}

/// Sprague-Grundy value of an all-Gray position: mex over moves of the XOR of the child's
/// component values. Throws GraphError if a live edge is not Gray.
inline Grundy grundy_naive(const ColoredGraph& g, const VertexSet& alive) {
  for (const auto& e : g.edges())
    if (alive.contains(e.u) && alive.contains(e.v) && e.color != Color::Gray)
      throw GraphError("Grundy values need an all-gray position");
  return Grundy{detail::naive_position_grundy(g, alive)};
}

inline Grundy grundy_naive(const ColoredGraph& g) { return grundy_naive(g, all_vertices(g)); }

}  // namespace cak
