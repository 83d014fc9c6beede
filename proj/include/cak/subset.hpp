#pragma once

// Baseline exponential solver: the winner recursion memoized on (alive-vertex mask, player to move),
// with no symmetry reduction. At most 2^(n+1) keys.

#include <cstdint>
#include <functional>

#include "cak/graph.hpp"
#include "cak/outcome.hpp"
#include "cak/search.hpp"

namespace cak {

struct SubsetOptions : SolveOptions {
  /// Widest accepted instance; raising it past 64 is refused.
  std::size_t max_n = 32;
};

struct SubsetKey {
  std::uint64_t alive = 0;
  Player turn = Player::B;
  friend bool operator==(const SubsetKey&, const SubsetKey&) = default;
};

namespace detail {

class SubsetModel {
 public:
  using State = std::uint64_t;
  using Key = SubsetKey;
  struct KeyHash {
    std::size_t operator()(const SubsetKey& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.alive * 2 + static_cast<std::uint64_t>(k.turn));
    }
  };

  explicit SubsetModel(const ColoredGraph& g) : g_(g) {}

  Key key(State s, Player turn) const { return {s, turn}; }

  void moves(State s, Player turn, std::vector<Edge>& out) const {
    for (const auto& e : g_.edges())
      if (playable(e.color, turn) && ((s >> e.u) & 1U) && ((s >> e.v) & 1U)) out.push_back(e.edge());
  }

  State child(State s, Edge e) const { return s & ~(std::uint64_t{1} << e.u) & ~(std::uint64_t{1} << e.v); }

 private:
  const ColoredGraph& g_;
};

inline void check_subset_capacity(const ColoredGraph& g, const SubsetOptions& opts) {
  const std::size_t width = std::min<std::size_t>(opts.max_n, 64);
  if (g.order() > width)
    throw CapacityError("subset engine: n=" + std::to_string(g.order()) + " exceeds mask width " +
                        std::to_string(width));
}

}  // namespace detail

inline Outcome solve_subset(const ColoredGraph& g, const VertexSet& alive, Player turn, SubsetOptions opts = {}) {
  detail::check_subset_capacity(g, opts);
  detail::SubsetModel model(g);
  return detail::MemoSearch<detail::SubsetModel>(model, opts).solve(alive.low_word(), turn);
}

inline Outcome solve_subset(const ColoredGraph& g, Player turn, SubsetOptions opts = {}) {
  return solve_subset(g, all_vertices(g), turn, opts);
}

/// Full expansion (no short-circuit); returns the instrumentation only.
inline SearchStats count_subset_positions(const ColoredGraph& g, Player turn, SubsetOptions opts = {}) {
  opts.short_circuit = false;
  return solve_subset(g, turn, opts).stats;
}

}  // namespace cak
