#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "cak/graph.hpp"

namespace cak {

/// Search instrumentation.
///
/// node_expansions counts every evaluation call, including the root and calls answered from the
/// memo table (i.e. the nodes of the recursion tree); memo_hits counts the latter; distinct_keys
/// is the number of memo entries created.
struct SearchStats {
  std::uint64_t node_expansions = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t distinct_keys = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct Outcome {
  Player winner = Player::B;
  std::optional<Edge> winning_move;  // present iff the player to move wins
  SearchStats stats;
};

struct SolveOptions {
  /// Stop scanning a node's moves at the first winning one. Count modes turn this off so that
  /// every node's full move list is expanded.
  bool short_circuit = true;
};

struct Grundy {
  std::uint32_t value = 0;
  friend bool operator==(const Grundy&, const Grundy&) = default;
};

namespace detail {

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// mex of a small set of nimbers.
template <class Range>
std::uint32_t mex(const Range& values) {
  std::vector<bool> seen;
  for (std::uint32_t v : values) {
    if (v >= seen.size()) seen.resize(v + 1, false);
    seen[v] = true;
  }
  std::uint32_t m = 0;
  while (m < seen.size() && seen[m]) ++m;
  return m;
}

}  // namespace detail
}  // namespace cak
