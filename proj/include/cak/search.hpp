#pragma once

#include <unordered_map>
#include <vector>

#include "cak/graph.hpp"
#include "cak/outcome.hpp"

namespace cak::detail {

/// Memoized evaluation of the winner recursion
///   mover wins  <=>  some candidate move leads to a child where the opponent loses,
/// over an engine-specific state space. A Model supplies:
///   State, Key, KeyHash
///   Key  key(const State&, Player) const
///   void moves(const State&, Player, std::vector<Edge>&) const   // sorted candidate moves
///   State child(const State&, Edge) const
template <class Model>
class MemoSearch {
 public:
  using State = typename Model::State;
  using Key = typename Model::Key;

  MemoSearch(const Model& model, SolveOptions opts) : model_(model), opts_(opts) {}

  Outcome solve(const State& root, Player turn) {
    StopWatch clock;
    ++stats_.node_expansions;
    Outcome out;
    std::vector<Edge> moves;
    model_.moves(root, turn, moves);
    for (const Edge& m : moves) {
      if (!mover_wins(model_.child(root, m), opponent(turn)) && !out.winning_move) {
        out.winning_move = m;
        if (opts_.short_circuit) break;
      }
    }
    out.winner = out.winning_move ? turn : opponent(turn);
    memo_[model_.key(root, turn)] = out.winning_move.has_value();
    stats_.distinct_keys = memo_.size();
    out.stats = stats_;
    out.stats.elapsed = clock.elapsed();
    return out;
  }

  const SearchStats& stats() const { return stats_; }

 private:
  bool mover_wins(const State& s, Player turn) {
    ++stats_.node_expansions;
    Key k = model_.key(s, turn);
    if (auto it = memo_.find(k); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    std::vector<Edge> moves;
    model_.moves(s, turn, moves);
    bool win = false;
    for (const Edge& m : moves) {
      if (!mover_wins(model_.child(s, m), opponent(turn))) {
        win = true;
        if (opts_.short_circuit) break;
      }
    }
    memo_.emplace(std::move(k), win);
    return win;
  }

  const Model& model_;
  SolveOptions opts_;
  SearchStats stats_;
  std::unordered_map<Key, bool, typename Model::KeyHash> memo_;
};

}  // namespace cak::detail
