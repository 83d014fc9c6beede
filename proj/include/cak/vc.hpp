#pragma once

// Vertex-cover parameterized solver.
//
// A cover S is fixed at the root. Every non-cover vertex only touches S, so alive non-cover
// vertices with the same colored adjacency to S are interchangeable: a position is determined up to
// isomorphism by the alive cover vertices and the multiset of class vectors. Moves are restricted to
// edges inside S plus one edge per (cover vertex, class) pair, using the class's minimum-id member.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cak/graph.hpp"
#include "cak/outcome.hpp"
#include "cak/parameters.hpp"
#include "cak/search.hpp"

namespace cak {

/// Canonical position identifier for the vertex-cover solver.
///
/// alive_S lists the alive cover vertices that still have an alive neighbor; class vectors are
/// taken over alive_S, sorted, with their multiplicities. Non-cover vertices with no alive neighbor
/// contribute nothing.
struct VcKey {
  std::vector<Vertex> alive_cover;
  std::vector<std::pair<ClassVector, std::size_t>> class_counts;
  Player turn = Player::B;

  friend bool operator==(const VcKey&, const VcKey&) = default;

  std::string encode() const {
    std::string s;
    s.reserve(8 + alive_cover.size() * 4 + class_counts.size() * (alive_cover.size() + 4));
    s.push_back(static_cast<char>(turn));
    auto put32 = [&s](std::uint32_t x) {
      for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xFF));
    };
    put32(static_cast<std::uint32_t>(alive_cover.size()));
    for (Vertex v : alive_cover) put32(v);
    for (const auto& [x, count] : class_counts) {
      for (Cell c : x.entries) s.push_back(static_cast<char>(c));
      put32(static_cast<std::uint32_t>(count));
    }
    return s;
  }
};

namespace detail {

class VcModel {
 public:
  using State = VertexSet;
  using Key = std::string;
  using KeyHash = std::hash<std::string>;

  VcModel(const ColoredGraph& g, std::vector<Vertex> cover) : g_(g), cover_(std::move(cover)), index_(g.order(), -1) {
    std::sort(cover_.begin(), cover_.end());
    for (std::size_t i = 0; i < cover_.size(); ++i) index_[cover_[i]] = static_cast<int>(i);
  }

  bool in_cover(Vertex v) const { return index_[v] >= 0; }
  const std::vector<Vertex>& cover() const { return cover_; }

  VcKey canonical_key(const VertexSet& alive, Player turn) const {
    VcKey key;
    key.turn = turn;
    std::vector<int> slot(cover_.size(), -1);
    for (Vertex u : cover_) {
      if (!alive.contains(u)) continue;
      const bool live = std::any_of(g_.neighbors(u).begin(), g_.neighbors(u).end(),
                                    [&](const auto& nb) { return alive.contains(nb.vertex); });
      if (live) {
        slot[static_cast<std::size_t>(index_[u])] = static_cast<int>(key.alive_cover.size());
        key.alive_cover.push_back(u);
      }
    }
    std::map<ClassVector, std::size_t> counts;
    alive.for_each([&](Vertex v) {
      if (in_cover(v)) return;
      ClassVector x{std::vector<Cell>(key.alive_cover.size(), kNoEdge)};
      bool any = false;
      for (const auto& nb : g_.neighbors(v)) {
        if (!alive.contains(nb.vertex)) continue;
        const int s = slot[static_cast<std::size_t>(index_[nb.vertex])];
        x.entries[static_cast<std::size_t>(s)] = to_cell(nb.color);
        any = true;
      }
      if (any) ++counts[std::move(x)];
    });
    key.class_counts.assign(counts.begin(), counts.end());
    return key;
  }

  Key key(const VertexSet& alive, Player turn) const { return canonical_key(alive, turn).encode(); }

  void moves(const VertexSet& alive, Player turn, std::vector<Edge>& out) const {
    std::map<std::vector<Cell>, Vertex> representative;
    alive.for_each([&](Vertex v) {
      if (in_cover(v)) {
        for (const auto& nb : g_.neighbors(v))
          if (nb.vertex > v && in_cover(nb.vertex) && alive.contains(nb.vertex) && playable(nb.color, turn))
            out.emplace_back(v, nb.vertex);
        return;
      }
      std::vector<Cell> x(cover_.size(), kNoEdge);
      bool any = false;
      for (const auto& nb : g_.neighbors(v))
        if (alive.contains(nb.vertex)) {
          x[static_cast<std::size_t>(index_[nb.vertex])] = to_cell(nb.color);
          any = true;
        }
      if (!any || !representative.emplace(std::move(x), v).second) return;
      for (const auto& nb : g_.neighbors(v))
        if (alive.contains(nb.vertex) && playable(nb.color, turn)) out.emplace_back(nb.vertex, v);
    });
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
  std::vector<Vertex> cover_;
  std::vector<int> index_;
};

inline std::vector<Vertex> resolve_cover(const ColoredGraph& g, const VertexSet& alive,
                                         const std::optional<VertexCover>& cover) {
  if (!cover) return min_vertex_cover(g, alive).vertices;
  if (!is_vertex_cover(g, alive, cover->vertices)) throw GraphError("supplied vertex set is not a vertex cover");
  return cover->vertices;
}

}  // namespace detail

inline VcKey vc_canonical_key(const ColoredGraph& g, const VertexSet& alive, const VertexCover& cover, Player turn) {
  if (!is_vertex_cover(g, alive, cover.vertices)) throw GraphError("vertex set is not a cover of the position");
  return detail::VcModel(g, cover.vertices).canonical_key(alive, turn);
}

/// Edges inside the alive cover plus the representative edges, restricted to those `turn` may play.
inline std::vector<Edge> vc_candidate_moves(const ColoredGraph& g, const VertexSet& alive, const VertexCover& cover,
                                            Player turn) {
  if (!is_vertex_cover(g, alive, cover.vertices)) throw GraphError("vertex set is not a cover of the position");
  std::vector<Edge> out;
  detail::VcModel(g, cover.vertices).moves(alive, turn, out);
  return out;
}

inline Outcome solve_vc(const ColoredGraph& g, const VertexSet& alive, Player turn,
                        const std::optional<VertexCover>& cover = std::nullopt, SolveOptions opts = {}) {
  detail::VcModel model(g, detail::resolve_cover(g, alive, cover));
  return detail::MemoSearch<detail::VcModel>(model, opts).solve(alive, turn);
}

inline Outcome solve_vc(const ColoredGraph& g, Player turn, const std::optional<VertexCover>& cover = std::nullopt,
                        SolveOptions opts = {}) {
  return solve_vc(g, all_vertices(g), turn, cover, opts);
}

/// Full expansion of the restricted recursion; distinct_keys is the number of canonical positions
/// met and node_expansions the number of recursion-tree nodes.
inline SearchStats count_vc_positions(const ColoredGraph& g, Player turn,
                                      const std::optional<VertexCover>& cover = std::nullopt) {
  return solve_vc(g, turn, cover, SolveOptions{.short_circuit = false}).stats;
}

}  // namespace cak
