#pragma once

// Arc Kayles on forests. Values are Sprague-Grundy nimbers: a forest's value is the XOR of its
// trees' values, and a tree's value is the mex over its edges of the value of the forest left after
// deleting both endpoints. Tree values are memoized on an unrooted canonical form, so isomorphic
// subtrees met anywhere in the search share one entry.
//
// Also counts non-isomorphic AK-rooted subtrees (root component left by deleting the endpoints of a
// matching, everything else isolated) and NK-rooted subtrees (exactly what is left after deleting
// the closed neighborhood of an independent set).

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cak/graph.hpp"
#include "cak/outcome.hpp"

namespace cak {

/// AHU encoding of a rooted tree: "(" + sorted child encodings + ")".
struct RootedCanonicalForm {
  std::string code;
  friend auto operator<=>(const RootedCanonicalForm&, const RootedCanonicalForm&) = default;
};

/// Unrooted tree encoding: the smaller rooted encoding over the (at most two) centroids.
struct TreeCanonicalForm {
  std::string code;
  friend auto operator<=>(const TreeCanonicalForm&, const TreeCanonicalForm&) = default;
};

namespace detail {

inline std::string rooted_code(const ColoredGraph& g, const VertexSet& within, Vertex v, Vertex parent, bool has_parent) {
  std::vector<std::string> kids;
  for (const auto& nb : g.neighbors(v))
    if (within.contains(nb.vertex) && !(has_parent && nb.vertex == parent))
      kids.push_back(rooted_code(g, within, nb.vertex, v, true));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ')';
  return s;
}

/// Centroids of the tree spanned by `tree` (connected, acyclic).
inline std::vector<Vertex> centroids(const ColoredGraph& g, const VertexSet& tree) {
  const std::vector<Vertex> verts = tree.to_vector();
  const std::size_t n = verts.size();
  if (n == 0) return {};
  std::vector<Vertex> order{verts.front()};
  std::unordered_map<Vertex, Vertex> parent{{verts.front(), verts.front()}};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& nb : g.neighbors(order[i]))
      if (tree.contains(nb.vertex) && !parent.count(nb.vertex)) {
        parent[nb.vertex] = order[i];
        order.push_back(nb.vertex);
      }
  std::unordered_map<Vertex, std::size_t> size;
  std::unordered_map<Vertex, std::size_t> heaviest;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    size[v] += 1;
    if (v != order.front()) {
      size[parent[v]] += size[v];
      heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
    }
  }
  std::vector<Vertex> out;
  for (Vertex v : order)
    if (std::max(heaviest[v], n - size[v]) * 2 <= n) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_tree(const ColoredGraph& g) {
  if (g.order() == 0 || g.size() + 1 != g.order() || components(g, all_vertices(g)).size() != 1)
    throw GraphError("input is not a tree");
}

inline void require_gray_forest(const ColoredGraph& g, const VertexSet& alive) {
  for (const auto& e : g.edges())
    if (alive.contains(e.u) && alive.contains(e.v) && e.color != Color::Gray)
      throw GraphError("tree engine needs an all-gray position");
  if (!is_forest(g, alive)) throw GraphError("position is not a forest (cycle detected)");
}

}  // namespace detail

inline RootedCanonicalForm rooted_canonical_form(const ColoredGraph& g, const VertexSet& tree, Vertex root) {
  return {detail::rooted_code(g, tree, root, root, false)};
}

/// Canonical form of the tree spanned by `tree`, which must be connected and acyclic.
inline TreeCanonicalForm tree_canonical_form(const ColoredGraph& g, const VertexSet& tree) {
  std::string best;
  for (Vertex c : detail::centroids(g, tree)) {
    std::string code = detail::rooted_code(g, tree, c, c, false);
    if (best.empty() || code < best) best = std::move(code);
  }
  return {best};
}

/// Forest solver with a Grundy memo shared across all calls on this instance.
class TreeSolver {
 public:
  Grundy grundy(const ColoredGraph& g, const VertexSet& alive) {
    detail::require_gray_forest(g, alive);
    return Grundy{forest_value(g, alive)};
  }

  Outcome solve(const ColoredGraph& g, const VertexSet& alive, Player turn) {
    detail::StopWatch clock;
    detail::require_gray_forest(g, alive);
    Outcome out;
    if (forest_value(g, alive) != 0) {
      // one extra scan over the root's moves for a zero-valued child
      for (const auto& e : g.edges()) {
        if (!alive.contains(e.u) || !alive.contains(e.v)) continue;
        VertexSet child = alive;
        child.erase(e.u);
        child.erase(e.v);
        if (forest_value(g, child) == 0) {
          out.winning_move = e.edge();
          break;
        }
      }
    }
    out.winner = out.winning_move ? turn : opponent(turn);
    out.stats = stats_;
    out.stats.distinct_keys = memo_.size();
    out.stats.elapsed = clock.elapsed();
    return out;
  }

  SearchStats stats() const {
    SearchStats s = stats_;
    s.distinct_keys = memo_.size();
    return s;
  }

 private:
  std::uint32_t forest_value(const ColoredGraph& g, const VertexSet& alive) {
    std::uint32_t x = 0;
    for (const auto& comp : components(g, alive))
      if (comp.size() >= 2) x ^= tree_value(g, VertexSet::of(g.order(), comp));
    return x;
  }

  std::uint32_t tree_value(const ColoredGraph& g, const VertexSet& tree) {
    ++stats_.node_expansions;
    std::string code = tree_canonical_form(g, tree).code;
    if (auto it = memo_.find(code); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    std::vector<std::uint32_t> options;
    tree.for_each([&](Vertex u) {
      for (const auto& nb : g.neighbors(u)) {
        if (nb.vertex < u || !tree.contains(nb.vertex)) continue;
        VertexSet rest = tree;
        rest.erase(u);
        rest.erase(nb.vertex);
        options.push_back(forest_value(g, rest));
      }
    });
    const std::uint32_t value = detail::mex(options);
    memo_.emplace(std::move(code), value);
    return value;
  }

  SearchStats stats_;
  std::unordered_map<std::string, std::uint32_t> memo_;
};

inline Grundy grundy_tree(const ColoredGraph& g, const VertexSet& alive) { return TreeSolver().grundy(g, alive); }

inline Grundy grundy_tree(const ColoredGraph& g) { return grundy_tree(g, all_vertices(g)); }

inline Outcome solve_tree(const ColoredGraph& g, const VertexSet& alive, Player turn) {
  return TreeSolver().solve(g, alive, turn);
}

inline Outcome solve_tree(const ColoredGraph& g, Player turn) { return solve_tree(g, all_vertices(g), turn); }

/// AK-rooted subtrees by enumerating every matching of the tree.
inline std::size_t count_ak_subtrees_enumerate(const ColoredGraph& tree, Vertex root) {
  detail::require_tree(tree);
  if (root >= tree.order()) throw GraphError("root out of range");
  const auto& edges = tree.edges();
  std::set<std::string> seen;
  VertexSet matched(tree.order());
  auto record = [&] {
    if (matched.contains(root)) return;
    VertexSet alive(tree.order(), true);
    matched.for_each([&](Vertex v) { alive.erase(v); });
    VertexSet comp = VertexSet::of(tree.order(), {root});
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& nb : tree.neighbors(v))
        if (alive.contains(nb.vertex) && !comp.contains(nb.vertex)) {
          comp.insert(nb.vertex);
          stack.push_back(nb.vertex);
        }
    }
    for (const auto& e : edges)
      if (alive.contains(e.u) && alive.contains(e.v) && !comp.contains(e.u)) return;  // non-isolated leftover
    seen.insert(rooted_canonical_form(tree, comp, root).code);
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      record();
      return;
    }
    self(self, i + 1);
    const auto& e = edges[i];
    if (!matched.contains(e.u) && !matched.contains(e.v)) {
      matched.insert(e.u);
      matched.insert(e.v);
      self(self, i + 1);
      matched.erase(e.u);
      matched.erase(e.v);
    }
  };
  rec(rec, 0);
  return seen.size();
}

/// AK-rooted subtrees by dynamic programming over the tree rooted at `root`.
///
/// For each vertex v (with T_v its subtree): whether T_v can be left with no alive edge when v is
/// alive, matched to its parent, or matched to a child; and the set of rooted codes that the part
/// of the root component inside T_v can take when v belongs to it. A child of a component vertex
/// is either in the component too, or dead through a matching edge below it.
inline std::size_t count_ak_subtrees_dp(const ColoredGraph& tree, Vertex root) {
  detail::require_tree(tree);
  if (root >= tree.order()) throw GraphError("root out of range");
  const std::size_t n = tree.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, root);
  std::vector<bool> visited(n, false);
  visited[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& nb : tree.neighbors(order[i]))
      if (!visited[nb.vertex]) {
        visited[nb.vertex] = true;
        parent[nb.vertex] = order[i];
        order.push_back(nb.vertex);
      }
  std::vector<std::vector<Vertex>> children(n);
  for (std::size_t i = 1; i < order.size(); ++i) children[parent[order[i]]].push_back(order[i]);

  std::vector<bool> alive_isolated(n), matched_up(n), matched_down(n);
  std::vector<std::set<std::string>> codes(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    bool all_down = true;
    bool all_settled = true;  // every child isolated-alive or matched below
    for (Vertex c : children[v]) {
      all_down = all_down && matched_down[c];
      all_settled = all_settled && (alive_isolated[c] || matched_down[c]);
    }
    alive_isolated[v] = all_down;
    matched_up[v] = all_settled;
    bool down = false;
    for (Vertex d : children[v]) {
      if (!matched_up[d]) continue;
      bool others = true;
      for (Vertex c : children[v])
        if (c != d) others = others && (alive_isolated[c] || matched_down[c]);
      if (others) {
        down = true;
        break;
      }
    }
    matched_down[v] = down;

    std::set<std::vector<std::string>> partial{{}};
    for (Vertex c : children[v]) {
      std::set<std::vector<std::string>> next;
      for (const auto& base : partial) {
        if (matched_down[c]) next.insert(base);
        for (const auto& code : codes[c]) {
          auto grown = base;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), code), code);
          next.insert(std::move(grown));
        }
      }
      partial = std::move(next);
    }
    for (const auto& kids : partial) {
      std::string s = "(";
      for (const auto& k : kids) s += k;
      s += ')';
      codes[v].insert(std::move(s));
    }
    for (Vertex c : children[v]) std::set<std::string>().swap(codes[c]);
  }
  return codes[root].size();
}

/// Number of pairwise non-isomorphic (with respect to the root) AK-rooted subtrees.
inline std::size_t count_ak_subtrees(const ColoredGraph& tree, Vertex root) {
  return tree.order() > 16 ? count_ak_subtrees_dp(tree, root) : count_ak_subtrees_enumerate(tree, root);
}

/// Number of pairwise non-isomorphic NK-rooted subtrees, by enumerating independent sets U that
/// avoid N[root] and keeping those whose leftover T[V \ N[U]] is connected.
inline std::size_t count_nk_subtrees(const ColoredGraph& tree, Vertex root) {
  detail::require_tree(tree);
  if (root >= tree.order()) throw GraphError("root out of range");
  const std::size_t n = tree.order();
  std::set<std::string> seen;
  std::vector<int> blocked(n, 0);  // how many chosen vertices have this vertex in their closed neighborhood
  auto block = [&](Vertex v, int delta) {
    blocked[v] += delta;
    for (const auto& nb : tree.neighbors(v)) blocked[nb.vertex] += delta;
  };
  std::vector<bool> chosen(n, false);
  auto record = [&] {
    VertexSet alive(n);
    for (Vertex v = 0; v < n; ++v)
      if (blocked[v] == 0) alive.insert(v);
    if (components(tree, alive).size() != 1) return;
    seen.insert(rooted_canonical_form(tree, alive, root).code);
  };
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      record();
      return;
    }
    self(self, v + 1);
    // v may join U when it is not adjacent to a chosen vertex and N[v] misses the root
    bool ok = v != root && !tree.adjacent(v, root);
    for (const auto& nb : tree.neighbors(v)) ok = ok && !chosen[nb.vertex];
    if (ok) {
      chosen[v] = true;
      block(v, +1);
      self(self, v + 1);
      block(v, -1);
      chosen[v] = false;
    }
  };
  rec(rec, 0);
  return seen.size();
}

}  // namespace cak
