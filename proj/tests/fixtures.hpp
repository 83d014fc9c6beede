#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>
#include <vector>

#include "cak/cak.hpp"

namespace fixtures {

inline const std::vector<cak::ColorWeights>& color_mixes() {
  static const std::vector<cak::ColorWeights> mixes = {
      {1, 0, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 0}, {0, 0, 1}, {2, 1, 1},
  };
  return mixes;
}

inline cak::ColoredGraph gray(std::size_t n, std::initializer_list<std::pair<cak::Vertex, cak::Vertex>> edges) {
  cak::ColoredGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v, cak::Color::Gray);
  return g;
}

inline cak::ColoredGraph path(std::size_t n) {
  cak::ColoredGraph g(n);
  for (cak::Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, cak::Color::Gray);
  return g;
}

inline cak::ColoredGraph star(std::size_t leaves) {
  cak::ColoredGraph g(leaves + 1);
  for (cak::Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v, cak::Color::Gray);
  return g;
}

inline cak::ColoredGraph clique(std::size_t n, cak::Color c = cak::Color::Gray) {
  cak::ColoredGraph g(n);
  for (cak::Vertex u = 0; u < n; ++u)
    for (cak::Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, c);
  return g;
}

inline cak::ColoredGraph complete_bipartite(std::size_t a, std::size_t b) {
  cak::ColoredGraph g(a + b);
  for (cak::Vertex u = 0; u < a; ++u)
    for (cak::Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<cak::Vertex>(a + v), cak::Color::Gray);
  return g;
}

// A cover of the first k vertices; the other m vertices attach to it with few distinct patterns,
// so many of them share a class.
inline cak::ColoredGraph twin_heavy(std::size_t k, std::size_t m, std::uint64_t seed, bool colored = true) {
  std::mt19937_64 rng(seed);
  cak::ColoredGraph g(k + m);
  for (cak::Vertex u = 0; u < k; ++u)
    for (cak::Vertex v = u + 1; v < k; ++v)
      if (rng() % 3 == 0) g.add_edge(u, v, colored ? static_cast<cak::Color>(1 + rng() % 3) : cak::Color::Gray);
  std::vector<std::vector<cak::Cell>> patterns(3, std::vector<cak::Cell>(k));
  for (auto& p : patterns)
    for (auto& c : p) c = static_cast<cak::Cell>(rng() % 2 ? (colored ? 1 + rng() % 3 : 1) : 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = patterns[rng() % patterns.size()];
    for (cak::Vertex u = 0; u < k; ++u)
      if (p[u] != cak::kNoEdge) g.add_edge(u, static_cast<cak::Vertex>(k + i), static_cast<cak::Color>(p[u]));
  }
  return g;
}

inline std::vector<cak::Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<cak::Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Random forest: a random tree split by deleting some of its edges.
inline cak::ColoredGraph random_forest(std::size_t n, std::uint64_t seed) {
  const auto t = cak::gen_random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  cak::ColoredGraph f(n);
  for (const auto& e : t.edges())
    if (rng() % 4 != 0) f.add_edge(e.u, e.v, e.color);
  return f;
}

// Alive sets reachable by any sequence of closed-edge removals, ignoring colors and turns.
inline std::vector<cak::VertexSet> reachable_sets(const cak::ColoredGraph& g) {
  std::vector<cak::VertexSet> out{cak::all_vertices(g)};
  std::unordered_set<cak::VertexSet> seen{out.front()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto cur = out[i];
    for (const auto& e : g.edges()) {
      if (!cur.contains(e.u) || !cur.contains(e.v)) continue;
      auto next = cak::remove_closed_edge(g, cur, e.edge());
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace fixtures
