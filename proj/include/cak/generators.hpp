#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "cak/graph.hpp"

namespace cak {

enum class GridVariant { Cram, Domineering };

/// Vertex budget for the large constructions; overridable with CAK_MAX_VERTICES.
inline std::size_t default_vertex_budget() {
  if (const char* env = std::getenv("CAK_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

/// rows x cols grid graph; cell (r, c) is vertex r * cols + c.
/// Cram: all edges Gray. Domineering: vertical edges Black (player B places vertically), horizontal White.
inline ColoredGraph gen_grid(std::size_t rows, std::size_t cols, GridVariant variant) {
  if (rows == 0 || cols == 0) throw GraphError("grid dimensions must be positive");
  ColoredGraph g(rows * cols);
  const Color vertical = variant == GridVariant::Cram ? Color::Gray : Color::Black;
  const Color horizontal = variant == GridVariant::Cram ? Color::Gray : Color::White;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1), horizontal);
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c), vertical);
    }
  return g;
}

/// Kayles with `pins` pins as Arc Kayles: spine 0..pins-1, leg of spine vertex i is pins + i.
/// Playing a leg knocks one pin; playing a spine edge knocks two adjacent pins.
inline ColoredGraph gen_caterpillar_kayles(std::size_t pins) {
  if (pins == 0) throw GraphError("caterpillar needs at least one pin");
  ColoredGraph g(2 * pins);
  for (std::size_t i = 0; i < pins; ++i) {
    if (i + 1 < pins) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1), Color::Gray);
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(pins + i), Color::Gray);
  }
  return g;
}

/// Order of gen_lower_vc(k): k + 4^(k/2) * k/2.
inline std::size_t lower_vc_order(std::size_t k) {
  if (k < 2 || (k != 2 && k % 4 != 0)) throw GraphError("lower-vc k must be 2 or a positive multiple of 4");
  const std::size_t half = k / 2;
  if (half >= 31) throw CapacityError("lower-vc k=" + std::to_string(k) + " is far beyond any vertex budget");
  return k + (std::size_t{1} << (2 * half)) * half;
}

/// Vertex-cover lower-bound instance.
///
/// Layout: u_1..u_{k/2} are 0..k/2-1, v_1..v_{k/2} are k/2..k-1, then for i = 1..k/2 the 4^(k/2)
/// vertices x_{i,x} in base-4 order of x (digit j is x[u_j], 0=none 1=G 2=B 3=W, u_1 most significant).
/// v_i--x_{i,x} is Black for i <= ceil(k/4) and White otherwise; x_{i,x}--u_j has color x[u_j].
/// U and V together are a vertex cover of size k.
inline ColoredGraph gen_lower_vc(std::size_t k, std::size_t vertex_budget = default_vertex_budget()) {
  const std::size_t n = lower_vc_order(k);
  if (n > vertex_budget)
    throw CapacityError("lower-vc k=" + std::to_string(k) + " needs " + std::to_string(n) +
                        " vertices, budget is " + std::to_string(vertex_budget));
  const std::size_t half = k / 2;
  const std::size_t vectors = std::size_t{1} << (2 * half);
  const std::size_t black_side = (k + 3) / 4;
  ColoredGraph g(n);
  Vertex next = static_cast<Vertex>(k);
  for (std::size_t i = 0; i < half; ++i) {
    const auto vi = static_cast<Vertex>(half + i);
    const Color side = i < black_side ? Color::Black : Color::White;
    for (std::size_t x = 0; x < vectors; ++x) {
      const Vertex xv = next++;
      g.add_edge(vi, xv, side);
      for (std::size_t j = 0; j < half; ++j) {
        const auto digit = static_cast<Cell>((x >> (2 * (half - 1 - j))) & 3U);
        if (digit != kNoEdge) g.add_edge(static_cast<Vertex>(j), xv, static_cast<Color>(digit));
      }
    }
  }
  return g;
}

/// Order of gen_lower_nd(k, s): s*k + L(L+1)/2 with L = log2(k+1).
inline std::size_t lower_nd_order(std::size_t k, std::size_t s) {
  if (k == 0 || !std::has_single_bit(k + 1)) throw GraphError("lower-nd k+1 must be a power of two");
  if (s == 0) throw GraphError("lower-nd clique size s must be positive");
  const auto bits = static_cast<std::size_t>(std::countr_zero(k + 1));
  return s * k + bits * (bits + 1) / 2;
}

/// Neighborhood-diversity lower-bound instance (all Gray).
///
/// Layout: clique C_j (j = 1..k) occupies (j-1)*s .. j*s-1, and the union of all C_j is one clique;
/// x_1..x_L follow at s*k.., then the pendants of x_2, x_3, ... (x_i carries i-1 pendants).
/// Every vertex of C_j is adjacent to x_i iff bit i (1 = least significant) of j is set.
inline ColoredGraph gen_lower_nd(std::size_t k, std::size_t s) {
  const std::size_t n = lower_nd_order(k, s);
  const auto bits = static_cast<std::size_t>(std::countr_zero(k + 1));
  const std::size_t clique_size = s * k;
  ColoredGraph g(n);
  for (std::size_t a = 0; a < clique_size; ++a)
    for (std::size_t b = a + 1; b < clique_size; ++b) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b), Color::Gray);
  auto x_of = [&](std::size_t i) { return static_cast<Vertex>(clique_size + i - 1); };
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t i = 1; i <= bits; ++i)
      if ((j >> (i - 1)) & 1U)
        for (std::size_t t = 0; t < s; ++t) g.add_edge(static_cast<Vertex>((j - 1) * s + t), x_of(i), Color::Gray);
  Vertex next = static_cast<Vertex>(clique_size + bits);
  for (std::size_t i = 2; i <= bits; ++i)
    for (std::size_t p = 0; p + 1 < i; ++p) g.add_edge(x_of(i), next++, Color::Gray);
  return g;
}

/// Relative weights of Gray, Black and White edges for gen_random.
struct ColorWeights {
  double gray = 1.0;
  double black = 0.0;
  double white = 0.0;
};

/// Erdős–Rényi style colored graph.
///
/// PRNG: std::mt19937_64 seeded with `seed`. A uniform double in [0,1) is (draw >> 11) * 2^-53.
/// Pairs (u, v), u < v, are visited in lexicographic order; each takes one draw r and is present iff
/// r < p, in which case a second draw t picks Gray if t*W < wG, Black if t*W < wG + wB, else White
/// (W = wG + wB + wW). This fully determines the output for a given (n, p, weights, seed).
inline ColoredGraph gen_random(std::size_t n, double p, ColorWeights w, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0,1]");
  if (w.gray < 0 || w.black < 0 || w.white < 0) throw GraphError("color weights must be nonnegative");
  const double total = w.gray + w.black + w.white;
  if (!(total > 0)) throw GraphError("color weights must not all be zero");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  ColoredGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!(uniform() < p)) continue;
      const double t = uniform() * total;
      const Color c = t < w.gray ? Color::Gray : t < w.gray + w.black ? Color::Black : Color::White;
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), c);
    }
  return g;
}

/// Uniformly random labeled tree on n vertices (random Prüfer sequence), all Gray.
inline ColoredGraph gen_random_tree(std::size_t n, std::uint64_t seed) {
  ColoredGraph g(n);
  if (n < 2) return g;
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  for (auto c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, c, Color::Gray);
    --degree[leaf];
    --degree[c];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  g.add_edge(a, b, Color::Gray);
  return g;
}

/// Relabels vertex v as perm[v].
inline ColoredGraph permute(const ColoredGraph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw GraphError("permutation size does not match vertex count");
  std::vector<bool> hit(g.order(), false);
  for (Vertex p : perm) {
    if (p >= g.order() || hit[p]) throw GraphError("permutation is not a bijection");
    hit[p] = true;
  }
  ColoredGraph out(g.order());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v], e.color);
  return out;
}

inline ColoredGraph swap_colors(const ColoredGraph& g) {
  ColoredGraph out(g.order());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v, swap_color(e.color));
  return out;
}

/// Disjoint union; vertices of b are shifted by a.order().
inline ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  ColoredGraph out(a.order() + b.order());
  for (const auto& e : a.edges()) out.add_edge(e.u, e.v, e.color);
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& e : b.edges()) out.add_edge(e.u + shift, e.v + shift, e.color);
  return out;
}

}  // namespace cak
