#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cak {

using Vertex = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural violation: self-loop, duplicate edge, out-of-range id, bad edit.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a configured size limit (mask width, vertex budget).
class CapacityError : public Error {
 public:
  using Error::Error;
};

enum class Color : std::uint8_t { Gray = 1, Black = 2, White = 3 };

/// Adjacency cell: 0 for "no edge", otherwise the Color value.
/// The numeric order 0 < Gray < Black < White is the canonical order of class vectors.
using Cell = std::uint8_t;
inline constexpr Cell kNoEdge = 0;

constexpr Cell to_cell(Color c) { return static_cast<Cell>(c); }

constexpr char color_letter(Color c) {
  switch (c) {
    case Color::Gray: return 'g';
    case Color::Black: return 'b';
    case Color::White: return 'w';
  }
  return '?';
}

constexpr char cell_letter(Cell c) {
  return c == kNoEdge ? '-' : color_letter(static_cast<Color>(c));
}

enum class Player : std::uint8_t { B = 0, W = 1 };

constexpr Player opponent(Player p) { return p == Player::B ? Player::W : Player::B; }

constexpr char player_letter(Player p) { return p == Player::B ? 'B' : 'W'; }

/// Gray edges are playable by both players, Black only by B, White only by W.
constexpr bool playable(Color c, Player p) {
  return c == Color::Gray || (c == Color::Black && p == Player::B) ||
         (c == Color::White && p == Player::W);
}

constexpr Color swap_color(Color c) {
  switch (c) {
    case Color::Black: return Color::White;
    case Color::White: return Color::Black;
    default: return c;
  }
}

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = Color::Gray;

  Edge edge() const { return {u, v}; }
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Fixed-universe dynamic bitset over vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe, bool full = false)
      : universe_(universe), words_((universe + 63) / 64, full ? ~std::uint64_t{0} : 0) {
    trim();
  }

  static VertexSet of(std::size_t universe, const std::vector<Vertex>& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(Vertex v) const {
    if (v >= universe_) throw GraphError("vertex " + std::to_string(v) + " outside universe");
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Edge-colored simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted by (u, v); adjacency lists are sorted by neighbor id.
/// The graph is immutable once built, apart from add_edge during construction.
class ColoredGraph {
 public:
  struct Neighbor {
    Vertex vertex;
    Color color;
  };

  ColoredGraph() = default;
  explicit ColoredGraph(std::size_t n) : adjacency_(n) {}
  ColoredGraph(std::size_t n, const std::vector<ColoredEdge>& edges) : adjacency_(n) {
    for (const auto& e : edges) add_edge(e.u, e.v, e.color);
  }

  void add_edge(Vertex a, Vertex b, Color c) {
    if (a == b) throw GraphError("self-loop on vertex " + std::to_string(a));
    if (a >= order() || b >= order())
      throw GraphError("edge endpoint out of range: {" + std::to_string(a) + "," + std::to_string(b) + "}");
    const Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const ColoredEdge& x, const Edge& y) { return x.edge() < y; });
    if (it != edges_.end() && it->edge() == e)
      throw GraphError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    edges_.insert(it, ColoredEdge{e.u, e.v, c});
    insert_neighbor(a, b, c);
    insert_neighbor(b, a, c);
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<ColoredEdge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<Color> color(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) return std::nullopt;
    const auto& adj = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const Vertex other = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    auto it = std::lower_bound(adj.begin(), adj.end(), other,
                               [](const Neighbor& n, Vertex x) { return n.vertex < x; });
    if (it == adj.end() || it->vertex != other) return std::nullopt;
    return it->color;
  }

  Cell cell(Vertex a, Vertex b) const {
    auto c = color(a, b);
    return c ? to_cell(*c) : kNoEdge;
  }

  bool adjacent(Vertex a, Vertex b) const { return color(a, b).has_value(); }

  /// Counts of Gray, Black and White edges.
  std::array<std::size_t, 3> color_histogram() const {
    std::array<std::size_t, 3> h{};
    for (const auto& e : edges_) ++h[to_cell(e.color) - 1];
    return h;
  }

  bool all_gray() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const ColoredEdge& e) { return e.color == Color::Gray; });
  }

  /// Number of distinct colors that appear on at least one edge.
  std::size_t colors_used() const {
    auto h = color_histogram();
    return static_cast<std::size_t>(std::count_if(h.begin(), h.end(), [](std::size_t c) { return c > 0; }));
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  void insert_neighbor(Vertex a, Vertex b, Color c) {
    auto& adj = adjacency_[a];
    auto it = std::lower_bound(adj.begin(), adj.end(), b, [](const Neighbor& n, Vertex x) { return n.vertex < x; });
    adj.insert(it, Neighbor{b, c});
  }

  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// A game position: the live vertices of an original graph and the player to move.
struct Position {
  VertexSet alive;
  Player turn = Player::B;
};

inline VertexSet all_vertices(const ColoredGraph& g) { return VertexSet(g.order(), true); }

/// Whether e is an edge of g with both endpoints alive.
inline bool live_edge(const ColoredGraph& g, const VertexSet& alive, Edge e) {
  return alive.contains(e.u) && alive.contains(e.v) && g.adjacent(e.u, e.v);
}

/// Alive-mask form of G-u-v: drops both endpoints of e, which removes e and every edge touching it.
inline VertexSet remove_closed_edge(const ColoredGraph& g, const VertexSet& alive, Edge e) {
  if (!live_edge(g, alive, e))
    throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the position");
  VertexSet next = alive;
  next.erase(e.u);
  next.erase(e.v);
  return next;
}

/// Graph form of G-u-v over the same vertex universe: every edge incident to u or v is dropped.
inline ColoredGraph remove_closed_edge(const ColoredGraph& g, Edge e) {
  if (!g.adjacent(e.u, e.v))
    throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
  ColoredGraph out(g.order());
  for (const auto& ce : g.edges())
    if (ce.u != e.u && ce.u != e.v && ce.v != e.u && ce.v != e.v) out.add_edge(ce.u, ce.v, ce.color);
  return out;
}

/// Subgraph induced by `alive`, kept on the original vertex universe (dead vertices become isolated).
inline ColoredGraph induced_subgraph(const ColoredGraph& g, const VertexSet& alive) {
  ColoredGraph out(g.order());
  for (const auto& e : g.edges())
    if (alive.contains(e.u) && alive.contains(e.v)) out.add_edge(e.u, e.v, e.color);
  return out;
}

/// Edges of the position playable by `turn`, in (u, v) order.
inline std::vector<Edge> playable_edges(const ColoredGraph& g, const VertexSet& alive, Player turn) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (playable(e.color, turn) && alive.contains(e.u) && alive.contains(e.v)) out.push_back(e.edge());
  return out;
}

/// Connected components of the alive subgraph; each sorted, listed by smallest member.
inline std::vector<std::vector<Vertex>> components(const ColoredGraph& g, const VertexSet& alive) {
  std::vector<std::vector<Vertex>> out;
  VertexSet seen(g.order());
  alive.for_each([&](Vertex s) {
    if (seen.contains(s)) return;
    std::vector<Vertex> comp{s};
    seen.insert(s);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& nb : g.neighbors(comp[i]))
        if (alive.contains(nb.vertex) && !seen.contains(nb.vertex)) {
          seen.insert(nb.vertex);
          comp.push_back(nb.vertex);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  });
  return out;
}

/// Whether the alive subgraph is acyclic.
inline bool is_forest(const ColoredGraph& g, const VertexSet& alive) {
  std::size_t live_edges = 0;
  for (const auto& e : g.edges())
    if (alive.contains(e.u) && alive.contains(e.v)) ++live_edges;
  return live_edges + components(g, alive).size() == alive.count();
}

}  // namespace cak

template <>
struct std::hash<cak::VertexSet> {
  std::size_t operator()(const cak::VertexSet& s) const noexcept { return s.hash(); }
};
