#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cak/graph.hpp"

namespace cak {

struct VertexCover {
  std::vector<Vertex> vertices;  // sorted
  std::size_t size() const { return vertices.size(); }
};

/// Whether every alive edge has an endpoint in `cover`.
inline bool is_vertex_cover(const ColoredGraph& g, const VertexSet& alive, const std::vector<Vertex>& cover) {
  VertexSet in(g.order());
  for (Vertex v : cover) {
    if (v >= g.order()) return false;
    in.insert(v);
  }
  for (const auto& e : g.edges())
    if (alive.contains(e.u) && alive.contains(e.v) && !in.contains(e.u) && !in.contains(e.v)) return false;
  return true;
}

inline bool is_vertex_cover(const ColoredGraph& g, const std::vector<Vertex>& cover) {
  return is_vertex_cover(g, all_vertices(g), cover);
}

namespace detail {

// Exact minimum vertex cover: degree-0/1 reductions, then branch on a maximum-degree vertex v
// (v in the cover, or all of N(v) in the cover). Pruned by the incumbent against
// |partial| + ceil(edges / max degree).
class CoverSearch {
 public:
  explicit CoverSearch(const ColoredGraph& g) : g_(g) {}

  std::vector<Vertex> run(const VertexSet& alive) {
    std::vector<Vertex> partial;
    branch(alive, partial);
    std::vector<Vertex> out = best_.value_or(std::vector<Vertex>{});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t live_degree(const VertexSet& rem, Vertex v) const {
    std::size_t d = 0;
    for (const auto& nb : g_.neighbors(v))
      if (rem.contains(nb.vertex)) ++d;
    return d;
  }

  void take_neighbors(VertexSet& rem, std::vector<Vertex>& partial, Vertex v) const {
    for (const auto& nb : g_.neighbors(v))
      if (rem.contains(nb.vertex)) {
        partial.push_back(nb.vertex);
        rem.erase(nb.vertex);
      }
    rem.erase(v);
  }

  void branch(VertexSet rem, std::vector<Vertex>& partial) {
    const std::size_t mark = partial.size();
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v : rem.to_vector()) {
        if (!rem.contains(v)) continue;
        const std::size_t d = live_degree(rem, v);
        if (d == 0) {
          rem.erase(v);
        } else if (d == 1) {
          take_neighbors(rem, partial, v);
          changed = true;
        }
      }
    }
    std::size_t edges2 = 0;
    std::size_t max_degree = 0;
    Vertex pivot = 0;
    rem.for_each([&](Vertex v) {
      const std::size_t d = live_degree(rem, v);
      edges2 += d;
      if (d > max_degree) {
        max_degree = d;
        pivot = v;
      }
    });
    if (max_degree == 0) {
      if (!best_ || partial.size() < best_->size()) best_ = partial;
    } else {
      const std::size_t edges = edges2 / 2;
      const std::size_t bound = partial.size() + (edges + max_degree - 1) / max_degree;
      if (!best_ || bound < best_->size()) {
        {
          VertexSet with = rem;
          with.erase(pivot);
          partial.push_back(pivot);
          branch(with, partial);
          partial.pop_back();
        }
        {
          VertexSet without = rem;
          const std::size_t before = partial.size();
          take_neighbors(without, partial, pivot);
          branch(without, partial);
          partial.resize(before);
        }
      }
    }
    partial.resize(mark);
  }

  const ColoredGraph& g_;
  std::optional<std::vector<Vertex>> best_;
};

}  // namespace detail

inline VertexCover min_vertex_cover(const ColoredGraph& g, const VertexSet& alive) {
  return VertexCover{detail::CoverSearch(g).run(alive)};
}

inline VertexCover min_vertex_cover(const ColoredGraph& g) { return min_vertex_cover(g, all_vertices(g)); }

enum class PartitionKind { Twin, ColoredTwin };

struct ModulePartition {
  std::vector<std::vector<Vertex>> modules;  // each sorted; ordered by smallest member
  PartitionKind kind = PartitionKind::ColoredTwin;

  std::size_t size() const { return modules.size(); }
};

/// u and v are twins when N(u)\{v} = N(v)\{u}; colored twins additionally agree on every color.
inline bool are_twins(const ColoredGraph& g, Vertex u, Vertex v, bool colored) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t i = 0;
  std::size_t j = 0;
  for (;;) {
    while (i < a.size() && a[i].vertex == v) ++i;
    while (j < b.size() && b[j].vertex == u) ++j;
    if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
    if (a[i].vertex != b[j].vertex) return false;
    if (colored && a[i].color != b[j].color) return false;
    ++i;
    ++j;
  }
}

/// Every module nonempty, modules partition V, members pairwise (colored) twins, and
/// each module internally edge-uniform.
inline bool is_valid_partition(const ColoredGraph& g, const ModulePartition& p, bool colored = true) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t m = 0; m < p.modules.size(); ++m) {
    if (p.modules[m].empty()) return false;
    for (Vertex v : p.modules[m]) {
      if (v >= g.order() || owner[v] != -1) return false;
      owner[v] = static_cast<int>(m);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
  for (const auto& mod : p.modules) {
    std::optional<Cell> internal;
    for (std::size_t a = 0; a < mod.size(); ++a)
      for (std::size_t b = a + 1; b < mod.size(); ++b) {
        if (!are_twins(g, mod[a], mod[b], colored)) return false;
        const Cell c = colored ? g.cell(mod[a], mod[b]) : static_cast<Cell>(g.adjacent(mod[a], mod[b]));
        if (internal && *internal != c) return false;
        internal = c;
      }
  }
  return true;
}

/// Partition of V into classes of the (colored) twin relation.
///
/// Both relations are equivalences, so comparing each vertex against one member per existing
/// module suffices and the number of modules is the minimum possible. Modules larger than two
/// are automatically edge-uniform; pairs are trivially so.
inline ModulePartition nd_partition(const ColoredGraph& g, bool ignore_colors) {
  ModulePartition p;
  p.kind = ignore_colors ? PartitionKind::Twin : PartitionKind::ColoredTwin;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool placed = false;
    for (auto& mod : p.modules)
      if (are_twins(g, mod.front(), v, !ignore_colors)) {
        mod.push_back(v);
        placed = true;
        break;
      }
    if (!placed) p.modules.push_back({v});
  }
  return p;
}

/// Colored adjacency pattern of a non-cover vertex, aligned with the cover's sorted vertex list.
/// Entries for cover vertices that are dead in the position are kNoEdge.
struct ClassVector {
  std::vector<Cell> entries;

  friend auto operator<=>(const ClassVector&, const ClassVector&) = default;
  friend bool operator==(const ClassVector&, const ClassVector&) = default;

  bool isolated() const {
    return std::all_of(entries.begin(), entries.end(), [](Cell c) { return c == kNoEdge; });
  }

  std::string str() const {
    std::string s;
    for (Cell c : entries) s += cell_letter(c);
    return s;
  }
};

struct EquivalenceClass {
  std::vector<Vertex> members;  // sorted
  Vertex representative() const { return members.front(); }
};

struct EquivalenceClasses {
  std::vector<Vertex> cover;  // sorted; the index space of every ClassVector
  std::map<ClassVector, EquivalenceClass> classes;
};

/// Groups alive non-cover vertices by their colored adjacency to the alive part of `cover`.
inline EquivalenceClasses equivalence_classes(const ColoredGraph& g, const VertexSet& alive,
                                              const std::vector<Vertex>& cover) {
  if (!is_vertex_cover(g, alive, cover)) throw GraphError("vertex set is not a cover of the position");
  EquivalenceClasses out;
  out.cover = cover;
  std::sort(out.cover.begin(), out.cover.end());
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < out.cover.size(); ++i) index[out.cover[i]] = static_cast<int>(i);
  alive.for_each([&](Vertex v) {
    if (index[v] >= 0) return;
    ClassVector x{std::vector<Cell>(out.cover.size(), kNoEdge)};
    for (const auto& nb : g.neighbors(v))
      if (alive.contains(nb.vertex)) x.entries[static_cast<std::size_t>(index[nb.vertex])] = to_cell(nb.color);
    out.classes[x].members.push_back(v);
  });
  return out;
}

inline EquivalenceClasses equivalence_classes(const ColoredGraph& g, const VertexSet& alive, const VertexCover& s) {
  return equivalence_classes(g, alive, s.vertices);
}

/// One edge from each alive cover vertex to the minimum-id member of each class it touches.
inline std::vector<Edge> representative_edges(const EquivalenceClasses& ec) {
  std::vector<Edge> out;
  for (const auto& [x, cls] : ec.classes)
    for (std::size_t i = 0; i < ec.cover.size(); ++i)
      if (x.entries[i] != kNoEdge) out.emplace_back(ec.cover[i], cls.representative());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Edge> representative_edges(const ColoredGraph& g, const VertexSet& alive,
                                              const std::vector<Vertex>& cover) {
  return representative_edges(equivalence_classes(g, alive, cover));
}

}  // namespace cak
