#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kfx {

// Vertices are dense 0-based integers; every set-like object is a 64-bit
// mask with bit v = vertex v. graph6 short form caps n at 62, so one word
// always suffices.
inline constexpr int kMaxVertices = 62;

using VertexSet = std::uint64_t;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) {
  return n == 0 ? 0 : ~VertexSet{0} >> (64 - n);
}

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

// Calls f(v) for each vertex of s in ascending order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(std::span<const int> vs, int n);

// Undirected simple graph as per-vertex neighbor masks. Symmetric, loop-free,
// immutable once built.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  VertexSet neighbors(int v) const { return adj[v]; }
  VertexSet closed_neighborhood(int v) const { return adj[v] | vbit(v); }
  bool has_edge(int u, int v) const { return contains(adj[u], v); }
  int degree(int v) const { return std::popcount(adj[v]); }
  VertexSet vertices() const { return all_vertices(n); }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool operator==(const Graph&) const = default;
};

// Throws std::invalid_argument on out-of-range vertices or self-loops.
// Duplicate pairs collapse.
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
// star_graph(n): n vertices total, center 0 adjacent to 1..n-1.
Graph star_graph(int n);
// wheel_graph(n): n vertices total, rim cycle 0..n-2 plus hub n-1; n >= 4.
// Laid out so it equals compose(K2, {cycle(n-1), K1}) vertex for vertex.
Graph wheel_graph(int n);

// N(S) = union of open neighborhoods, minus S itself.
VertexSet set_neighborhood(const Graph& g, VertexSet s);

// Result of substituting a graph for every vertex of an outer graph.
// blocks[v] is the vertex set the v-th part landed on (a contiguous range).
struct Composition {
  Graph graph;
  std::vector<VertexSet> blocks;
};

// Replace vertex v of h by parts[v]; edges of h become complete joins
// between the corresponding blocks. Requires parts.size() == h.n.
Composition compose(const Graph& h, std::span<const Graph> parts);

// 2n vertices: vertex n+v is a new degree-1 neighbor of v.
Graph add_pendant_to_each(const Graph& g);

// Vertices whose neighborhood induces a clique (isolated vertices count).
VertexSet simplicial_vertices(const Graph& g);

// True iff every s in S is adjacent to every vertex of N(S) \ S.
bool is_tethered(const Graph& g, VertexSet s);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // original[i] = index in the parent graph

  VertexSet to_parent(VertexSet sub) const;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// True iff the vertices of s induce a connected subgraph (conventionally
// true for |s| <= 1).
bool is_connected_subset(const Graph& g, VertexSet s);

}  // namespace kfx
