#include "kernelfix/graph.hpp"

#include <stdexcept>

namespace kfx {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range: " +
                                std::to_string(n));
}

}  // namespace

std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet vertices_to_set(std::span<const int> vs, int n) {
  VertexSet s = 0;
  for (int v : vs) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    s |= vbit(v);
  }
  return s;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for_each_vertex(adj[u] & ~(all_vertices(u + 1)), [&](int v) {
      out.emplace_back(u, v);
    });
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  check_vertex_count(n);
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    g.adj[u] |= vbit(v);
    g.adj[v] |= vbit(u);
  }
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                             edges.size()));
}

Graph empty_graph(int n) {
  check_vertex_count(n);
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  return g;
}

Graph complete_graph(int n) {
  check_vertex_count(n);
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  for (int v = 0; v < n; ++v) g.adj[v] = all_vertices(n) & ~vbit(v);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph needs n >= 1");
  Graph g = empty_graph(n);
  for (int v = 0; v + 1 < n; ++v) {
    g.adj[v] |= vbit(v + 1);
    g.adj[v + 1] |= vbit(v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  Graph g = path_graph(n);
  g.adj[0] |= vbit(n - 1);
  g.adj[n - 1] |= vbit(0);
  return g;
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star_graph needs n >= 1");
  Graph g = empty_graph(n);
  for (int v = 1; v < n; ++v) {
    g.adj[0] |= vbit(v);
    g.adj[v] |= vbit(0);
  }
  return g;
}

Graph wheel_graph(int n) {
  if (n < 4) throw std::invalid_argument("wheel_graph needs n >= 4");
  Graph g = cycle_graph(n - 1);
  g.n = n;
  g.adj.push_back(all_vertices(n - 1));
  for (int v = 0; v + 1 < n; ++v) g.adj[v] |= vbit(n - 1);
  return g;
}

VertexSet set_neighborhood(const Graph& g, VertexSet s) {
  VertexSet nb = 0;
  for_each_vertex(s, [&](int v) { nb |= g.adj[v]; });
  return nb & ~s;
}

Composition compose(const Graph& h, std::span<const Graph> parts) {
  if (static_cast<int>(parts.size()) != h.n)
    throw std::invalid_argument("compose: need exactly one part per vertex");
  int total = 0;
  for (const Graph& p : parts) total += p.n;
  check_vertex_count(total);

  Composition out;
  out.graph = empty_graph(total);
  out.blocks.resize(h.n);

  std::vector<int> offset(h.n, 0);
  int at = 0;
  for (int v = 0; v < h.n; ++v) {
    offset[v] = at;
    out.blocks[v] = all_vertices(parts[v].n) << at;
    at += parts[v].n;
  }

  for (int v = 0; v < h.n; ++v)
    for (int i = 0; i < parts[v].n; ++i)
      out.graph.adj[offset[v] + i] |= parts[v].adj[i] << offset[v];

  for (auto [u, v] : h.edges())
    for_each_vertex(out.blocks[u], [&](int a) {
      out.graph.adj[a] |= out.blocks[v];
      for_each_vertex(out.blocks[v],
                      [&](int b) { out.graph.adj[b] |= vbit(a); });
    });
  return out;
}

Graph add_pendant_to_each(const Graph& g) {
  check_vertex_count(2 * g.n);
  Graph out = empty_graph(2 * g.n);
  for (int v = 0; v < g.n; ++v) {
    out.adj[v] = g.adj[v] | vbit(g.n + v);
    out.adj[g.n + v] = vbit(v);
  }
  return out;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out = 0;
  for (int v = 0; v < g.n; ++v) {
    bool clique = true;
    for_each_vertex(g.adj[v], [&](int u) {
      // every other neighbor of v must be adjacent to u
      if ((g.adj[v] & ~vbit(u) & ~g.adj[u]) != 0) clique = false;
    });
    if (clique) out |= vbit(v);
  }
  return out;
}

bool is_tethered(const Graph& g, VertexSet s) {
  VertexSet t = set_neighborhood(g, s);
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((t & ~g.adj[v]) != 0) ok = false;
  });
  return ok;
}

VertexSet InducedSubgraph::to_parent(VertexSet sub) const {
  VertexSet out = 0;
  for_each_vertex(sub, [&](int i) { out |= vbit(original[i]); });
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  InducedSubgraph out;
  out.original = set_to_vertices(s);
  int m = static_cast<int>(out.original.size());
  out.graph = empty_graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(out.original[i], out.original[j])) {
        out.graph.adj[i] |= vbit(j);
        out.graph.adj[j] |= vbit(i);
      }
  return out;
}

bool is_connected_subset(const Graph& g, VertexSet s) {
  if (set_size(s) <= 1) return true;
  VertexSet seen = s & (~s + 1);  // lowest vertex of s
  for (;;) {
    VertexSet grow = seen;
    for_each_vertex(seen, [&](int v) { grow |= g.adj[v] & s; });
    if (grow == seen) break;
    seen = grow;
  }
  return seen == s;
}

}  // namespace kfx
