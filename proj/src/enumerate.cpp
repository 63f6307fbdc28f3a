#include "kernelfix/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kfx {

namespace {

constexpr int kKeyMaxVertices = 11;  // n*(n-1)/2 must fit in 64 bits

int key_bits(int n) { return n * (n - 1) / 2; }

void check_key_range(int n) {
  if (n < 0 || n > kKeyMaxVertices)
    throw std::invalid_argument("adjacency key supports n <= 11");
}

struct CanonSearch {
  const Graph& g;
  int total_bits;
  std::uint64_t best;
  std::vector<int> perm;
  VertexSet used = 0;

  explicit CanonSearch(const Graph& graph)
      : g(graph), total_bits(key_bits(graph.n)), best(adjacency_key(graph)),
        perm(graph.n, -1) {}

  void run(int depth, std::uint64_t cur, int bits) {
    if (depth == g.n) {
      if (cur < best) best = cur;
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if (contains(used, v)) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < depth; ++i)
        col = col << 1 | (g.has_edge(perm[i], v) ? 1 : 0);
      std::uint64_t next = cur << depth | col;
      if (next > best >> (total_bits - bits - depth)) continue;
      perm[depth] = v;
      used |= vbit(v);
      run(depth + 1, next, bits + depth);
      used &= ~vbit(v);
    }
  }
};

}  // namespace

std::uint64_t adjacency_key(const Graph& g) {
  check_key_range(g.n);
  std::uint64_t key = 0;
  for (int col = 1; col < g.n; ++col)
    for (int row = 0; row < col; ++row)
      key = key << 1 | (g.has_edge(row, col) ? 1 : 0);
  return key;
}

std::uint64_t canonical_key(const Graph& g) {
  check_key_range(g.n);
  if (g.n <= 1) return 0;
  CanonSearch search(g);
  search.run(0, 0, 0);
  return search.best;
}

Graph graph_from_key(int n, std::uint64_t key) {
  check_key_range(n);
  Graph g = empty_graph(n);
  int shift = key_bits(n);
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      if (key >> --shift & 1) {
        g.adj[row] |= vbit(col);
        g.adj[col] |= vbit(row);
      }
  return g;
}

Graph canonical_form(const Graph& g) {
  return graph_from_key(g.n, canonical_key(g));
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_graphs supports 1 <= n <= 8");
  std::vector<std::uint64_t> level{0};  // K1
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t parent : level) {
      Graph base = graph_from_key(k - 1, parent);
      base.n = k;
      base.adj.push_back(0);
      // every way to attach the new vertex
      for (VertexSet nb = 0; nb < vbit(k - 1); ++nb) {
        base.adj[k - 1] = nb;
        for (int v = 0; v < k - 1; ++v) {
          base.adj[v] &= all_vertices(k - 1);
          if (contains(nb, v)) base.adj[v] |= vbit(k - 1);
        }
        next.insert(canonical_key(base));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t key : level) out.push_back(graph_from_key(n, key));
  return out;
}

}  // namespace kfx
