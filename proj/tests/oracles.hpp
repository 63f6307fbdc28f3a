#pragma once

// Test-only reference implementations, deliberately independent of the
// library's decision paths: plain definition-chasing scans used to
// cross-check the structural deciders.

#include <algorithm>
#include <vector>

#include "kernelfix/dynamics.hpp"
#include "kernelfix/enumerate.hpp"
#include "kernelfix/graph.hpp"

namespace kfx::oracle {

// Every labeled graph on n vertices, by edge-mask order.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size());
       ++bits) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (bits >> i & 1) edges.push_back(pairs[i]);
    out.push_back(build_graph(n, edges));
  }
  return out;
}

inline bool semantic_prefixes(const Graph& g, const Word& w) {
  for (Config x = 0;; ++x) {
    if (!is_independent(g, apply_word(g, x, w))) return false;
    if (x == all_vertices(g.n)) break;
  }
  return true;
}

inline bool semantic_suffixes(const Graph& g, const Word& w) {
  for (Config x = 0;; ++x) {
    if (is_independent(g, x) && !is_kernel(g, apply_word(g, x, w)))
      return false;
    if (x == all_vertices(g.n)) break;
  }
  return true;
}

inline bool semantic_fixes(const Graph& g, const Word& w) {
  for (Config x = 0;; ++x) {
    if (!is_kernel(g, apply_word(g, x, w))) return false;
    if (x == all_vertices(g.n)) break;
  }
  return true;
}

// Primal colony: some independent I with s inside N(I), by full scan.
inline bool primal_colony(const Graph& g, VertexSet s) {
  for (VertexSet i = 0;; ++i) {
    if (is_independent(g, i)) {
      VertexSet nb = 0;
      for_each_vertex(i, [&](int v) { nb |= g.adj[v]; });
      if ((s & ~nb) == 0) return true;
    }
    if (i == all_vertices(g.n)) break;
  }
  return false;
}

inline std::vector<Config> kernels_by_scan(const Graph& g) {
  std::vector<Config> out;
  for (Config x = 0;; ++x) {
    if (is_kernel(g, x)) out.push_back(x);
    if (x == all_vertices(g.n)) break;
  }
  return out;
}

inline std::vector<Config> mis_by_scan(const Graph& g, VertexSet within) {
  std::vector<Config> out;
  for (Config x = 0;; ++x) {
    if ((x & ~within) == 0 && is_independent(g, x)) {
      bool maximal = true;
      for_each_vertex(within & ~x, [&](int v) {
        if ((g.adj[v] & x) == 0) maximal = false;
      });
      if (maximal) out.push_back(x);
    }
    if (x == all_vertices(g.n)) break;
  }
  return out;
}

// Minimal adjacency key by checking every vertex permutation.
inline std::uint64_t canonical_key_by_permutations(const Graph& g) {
  std::vector<int> perm(g.n);
  for (int v = 0; v < g.n; ++v) perm[v] = v;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (int col = 1; col < g.n; ++col)
      for (int row = 0; row < col; ++row)
        key = key << 1 | (g.has_edge(perm[row], perm[col]) ? 1 : 0);
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g.n <= 1 ? 0 : best;
}

inline std::vector<Word> permutations_of(VertexSet s) {
  Word base = set_to_vertices(s);
  std::vector<Word> out;
  std::sort(base.begin(), base.end());
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline Word doubled(const Word& w) {
  Word out = w;
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace kfx::oracle
