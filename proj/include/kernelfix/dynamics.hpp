#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kernelfix/graph.hpp"

namespace kfx {

// A configuration assigns one bit per vertex; bit v = state of vertex v.
// Serialized form is "s0 s1 ... s_{n-1}" with index 0 leftmost; enumeration
// order throughout is ascending integer value with vertex 0 as the
// least-significant bit.
using Config = std::uint64_t;

// A word is a sequence of vertex indices, repeats allowed.
using Word = std::vector<int>;

VertexSet word_support(const Word& w);
// Throws std::invalid_argument if a letter is out of range for g.
void validate_word(const Graph& g, const Word& w);

std::string format_config(Config x, int n);
Config parse_config(std::string_view text, int n);
std::string format_word(const Word& w);
// Accepts whitespace-separated indices ("0 2 1") or a run of letters
// ("acb", a = 0).
Word parse_word(std::string_view text, int n);

// Single sequential update of vertex v: bit v becomes 1 iff no neighbor of
// v is 1 in x (so isolated vertices always update to 1); all other bits
// are copied.
inline Config kernel_update(const Graph& g, Config x, int v) {
  return (g.adj[v] & x) ? x & ~vbit(v) : x | vbit(v);
}

Config apply_word(const Graph& g, Config x, const Word& w);

// Intermediate configurations y^0 = x, ..., y^l; recorded only on request.
struct Trajectory {
  std::vector<Config> steps;
};

Config apply_word(const Graph& g, Config x, const Word& w, Trajectory& out);

// Simultaneous update: every bit recomputed from the same source x.
Config kernel_map(const Graph& g, Config x);

bool is_independent(const Graph& g, Config x);
// Independent and dominating (every 0-vertex has a 1-neighbor).
bool is_kernel(const Graph& g, Config x);

// All maximal independent sets of the subgraph induced by `within`,
// reported in the original vertex numbering, ascending. Recursive
// enumeration (no 2^n scan); any n <= 62.
std::vector<Config> maximal_independent_sets(const Graph& g, VertexSet within);

// All configurations whose ones form a maximal independent set, ascending.
std::vector<Config> enumerate_kernels(const Graph& g);

// All x with kernel_map(x) == x, by exhaustive scan, ascending. n <= 30.
std::vector<Config> fixed_points(const Graph& g);

}  // namespace kfx
