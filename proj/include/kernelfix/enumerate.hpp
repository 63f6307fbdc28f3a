#pragma once

#include <cstdint>
#include <vector>

#include "kernelfix/graph.hpp"

namespace kfx {

// Upper-triangle adjacency bits in column order (x01, x02, x12, x03, ...),
// first bit most significant. Fits in 64 bits for n <= 11.
std::uint64_t adjacency_key(const Graph& g);

// Lexicographically minimal adjacency_key over all vertex relabelings,
// found by branch-and-bound over partial orderings. n <= 11.
std::uint64_t canonical_key(const Graph& g);

Graph graph_from_key(int n, std::uint64_t key);

// The relabeling of g that attains canonical_key(g).
Graph canonical_form(const Graph& g);

// One representative per isomorphism class, sorted by canonical key.
// Supported range: 1 <= n <= 8.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace kfx
