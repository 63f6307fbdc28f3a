#pragma once

#include <string>
#include <string_view>

#include "kernelfix/graph.hpp"

namespace kfx {

// graph6 short form (n <= 62): header byte n+63, then the upper triangle in
// column order (x01, x02, x12, x03, ...) packed big-endian 6 bits per byte,
// each byte offset by 63. Padding bits must be zero.
std::string write_graph6(const Graph& g);

// Throws std::invalid_argument on malformed input (bad header, characters
// outside [63,126], wrong body length, nonzero trailing bits). Long-form
// headers (126) are rejected.
Graph parse_graph6(std::string_view text);

}  // namespace kfx
