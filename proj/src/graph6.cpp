#include "kernelfix/graph6.hpp"

#include <stdexcept>

namespace kfx {

namespace {
constexpr int kOffset = 63;
}

std::string write_graph6(const Graph& g) {
  if (g.n > kMaxVertices)
    throw std::invalid_argument("graph6 short form supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(g.n + kOffset));

  int bits = g.n * (g.n - 1) / 2;
  int nbytes = (bits + 5) / 6;
  std::string body(nbytes, static_cast<char>(kOffset));
  int pos = 0;
  for (int col = 1; col < g.n; ++col)
    for (int row = 0; row < col; ++row, ++pos)
      if (g.has_edge(row, col))
        body[pos / 6] += static_cast<char>(1 << (5 - pos % 6));
  out += body;
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : text)
    if (c < kOffset || c > 126)
      throw std::invalid_argument("graph6: byte out of range");
  if (text[0] == 126)
    throw std::invalid_argument("graph6: long form not supported");

  int n = text[0] - kOffset;
  int bits = n * (n - 1) / 2;
  int nbytes = (bits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + nbytes)
    throw std::invalid_argument("graph6: body length does not match header");

  Graph g = empty_graph(n);
  int pos = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++pos)
      if ((text[1 + pos / 6] - kOffset) >> (5 - pos % 6) & 1) {
        g.adj[row] |= vbit(col);
        g.adj[col] |= vbit(row);
      }
  for (int pad = bits; pad < nbytes * 6; ++pad)
    if ((text[1 + pad / 6] - kOffset) >> (5 - pad % 6) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  return g;
}

}  // namespace kfx
