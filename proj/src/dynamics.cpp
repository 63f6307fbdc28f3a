#include "kernelfix/dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kfx {

VertexSet word_support(const Word& w) {
  VertexSet s = 0;
  for (int v : w) s |= vbit(v);
  return s;
}

void validate_word(const Graph& g, const Word& w) {
  for (int v : w)
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("word letter out of range: " +
                                  std::to_string(v));
}

std::string format_config(Config x, int n) {
  std::string out(n, '0');
  for (int v = 0; v < n; ++v)
    if (contains(x, v)) out[v] = '1';
  return out;
}

Config parse_config(std::string_view text, int n) {
  if (static_cast<int>(text.size()) != n)
    throw std::invalid_argument("configuration length does not match n");
  Config x = 0;
  for (int v = 0; v < n; ++v) {
    if (text[v] == '1')
      x |= vbit(v);
    else if (text[v] != '0')
      throw std::invalid_argument("configuration must be over {0,1}");
  }
  return x;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, int n) {
  Word w;
  bool letters = !text.empty() &&
                 std::all_of(text.begin(), text.end(), [](unsigned char c) {
                   return std::islower(c) || std::isspace(c);
                 });
  if (letters) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      w.push_back(c - 'a');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      w.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    }
  }
  for (int v : w)
    if (v < 0 || v >= n)
      throw std::invalid_argument("word letter out of range: " +
                                  std::to_string(v));
  return w;
}

Config apply_word(const Graph& g, Config x, const Word& w) {
  for (int v : w) x = kernel_update(g, x, v);
  return x;
}

Config apply_word(const Graph& g, Config x, const Word& w, Trajectory& out) {
  out.steps.clear();
  out.steps.reserve(w.size() + 1);
  out.steps.push_back(x);
  for (int v : w) {
    x = kernel_update(g, x, v);
    out.steps.push_back(x);
  }
  return x;
}

Config kernel_map(const Graph& g, Config x) {
  Config y = 0;
  for (int v = 0; v < g.n; ++v)
    if ((g.adj[v] & x) == 0) y |= vbit(v);
  return y;
}

bool is_independent(const Graph& g, Config x) {
  for (VertexSet rest = x; rest != 0; rest &= rest - 1)
    if (g.adj[std::countr_zero(rest)] & x) return false;
  return true;
}

bool is_kernel(const Graph& g, Config x) {
  VertexSet dominated = x;
  for (VertexSet rest = x; rest != 0; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if (g.adj[v] & x) return false;
    dominated |= g.adj[v];
  }
  return dominated == g.vertices();
}

namespace {

// All maximal independent sets of g restricted to the vertex mask
// `allowed` (maximal within that induced subgraph). Bron-Kerbosch with
// greedy pivoting on the complement graph.
void mis_rec(const Graph& g, VertexSet allowed, VertexSet chosen,
             VertexSet cand, VertexSet excl, std::vector<Config>& out) {
  if (cand == 0 && excl == 0) {
    out.push_back(chosen);
    return;
  }
  // pivot: vertex of cand|excl with most complement-neighbors in cand
  int pivot = -1, best = -1;
  for_each_vertex(cand | excl, [&](int u) {
    VertexSet cnb = allowed & ~g.adj[u] & ~vbit(u);
    int score = set_size(cand & cnb);
    if (score > best) {
      best = score;
      pivot = u;
    }
  });
  VertexSet pivot_cnb = allowed & ~g.adj[pivot] & ~vbit(pivot);
  VertexSet todo = cand & ~pivot_cnb;
  for_each_vertex(todo, [&](int v) {
    VertexSet cnb = allowed & ~g.adj[v] & ~vbit(v);
    mis_rec(g, allowed, chosen | vbit(v), cand & cnb, excl & cnb, out);
    cand &= ~vbit(v);
    excl |= vbit(v);
  });
}

}  // namespace

std::vector<Config> maximal_independent_sets(const Graph& g,
                                             VertexSet within) {
  std::vector<Config> out;
  mis_rec(g, within, 0, within, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Config> enumerate_kernels(const Graph& g) {
  return maximal_independent_sets(g, g.vertices());
}

std::vector<Config> fixed_points(const Graph& g) {
  if (g.n > 30)
    throw std::invalid_argument("fixed_points: exhaustive scan needs n <= 30");
  std::vector<Config> out;
  for (Config x = 0;; ++x) {
    if (kernel_map(g, x) == x) out.push_back(x);
    if (x == all_vertices(g.n)) break;
  }
  return out;
}

}  // namespace kfx
