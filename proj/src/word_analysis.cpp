#include "kernelfix/word_analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace kfx {

WordVerdict prefixes(const Graph& g, const Word& w) {
  validate_word(g, w);
  WordVerdict out;
  if (auto e = uncovered_edge(g, word_support(w))) {
    out.answer = false;
    out.edge = e;
    out.counterexample = vbit(e->first) | vbit(e->second);
  }
  return out;
}

WordVerdict suffixes(const Graph& g, const Word& w) {
  validate_word(g, w);
  WordVerdict out;
  if (auto obs = suffix_obstruction(g, word_support(w))) {
    out.answer = false;
    out.obstruction = obs;
    out.counterexample = obs->independent_set;
  }
  return out;
}

WordVerdict fixes(const Graph& g, const Word& w) {
  validate_word(g, w);
  if (g.n > 25)
    throw std::invalid_argument("fixes: exhaustive scan needs n <= 25");
  WordVerdict out;
  for (Config x = 0;; ++x) {
    if (!is_kernel(g, apply_word(g, x, w))) {
      out.answer = false;
      out.counterexample = x;
      return out;
    }
    if (x == all_vertices(g.n)) break;
  }
  return out;
}

WordVerdict fixing_set(const Graph& g, VertexSet s) {
  WordVerdict out;
  if (auto e = uncovered_edge(g, s)) {
    out.answer = false;
    out.edge = e;
    out.counterexample = vbit(e->first) | vbit(e->second);
    return out;
  }
  if (auto dom = is_dominion(g, s)) {
    out.answer = false;
    out.obstruction = dom;
    out.counterexample = dom->independent_set;
    return out;
  }
  return out;
}

bool fixes_by_split(const Graph& g, const Word& w, int a, int b) {
  int l = static_cast<int>(w.size());
  if (a < 0 || a > l || b < 0 || b > l)
    throw std::out_of_range("fixes_by_split: positions must be in [0, l]");
  if (b == 0) b = 1;
  Word prefix_part(w.begin(), w.begin() + a);
  Word suffix_part(w.begin() + (b - 1), w.end());
  if (!prefixes(g, prefix_part).answer) return false;
  if (!suffixes(g, suffix_part).answer) return false;
  VertexSet overlap = 0;
  for (int i = b - 1; i < a; ++i) overlap |= vbit(w[i]);
  return is_independent(g, overlap);
}

Word normalize_word(const Graph& g, const Word& w) {
  validate_word(g, w);
  Word cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    // drop the second of an equal pair separated by non-neighbors only
    for (std::size_t i = 0; i < cur.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[j] == cur[i]) {
          cur.erase(cur.begin() + static_cast<long>(j));
          changed = true;
          break;
        }
        if (contains(g.adj[cur[i]], cur[j])) break;  // neighbor closes window
      }
    if (changed) continue;
    // one bubble pass over commuting neighbors
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] > cur[i + 1] && !contains(g.adj[cur[i]], cur[i + 1])) {
        std::swap(cur[i], cur[i + 1]);
        changed = true;
      }
  }
  return cur;
}

namespace {

struct WordSearch {
  const Graph& g;
  int target_len = 0;
  Word stack;

  explicit WordSearch(const Graph& graph) : g(graph) {}

  // letters that keep the word in normal form after appending x
  bool append_keeps_normal(int x) const {
    if (!stack.empty() && stack.back() > x &&
        !contains(g.adj[stack.back()], x))
      return false;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      if (*it == x) return false;
      if (contains(g.adj[x], *it)) break;
    }
    return true;
  }

  // any maximal matching among edges missed by the support bounds the
  // number of extra letters a cover still needs
  bool cover_still_possible() const {
    VertexSet support = word_support(stack);
    int slack = target_len - static_cast<int>(stack.size());
    VertexSet blocked = 0;
    int need = 0;
    for (int u = 0; u < g.n; ++u) {
      if (contains(support | blocked, u)) continue;
      VertexSet free = g.adj[u] & ~support & ~blocked & ~all_vertices(u);
      if (free != 0) {
        ++need;
        if (need > slack) return false;
        blocked |= vbit(u) | (free & (~free + 1));
      }
    }
    return true;
  }

  std::optional<Word> run(int depth) {
    if (depth == target_len) {
      if (fixes(g, stack).answer) return stack;
      return std::nullopt;
    }
    if (!cover_still_possible()) return std::nullopt;
    for (int x = 0; x < g.n; ++x) {
      if (!append_keeps_normal(x)) continue;
      stack.push_back(x);
      if (auto found = run(depth + 1)) return found;
      stack.pop_back();
    }
    return std::nullopt;
  }
};

}  // namespace

ShortestWordResult shortest_fixing_word(const Graph& g, int max_len) {
  if (g.n > 12)
    throw std::invalid_argument("shortest_fixing_word: n <= 12 required");
  if (max_len < 0 || max_len > 4 * g.n)
    throw std::invalid_argument("shortest_fixing_word: max_len <= 4n");
  for (int len = 0; len <= max_len; ++len) {
    WordSearch search(g);
    search.target_len = len;
    if (auto found = search.run(0))
      return {ShortestWordResult::Outcome::found, found, max_len};
  }
  return {ShortestWordResult::Outcome::none_within_bound, std::nullopt,
          max_len};
}

}  // namespace kfx
