#include "kernelfix/permis.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "kernelfix/enumerate.hpp"
#include "kernelfix/graph6.hpp"
#include "kernelfix/word_analysis.hpp"

namespace kfx {

namespace {

// Verifying a word with fixes() costs 2^n; beyond this we rely on the
// construction invariants alone.
constexpr int kVerifyLimit = 22;

void verify_permis_or_throw(const Graph& g, const Word& w, const char* what) {
  if (static_cast<int>(w.size()) != g.n ||
      word_support(w) != g.vertices())
    throw std::invalid_argument(std::string(what) +
                                ": word is not a permutation of the graph");
  if (g.n <= kVerifyLimit && !fixes(g, w).answer)
    throw std::logic_error(std::string(what) +
                           ": produced word does not fix the network");
}

struct PermisSearch {
  const Graph& g;
  int n;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  std::vector<VertexSet> closed_nb;           // N[u]
  std::vector<Config> cache;                  // counterexample configs
  std::vector<std::vector<Config>> images;    // images[d][j] = prefix of d letters applied to cache[j]
  std::vector<VertexSet> closed_at;           // closed vertices after d letters
  std::vector<VertexSet> visited_at;
  Word path;
  Word found;
  long long nodes = 0;

  static constexpr int kFound = -2;
  static constexpr int kTimeout = -3;

  explicit PermisSearch(const Graph& graph,
                        std::optional<std::chrono::steady_clock::time_point> dl)
      : g(graph), n(graph.n), deadline(dl) {
    closed_nb.resize(n);
    for (int v = 0; v < n; ++v) closed_nb[v] = g.closed_neighborhood(v);
    images.assign(n + 1, {});
    closed_at.assign(n + 1, 0);
    visited_at.assign(n + 1, 0);
    path.reserve(n);
  }

  bool out_of_time() {
    return deadline && (++nodes & 1023) == 0 &&
           std::chrono::steady_clock::now() > *deadline;
  }

  bool dead(Config y, VertexSet suspects) const {
    for (VertexSet s = suspects; s != 0; s &= s - 1)
      if ((y & closed_nb[std::countr_zero(s)]) == 0) return true;
    return false;
  }

  // On a full-scan failure, remember the configuration and report the
  // shallowest prefix depth at which it already dooms every completion.
  int absorb_counterexample(Config x) {
    cache.push_back(x);
    Config y = x;
    images[0].push_back(y);
    int dead_depth = n;
    for (int d = 1; d <= n; ++d) {
      y = kernel_update(g, y, path[d - 1]);
      images[d].push_back(y);
      if (dead_depth == n && d < n && dead(y, closed_at[d])) dead_depth = d;
    }
    return dead_depth;
  }

  // Return contract: kFound / kTimeout propagate to the top; a value
  // r >= -1 tells levels deeper than r to return immediately and level r
  // to keep iterating its letter loop.
  int run(int depth) {
    if (out_of_time()) return kTimeout;
    if (depth == n) {
      for (Config x = 0;; ++x) {
        Config y = x;
        for (int v : path) y = kernel_update(g, y, v);
        if (!is_kernel(g, y)) {
          int dd = absorb_counterexample(x);
          return dd - 1;
        }
        if (x == all_vertices(n)) break;
      }
      found = path;
      return kFound;
    }
    VertexSet visited = visited_at[depth];
    for (int v = 0; v < n; ++v) {
      if (contains(visited, v)) continue;
      VertexSet now_visited = visited | vbit(v);
      VertexSet newly_closed = 0;
      for_each_vertex(closed_nb[v] & ~closed_at[depth], [&](int u) {
        if ((closed_nb[u] & ~now_visited) == 0) newly_closed |= vbit(u);
      });

      auto& next_imgs = images[depth + 1];
      next_imgs.resize(cache.size());
      bool pruned = false;
      for (std::size_t j = 0; j < cache.size(); ++j) {
        next_imgs[j] = kernel_update(g, images[depth][j], v);
        if (!pruned && dead(next_imgs[j], newly_closed)) pruned = true;
      }
      if (pruned) continue;

      visited_at[depth + 1] = now_visited;
      closed_at[depth + 1] = closed_at[depth] | newly_closed;
      path.push_back(v);
      int r = run(depth + 1);
      path.pop_back();
      if (r == kFound || r == kTimeout) return r;
      if (r < depth) return r;
    }
    return depth - 1;
  }
};

}  // namespace

PermisVerdict find_permis(const Graph& g) { return find_permis(g, {}); }

PermisVerdict find_permis(const Graph& g, const SearchLimits& limits) {
  PermisVerdict out;
  if (g.n > limits.exhaustive_limit && !limits.budget) {
    out.answer = PermisAnswer::unknown;
    return out;
  }
  if (g.n > 25) {
    out.answer = PermisAnswer::unknown;  // per-permutation scan infeasible
    return out;
  }
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (limits.budget)
    deadline = std::chrono::steady_clock::now() + *limits.budget;
  PermisSearch search(g, deadline);
  int r = search.run(0);
  if (r == PermisSearch::kFound) {
    verify_permis_or_throw(g, search.found, "find_permis");
    out.answer = PermisAnswer::exists;
    out.word = search.found;
  } else if (r == PermisSearch::kTimeout) {
    out.answer = PermisAnswer::unknown;
  } else {
    out.answer = PermisAnswer::not_exists;
    out.certificate = PermisVerdict::Certificate::exhaustive;
  }
  return out;
}

bool orientation_is_transitive(const Graph& g, const Orientation& o) {
  std::vector<VertexSet> below(g.n, 0);  // below[u] = {v : u -> v}
  for (auto [u, v] : o) below[u] |= vbit(v);
  for (int u = 0; u < g.n; ++u) {
    bool ok = true;
    for_each_vertex(below[u], [&](int v) {
      if ((below[v] & ~below[u]) != 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<Orientation> transitive_orientation(const Graph& g) {
  std::vector<VertexSet> rem(g.adj);           // remainder adjacency
  std::vector<VertexSet> arc(g.n, 0);          // arc[u] = {v : u -> v}
  auto oriented = [&](int u, int v) {
    return contains(arc[u], v) || contains(arc[v], u);
  };

  for (int a = 0; a < g.n; ++a)
    for_each_vertex(g.adj[a] & ~all_vertices(a + 1), [&](int b) {
      if (oriented(a, b)) return;
      // close the implication class of ab within the remainder graph
      std::vector<std::pair<int, int>> queue{{a, b}};
      arc[a] |= vbit(b);
      bool contradiction = false;
      while (!queue.empty() && !contradiction) {
        auto [s, t] = queue.back();
        queue.pop_back();
        auto force = [&](int x, int y) {
          if (contains(arc[y], x)) {
            contradiction = true;
            return;
          }
          if (!contains(arc[x], y)) {
            arc[x] |= vbit(y);
            queue.emplace_back(x, y);
          }
        };
        // shared source: s->t forces s->c when tc is a remainder non-edge
        for_each_vertex(rem[s] & ~rem[t] & ~vbit(t),
                        [&](int c) { force(s, c); });
        // shared target: s->t forces c->t when sc is a remainder non-edge
        for_each_vertex(rem[t] & ~rem[s] & ~vbit(s),
                        [&](int c) { force(c, t); });
        if (contradiction) break;
      }
      if (contradiction) {
        arc.assign(g.n, ~VertexSet{0});  // poison; checked below
        return;
      }
      // retire the closed class from the remainder
      for (int u = 0; u < g.n; ++u)
        for_each_vertex(arc[u] & rem[u], [&](int v) {
          rem[u] &= ~vbit(v);
          rem[v] &= ~vbit(u);
        });
    });

  if (!arc.empty() && arc[0] == ~VertexSet{0}) return std::nullopt;
  Orientation out;
  for (int u = 0; u < g.n; ++u)
    for_each_vertex(arc[u], [&](int v) { out.emplace_back(u, v); });
  if (!orientation_is_transitive(g, out)) return std::nullopt;
  return out;
}

std::optional<Orientation> transitive_orientation_brute(const Graph& g) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  if (m > 20)
    throw std::invalid_argument("orientation brute force needs <= 20 edges");
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    Orientation o;
    o.reserve(m);
    for (int i = 0; i < m; ++i)
      o.emplace_back(bits >> i & 1 ? edges[i]
                                   : std::make_pair(edges[i].second,
                                                    edges[i].first));
    if (orientation_is_transitive(g, o)) return o;
  }
  return std::nullopt;
}

std::optional<Word> comparability_permis(const Graph& g) {
  auto orientation = transitive_orientation(g);
  if (!orientation) return std::nullopt;
  std::vector<int> indegree(g.n, 0);
  std::vector<VertexSet> above(g.n, 0);
  for (auto [u, v] : *orientation) {
    ++indegree[v];
    above[u] |= vbit(v);
  }
  Word w;
  VertexSet done = 0;
  while (static_cast<int>(w.size()) < g.n) {
    for (int v = 0; v < g.n; ++v)
      if (!contains(done, v) && indegree[v] == 0) {
        w.push_back(v);
        done |= vbit(v);
        for_each_vertex(above[v], [&](int u) { --indegree[u]; });
        break;
      }
  }
  verify_permis_or_throw(g, w, "comparability_permis");
  return w;
}

std::optional<Word> simplicial_permis(const Graph& g) {
  VertexSet simp = simplicial_vertices(g);
  auto dominates = [&](VertexSet d) {
    VertexSet covered = d;
    for_each_vertex(d, [&](int v) { covered |= g.adj[v]; });
    return covered == g.vertices();
  };
  if (!dominates(simp)) return std::nullopt;

  // minimal dominating subset of the simplicial vertices
  VertexSet m = simp;
  auto minimize = [&] {
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for_each_vertex(m, [&](int v) {
        if (!shrunk && dominates(m & ~vbit(v))) {
          m &= ~vbit(v);
          shrunk = true;
        }
      });
    }
  };
  minimize();
  // adjacent simplicial vertices in m are closed twins; drop one
  for (;;) {
    int drop = -1;
    for_each_vertex(m, [&](int v) {
      if (drop < 0 && (g.adj[v] & m) != 0) drop = std::countr_zero(g.adj[v] & m);
    });
    if (drop < 0) break;
    m &= ~vbit(drop);
    minimize();
  }
  if (!is_independent(g, m) || !dominates(m))
    throw std::logic_error("simplicial_permis: pruning lost domination");

  Word w = set_to_vertices(g.vertices() & ~m);
  for (int v : set_to_vertices(m)) w.push_back(v);
  verify_permis_or_throw(g, w, "simplicial_permis");
  return w;
}

Word composition_permis(const Graph& h, std::span<const Graph> parts,
                        std::span<const Word> part_words, const Word& h_word) {
  if (parts.size() != static_cast<std::size_t>(h.n) ||
      part_words.size() != parts.size())
    throw std::invalid_argument("composition_permis: arity mismatch");
  verify_permis_or_throw(h, h_word, "composition_permis (outer word)");
  for (std::size_t i = 0; i < parts.size(); ++i)
    verify_permis_or_throw(parts[i], part_words[i],
                           "composition_permis (part word)");

  Composition comp = compose(h, parts);
  Word w;
  for (int b : h_word) {
    int offset = std::countr_zero(comp.blocks[b]);
    for (int v : part_words[b]) w.push_back(offset + v);
  }
  verify_permis_or_throw(comp.graph, w, "composition_permis");
  return w;
}

std::optional<bool> PermisMemo::lookup(int n, std::uint64_t key) const {
  auto it = results_.find({n, key});
  if (it == results_.end()) return std::nullopt;
  return it->second;
}

void PermisMemo::store(int n, std::uint64_t key, bool has_permis) {
  results_[{n, key}] = has_permis;
}

std::optional<VertexSet> certify_no_permis_tethered(const Graph& g,
                                                    PermisMemo* memo) {
  if (g.n > 14)
    throw std::invalid_argument("certify_no_permis_tethered: n <= 14");
  PermisMemo local;
  if (!memo) memo = &local;
  for (int size = 1; size < g.n; ++size) {
    // Gosper's hack: subsets of given size in ascending mask order
    VertexSet s = all_vertices(size);
    while (s < vbit(g.n)) {
      if (is_connected_subset(g, s) && is_tethered(g, s) && size <= 10) {
        InducedSubgraph sub = induced_subgraph(g, s);
        std::uint64_t key = canonical_key(sub.graph);
        std::optional<bool> known = memo->lookup(size, key);
        bool has;
        if (known) {
          has = *known;
        } else {
          PermisVerdict v = find_permis(sub.graph);
          has = v.answer == PermisAnswer::exists;
          memo->store(size, key, has);
        }
        if (!has) return s;
      }
      VertexSet low = s & (~s + 1);
      VertexSet ripple = s + low;
      s = ripple | (((s ^ ripple) >> 2) / low);
    }
  }
  return std::nullopt;
}

CensusReport census(int max_n, int workers) {
  if (max_n < 1 || max_n > 7)
    throw std::invalid_argument("census supports 1 <= max_n <= 7");
  if (workers < 1) workers = 1;

  CensusReport report;
  report.max_n = max_n;
  for (int k = 1; k <= max_n; ++k)
    for (Graph& g : enumerate_graphs(k))
      report.entries.push_back({std::move(g), {}, std::nullopt});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= report.entries.size()) break;
      CensusEntry& e = report.entries[i];
      e.graph6 = write_graph6(e.graph);
      PermisVerdict v = find_permis(e.graph);
      if (v.answer == PermisAnswer::exists) e.permis = v.word;
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    if (!report.entries[i].permis) report.without_permis.push_back(i);
  return report;
}

}  // namespace kfx
