#include "kernelfix/reductions.hpp"

#include <stdexcept>

#include "kernelfix/set_analysis.hpp"

namespace kfx {

void validate_instance(const SetCoverInstance& inst) {
  if (inst.n_elements < 0 || inst.k < 0)
    throw std::invalid_argument("set cover: negative size");
  for (const auto& subset : inst.subsets)
    for (int x : subset)
      if (x < 0 || x >= inst.n_elements)
        throw std::invalid_argument("set cover: element out of range");
}

bool setcover_has_cover(const SetCoverInstance& inst) {
  validate_instance(inst);
  int m = static_cast<int>(inst.subsets.size());
  if (inst.n_elements > 62 || m > 24)
    throw std::invalid_argument("set cover oracle: instance too large");
  std::vector<std::uint64_t> masks(m, 0);
  for (int j = 0; j < m; ++j)
    for (int x : inst.subsets[j]) masks[j] |= std::uint64_t{1} << x;
  std::uint64_t want = inst.n_elements == 0
                           ? 0
                           : ~std::uint64_t{0} >> (64 - inst.n_elements);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    if (std::popcount(pick) > inst.k) continue;
    std::uint64_t got = 0;
    for (int j = 0; j < m; ++j)
      if (pick >> j & 1) got |= masks[j];
    if (got == want) return true;
  }
  return false;
}

TargetedGraph setcover_to_colony(const SetCoverInstance& inst) {
  validate_instance(inst);
  int n = inst.n_elements;
  int m = static_cast<int>(inst.subsets.size());
  int k = inst.k;

  TargetedGraph out;
  out.graph = empty_graph(n + m * k);
  out.target = all_vertices(n);
  auto q_index = [&](int j, int l) { return n + j * k + l; };  // 0-based j, l

  for (int i = 0; i < n; ++i)
    out.labels["v" + std::to_string(i + 1)] = i;
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < k; ++l)
      out.labels["q" + std::to_string(j + 1) + "^" + std::to_string(l + 1)] =
          q_index(j, l);

  auto& adj = out.graph.adj;
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < k; ++l) {
      int q = q_index(j, l);
      for (int x : inst.subsets[j]) {
        adj[q] |= vbit(x);
        adj[x] |= vbit(q);
      }
      for (int j2 = j + 1; j2 < m; ++j2) {  // level-l clique across blocks
        int q2 = q_index(j2, l);
        adj[q] |= vbit(q2);
        adj[q2] |= vbit(q);
      }
    }
  return out;
}

TargetedGraph colony_to_dominion(const Graph& g, VertexSet s) {
  VertexSet t = g.vertices() & ~s;
  std::vector<int> t_list = set_to_vertices(t);
  int nt = static_cast<int>(t_list.size());
  int hat = g.n + nt;

  TargetedGraph out;
  out.graph = empty_graph(g.n + nt + 1);
  out.target = s | (all_vertices(nt) << g.n);
  auto& adj = out.graph.adj;
  for (int v = 0; v < g.n; ++v) adj[v] = g.adj[v];
  for (int i = 0; i < nt; ++i) {
    adj[t_list[i]] |= vbit(g.n + i);
    adj[g.n + i] = vbit(t_list[i]);
    out.labels["t'" + std::to_string(t_list[i])] = g.n + i;
  }
  for_each_vertex(s, [&](int v) {
    adj[v] |= vbit(hat);
    adj[hat] |= vbit(v);
  });
  out.labels["vhat"] = hat;

  // construction audit: pendants have degree 1, the new vertex sees
  // exactly s
  for (int i = 0; i < nt; ++i)
    if (out.graph.degree(g.n + i) != 1)
      throw std::logic_error("colony_to_dominion: copy vertex not pendant");
  if (adj[hat] != s)
    throw std::logic_error("colony_to_dominion: hat neighborhood is not s");
  return out;
}

TargetedGraph nondominion_to_fixingset(const Graph& g, VertexSet s) {
  VertexSet t_set = g.vertices() & ~s;
  if (t_set == 0) {
    TargetedGraph out;  // identity reduction: s = V is already both answers
    out.graph = g;
    out.target = g.vertices();
    for (int v = 0; v < g.n; ++v)
      out.labels["u" + std::to_string(v)] = v;
    return out;
  }

  std::vector<int> t_list = set_to_vertices(t_set);
  int blocks = static_cast<int>(t_list.size());
  TargetedGraph out;
  out.graph = empty_graph(blocks * g.n);
  auto& adj = out.graph.adj;

  for (int b = 0; b < blocks; ++b) {
    int t = t_list[b];
    int off = b * g.n;
    // local index u keeps its meaning; slot t holds the hatted vertex
    for (auto [u, v] : g.edges()) {
      bool keep = (u != t && v != t) ||
                  (u == t && contains(s, v)) || (v == t && contains(s, u));
      if (!keep) continue;
      adj[off + u] |= vbit(off + v);
      adj[off + v] |= vbit(off + u);
    }
    for (int u = 0; u < g.n; ++u) {
      if (u == t) {
        out.labels["that" + std::to_string(t)] = off + u;
      } else {
        out.labels["u" + std::to_string(u) + "_t" + std::to_string(t)] =
            off + u;
        out.target |= vbit(off + u);
      }
    }
  }

  // construction audit: the target misses only the hatted vertices, which
  // are pairwise non-adjacent, so it must be a vertex cover
  if (!is_vertex_cover(out.graph, out.target))
    throw std::logic_error("nondominion_to_fixingset: target not a cover");
  return out;
}

std::pair<Graph, Word> fixingset_to_fixingword(const Graph& g, VertexSet s) {
  Word once = set_to_vertices(s);
  Word w = once;
  w.insert(w.end(), once.begin(), once.end());
  return {g, w};
}

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

PreservationReport make_report(bool source, bool target, std::string detail) {
  PreservationReport r;
  r.source_answer = source;
  r.target_answer = target;
  r.preserved = source == target;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

PreservationReport verify_setcover_to_colony(const SetCoverInstance& inst) {
  TargetedGraph tg = setcover_to_colony(inst);
  if (tg.graph.n > 25)
    throw std::invalid_argument("verification oracle bound exceeded");
  bool source = setcover_has_cover(inst);
  auto witness = is_colony(tg.graph, tg.target);
  return make_report(source, witness.has_value(),
                     "set cover " + yesno(source) + ", colony " +
                         yesno(witness.has_value()));
}

PreservationReport verify_colony_to_dominion(const Graph& g, VertexSet s) {
  TargetedGraph tg = colony_to_dominion(g, s);
  if (tg.graph.n > 25)
    throw std::invalid_argument("verification oracle bound exceeded");
  bool source = is_colony(g, s).has_value();
  bool target = is_dominion(tg.graph, tg.target).has_value();
  return make_report(source, target,
                     "colony " + yesno(source) + ", dominion " + yesno(target));
}

PreservationReport verify_nondominion_to_fixingset(const Graph& g,
                                                   VertexSet s) {
  TargetedGraph tg = nondominion_to_fixingset(g, s);
  if (tg.graph.n > 25)
    throw std::invalid_argument("verification oracle bound exceeded");
  bool source = is_non_dominion(g, s);
  bool target = fixing_set(tg.graph, tg.target).answer;
  return make_report(source, target,
                     "non-dominion " + yesno(source) + ", fixing set " +
                         yesno(target));
}

PreservationReport verify_fixingset_to_fixingword(const Graph& g,
                                                  VertexSet s) {
  auto [graph, word] = fixingset_to_fixingword(g, s);
  if (graph.n > 25)
    throw std::invalid_argument("verification oracle bound exceeded");
  bool source = fixing_set(g, s).answer;
  bool target = fixes(graph, word).answer;
  return make_report(source, target,
                     "fixing set " + yesno(source) + ", fixing word " +
                         yesno(target));
}

}  // namespace kfx
