#include "kernelfix/set_analysis.hpp"

#include <stdexcept>

namespace kfx {

std::optional<std::pair<int, int>> uncovered_edge(const Graph& g,
                                                  VertexSet s) {
  for (int u = 0; u < g.n; ++u) {
    if (contains(s, u)) continue;
    VertexSet rest = g.adj[u] & ~s & ~all_vertices(u + 1);
    if (rest != 0) return std::make_pair(u, std::countr_zero(rest));
  }
  return std::nullopt;
}

bool is_vertex_cover(const Graph& g, VertexSet s) {
  return !uncovered_edge(g, s).has_value();
}

bool validate_colony_witness(const Graph& g, VertexSet s,
                             const ColonyWitness& w) {
  VertexSet i = w.independent_set;
  if (!is_independent(g, i)) return false;
  VertexSet dominated = 0;
  for_each_vertex(i, [&](int v) { dominated |= g.adj[v]; });
  return (s & ~dominated) == 0;
}

std::optional<ColonyWitness> is_colony(const Graph& g, VertexSet s) {
  for (Config m : maximal_independent_sets(g, g.vertices() & ~s)) {
    ColonyWitness w{m};
    if (validate_colony_witness(g, s, w)) return w;
  }
  return std::nullopt;
}

bool validate_dominion_witness(const Graph& g, VertexSet set,
                               const DominionWitness& w) {
  if (contains(set, w.vertex)) return false;
  if (contains(w.independent_set, w.vertex)) return false;
  InducedSubgraph minus = induced_subgraph(g, g.vertices() & ~vbit(w.vertex));
  VertexSet i_sub = 0, s_sub = 0;
  VertexSet target = set & g.adj[w.vertex];
  for (int k = 0; k < minus.graph.n; ++k) {
    if (contains(w.independent_set, minus.original[k])) i_sub |= vbit(k);
    if (contains(target, minus.original[k])) s_sub |= vbit(k);
  }
  return validate_colony_witness(minus.graph, s_sub, ColonyWitness{i_sub});
}

std::optional<DominionWitness> is_dominion(const Graph& g, VertexSet w) {
  for (int v = 0; v < g.n; ++v) {
    if (contains(w, v)) continue;
    InducedSubgraph minus = induced_subgraph(g, g.vertices() & ~vbit(v));
    VertexSet target = 0;
    for (int k = 0; k < minus.graph.n; ++k)
      if (contains(w & g.adj[v], minus.original[k])) target |= vbit(k);
    if (auto colony = is_colony(minus.graph, target)) {
      DominionWitness wit{v, minus.to_parent(colony->independent_set)};
      if (!validate_dominion_witness(g, w, wit))
        throw std::logic_error("dominion witness failed validation");
      return wit;
    }
  }
  return std::nullopt;
}

bool is_non_dominion(const Graph& g, VertexSet w) {
  return !is_dominion(g, w).has_value();
}

bool validate_suffix_obstruction(const Graph& g, VertexSet s,
                                 const DominionWitness& w) {
  if (contains(s, w.vertex)) return false;
  if ((w.independent_set & g.closed_neighborhood(w.vertex)) != 0) return false;
  return validate_colony_witness(g, s & g.adj[w.vertex],
                                 ColonyWitness{w.independent_set});
}

std::optional<DominionWitness> suffix_obstruction(const Graph& g,
                                                  VertexSet s) {
  for (int v = 0; v < g.n; ++v) {
    if (contains(s, v)) continue;
    VertexSet outside = g.vertices() & ~g.closed_neighborhood(v);
    for (Config m : maximal_independent_sets(g, outside)) {
      DominionWitness wit{v, m};
      if (validate_suffix_obstruction(g, s, wit)) return wit;
    }
  }
  return std::nullopt;
}

}  // namespace kfx
