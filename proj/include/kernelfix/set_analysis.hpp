#pragma once

#include <optional>
#include <utility>

#include "kernelfix/dynamics.hpp"
#include "kernelfix/graph.hpp"

namespace kfx {

// Independent set I with S contained in N(I); equivalently a maximal
// independent set avoiding S.
struct ColonyWitness {
  VertexSet independent_set;
};

// Vertex v outside the tested set together with the independent set that
// colonizes the tested set's intersection with N(v).
struct DominionWitness {
  int vertex;
  VertexSet independent_set;
};

// First uncovered edge in (u asc, v asc) order, or nullopt if S is a cover.
std::optional<std::pair<int, int>> uncovered_edge(const Graph& g, VertexSet s);
bool is_vertex_cover(const Graph& g, VertexSet s);

// Colony decision by the dual route: enumerate maximal independent sets of
// G[V\S] and keep the first (smallest mask) that also dominates S. The
// returned witness I is independent with S ⊆ N(I).
std::optional<ColonyWitness> is_colony(const Graph& g, VertexSet s);

// Scans v ∉ W ascending; for each, decides whether W ∩ N(v) is a colony of
// G − v (materialized with an index map so the witness is reported in the
// original numbering). First witness wins.
std::optional<DominionWitness> is_dominion(const Graph& g, VertexSet w);
bool is_non_dominion(const Graph& g, VertexSet w);

// Like is_dominion but the witness I must additionally avoid N[v]. This is
// the exact structural obstruction to the suffixing property: starting from
// the configuration 1_I, any word over S leaves v and its whole
// neighborhood at zero. The plain dominion witness does not guarantee a
// replayable failure (I may touch N(v)); this one does.
std::optional<DominionWitness> suffix_obstruction(const Graph& g, VertexSet s);

// Re-checks performed on every positive answer before a witness is
// returned; also usable from tests.
bool validate_colony_witness(const Graph& g, VertexSet s,
                             const ColonyWitness& w);
bool validate_dominion_witness(const Graph& g, VertexSet set,
                               const DominionWitness& w);
bool validate_suffix_obstruction(const Graph& g, VertexSet s,
                                 const DominionWitness& w);

}  // namespace kfx
