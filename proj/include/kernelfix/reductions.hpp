#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kernelfix/graph.hpp"
#include "kernelfix/word_analysis.hpp"

namespace kfx {

struct SetCoverInstance {
  int n_elements = 0;                    // elements are 0..n_elements-1
  std::vector<std::vector<int>> subsets; // each a subset of the elements
  int k = 0;                             // cardinality bound
};

// Throws std::invalid_argument on out-of-range elements or negative k.
void validate_instance(const SetCoverInstance& inst);

// Exhaustive source oracle: is there a choice of at most k subsets whose
// union covers all elements?
bool setcover_has_cover(const SetCoverInstance& inst);

// A graph together with the vertex set a reduction targets, plus
// human-readable labels for the gadget roles.
struct TargetedGraph {
  Graph graph;
  VertexSet target = 0;
  std::map<std::string, int> labels;
};

// Element vertices v_i first, then for each subset j a block q_j^1..q_j^k
// adjacent to its elements, with level-l vertices of all blocks forming a
// clique. The instance has a cover of size <= k iff the element vertices
// form a colony.
TargetedGraph setcover_to_colony(const SetCoverInstance& inst);

// Appends a pendant copy t' for every t outside s and a new vertex adjacent
// to exactly s. s is a colony of g iff the target is a dominion of the
// output.
TargetedGraph colony_to_dominion(const Graph& g, VertexSet s);

// Disjoint union over t outside s of copies of g with t's edges into the
// rest of V\s removed (t replaced by a hatted vertex). s is a non-dominion
// of g iff the target (all unhatted vertices) is a fixing set of the
// output; the target is a vertex cover by construction. When s = V the
// reduction is the identity.
TargetedGraph nondominion_to_fixingset(const Graph& g, VertexSet s);

// The doubled ascending enumeration of s; s is a fixing set iff the word
// fixes the network.
std::pair<Graph, Word> fixingset_to_fixingword(const Graph& g, VertexSet s);

struct PreservationReport {
  bool source_answer = false;
  bool target_answer = false;
  bool preserved = false;
  std::string detail;  // textual witnesses for both sides
};

PreservationReport verify_setcover_to_colony(const SetCoverInstance& inst);
PreservationReport verify_colony_to_dominion(const Graph& g, VertexSet s);
PreservationReport verify_nondominion_to_fixingset(const Graph& g,
                                                   VertexSet s);
PreservationReport verify_fixingset_to_fixingword(const Graph& g,
                                                  VertexSet s);

}  // namespace kfx
