#pragma once

#include <optional>
#include <utility>

#include "kernelfix/dynamics.hpp"
#include "kernelfix/graph.hpp"
#include "kernelfix/set_analysis.hpp"

namespace kfx {

// Decision plus a machine-checkable reason when the answer is no. Whenever
// answer is false, `counterexample` holds a starting configuration whose
// replay through apply_word exhibits the failure; `edge` or `obstruction`
// carries the structural reason when one exists.
struct WordVerdict {
  bool answer = true;
  std::optional<std::pair<int, int>> edge;       // uncovered edge
  std::optional<DominionWitness> obstruction;    // (v, I) witness
  std::optional<Config> counterexample;          // replayable start config
};

// True iff applying w maps every configuration to an independent one;
// decided structurally: the visited set must be a vertex cover. On failure
// the counterexample sets both endpoints of an uncovered edge to 1.
WordVerdict prefixes(const Graph& g, const Word& w);

// True iff applying w maps every independent configuration to a kernel;
// decided structurally via suffix_obstruction on the visited set. On
// failure the counterexample is 1 on the witness independent set: replaying
// any word over [w] from it leaves the witness vertex undominated.
WordVerdict suffixes(const Graph& g, const Word& w);

// True iff applying w maps every configuration to a kernel. Exhaustive over
// all 2^n configurations in ascending order, first counterexample returned;
// requires n <= 25.
WordVerdict fixes(const Graph& g, const Word& w);

// True iff s is simultaneously a vertex cover and a non-dominion;
// equivalently some (every) doubled permutation of s fixes the network.
WordVerdict fixing_set(const Graph& g, VertexSet s);

// Sufficient condition for fixes: the first `a` letters prefix, the suffix
// starting at 1-based position `b` suffixes, and the overlap w_b..w_a
// visits an independent set (empty overlap when a < b). Positions are
// 1-based as in the splitting identity; b = 0 is treated as b = 1.
bool fixes_by_split(const Graph& g, const Word& w, int a, int b);

// Shortest word with the same action: repeatedly (i) drop the second of
// two equal letters separated only by letters non-adjacent to them and
// (ii) sort consecutive non-adjacent letters ascending, until fixed point.
// The action K^w is preserved exactly.
Word normalize_word(const Graph& g, const Word& w);

struct ShortestWordResult {
  enum class Outcome {
    found,              // word holds a minimum-length fixing word
    none_within_bound,  // exhaustively ruled out up to the bound; longer
                        // fixing words are not excluded
  };
  Outcome outcome;
  std::optional<Word> word;
  int bound;
};

// Iterative deepening over normalized words, lexicographic within each
// length. Requires n <= 12 and max_len <= 4n.
ShortestWordResult shortest_fixing_word(const Graph& g, int max_len);

}  // namespace kfx
