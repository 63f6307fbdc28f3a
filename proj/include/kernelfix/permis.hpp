#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kernelfix/dynamics.hpp"
#include "kernelfix/graph.hpp"

namespace kfx {

enum class PermisAnswer { exists, not_exists, unknown };

struct PermisVerdict {
  PermisAnswer answer = PermisAnswer::unknown;
  std::optional<Word> word;  // a verified permis when answer == exists
  enum class Certificate { none, exhaustive, tethered };
  Certificate certificate = Certificate::none;
  VertexSet tethered_set = 0;  // populated for tethered certificates
};

struct SearchLimits {
  // Wall-clock budget; absent means unlimited. Exceeding it yields unknown.
  std::optional<std::chrono::steady_clock::duration> budget;
  // Exhaustive search is refused above this size unless a budget is given.
  int exhaustive_limit = 10;
};

// Lexicographic search over permutations. A cache of counterexample
// configurations prunes shared prefixes: once all of N[u] has been updated,
// u's closed neighborhood is frozen, so a cached configuration that leaves
// it all-zero under the current prefix kills every completion. The cache
// never changes answers, only skips work. Returns the first permis in
// lexicographic order, or not_exists after covering all n! permutations.
PermisVerdict find_permis(const Graph& g);
PermisVerdict find_permis(const Graph& g, const SearchLimits& limits);

// Arcs of a transitive orientation (edge u->v means u below v).
using Orientation = std::vector<std::pair<int, int>>;

bool orientation_is_transitive(const Graph& g, const Orientation& o);

// Implication-class propagation; works at any size. Returns nullopt iff g
// has no transitive orientation.
std::optional<Orientation> transitive_orientation(const Graph& g);

// Exhaustive check over all 2^m orientations, m <= 20; reference route.
std::optional<Orientation> transitive_orientation_brute(const Graph& g);

// A permis for comparability graphs: update along any linear extension of
// a transitive orientation, lowest first. Verified with fixes() before
// returning (graphs up to the verification limit). nullopt if g is not a
// comparability graph.
std::optional<Word> comparability_permis(const Graph& g);

// A permis for graphs whose simplicial vertices dominate: prune the
// simplicial set to an independent dominating subset M (drop closed twins
// from a minimal dominating subset), then update V\M first and M last.
std::optional<Word> simplicial_permis(const Graph& g);

// Splice each part's permis into the outer permis, using the block layout
// of compose(h, parts). All inputs are re-verified; the result is verified.
Word composition_permis(const Graph& h, std::span<const Graph> parts,
                        std::span<const Word> part_words, const Word& h_word);

// Shared memo of permis existence keyed by canonical form.
class PermisMemo {
 public:
  std::optional<bool> lookup(int n, std::uint64_t key) const;
  void store(int n, std::uint64_t key, bool has_permis);

 private:
  std::map<std::pair<int, std::uint64_t>, bool> results_;
};

// Searches connected proper subsets S, smallest first, for one that is
// tethered and induces a permis-free subgraph; such an S certifies that g
// itself has no permis. Absence of a certificate proves nothing. n <= 14.
std::optional<VertexSet> certify_no_permis_tethered(const Graph& g,
                                                    PermisMemo* memo = nullptr);

struct CensusEntry {
  Graph graph;  // canonical representative
  std::string graph6;
  std::optional<Word> permis;
};

struct CensusReport {
  int max_n = 0;
  std::vector<CensusEntry> entries;            // sizes 1..max_n, canonical order
  std::vector<std::size_t> without_permis;     // indices into entries
};

// find_permis over every isomorphism class of size 1..max_n (max_n <= 7),
// classes dispatched across `workers` threads, output in canonical order.
CensusReport census(int max_n, int workers = 1);

}  // namespace kfx
