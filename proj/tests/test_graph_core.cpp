#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kernelfix/enumerate.hpp"
#include "kernelfix/graph.hpp"
#include "kernelfix/graph6.hpp"
#include "oracles.hpp"

using namespace kfx;

namespace {

void check_well_formed(const Graph& g) {
  for (int v = 0; v < g.n; ++v) {
    CHECK_FALSE(contains(g.adj[v], v));
    CHECK((g.adj[v] & ~g.vertices()) == 0);
    for_each_vertex(g.adj[v], [&](int u) { CHECK(g.has_edge(u, v)); });
  }
}

Graph random_graph(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

}  // namespace

TEST_CASE("build_graph basic shapes and errors") {
  Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK_FALSE(p3.has_edge(0, 2));
  CHECK(p3 == path_graph(3));

  Graph empty4 = build_graph(4, {});
  for (int v = 0; v < 4; ++v) CHECK(empty4.adj[v] == 0);

  std::vector<std::pair<int, int>> heptagon;
  for (int i = 0; i < 7; ++i) heptagon.emplace_back(i, (i + 1) % 7);
  CHECK(build_graph(7, heptagon) == cycle_graph(7));

  CHECK(build_graph(2, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);

  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(63, {}), std::invalid_argument);
}

TEST_CASE("generators") {
  CHECK(cycle_graph(3) == complete_graph(3));

  Graph s4 = star_graph(4);
  CHECK(s4.adj[0] == (vbit(1) | vbit(2) | vbit(3)));
  CHECK(s4.degree(1) == 1);
  CHECK(s4.degree(2) == 1);
  CHECK(s4.degree(3) == 1);

  // wheel must equal the composition that defines it, vertex for vertex
  Graph w8 = wheel_graph(8);
  std::vector<Graph> parts{cycle_graph(7), complete_graph(1)};
  CHECK(w8 == compose(complete_graph(2), parts).graph);
  CHECK(w8.degree(7) == 7);

  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(wheel_graph(3), std::invalid_argument);

  check_well_formed(w8);
  check_well_formed(star_graph(7));
  check_well_formed(path_graph(9));
  check_well_formed(cycle_graph(5));
  check_well_formed(complete_graph(6));
  check_well_formed(empty_graph(5));
}

TEST_CASE("compose") {
  Graph p3 = path_graph(3);
  Graph k1 = complete_graph(1);

  SUBCASE("disjoint union via the edgeless outer pair") {
    std::vector<Graph> parts{p3, p3};
    Composition c = compose(empty_graph(2), parts);
    CHECK(c.graph.n == 6);
    CHECK(c.graph.edge_count() == 4);
    CHECK(c.blocks[0] == all_vertices(3));
    CHECK(c.blocks[1] == (all_vertices(3) << 3));
    CHECK_FALSE(c.graph.has_edge(2, 3));
  }

  SUBCASE("full join via the outer edge") {
    std::vector<Graph> parts{p3, p3};
    Composition c = compose(complete_graph(2), parts);
    CHECK(c.graph.edge_count() == 4 + 9);
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) CHECK(c.graph.has_edge(a, b));
    check_well_formed(c.graph);
  }

  SUBCASE("open twin by blowing one vertex into two non-adjacent copies") {
    std::vector<Graph> parts{k1, empty_graph(2), k1};
    Composition c = compose(path_graph(3), parts);
    CHECK(c.graph.n == 4);
    // copies 1 and 2 share vertex 0's and 3's adjacency, not each other's
    CHECK(c.graph.adj[1] == c.graph.adj[2]);
    CHECK_FALSE(c.graph.has_edge(1, 2));
  }

  SUBCASE("all-K1 parts reproduce the outer graph") {
    std::vector<Graph> parts{k1, k1, k1};
    CHECK(compose(p3, parts).graph == p3);
  }

  std::vector<Graph> wrong{p3};
  CHECK_THROWS_AS(compose(complete_graph(2), wrong), std::invalid_argument);
}

TEST_CASE("add_pendant_to_each") {
  CHECK(add_pendant_to_each(complete_graph(1)) == path_graph(2));

  Graph g = add_pendant_to_each(cycle_graph(7));
  CHECK(g.n == 14);
  VertexSet pendants = all_vertices(14) & ~all_vertices(7);
  CHECK((simplicial_vertices(g) & pendants) == pendants);
  VertexSet covered = pendants;
  for_each_vertex(pendants, [&](int v) { covered |= g.adj[v]; });
  CHECK(covered == g.vertices());  // pendants dominate

  Graph net = add_pendant_to_each(complete_graph(3));
  CHECK(net.n == 6);
  CHECK(net.edge_count() == 6);
  CHECK(simplicial_vertices(net) == (vbit(3) | vbit(4) | vbit(5)));
  check_well_formed(net);
}

TEST_CASE("simplicial vertices") {
  CHECK(simplicial_vertices(complete_graph(5)) == all_vertices(5));
  CHECK(simplicial_vertices(path_graph(3)) == (vbit(0) | vbit(2)));
  CHECK(simplicial_vertices(cycle_graph(7)) == 0);
  CHECK(simplicial_vertices(empty_graph(3)) == all_vertices(3));  // isolated
}

TEST_CASE("is_tethered") {
  Graph w8 = wheel_graph(8);
  CHECK(is_tethered(w8, all_vertices(7)));  // rim vs hub

  Graph two_parts = compose(empty_graph(2), std::vector<Graph>{
                                                path_graph(2), path_graph(3)})
                        .graph;
  CHECK(is_tethered(two_parts, all_vertices(2)));  // whole component, vacuous

  CHECK_FALSE(is_tethered(path_graph(4), vbit(0) | vbit(1)));

  // restated form: every s sees all of N(S)\S
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(6, rng);
    VertexSet s = rng() & all_vertices(6);
    VertexSet t = set_neighborhood(g, s);
    bool expect = true;
    for_each_vertex(s, [&](int v) {
      if ((t & ~g.adj[v]) != 0) expect = false;
    });
    CHECK(is_tethered(g, s) == expect);
  }
}

TEST_CASE("induced_subgraph") {
  Graph w8 = wheel_graph(8);
  CHECK(induced_subgraph(w8, w8.vertices()).graph == w8);
  CHECK(induced_subgraph(w8, 0).graph.n == 0);
  CHECK(induced_subgraph(w8, all_vertices(7)).graph == cycle_graph(7));

  InducedSubgraph sub = induced_subgraph(path_graph(4), vbit(1) | vbit(3));
  CHECK(sub.graph.n == 2);
  CHECK(sub.graph.edge_count() == 0);
  CHECK(sub.original == std::vector<int>{1, 3});
  CHECK(sub.to_parent(vbit(0)) == vbit(1));
}

TEST_CASE("is_connected_subset") {
  Graph p4 = path_graph(4);
  CHECK(is_connected_subset(p4, vbit(0) | vbit(1) | vbit(2)));
  CHECK_FALSE(is_connected_subset(p4, vbit(0) | vbit(2)));
  CHECK(is_connected_subset(p4, vbit(2)));
  CHECK(is_connected_subset(p4, 0));
}

TEST_CASE("graph6 frozen strings") {
  CHECK(write_graph6(complete_graph(1)) == "@");
  CHECK(parse_graph6("@") == complete_graph(1));
  // K3: header 'B', bits 111000 -> 56+63 = 'w'
  CHECK(write_graph6(complete_graph(3)) == "Bw");
  // single edge {0,2} parsed from nauty-style catalog string
  Graph g = parse_graph6("BG");
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 2));
  CHECK(write_graph6(empty_graph(0)) == "?");
  CHECK(parse_graph6("?").n == 0);
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(11);
  for (int n : {0, 1, 2, 5, 8, 13, 30, 61, 62}) {
    Graph g = random_graph(n, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);    // truncated
  CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);  // too long
  CHECK_THROWS_AS(parse_graph6("B\x1f"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);  // long form
  // n=2 has one data bit; anything below bit 5 is padding
  CHECK_THROWS_AS(parse_graph6("Aw"), std::invalid_argument);
  CHECK(parse_graph6("A_").edge_count() == 1);
}

TEST_CASE("canonical key matches the full-permutation scan") {
  std::mt19937 rng(13);
  for (const Graph& g : oracle::all_labeled_graphs(4))
    CHECK(canonical_key(g) == oracle::canonical_key_by_permutations(g));
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(6, rng);
    CHECK(canonical_key(g) == oracle::canonical_key_by_permutations(g));
  }
  Graph c5 = cycle_graph(5);
  CHECK(canonical_form(c5).n == 5);
  CHECK(canonical_key(canonical_form(c5)) == canonical_key(c5));
  CHECK(adjacency_key(canonical_form(c5)) == canonical_key(c5));
}

TEST_CASE("enumerate_graphs counts and distinctness") {
  const int expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_graphs(n).size() == static_cast<std::size_t>(expected[n]));

  // independent dedup for n <= 5: brute force over labeled graphs
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> classes;
    for (const Graph& g : oracle::all_labeled_graphs(n))
      classes.insert(oracle::canonical_key_by_permutations(g));
    CHECK(classes.size() == enumerate_graphs(n).size());
    std::set<std::uint64_t> listed;
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(adjacency_key(g) == canonical_key(g));  // stored canonically
      listed.insert(canonical_key(g));
    }
    CHECK(listed == classes);  // no two isomorphic, none missing
  }

  CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
}
