#include "doctest.h"

#include "longcycle/graph.hpp"

using namespace longcycle;

TEST_CASE("builder rejects self-loops and out-of-range vertices") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), Error);
  CHECK_THROWS_AS(b.add_edge(0, 3), Error);
  CHECK_THROWS_AS(Graph(65), Error);
}

TEST_CASE("disjoint union") {
  const Graph k1k1 = disjoint_union(complete_graph(1), complete_graph(1));
  CHECK(k1k1.order() == 2);
  CHECK(k1k1.edge_count() == 0);

  const Graph k2k2 = disjoint_union(complete_graph(2), complete_graph(2));
  CHECK(k2k2.order() == 4);
  CHECK(k2k2.edge_count() == 2);
  CHECK(k2k2.has_edge(0, 1));
  CHECK(k2k2.has_edge(2, 3));
  CHECK_FALSE(k2k2.has_edge(1, 2));

  CHECK_THROWS_AS(disjoint_union(complete_graph(40), complete_graph(30)), Error);
}

TEST_CASE("join") {
  CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));

  const Graph diamond = join(complete_graph(2), complement(complete_graph(2)));
  CHECK(diamond.order() == 4);
  CHECK(diamond.edge_count() == 5);

  // K2 joined with (K2 + two isolated vertices)
  const Graph rest = disjoint_union(complete_graph(2), Graph(2));
  const Graph g = join(complete_graph(2), rest);
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 5);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)).edge_count() == 0);
  CHECK(complement(complement(path_graph(4))) == path_graph(4));
  CHECK(complement(cycle_graph(5)).edge_count() == 10 - 5);
}

TEST_CASE("count_high_degree") {
  CHECK(count_high_degree(complete_graph(4), 3, VertexSet{0, 1}) == 2);
  CHECK(count_high_degree(cycle_graph(6), 3) == 0);
  CHECK(count_high_degree(cycle_graph(6), 2) == 6);
}

TEST_CASE("degree sequences and tau ordering") {
  CHECK(degree_sequence(complete_graph(3)).values() == std::vector<int>{2, 2, 2});
  CHECK(degree_sequence(path_graph(4)).values() == std::vector<int>{2, 2, 1, 1});
  CHECK(degree_sequence(star_graph(4)).values() == std::vector<int>{4, 1, 1, 1, 1});

  const DegreeSequence a({3, 1, 1, 1});
  const DegreeSequence b({2, 2, 1, 1});
  CHECK(tau_compare(a, b) == TauOrder::Larger);
  CHECK(tau_compare(b, a) == TauOrder::Smaller);
  CHECK(tau_compare(DegreeSequence({2, 2, 2}), DegreeSequence({2, 2, 2})) == TauOrder::Equal);
  CHECK(tau_compare(DegreeSequence({2, 2, 2}), DegreeSequence({2, 2})) == TauOrder::IncomparableLengths);
}

TEST_CASE("standard graphs") {
  CHECK(petersen_graph().edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(petersen_graph().degree(v) == 3);
  const Graph w = wheel_graph(5);
  CHECK(w.degree(0) == 5);
  CHECK(w.edge_count() == 10);
  CHECK(is_clique(complete_graph(5), VertexSet::first_n(5)));
  CHECK(is_independent(star_graph(3), VertexSet{1, 2, 3}));
  CHECK_FALSE(is_independent(star_graph(3), VertexSet{0, 1}));
}

TEST_CASE("induced subgraph keeps index order") {
  const Relabeled r = induced_subgraph(cycle_graph(6), VertexSet{1, 2, 3, 5});
  CHECK(r.original == std::vector<Vertex>{1, 2, 3, 5});
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.graph.has_edge(0, 1));
  CHECK(r.graph.has_edge(1, 2));
}
