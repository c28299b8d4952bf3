#include "doctest.h"

#include <random>

#include "longcycle/graph6.hpp"

using namespace longcycle;

TEST_CASE("graph6 round trip of a known line") {
  const Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(4) == 4);
  CHECK(to_graph6(g) == "D?{");
}

TEST_CASE("graph6 small cases") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(parse_graph6("?").order() == 0);
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(parse_graph6(">>graph6<<A_\n") == complete_graph(2));
}

TEST_CASE("graph6 errors carry offsets") {
  try {
    parse_graph6("D?");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("D? ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // padding bit set
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 random round trips including extended headers") {
  std::mt19937_64 rng(7);
  for (int n : {1, 5, 12, 62, 63, 64}) {
    for (int rep = 0; rep < 5; ++rep) {
      GraphBuilder b(n);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng() % 3 == 0) b.add_edge(u, v);
      const Graph g = b.build();
      const std::string line = to_graph6(g);
      if (n >= 63) CHECK(line[0] == '~');
      CHECK(parse_graph6(line) == g);
    }
  }
}

TEST_CASE("graph6 capacity") {
  // '~' header announcing 65 vertices
  std::string line = "~";
  line += static_cast<char>(63);
  line += static_cast<char>(63 + 1);
  line += static_cast<char>(63 + 1);
  try {
    parse_graph6(line);
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Capacity);
  }
}
