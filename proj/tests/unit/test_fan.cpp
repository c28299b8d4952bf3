#include "doctest.h"

#include <random>

#include "longcycle/connectivity.hpp"
#include "longcycle/fan.hpp"

using namespace longcycle;

namespace {

Cycle rim(int n) {
  Cycle c;
  for (Vertex v = 1; v <= n; ++v) c.vertices.push_back(v);
  return c;
}

// C6 on 0..5 with the path 6-7-8 attached at 0 and 3.
Graph c6_with_handle() {
  GraphBuilder b(cycle_graph(6));
  for (int i = 0; i < 3; ++i) b.add_vertex();
  b.add_edge(6, 7).add_edge(7, 8).add_edge(6, 0).add_edge(8, 3);
  return b.build();
}

VertexSet cycle_vertices(const Cycle& c) {
  VertexSet s;
  for (Vertex v : c.vertices) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("fan validation") {
  const Graph w = wheel_graph(5);
  Fan star;
  star.origin = 0;
  for (Vertex v = 1; v <= 5; ++v) star.paths.push_back(Path{{0, v}});
  const FanCheck ok = validate_fan(w, rim(5), VertexSet{0}, star);
  CHECK(ok.ok);
  CHECK(ok.clause.empty());
  CHECK(star.edge_count() == 5);
  CHECK(star.termini() == std::vector<Vertex>{1, 2, 3, 4, 5});

  Fan single;
  single.origin = 0;
  single.paths.push_back(Path{{0, 1}});
  CHECK(validate_fan(w, rim(5), VertexSet{0}, single).clause == "t >= 2");

  Fan shared;
  shared.origin = 0;
  shared.paths = {Path{{0, 1, 2}}, Path{{0, 1, 5}}};
  const FanCheck bad = validate_fan(w, rim(5), VertexSet{0}, shared);
  CHECK_FALSE(bad.ok);
  CHECK(bad.clause == "internally disjoint");

  Fan same_end;
  same_end.origin = 0;
  same_end.paths = {Path{{0, 1}}, Path{{0, 1}}};
  CHECK(validate_fan(w, rim(5), VertexSet{0}, same_end).clause == "pairwise different termini");

  Fan outside;
  outside.origin = 0;
  outside.paths = {Path{{0, 1, 2}}, Path{{0, 3}}};
  CHECK(validate_fan(w, rim(5), VertexSet{0}, outside).clause == "internal vertices in H");
}

TEST_CASE("H' with t >= 2 is a triangle for a single attached vertex") {
  GraphBuilder b(cycle_graph(4));
  b.add_vertex();
  b.add_edge(4, 0).add_edge(4, 2);
  const Graph g = b.build();
  const HPrime hp = build_h_prime(g, Cycle{{0, 1, 2, 3}}, VertexSet{4});
  CHECK(hp.t == 2);
  CHECK(hp.graph == complete_graph(3));
  CHECK(hp.original == std::vector<Vertex>{4});
}

TEST_CASE("H' with t = 1 keeps every degree") {
  const Graph g = c6_with_handle();
  const HPrime hp = build_h_prime(g, Cycle{{0, 1, 2, 3, 4, 5}}, VertexSet{6, 7, 8});
  CHECK(hp.t == 1);
  CHECK(hp.x1 == 0);
  CHECK(hp.graph.order() == 5);
  CHECK(hp.graph.edge_count() == 5);
  CHECK(is_two_connected(hp.graph));
  for (std::size_t i = 0; i < hp.original.size(); ++i)
    CHECK(hp.graph.degree(static_cast<Vertex>(i)) == g.degree(hp.original[i]));
}

TEST_CASE("fan extraction") {
  const Fan star = extract_fan(wheel_graph(5), rim(5), VertexSet{0}, 5);
  CHECK(star.edge_count() == 5);
  CHECK(star.paths.size() == 5);

  const Graph g = c6_with_handle();
  const Cycle c{{0, 1, 2, 3, 4, 5}};
  const Fan through = extract_fan(g, c, VertexSet{6, 7, 8}, 2);
  CHECK(validate_fan(g, c, VertexSet{6, 7, 8}, through).ok);
  CHECK(through.paths.size() == 2);
  CHECK(through.edge_count() == 4);
  // every vertex of the handle has degree 2
  CHECK_THROWS_AS(extract_fan(g, c, VertexSet{6, 7, 8}, 3), Error);
  CHECK_THROWS_AS(extract_fan(g, c, VertexSet{6, 7}, 2), Error);
}

TEST_CASE("max fan edges") {
  CHECK(max_fan_edges(wheel_graph(5), VertexSet{1, 2, 3, 4, 5}, VertexSet{0}) == 5);
  CHECK(max_fan_edges(c6_with_handle(), VertexSet{0, 1, 2, 3, 4, 5}, VertexSet{6, 7, 8}) == 4);
  // a single cycle neighbour gives no fan
  const Graph p = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  CHECK(max_fan_edges(p, VertexSet{0, 1, 2}, VertexSet{3}) == 0);
}

TEST_CASE("lemma on fans and long cycles") {
  // wheel on rim 1..5 plus vertices 6 and 7, each joined to 1 and 3
  GraphBuilder b(wheel_graph(5));
  b.add_vertex();
  b.add_vertex();
  b.add_edge(6, 1).add_edge(6, 3).add_edge(7, 1).add_edge(7, 3);
  const Graph g = b.build();
  REQUIRE(circumference(g).length < g.order());
  const Lemma22Report r = verify_lemma22(g, 2);
  CHECK(r.fan_found);
  CHECK(r.circumference >= 4);
  CHECK(r.holds);

  const Lemma22Report big = verify_lemma22(g, 50);
  CHECK_FALSE(big.fan_found);
  CHECK(big.holds);

  CHECK_THROWS_AS(verify_lemma22(complete_graph(5), 2), Error);
  CHECK_THROWS_AS(verify_lemma22(path_graph(5), 2), Error);
}

TEST_CASE("random fan extractions") {
  std::mt19937_64 rng(5);
  int done = 0;
  for (int rep = 0; rep < 20000 && done < 300; ++rep) {
    const int n = 6 + static_cast<int>(rng() % 7);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 100 < 35) b.add_edge(u, v);
    const Graph g = b.build();
    if (!is_two_connected(g)) continue;
    const auto cyc = circumference(g);
    if (cyc.length == n) continue;
    const VertexSet on = cycle_vertices(*cyc.witness);
    for (VertexSet h : components(g, g.vertices() - on)) {
      const int best = max_fan_edges(g, on, h);
      for (int k = 1; k <= n; ++k) {
        int high = 0;
        for (Vertex u : h)
          if (g.degree(u) >= k) ++high;
        if (2 * high < h.size() + 1) continue;
        const Fan f = extract_fan(g, *cyc.witness, h, k);
        CHECK(validate_fan(g, *cyc.witness, h, f).ok);
        CHECK(f.edge_count() >= k);
        CHECK(f.edge_count() <= best);
        ++done;
      }
    }
  }
  CHECK(done >= 100);
}
