#include "doctest.h"

#include <functional>
#include <random>

#include "longcycle/connectivity.hpp"
#include "longcycle/kelmans.hpp"

using namespace longcycle;

namespace {

// Every simple path with at least one edge, each direction separately.
std::vector<Path> all_paths(const Graph& g) {
  std::vector<Path> out;
  std::vector<Vertex> cur;
  std::function<void(Vertex, Mask)> dfs = [&](Vertex v, Mask used) {
    if (cur.size() >= 2) out.push_back(Path{cur});
    for (Vertex w : g.neighbors(v) - VertexSet(used)) {
      cur.push_back(w);
      dfs(w, used | bit(w));
      cur.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    cur.assign(1, s);
    dfs(s, bit(s));
  }
  return out;
}

Graph graph_from_code(int n, unsigned code) {
  GraphBuilder b(n);
  int k = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++k)
      if ((code >> k) & 1) b.add_edge(u, v);
  return b.build();
}

void check_record(const KelmansRecord& rec) {
  const Graph& g = rec.base;
  const Graph& h = rec.result;
  CHECK(h.edge_count() == g.edge_count());
  CHECK(h.has_edge(rec.u, rec.v));
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == rec.u || w == rec.v) continue;
    CHECK(h.degree(w) == g.degree(w));
  }
  CHECK(h.degree(rec.u) + h.degree(rec.v) == g.degree(rec.u) + g.degree(rec.v));
  if (rec.moved.empty()) CHECK(h == g);
}

}  // namespace

TEST_CASE("kelmans on a triangle moves nothing") {
  const Graph k3 = complete_graph(3);
  const KelmansRecord rec = kelmans(k3, 0, 1);
  CHECK(rec.moved.empty());
  CHECK(rec.result == k3);
  CHECK_THROWS_AS(check_tau_increase(rec), Error);
  CHECK(lift_path(rec, Path{{2, 1}}, 2, 1) == Path{{2, 1}});
}

TEST_CASE("kelmans on P4") {
  // a-b-c-d as 0-1-2-3, switching b -> c
  const KelmansRecord rec = kelmans(path_graph(4), 1, 2);
  CHECK(rec.moved == VertexSet{0});
  CHECK(rec.result.has_edge(2, 0));
  CHECK_FALSE(rec.result.has_edge(1, 0));
  CHECK(degree_sequence(rec.result).values() == std::vector<int>{3, 1, 1, 1});
  CHECK(check_tau_increase(rec));

  const Path lifted = lift_path(rec, Path{{3, 2, 0}}, 3, 0);
  CHECK(lifted.vertices == std::vector<Vertex>{3, 2, 1, 0});
}

TEST_CASE("kelmans on C5") {
  const KelmansRecord rec = kelmans(cycle_graph(5), 0, 1);
  CHECK(rec.moved == VertexSet{4});
  CHECK(rec.result.degree(1) == 3);
  CHECK(degree_sequence(rec.result).values() == std::vector<int>{3, 2, 2, 2, 1});
  CHECK(check_tau_increase(rec));
  check_record(rec);
}

TEST_CASE("kelmans errors") {
  CHECK_THROWS_AS(kelmans(path_graph(4), 0, 2), Error);
  CHECK_THROWS_AS(kelmans(path_graph(4), 1, 1), Error);
  const KelmansRecord rec = kelmans(path_graph(4), 1, 2);
  CHECK_THROWS_AS(lift_path(rec, Path{{0, 1, 2}}, 0, 2), Error);  // 0-1 is gone in G'
  CHECK_THROWS_AS(lift_path(rec, Path{{1, 2}}, 1, 2), Error);     // x equals u
}

TEST_CASE("tau increases and lifts hold on every graph with at most 5 vertices") {
  long long lifts = 0;
  for (int n = 3; n <= 5; ++n) {
    const unsigned codes = 1u << (n * (n - 1) / 2);
    for (unsigned code = 0; code < codes; ++code) {
      const Graph g = graph_from_code(n, code);
      for (const auto& [a, b] : g.edges()) {
        for (const auto& [u, v] : {Edge{a, b}, Edge{b, a}}) {
          const KelmansRecord rec = kelmans(g, u, v);
          check_record(rec);
          const VertexSet nu = g.closed_neighbors(u);
          const VertexSet nv = g.closed_neighbors(v);
          if (!nu.is_subset_of(nv) && !nv.is_subset_of(nu)) CHECK(check_tau_increase(rec));
          for (const Path& p : all_paths(rec.result)) {
            const Vertex x = p.front();
            const Vertex y = p.back();
            if (x == u || y == u) continue;
            const Path q = lift_path(rec, p, x, y);
            CHECK(is_valid_xy_path(g, q, x, y));
            CHECK(q.length() >= p.length());
            if (std::find(p.vertices.begin(), p.vertices.end(), v) == p.vertices.end()) CHECK(q == p);
            ++lifts;
          }
        }
      }
    }
  }
  CHECK(lifts > 10000);
}

TEST_CASE("random lifts on larger graphs") {
  std::mt19937_64 rng(17);
  int done = 0;
  while (done < 2000) {
    const int n = 6 + static_cast<int>(rng() % 7);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 100 < 45) b.add_edge(u, v);
    const Graph g = b.build();
    const auto edges = g.edges();
    if (edges.empty()) continue;
    auto [u, v] = edges[rng() % edges.size()];
    if (rng() % 2) std::swap(u, v);
    const KelmansRecord rec = kelmans(g, u, v);
    const Vertex x = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    const Vertex y = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    if (x == y || x == u || y == u) continue;
    if (!is_connected(rec.result)) continue;
    const Path p = longest_xy_path(rec.result, x, y);
    const Path q = lift_path(rec, p, x, y);
    CHECK(is_valid_xy_path(g, q, x, y));
    CHECK(q.length() >= p.length());
    ++done;
  }
}
