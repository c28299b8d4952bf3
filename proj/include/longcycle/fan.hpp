#pragma once

#include <string>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/solver.hpp"

namespace longcycle {

// Paths from a common origin in H to distinct vertices of C, internally
// disjoint, with every internal vertex in H.
struct Fan {
  Vertex origin = -1;
  std::vector<Path> paths;

  std::vector<Vertex> termini() const;
  int edge_count() const;
};

struct FanCheck {
  bool ok = false;
  std::string clause;  // first violated clause, empty when ok
};

FanCheck validate_fan(const Graph& g, const Cycle& c, VertexSet h, const Fan& f);

// H plus two new vertices x, y. Vertex i < |H| of the graph is original[i];
// x = |H| and y = |H| + 1.
struct HPrime {
  Graph graph;
  Vertex x = -1;
  Vertex y = -1;
  std::vector<Vertex> original;
  int t = 0;        // max number of cycle neighbours of a vertex of H
  Vertex x1 = -1;   // cycle vertex used for x when t = 1
};

// G 2-connected, C a cycle of G, H a component of G - C. For t = 1, x is
// joined to N_H(x1) with x1 the smallest cycle vertex seen from H and y to
// the rest of N_H(C); otherwise x is joined to the vertices attaining t and
// y to every vertex of H with a cycle neighbour. The result is checked to be
// 2-connected.
HPrime build_h_prime(const Graph& g, const Cycle& c, VertexSet h);

// A fan with at least k edges, given that at least (|H| + 1) / 2 vertices of
// H have degree >= k in G.
Fan extract_fan(const Graph& g, const Cycle& c, VertexSet h, int k);

// Largest number of edges of any (H,C)-fan, 0 when there is none. Exact
// search; meant for small H.
int max_fan_edges(const Graph& g, VertexSet cycle, VertexSet h);

struct Lemma22Report {
  bool holds = false;
  bool fan_found = false;  // some component has a fan with >= k edges
  int circumference = 0;
  int best_fan = 0;
};

// With C the solver's longest cycle of the 2-connected non-Hamiltonian G,
// checks that a fan with >= k edges for some component of G - C forces
// c(G) >= 2k. Throws Precondition ("lemma vacuous") on Hamiltonian input.
Lemma22Report verify_lemma22(const Graph& g, int k);

}  // namespace longcycle
