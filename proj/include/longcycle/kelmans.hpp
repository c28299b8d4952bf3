#pragma once

#include "longcycle/graph.hpp"
#include "longcycle/solver.hpp"

namespace longcycle {

// G' = G[u -> v]: every edge uw with w in N[u] \ N[v] is replaced by vw.
struct KelmansRecord {
  Graph base;
  Graph result;
  Vertex u = -1;
  Vertex v = -1;
  VertexSet moved;
};

// Requires v adjacent to u.
KelmansRecord kelmans(const Graph& g, Vertex u, Vertex v);

// True when tau(G') is larger than tau(G). Throws Precondition naming the
// containment when N[u] and N[v] are nested, and InvariantFailure should
// the ordering fail to increase.
bool check_tau_increase(const KelmansRecord& rec);

// Turns an (x,y)-path of G' into an (x,y)-path of G that is at least as
// long. x, y and u must be distinct; v may be x or y.
Path lift_path(const KelmansRecord& rec, const Path& p, Vertex x, Vertex y);

}  // namespace longcycle
