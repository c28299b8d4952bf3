#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

// An end-block of a separable graph: the block, its single cut vertex, and
// the remaining (inner) vertices.
struct EndBlock {
  std::size_t block = 0;  // index into BlockDecomposition::blocks
  Vertex cut = -1;
  VertexSet inner;
};

struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  std::vector<EndBlock> end_blocks;
};

// Inner vertex chosen per end-block, keyed by index into end_blocks.
using InnerPicks = std::map<std::size_t, Vertex>;

bool is_connected(const Graph& g, VertexSet within);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

VertexSet component_of(const Graph& g, Vertex v, VertexSet within);
// Components of G[within], ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) {
  return components(g, g.vertices());
}

// Blocks, cut vertices and end-blocks of the connected graph G[within],
// by one iterative lowpoint DFS in vertex-index order. Throws Precondition
// naming two vertices from different components if G[within] is
// disconnected.
BlockDecomposition decompose(const Graph& g, VertexSet within);
inline BlockDecomposition decompose(const Graph& g) {
  return decompose(g, g.vertices());
}

// At least three vertices, connected, no cut vertex.
bool is_two_connected(const Graph& g, VertexSet within);
inline bool is_two_connected(const Graph& g) {
  return is_two_connected(g, g.vertices());
}

// Vertex connectivity by unit-capacity max-flow on the split graph; n-1 for
// complete graphs.
int vertex_connectivity(const Graph& g);

// Union of the blocks on the block-cut-tree path between x and y in the
// component containing both. Every (x,y)-path stays inside it.
VertexSet blocks_between(const Graph& g, VertexSet within, Vertex x, Vertex y);

// --- Block surgery used by the minimal-counterexample argument ------------

// Every end-block of G - v has an inner vertex adjacent to v (G
// 2-connected, G - v separable). `decomposition` is that of G - v, with
// vertex numbering of G; `witnesses` maps each end-block to the
// smallest-index inner vertex adjacent to v.
struct EndBlockWitnesses {
  bool holds = false;
  BlockDecomposition decomposition;
  InnerPicks witnesses;
};
EndBlockWitnesses lemma32_i_check(const Graph& g, Vertex v);

// G separable, v not a cut vertex: join v to the picked inner vertex of
// every end-block avoiding v. Picks are keyed by end-block index in
// decompose(g). The result is checked to be 2-connected.
Graph lemma32_ii_construct(const Graph& g, Vertex v, const InnerPicks& picks);
Graph lemma32_ii_construct(const Graph& g, Vertex v);  // smallest inner vertices

// G separable: add vertex n joined to the picked inner vertex of every
// end-block.
Graph lemma32_iii_construct(const Graph& g, const InnerPicks& picks);
Graph lemma32_iii_construct(const Graph& g);

// G 2-connected, {x,y} a cut, `chosen` a non-empty selection of components
// of G - {x,y}: G[S + {x,y}] plus the edge xy.
Relabeled lemma32_iv_extract(const Graph& g, Vertex x, Vertex y,
                             const std::vector<VertexSet>& chosen);

// G 2-connected, N(v) a clique, |G| - 1 >= 3: G - v.
Relabeled lemma32_v_delete(const Graph& g, Vertex v);

}  // namespace longcycle
