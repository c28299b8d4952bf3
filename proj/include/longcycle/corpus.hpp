#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

// Colour refinement started from (degree, triangles through the vertex).
// Colours are ranks of sorted signatures, so isomorphic graphs get the same
// colour classes and the same hash.
struct Refinement {
  std::vector<int> color;
  int cells = 0;
  std::uint64_t hash = 0;
};

Refinement refine(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

enum class GraphClass { All, Connected, Biconnected };

// One representative per isomorphism class on exactly n vertices. Levels
// are built by adding a vertex to every smaller representative in every
// way and discarding isomorphic repeats; results are cached, and the order
// is deterministic.
class GraphEnumerator {
 public:
  const std::vector<Graph>& level(int n, GraphClass cls);

 private:
  std::map<std::pair<int, GraphClass>, std::vector<Graph>> cache_;
};

// Seeded stream of 2-connected graphs: order uniform in [min_n, max_n],
// G(n,p) with p drawn from 0.2, 0.35 and 0.5, redrawn until 2-connected.
class RandomTwoConnected {
 public:
  RandomTwoConnected(std::uint64_t seed, int min_n, int max_n);
  Graph next();

 private:
  std::mt19937_64 rng_;
  int min_n_;
  int max_n_;
};

// G(n,p) with edge probability permille/1000, drawn from rng.
Graph random_graph(std::mt19937_64& rng, int n, int permille);

}  // namespace longcycle
