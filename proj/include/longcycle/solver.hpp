#pragma once

#include <optional>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

// A sequence of distinct vertices, consecutive ones adjacent.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? -1 : static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

// At least three distinct vertices, cyclically adjacent.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const Cycle&) const = default;
};

bool is_valid_path(const Graph& g, const Path& p);
bool is_valid_xy_path(const Graph& g, const Path& p, Vertex x, Vertex y);
bool is_valid_cycle(const Graph& g, const Cycle& c);
Path reversed(Path p);

// Components up to this size are solved by the subset dynamic programme;
// larger ones fall back to branch and bound.
inline constexpr int kSubsetDpLimit = 24;

// A maximum (x,y)-path; among those, the lexicographically smallest vertex
// sequence. Throws NoPath when x and y lie in different components.
Path longest_xy_path(const Graph& g, Vertex x, Vertex y);

// Some (x,y)-path of length >= k, if one exists. The witness is
// deterministic but not necessarily maximum.
std::optional<Path> has_xy_path_at_least(const Graph& g, Vertex x, Vertex y, int k);

// Longest (x,y)-path length for every y (-1 when unreachable, 0 for y = x).
std::vector<int> longest_xy_lengths(const Graph& g, Vertex x);

// Maximum path over all endpoint pairs, lexicographically smallest among
// those. Requires at least one vertex.
Path longest_path(const Graph& g);

struct CircumferenceResult {
  int length = 0;                // 0 for forests
  std::optional<Cycle> witness;  // empty for forests
};

// Exact circumference, block by block. Within a block the longest cycle
// through minimum vertex u closes some edge uv with v > u, so one subset
// programme from u yields every candidate u-v path at once.
CircumferenceResult circumference(const Graph& g);

// Some cycle of length >= k, if one exists.
std::optional<Cycle> has_cycle_at_least(const Graph& g, int k);

// The branch-and-bound engine alone, whatever the size. Same results as
// the functions above; exposed so the two engines can be cross-checked.
Path longest_xy_path_search(const Graph& g, Vertex x, Vertex y);
CircumferenceResult circumference_search(const Graph& g);

// Longest (x,y)-path length by enumerating every simple path without any
// pruning beyond simplicity. Independent of the main solver; n <= 10.
int brute_oracle_xy(const Graph& g, Vertex x, Vertex y);

// Circumference by the same plain enumeration, n <= 10.
int brute_oracle_circumference(const Graph& g);

}  // namespace longcycle
