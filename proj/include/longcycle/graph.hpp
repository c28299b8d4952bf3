#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "longcycle/error.hpp"

namespace longcycle {

using Vertex = int;
using Mask = std::uint64_t;

// One machine word per adjacency row.
inline constexpr int kMaxVertices = 64;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// A subset of 0..63 stored as a bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet first_n(int n) { return VertexSet(low_bits(n)); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(Vertex v) const {
    return v >= 0 && v < 64 && (bits_ & bit(v)) != 0;
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  void insert(Vertex v) { bits_ |= bit(v); }
  void erase(Vertex v) { bits_ &= ~bit(v); }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  Mask bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

// Simple undirected graph on vertices 0..n-1. Immutable; build or modify
// copies through GraphBuilder.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return VertexSet::first_n(n_); }
  Mask row(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet neighbors(Vertex v) const { return VertexSet(row(v)); }
  VertexSet closed_neighbors(Vertex v) const {
    return VertexSet(row(v) | bit(v));
  }
  int degree(Vertex v) const { return std::popcount(row(v)); }
  bool has_edge(Vertex u, Vertex v) const { return (row(u) & bit(v)) != 0; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  // Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int m_ = 0;
  std::vector<Mask> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0);
  explicit GraphBuilder(const Graph& g);

  int order() const { return n_; }
  bool has_edge(Vertex u, Vertex v) const {
    return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
  }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  Vertex add_vertex();
  Graph build() const;

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<Mask> adj_;
};

// A graph obtained by keeping some vertices of another and renumbering them
// densely; original[i] is the old index of new vertex i.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> original;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
// Hub 0 joined to a rim cycle 1..rim.
Graph wheel_graph(int rim);
Graph petersen_graph();

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
Relabeled induced_subgraph(const Graph& g, VertexSet keep);
Relabeled remove_vertex(const Graph& g, Vertex v);

// |{v not in exclude : deg(v) >= k}|
int count_high_degree(const Graph& g, int k, VertexSet exclude = {});

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);

class DegreeSequence {
 public:
  DegreeSequence() = default;
  // Sorts into non-increasing order.
  explicit DegreeSequence(std::vector<int> degrees);

  const std::vector<int>& values() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<int> degrees_;
};

DegreeSequence degree_sequence(const Graph& g);

enum class TauOrder { Larger, Smaller, Equal, IncomparableLengths };

// The first index where the sequences differ decides.
TauOrder tau_compare(const DegreeSequence& a, const DegreeSequence& b);

const char* to_string(TauOrder order);

}  // namespace longcycle
