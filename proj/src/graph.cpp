#include "longcycle/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace longcycle {

namespace {

void check_order(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  if (n > kMaxVertices) {
    throw Error(ErrorCode::Capacity,
                "graph with " + std::to_string(n) +
                    " vertices exceeds capacity " +
                    std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(row(u) & ~low_bits(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.n_), adj_(g.adj_) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorCode::InvalidArgument,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") out of range for " + std::to_string(n_) + " vertices");
  }
  if (u == v) {
    throw Error(ErrorCode::InvalidArgument,
                "self-loop at vertex " + std::to_string(u));
  }
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
  return *this;
}

Vertex GraphBuilder::add_vertex() {
  check_order(n_ + 1);
  adj_.push_back(0);
  return n_++;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.adj_ = adj_;
  int twice = 0;
  for (Mask r : adj_) twice += std::popcount(r);
  g.m_ = twice / 2;
  return g;
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

Graph wheel_graph(int rim) {
  if (rim < 3) throw Error(ErrorCode::InvalidArgument, "wheel rim needs 3 vertices");
  GraphBuilder b(rim + 1);
  for (Vertex v = 1; v <= rim; ++v) {
    b.add_edge(0, v);
    b.add_edge(v, v % rim + 1);
  }
  return b.build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n1 = a.order();
  GraphBuilder out(n1 + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + n1, v + n1);
  return out.build();
}

Graph join(const Graph& a, const Graph& b) {
  const int n1 = a.order();
  GraphBuilder out(disjoint_union(a, b));
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, n1 + v);
  return out.build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out.build();
}

Relabeled induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.is_subset_of(g.vertices())) {
    throw Error(ErrorCode::InvalidArgument, "induced subgraph: vertex out of range");
  }
  Relabeled r;
  r.original = keep.to_vector();
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < r.original.size(); ++i)
    local[static_cast<std::size_t>(r.original[i])] = static_cast<Vertex>(i);
  GraphBuilder b(static_cast<int>(r.original.size()));
  for (std::size_t i = 0; i < r.original.size(); ++i) {
    const Vertex u = r.original[i];
    for (Vertex v : g.neighbors(u) & keep)
      if (v > u) b.add_edge(static_cast<Vertex>(i), local[static_cast<std::size_t>(v)]);
  }
  r.graph = b.build();
  return r;
}

Relabeled remove_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw Error(ErrorCode::InvalidArgument, "remove_vertex: out of range");
  return induced_subgraph(g, g.vertices() - VertexSet{v});
}

int count_high_degree(const Graph& g, int k, VertexSet exclude) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!exclude.contains(v) && g.degree(v) >= k) ++count;
  return count;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(s - VertexSet{v}).is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  return DegreeSequence(std::move(d));
}

TauOrder tau_compare(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) return TauOrder::IncomparableLengths;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a.values()[j] > b.values()[j]) return TauOrder::Larger;
    if (a.values()[j] < b.values()[j]) return TauOrder::Smaller;
  }
  return TauOrder::Equal;
}

const char* to_string(TauOrder order) {
  switch (order) {
    case TauOrder::Larger: return "larger";
    case TauOrder::Smaller: return "smaller";
    case TauOrder::Equal: return "equal";
    case TauOrder::IncomparableLengths: return "incomparable-lengths";
  }
  return "?";
}

}  // namespace longcycle
