#include "longcycle/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace longcycle {

namespace {

Mask reach(const Graph& g, Vertex from, Mask within) {
  Mask seen = bit(from);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.row(v);
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::string vname(Vertex v) { return std::to_string(v); }

void require_two_connected(const Graph& g, const char* who) {
  if (!is_two_connected(g))
    throw Error(ErrorCode::Precondition, std::string(who) + ": graph is not 2-connected");
}

void check_result(const Graph& g, const char* who) {
  if (!is_two_connected(g))
    throw InvariantFailure(std::string(who) + ": result is not 2-connected");
}

void check_vertex(const Graph& g, Vertex v, const char* who) {
  if (!g.contains(v))
    throw Error(ErrorCode::InvalidArgument, std::string(who) + ": vertex " + vname(v) + " out of range");
}

// Validates picks against the end-blocks that must be covered.
void check_picks(const BlockDecomposition& d, const InnerPicks& picks,
                 const std::vector<std::size_t>& required, const char* who) {
  for (auto [index, inner] : picks) {
    if (std::find(required.begin(), required.end(), index) == required.end())
      throw Error(ErrorCode::Precondition,
                  std::string(who) + ": pick for end-block " + std::to_string(index) +
                      " which is not to be covered");
    if (!d.end_blocks[index].inner.contains(inner))
      throw Error(ErrorCode::Precondition,
                  std::string(who) + ": vertex " + vname(inner) +
                      " is not an inner vertex of end-block " + std::to_string(index));
  }
  for (std::size_t index : required)
    if (!picks.contains(index))
      throw Error(ErrorCode::Precondition,
                  std::string(who) + ": no pick for end-block " + std::to_string(index));
}

BlockDecomposition separable_decomposition(const Graph& g, const char* who) {
  if (!is_connected(g)) throw Error(ErrorCode::Precondition, std::string(who) + ": graph is disconnected");
  BlockDecomposition d = decompose(g);
  if (d.blocks.size() < 2) throw Error(ErrorCode::Precondition, std::string(who) + ": graph is not separable");
  return d;
}

}  // namespace

bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  return reach(g, within.front(), within.bits()) == within.bits();
}

VertexSet component_of(const Graph& g, Vertex v, VertexSet within) {
  return VertexSet(reach(g, v, within.bits() | bit(v)));
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest.front(), rest);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

BlockDecomposition decompose(const Graph& g, VertexSet within) {
  if (within.empty()) throw Error(ErrorCode::Precondition, "decompose: empty graph");
  if (!within.is_subset_of(g.vertices()))
    throw Error(ErrorCode::InvalidArgument, "decompose: vertex out of range");
  const auto comps = components(g, within);
  if (comps.size() > 1) {
    throw Error(ErrorCode::Precondition,
                "decompose: graph is disconnected; vertices " + vname(comps[0].front()) +
                    " and " + vname(comps[1].front()) + " lie in different components");
  }

  BlockDecomposition d;
  const Vertex root = within.front();
  if (within.size() == 1) {
    d.blocks.push_back(within);
    return d;
  }

  struct Frame {
    Vertex v;
    Vertex parent;
    Mask rest;
  };
  std::vector<int> disc(64, -1);
  std::vector<int> low(64, 0);
  std::vector<Edge> edge_stack;
  std::vector<Frame> frames;
  int clock = 0;
  disc[root] = low[root] = clock++;
  frames.push_back({root, -1, g.row(root) & within.bits()});

  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.rest != 0) {
      const Vertex w = std::countr_zero(f.rest);
      f.rest &= f.rest - 1;
      if (disc[w] < 0) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = clock++;
        const Vertex v = f.v;  // f is invalidated by push_back
        frames.push_back({w, v, g.row(w) & within.bits()});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Vertex v = f.v;
    const Vertex p = f.parent;
    frames.pop_back();
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      VertexSet block;
      while (true) {
        const Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.insert(e.first);
        block.insert(e.second);
        if (e.first == p && e.second == v) break;
      }
      d.blocks.push_back(block);
    }
  }

  std::vector<int> membership(64, 0);
  for (VertexSet b : d.blocks)
    for (Vertex v : b) ++membership[v];
  for (Vertex v : within)
    if (membership[v] >= 2) d.cut_vertices.insert(v);
  if (d.blocks.size() >= 2) {
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      const VertexSet cuts = d.blocks[i] & d.cut_vertices;
      if (cuts.size() == 1) d.end_blocks.push_back({i, cuts.front(), d.blocks[i] - cuts});
    }
  }
  return d;
}

bool is_two_connected(const Graph& g, VertexSet within) {
  if (within.size() < 3 || !is_connected(g, within)) return false;
  for (Vertex v : within)
    if (!is_connected(g, within - VertexSet{v})) return false;
  return true;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  if (!is_connected(g)) return 0;

  const int nodes = 2 * n;
  constexpr int kInf = 1 << 20;
  int best = n - 1;
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes));
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };

  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      std::fill(cap.begin(), cap.end(), 0);
      for (Vertex v = 0; v < n; ++v) {
        at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
        for (Vertex w : g.neighbors(v)) at(2 * v + 1, 2 * w) = kInf;
      }
      const int source = 2 * s + 1;
      const int sink = 2 * t;
      int flow = 0;
      while (flow < best) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[static_cast<std::size_t>(source)] = source;
        std::deque<int> queue{source};
        while (!queue.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
          const int a = queue.front();
          queue.pop_front();
          for (int b = 0; b < nodes; ++b) {
            if (parent[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
              parent[static_cast<std::size_t>(b)] = a;
              queue.push_back(b);
            }
          }
        }
        if (parent[static_cast<std::size_t>(sink)] < 0) break;
        for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
          const int a = parent[static_cast<std::size_t>(b)];
          at(a, b) -= 1;
          at(b, a) += 1;
        }
        ++flow;
      }
      best = std::min(best, flow);
    }
  }
  return best;
}

VertexSet blocks_between(const Graph& g, VertexSet within, Vertex x, Vertex y) {
  const VertexSet comp = component_of(g, x, within);
  if (!comp.contains(y)) return {};
  if (x == y) return VertexSet{x};
  const BlockDecomposition d = decompose(g, comp);
  const std::size_t nb = d.blocks.size();
  if (nb == 1) return d.blocks[0];

  // Block-cut tree: block nodes 0..nb-1, cut vertex c is node nb + c.
  auto node_of = [&](Vertex v) -> std::size_t {
    if (d.cut_vertices.contains(v)) return nb + static_cast<std::size_t>(v);
    for (std::size_t i = 0; i < nb; ++i)
      if (d.blocks[i].contains(v)) return i;
    return 0;
  };
  const std::size_t start = node_of(x);
  const std::size_t goal = node_of(y);
  std::vector<std::size_t> parent(nb + 64, SIZE_MAX);
  parent[start] = start;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    if (a == goal) break;
    auto visit = [&](std::size_t b) {
      if (parent[b] == SIZE_MAX) {
        parent[b] = a;
        queue.push_back(b);
      }
    };
    if (a < nb) {
      for (Vertex c : d.blocks[a] & d.cut_vertices) visit(nb + static_cast<std::size_t>(c));
    } else {
      const Vertex c = static_cast<Vertex>(a - nb);
      for (std::size_t i = 0; i < nb; ++i)
        if (d.blocks[i].contains(c)) visit(i);
    }
  }
  VertexSet out{x, y};
  for (std::size_t a = goal;; a = parent[a]) {
    if (a < nb) out = out | d.blocks[a];
    if (a == start) break;
  }
  return out;
}

EndBlockWitnesses lemma32_i_check(const Graph& g, Vertex v) {
  check_vertex(g, v, "lemma32_i_check");
  require_two_connected(g, "lemma32_i_check");
  EndBlockWitnesses out;
  out.decomposition = decompose(g, g.vertices() - VertexSet{v});
  if (out.decomposition.blocks.size() < 2)
    throw Error(ErrorCode::Precondition, "lemma32_i_check: G - v is not separable");
  out.holds = true;
  for (std::size_t i = 0; i < out.decomposition.end_blocks.size(); ++i) {
    const VertexSet adjacent = out.decomposition.end_blocks[i].inner & g.neighbors(v);
    if (adjacent.empty()) {
      out.holds = false;
    } else {
      out.witnesses[i] = adjacent.front();
    }
  }
  return out;
}

Graph lemma32_ii_construct(const Graph& g, Vertex v, const InnerPicks& picks) {
  check_vertex(g, v, "lemma32_ii_construct");
  const BlockDecomposition d = separable_decomposition(g, "lemma32_ii_construct");
  if (d.cut_vertices.contains(v))
    throw Error(ErrorCode::Precondition, "lemma32_ii_construct: vertex " + vname(v) + " is a cut vertex");
  std::vector<std::size_t> required;
  for (std::size_t i = 0; i < d.end_blocks.size(); ++i)
    if (!d.blocks[d.end_blocks[i].block].contains(v)) required.push_back(i);
  check_picks(d, picks, required, "lemma32_ii_construct");

  GraphBuilder b(g);
  for (auto [index, inner] : picks)
    if (inner != v) b.add_edge(v, inner);
  Graph out = b.build();
  check_result(out, "lemma32_ii_construct");
  return out;
}

Graph lemma32_ii_construct(const Graph& g, Vertex v) {
  check_vertex(g, v, "lemma32_ii_construct");
  const BlockDecomposition d = separable_decomposition(g, "lemma32_ii_construct");
  InnerPicks picks;
  for (std::size_t i = 0; i < d.end_blocks.size(); ++i)
    if (!d.blocks[d.end_blocks[i].block].contains(v)) picks[i] = d.end_blocks[i].inner.front();
  return lemma32_ii_construct(g, v, picks);
}

Graph lemma32_iii_construct(const Graph& g, const InnerPicks& picks) {
  const BlockDecomposition d = separable_decomposition(g, "lemma32_iii_construct");
  std::vector<std::size_t> required(d.end_blocks.size());
  for (std::size_t i = 0; i < required.size(); ++i) required[i] = i;
  check_picks(d, picks, required, "lemma32_iii_construct");
  GraphBuilder b(g);
  const Vertex v = b.add_vertex();
  for (auto [index, inner] : picks) b.add_edge(v, inner);
  Graph out = b.build();
  check_result(out, "lemma32_iii_construct");
  return out;
}

Graph lemma32_iii_construct(const Graph& g) {
  const BlockDecomposition d = separable_decomposition(g, "lemma32_iii_construct");
  InnerPicks picks;
  for (std::size_t i = 0; i < d.end_blocks.size(); ++i) picks[i] = d.end_blocks[i].inner.front();
  return lemma32_iii_construct(g, picks);
}

Relabeled lemma32_iv_extract(const Graph& g, Vertex x, Vertex y,
                             const std::vector<VertexSet>& chosen) {
  check_vertex(g, x, "lemma32_iv_extract");
  check_vertex(g, y, "lemma32_iv_extract");
  if (x == y) throw Error(ErrorCode::InvalidArgument, "lemma32_iv_extract: x equals y");
  require_two_connected(g, "lemma32_iv_extract");
  const auto comps = components(g, g.vertices() - VertexSet{x, y});
  if (comps.size() < 2)
    throw Error(ErrorCode::Precondition,
                "lemma32_iv_extract: {" + vname(x) + "," + vname(y) + "} is not a cut");
  if (chosen.empty()) throw Error(ErrorCode::Precondition, "lemma32_iv_extract: empty component selection");

  VertexSet keep{x, y};
  for (VertexSet c : chosen) {
    if (std::find(comps.begin(), comps.end(), c) == comps.end())
      throw Error(ErrorCode::Precondition,
                  "lemma32_iv_extract: selection is not a component of G - {x,y}");
    keep = keep | c;
  }
  Relabeled r = induced_subgraph(g, keep);
  const auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::find(r.original.begin(), r.original.end(), v) - r.original.begin());
  };
  if (!g.has_edge(x, y)) r.graph = GraphBuilder(r.graph).add_edge(local(x), local(y)).build();
  check_result(r.graph, "lemma32_iv_extract");
  return r;
}

Relabeled lemma32_v_delete(const Graph& g, Vertex v) {
  check_vertex(g, v, "lemma32_v_delete");
  require_two_connected(g, "lemma32_v_delete");
  if (g.order() - 1 < 3)
    throw Error(ErrorCode::Precondition, "lemma32_v_delete: G - v has fewer than 3 vertices");
  const VertexSet nbrs = g.neighbors(v);
  for (Vertex a : nbrs) {
    const VertexSet missing = nbrs - g.closed_neighbors(a);
    if (!missing.empty())
      throw Error(ErrorCode::Precondition,
                  "lemma32_v_delete: neighbourhood of " + vname(v) + " is not a clique (" + vname(a) +
                      " and " + vname(missing.front()) + " are non-adjacent)");
  }
  Relabeled r = remove_vertex(g, v);
  check_result(r.graph, "lemma32_v_delete");
  return r;
}

}  // namespace longcycle
