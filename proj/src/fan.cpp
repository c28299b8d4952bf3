#include "longcycle/fan.hpp"

#include <algorithm>

#include "longcycle/connectivity.hpp"

namespace longcycle {

std::vector<Vertex> Fan::termini() const {
  std::vector<Vertex> out;
  for (const Path& p : paths) out.push_back(p.back());
  return out;
}

int Fan::edge_count() const {
  int total = 0;
  for (const Path& p : paths) total += p.length();
  return total;
}

namespace {

VertexSet cycle_set(const Cycle& c) {
  VertexSet s;
  for (Vertex v : c.vertices) s.insert(v);
  return s;
}

FanCheck violated(const char* clause) { return FanCheck{false, clause}; }

void require_component(const Graph& g, const Cycle& c, VertexSet h, const char* who) {
  if (!is_valid_cycle(g, c)) throw Error(ErrorCode::InvalidArgument, std::string(who) + ": not a cycle of the graph");
  const VertexSet rest = g.vertices() - cycle_set(c);
  if (h.empty() || !h.is_subset_of(rest) || component_of(g, h.front(), rest) != h) {
    throw Error(ErrorCode::InvalidArgument, std::string(who) + ": H is not a component of G - C");
  }
}

}  // namespace

FanCheck validate_fan(const Graph& g, const Cycle& c, VertexSet h, const Fan& f) {
  const VertexSet on_cycle = cycle_set(c);
  if (f.paths.size() < 2) return violated("t >= 2");
  for (const Path& p : f.paths)
    if (p.length() < 1 || !is_valid_path(g, p)) return violated("paths are paths of G");
  if (!h.contains(f.origin)) return violated("origin in H");
  for (const Path& p : f.paths)
    if (p.front() != f.origin) return violated("common origin");
  VertexSet ends;
  for (const Path& p : f.paths) {
    if (!on_cycle.contains(p.back())) return violated("termini on C");
    if (ends.contains(p.back())) return violated("pairwise different termini");
    ends.insert(p.back());
  }
  VertexSet inner;
  for (const Path& p : f.paths) {
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (inner.contains(p.vertices[i])) return violated("internally disjoint");
      inner.insert(p.vertices[i]);
    }
  }
  if (!inner.is_subset_of(h)) return violated("internal vertices in H");
  return FanCheck{true, {}};
}

HPrime build_h_prime(const Graph& g, const Cycle& c, VertexSet h) {
  require_component(g, c, h, "build_h_prime");
  if (!is_two_connected(g)) throw Error(ErrorCode::Precondition, "build_h_prime: graph is not 2-connected");
  const VertexSet on_cycle = cycle_set(c);

  HPrime out;
  for (Vertex u : h) out.t = std::max(out.t, (g.neighbors(u) & on_cycle).size());

  VertexSet to_x;
  VertexSet to_y;
  if (out.t == 1) {
    VertexSet seen;  // N_C(H)
    for (Vertex u : h) seen = seen | (g.neighbors(u) & on_cycle);
    out.x1 = seen.front();
    to_x = g.neighbors(out.x1) & h;
    for (Vertex u : h)
      if (!(g.neighbors(u) & on_cycle).empty()) to_y.insert(u);
    to_y = to_y - to_x;
    if (to_y.empty()) throw InvariantFailure("every vertex of H touching C sees the same cycle vertex");
  } else {
    for (Vertex u : h) {
      const int d = (g.neighbors(u) & on_cycle).size();
      if (d == out.t) to_x.insert(u);
      if (d >= 1) to_y.insert(u);
    }
  }

  const Relabeled base = induced_subgraph(g, h);
  out.original = base.original;
  GraphBuilder b(base.graph);
  out.x = b.add_vertex();
  out.y = b.add_vertex();
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    const Vertex w = out.original[i];
    if (to_x.contains(w)) b.add_edge(out.x, static_cast<Vertex>(i));
    if (to_y.contains(w)) b.add_edge(out.y, static_cast<Vertex>(i));
  }
  b.add_edge(out.x, out.y);
  out.graph = b.build();

  if (!is_two_connected(out.graph)) throw InvariantFailure("H' is not 2-connected");
  if (out.t == 1) {
    for (std::size_t i = 0; i < out.original.size(); ++i)
      if (out.graph.degree(static_cast<Vertex>(i)) != g.degree(out.original[i]))
        throw InvariantFailure("degree of vertex " + std::to_string(out.original[i]) + " changed in H'");
  }
  return out;
}

Fan extract_fan(const Graph& g, const Cycle& c, VertexSet h, int k) {
  require_component(g, c, h, "extract_fan");
  int high = 0;
  for (Vertex u : h)
    if (g.degree(u) >= k) ++high;
  if (2 * high < h.size() + 1) {
    throw Error(ErrorCode::Precondition, "extract_fan: only " + std::to_string(high) + " vertices of H have degree >= " +
                                             std::to_string(k) + ", need " + std::to_string((h.size() + 2) / 2));
  }
  const VertexSet on_cycle = cycle_set(c);
  const HPrime hp = build_h_prime(g, c, h);

  Fan fan;
  if (hp.t >= std::max(k, 2)) {
    for (Vertex u : h) {
      const VertexSet seen = g.neighbors(u) & on_cycle;
      if (seen.size() != hp.t) continue;
      fan.origin = u;
      for (Vertex z : seen) fan.paths.push_back(Path{{u, z}});
      break;
    }
  } else {
    const int need = hp.t == 1 ? std::max(k, 3) : k - hp.t + 2;
    const auto found = has_xy_path_at_least(hp.graph, hp.x, hp.y, need);
    if (!found) throw InvariantFailure("H' has no (x,y)-path of length " + std::to_string(need));
    std::vector<Vertex> inner;  // v_1 .. v_p in G numbering
    for (std::size_t i = 1; i + 1 < found->vertices.size(); ++i)
      inner.push_back(hp.original[static_cast<std::size_t>(found->vertices[i])]);
    const Vertex v1 = inner.front();
    const Vertex vp = inner.back();
    Vertex x1 = -1;
    Vertex y1 = -1;
    if (hp.t == 1) {
      x1 = hp.x1;
      for (Vertex z : g.neighbors(vp) & on_cycle)
        if (z != x1) {
          y1 = z;
          break;
        }
    } else {
      y1 = (g.neighbors(vp) & on_cycle).front();
      x1 = (g.neighbors(v1) & (on_cycle - VertexSet{y1})).front();
    }
    if (y1 < 0 || !g.has_edge(v1, x1)) throw InvariantFailure("path through H' does not reach two cycle vertices");
    fan.origin = v1;
    fan.paths.push_back(Path{{v1, x1}});
    Path rest{inner};
    rest.vertices.push_back(y1);
    fan.paths.push_back(rest);
    if (hp.t >= 2) {
      for (Vertex z : g.neighbors(v1) & (on_cycle - VertexSet{x1, y1})) fan.paths.push_back(Path{{v1, z}});
    }
  }

  const FanCheck check = validate_fan(g, c, h, fan);
  if (!check.ok) throw InvariantFailure("extracted fan violates: " + check.clause);
  if (fan.edge_count() < k) throw InvariantFailure("extracted fan has only " + std::to_string(fan.edge_count()) + " edges");
  return fan;
}

namespace {

// Paths are added in increasing order of their second vertex, which is
// distinct across any fan, so each fan is visited once.
class FanSearch {
 public:
  FanSearch(const Graph& g, VertexSet cycle, VertexSet h) : g_(g), cycle_(cycle), h_(h) {}

  int run() {
    for (Vertex v : h_) {
      origin_ = v;
      add_path(0, bit(v), 0, 0, -1);
    }
    return best_;
  }

 private:
  void add_path(int paths, Mask used, Mask ends, int edges, Vertex last_second) {
    if (paths >= 2) best_ = std::max(best_, edges);
    for (Vertex second : g_.neighbors(origin_) & (h_ | cycle_)) {
      if (second <= last_second || (used & bit(second)) || (ends & bit(second))) continue;
      if (cycle_.contains(second)) {
        add_path(paths + 1, used, ends | bit(second), edges + 1, second);
      } else {
        extend(second, 1, paths, used | bit(second), ends, edges, second);
      }
    }
  }

  void extend(Vertex at, int len, int paths, Mask used, Mask ends, int edges, Vertex second) {
    for (Vertex z : (g_.neighbors(at) & cycle_) - VertexSet(ends))
      add_path(paths + 1, used, ends | bit(z), edges + len + 1, second);
    for (Vertex w : g_.neighbors(at) & (h_ - VertexSet(used))) extend(w, len + 1, paths, used | bit(w), ends, edges, second);
  }

  const Graph& g_;
  VertexSet cycle_;
  VertexSet h_;
  Vertex origin_ = -1;
  int best_ = 0;
};

}  // namespace

int max_fan_edges(const Graph& g, VertexSet cycle, VertexSet h) { return FanSearch(g, cycle, h).run(); }

Lemma22Report verify_lemma22(const Graph& g, int k) {
  if (!is_two_connected(g)) throw Error(ErrorCode::Precondition, "verify_lemma22: graph is not 2-connected");
  const CircumferenceResult longest = circumference(g);
  if (longest.length == g.order()) throw Error(ErrorCode::Precondition, "verify_lemma22: lemma vacuous, graph is Hamiltonian");
  const VertexSet on_cycle = cycle_set(*longest.witness);

  Lemma22Report r;
  r.circumference = longest.length;
  for (VertexSet h : components(g, g.vertices() - on_cycle)) r.best_fan = std::max(r.best_fan, max_fan_edges(g, on_cycle, h));
  r.fan_found = r.best_fan >= k;
  r.holds = !r.fan_found || r.circumference >= 2 * k;
  return r;
}

}  // namespace longcycle
