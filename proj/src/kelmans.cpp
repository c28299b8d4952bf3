#include "longcycle/kelmans.hpp"

#include <algorithm>
#include <string>

namespace longcycle {

KelmansRecord kelmans(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw Error(ErrorCode::InvalidArgument, "kelmans: vertex out of range");
  if (u == v) throw Error(ErrorCode::InvalidArgument, "kelmans: u equals v");
  if (!g.has_edge(u, v)) {
    throw Error(ErrorCode::Precondition,
                "kelmans: " + std::to_string(v) + " is not a neighbour of " + std::to_string(u));
  }
  KelmansRecord rec;
  rec.base = g;
  rec.u = u;
  rec.v = v;
  rec.moved = g.closed_neighbors(u) - g.closed_neighbors(v);
  GraphBuilder b(g);
  for (Vertex w : rec.moved) {
    b.remove_edge(u, w);
    b.add_edge(v, w);
  }
  rec.result = b.build();
  return rec;
}

bool check_tau_increase(const KelmansRecord& rec) {
  const VertexSet nu = rec.base.closed_neighbors(rec.u);
  const VertexSet nv = rec.base.closed_neighbors(rec.v);
  if (nu.is_subset_of(nv)) throw Error(ErrorCode::Precondition, "check_tau_increase: N[u] is contained in N[v]");
  if (nv.is_subset_of(nu)) throw Error(ErrorCode::Precondition, "check_tau_increase: N[v] is contained in N[u]");
  const TauOrder order = tau_compare(degree_sequence(rec.result), degree_sequence(rec.base));
  if (order != TauOrder::Larger) {
    throw InvariantFailure(std::string("degree sequence after the switch compares ") + to_string(order));
  }
  return true;
}

namespace {

using Seq = std::vector<Vertex>;

Seq flip(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

Seq lift(const KelmansRecord& rec, const Seq& p) {
  const Graph& g = rec.base;
  const Vertex u = rec.u;
  const Vertex v = rec.v;
  const auto vit = std::find(p.begin(), p.end(), v);
  if (vit == p.end()) return p;
  const auto uit = std::find(p.begin(), p.end(), u);
  if (vit + 1 == p.end() || uit < vit) return flip(lift(rec, flip(p)));

  const std::size_t i = static_cast<std::size_t>(vit - p.begin());
  const bool minus_ok = i == 0 || g.has_edge(v, p[i - 1]);
  const bool plus_ok = g.has_edge(v, p[i + 1]);
  if (minus_ok && plus_ok) return p;

  Seq out(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i));
  if (uit == p.end()) {
    if (minus_ok) {
      out.push_back(v);
      out.push_back(u);
    } else if (plus_ok) {
      out.push_back(u);
      out.push_back(v);
    } else {
      out.push_back(u);
    }
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.end());
    return out;
  }

  const std::size_t j = static_cast<std::size_t>(uit - p.begin());
  if (minus_ok) {
    // v, then u^- back down to v^+, then u onwards
    out.push_back(v);
    for (std::size_t k = j - 1; k > i; --k) out.push_back(p[k]);
  } else if (plus_ok) {
    // u back down to v, then u^+ onwards
    for (std::size_t k = j + 1; k-- > i;) out.push_back(p[k]);
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(j) + 1, p.end());
    return out;
  } else {
    // u and v trade places
    out.push_back(u);
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.begin() + static_cast<std::ptrdiff_t>(j));
    out.push_back(v);
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(j) + 1, p.end());
    return out;
  }
  out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(j), p.end());
  return out;
}

}  // namespace

Path lift_path(const KelmansRecord& rec, const Path& p, Vertex x, Vertex y) {
  if (x == y || x == rec.u || y == rec.u) {
    throw Error(ErrorCode::Precondition, "lift_path: x, y and u must be distinct");
  }
  if (!is_valid_xy_path(rec.result, p, x, y)) {
    throw Error(ErrorCode::InvalidArgument, "lift_path: not an (x,y)-path of the switched graph");
  }
  Path out{lift(rec, p.vertices)};
  if (!is_valid_xy_path(rec.base, out, x, y) || out.length() < p.length()) {
    throw InvariantFailure("lifted path is not a long enough (x,y)-path of the original graph");
  }
  return out;
}

}  // namespace longcycle
