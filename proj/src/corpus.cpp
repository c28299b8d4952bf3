#include "longcycle/corpus.hpp"

#include <algorithm>
#include <unordered_map>

#include "longcycle/connectivity.hpp"

namespace longcycle {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Replaces each key by its rank among the distinct keys.
template <typename Key>
int rank_keys(const std::vector<Key>& keys, std::vector<int>& out) {
  std::vector<Key> sorted(keys);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return static_cast<int>(sorted.size());
}

}  // namespace

Refinement refine(const Graph& g) {
  const int n = g.order();
  Refinement r;
  r.color.assign(static_cast<std::size_t>(n), 0);
  r.hash = mix(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(g.edge_count()));

  std::vector<std::pair<int, int>> start(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    int triangles = 0;
    for (Vertex w : g.neighbors(v)) triangles += std::popcount(g.row(v) & g.row(w));
    start[static_cast<std::size_t>(v)] = {g.degree(v), triangles / 2};
  }
  r.cells = rank_keys(start, r.color);
  std::vector<std::pair<int, int>> sorted_start(start);
  std::sort(sorted_start.begin(), sorted_start.end());
  for (const auto& [d, t] : sorted_start) r.hash = mix(mix(r.hash, static_cast<std::uint64_t>(d)), static_cast<std::uint64_t>(t));

  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.assign(1, r.color[static_cast<std::size_t>(v)]);
      for (Vertex w : g.neighbors(v)) s.push_back(r.color[static_cast<std::size_t>(w)]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<int> next(static_cast<std::size_t>(n));
    const int cells = rank_keys(sig, next);
    std::vector<std::vector<int>> all(sig);
    std::sort(all.begin(), all.end());
    for (const auto& s : all) {
      r.hash = mix(r.hash, 0xffULL);
      for (int c : s) r.hash = mix(r.hash, static_cast<std::uint64_t>(c));
    }
    r.color = std::move(next);
    if (cells == r.cells) break;
    r.cells = cells;
  }
  return r;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, const Refinement& ra, const Refinement& rb)
      : a_(a), b_(b), ra_(ra), rb_(rb), map_(static_cast<std::size_t>(a.order()), -1) {
    const int n = a.order();
    std::vector<int> class_size(static_cast<std::size_t>(n), 0);
    for (int c : ra.color) ++class_size[static_cast<std::size_t>(c)];
    for (Vertex v = 0; v < n; ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) {
      return class_size[static_cast<std::size_t>(ra.color[static_cast<std::size_t>(x)])] <
             class_size[static_cast<std::size_t>(ra.color[static_cast<std::size_t>(y)])];
    });
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t depth, Mask used) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    const int color = ra_.color[static_cast<std::size_t>(v)];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if ((used & bit(w)) || rb_.color[static_cast<std::size_t>(w)] != color) continue;
      bool fits = true;
      for (std::size_t i = 0; i < depth && fits; ++i) {
        const Vertex p = order_[i];
        fits = a_.has_edge(v, p) == b_.has_edge(w, map_[static_cast<std::size_t>(p)]);
      }
      if (!fits) continue;
      map_[static_cast<std::size_t>(v)] = w;
      if (extend(depth + 1, used | bit(w))) return true;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  const Refinement& ra_;
  const Refinement& rb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
};

bool isomorphic_refined(const Graph& a, const Graph& b, const Refinement& ra, const Refinement& rb) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count() || ra.hash != rb.hash || ra.cells != rb.cells)
    return false;
  return IsoSearch(a, b, ra, rb).run();
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) { return isomorphic_refined(a, b, refine(a), refine(b)); }

const std::vector<Graph>& GraphEnumerator::level(int n, GraphClass cls) {
  const auto key = std::make_pair(n, cls);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (n < 0 || n > 12) throw Error(ErrorCode::Refused, "enumeration is limited to 12 vertices");

  std::vector<Graph> out;
  if (n == 0) {
    if (cls == GraphClass::All) out.emplace_back(0);
  } else if (n == 1) {
    if (cls != GraphClass::Biconnected) out.emplace_back(1);
  } else if (!(cls == GraphClass::Biconnected && n < 3)) {
    const GraphClass parent_cls = cls == GraphClass::All ? GraphClass::All : GraphClass::Connected;
    const std::vector<Graph> parents = level(n - 1, parent_cls);
    const int min_degree = cls == GraphClass::All ? 0 : (cls == GraphClass::Connected ? 1 : 2);
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::size_t, Refinement>>> seen;
    for (const Graph& p : parents) {
      for (Mask s = 0; s < (Mask{1} << (n - 1)); ++s) {
        if (std::popcount(s) < min_degree) continue;
        GraphBuilder b(p);
        const Vertex v = b.add_vertex();
        for (Vertex w : VertexSet(s)) b.add_edge(v, w);
        Graph g = b.build();
        if (cls == GraphClass::Biconnected && !is_two_connected(g)) continue;
        Refinement r = refine(g);
        auto& bucket = seen[r.hash];
        bool repeat = false;
        for (const auto& [index, other] : bucket)
          if (isomorphic_refined(g, out[index], r, other)) {
            repeat = true;
            break;
          }
        if (repeat) continue;
        bucket.emplace_back(out.size(), std::move(r));
        out.push_back(std::move(g));
      }
    }
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

Graph random_graph(std::mt19937_64& rng, int n, int permille) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 1000) < permille) b.add_edge(u, v);
  return b.build();
}

RandomTwoConnected::RandomTwoConnected(std::uint64_t seed, int min_n, int max_n)
    : rng_(seed), min_n_(min_n), max_n_(max_n) {
  if (min_n < 3 || max_n < min_n || max_n > kMaxVertices)
    throw Error(ErrorCode::InvalidArgument, "random graphs need 3 <= min_n <= max_n <= capacity");
}

Graph RandomTwoConnected::next() {
  static constexpr int kPermille[] = {200, 350, 500};
  while (true) {
    const int n = min_n_ + static_cast<int>(rng_() % static_cast<std::uint64_t>(max_n_ - min_n_ + 1));
    const int p = kPermille[rng_() % 3];
    Graph g = random_graph(rng_, n, p);
    if (is_two_connected(g)) return g;
  }
}

}  // namespace longcycle
