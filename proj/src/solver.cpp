#include "longcycle/solver.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <string>

#include "longcycle/connectivity.hpp"

namespace longcycle {

namespace {

using Local = std::uint32_t;

// G[within] renumbered 0..m-1 in ascending vertex order, so local order
// agrees with global order.
struct LocalView {
  std::vector<Vertex> verts;
  std::vector<Local> adj;
  std::array<int, kMaxVertices> index{};

  LocalView(const Graph& g, VertexSet within) : verts(within.to_vector()) {
    index.fill(-1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    adj.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      Local row = 0;
      for (Vertex w : g.neighbors(verts[i]) & within) row |= Local{1} << index[static_cast<std::size_t>(w)];
      adj[i] = row;
    }
  }

  int size() const { return static_cast<int>(verts.size()); }
  int local(Vertex v) const { return index[static_cast<std::size_t>(v)]; }
  Local full() const { return (Local{1} << size()) - 1; }
};

// reach[T] = set of w such that some path starting in `starts` covers
// exactly T and ends at w.
std::vector<Local> subset_reach(const LocalView& view, Local starts) {
  const int m = view.size();
  std::vector<Local> reach(std::size_t{1} << m, 0);
  for (Local s = starts; s != 0; s &= s - 1) {
    const Local b = s & (~s + 1);
    reach[b] = b;
  }
  const Local full = view.full();
  for (Local set = 1; set <= full && set != 0; ++set) {
    const Local r = reach[set];
    if (r == 0) continue;
    for (Local out = full & ~set; out != 0; out &= out - 1) {
      const int w = std::countr_zero(out);
      if (view.adj[static_cast<std::size_t>(w)] & r) reach[set | (Local{1} << w)] |= Local{1} << w;
    }
  }
  return reach;
}

// Lexicographically smallest path from `start` with exactly `edges` edges,
// using `table` (subset_reach from the target, or from every vertex for a
// free end). Each step keeps the smallest neighbour that can still finish.
std::vector<Vertex> reconstruct(const LocalView& view, const std::vector<Local>& table, int start, int edges) {
  std::vector<Vertex> out{view.verts[static_cast<std::size_t>(start)]};
  Local used = Local{1} << start;
  int cur = start;
  for (int r = edges; r >= 1; --r) {
    const Local free = view.full() & ~used;
    Local ends = 0;
    for (Local t = free; t != 0; t = (t - 1) & free)
      if (std::popcount(t) == r) ends |= table[t];
    const Local cand = view.adj[static_cast<std::size_t>(cur)] & free & ends;
    if (cand == 0) throw InvariantFailure("path reconstruction found no continuation");
    cur = std::countr_zero(cand);
    used |= Local{1} << cur;
    out.push_back(view.verts[static_cast<std::size_t>(cur)]);
  }
  return out;
}

Mask reach_within(const Graph& g, Vertex from, Mask avail) {
  Mask seen = 0;
  Mask frontier = g.row(from) & avail;
  while (frontier != 0) {
    seen |= frontier;
    Mask next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.row(v);
    frontier = next & avail & ~seen;
  }
  return seen;
}

enum class Mode { ToTarget, FreeEnd, Cycle };

// Depth-first search in ascending vertex order, so the first path found at
// a given score is the lexicographically smallest one.
class Search {
 public:
  Search(const Graph& g, Mode mode, Mask allowed) : g_(g), mode_(mode), allowed_(allowed) {}

  Vertex target = -1;     // ToTarget
  Vertex close = -1;      // Cycle: endpoint must be adjacent to this start
  int goal = INT_MAX;     // stop once a score >= goal is recorded
  bool maximize = true;   // false: prune anything that cannot reach goal
  bool articulation = false;
  long long budget = -1;  // node limit, negative for none

  int best_score = -1;
  std::vector<Vertex> best;
  bool aborted = false;

  void run(Vertex start) {
    if (done()) return;
    path_.assign(1, start);
    dfs(start, bit(start));
  }

  bool done() const { return aborted || best_score >= goal; }

 private:
  void record(int score) {
    if (score > best_score) {
      best_score = score;
      best = path_;
    }
  }

  int threshold() const { return maximize ? best_score + 1 : goal; }

  void dfs(Vertex v, Mask used) {
    if (budget >= 0 && ++nodes_ > budget) {
      aborted = true;
      return;
    }
    const int len = static_cast<int>(path_.size()) - 1;
    if (mode_ == Mode::ToTarget && v == target) {
      record(len);
      return;
    }
    if (mode_ == Mode::FreeEnd) record(len);
    if (mode_ == Mode::Cycle && len >= 2 && g_.has_edge(v, close)) record(len + 1);
    if (done()) return;

    const Mask avail = allowed_ & ~used;
    Mask comp = reach_within(g_, v, avail);
    Mask next = g_.row(v) & avail;
    int bound = len + std::popcount(comp);
    switch (mode_) {
      case Mode::ToTarget:
        if ((comp & bit(target)) == 0) return;
        if (articulation && bound >= threshold()) {
          const VertexSet between = blocks_between(g_, VertexSet(comp | bit(v)), v, target);
          bound = len + between.size() - 1;
          next &= between.bits();
        }
        break;
      case Mode::FreeEnd:
        break;
      case Mode::Cycle:
        if ((comp & g_.row(close)) == 0) return;
        bound += 1;
        break;
    }
    if (bound < threshold()) return;

    for (Vertex w : VertexSet(next)) {
      path_.push_back(w);
      dfs(w, used | bit(w));
      path_.pop_back();
      if (done()) return;
    }
  }

  const Graph& g_;
  Mode mode_;
  Mask allowed_;
  std::vector<Vertex> path_;
  long long nodes_ = 0;
};

void check_pair(const Graph& g, Vertex x, Vertex y, const char* who) {
  if (!g.contains(x) || !g.contains(y))
    throw Error(ErrorCode::InvalidArgument, std::string(who) + ": vertex out of range");
  if (x == y) throw Error(ErrorCode::InvalidArgument, std::string(who) + ": x equals y");
}

// Vertices that can lie on an (x,y)-path; throws NoPath when x and y are in
// different components.
VertexSet relevant(const Graph& g, Vertex x, Vertex y, const char* who) {
  const VertexSet between = blocks_between(g, g.vertices(), x, y);
  if (between.empty()) {
    throw Error(ErrorCode::NoPath, std::string(who) + ": no path; vertices " + std::to_string(x) + " and " +
                                       std::to_string(y) + " lie in different components");
  }
  return between;
}

Path longest_xy_in(const Graph& g, VertexSet within, Vertex x, Vertex y, bool allow_dp = true) {
  if (allow_dp && within.size() <= kSubsetDpLimit) {
    const LocalView view(g, within);
    const int xl = view.local(x);
    const int yl = view.local(y);
    const auto table = subset_reach(view, Local{1} << yl);
    int best = -1;
    for (Local t = 1; t <= view.full() && t != 0; ++t)
      if ((table[t] >> xl) & 1) best = std::max(best, std::popcount(t) - 1);
    return Path{reconstruct(view, table, xl, best)};
  }
  Search s(g, Mode::ToTarget, within.bits());
  s.target = y;
  s.articulation = true;
  s.run(x);
  return Path{s.best};
}

// Rough node budget for the quick search before the exact programme.
long long quick_budget(int m) { return 2000LL + 200LL * m; }

Cycle cycle_in_block(const Graph& g, VertexSet block, int& length, bool allow_dp = true) {
  const int b = block.size();
  length = 0;
  std::vector<Vertex> best_path;
  if (allow_dp && b <= kSubsetDpLimit) {
    for (Vertex u : block) {
      const VertexSet rest = VertexSet(block.bits() & ~low_bits(u));
      if (rest.size() <= length) break;
      const LocalView view(g, rest);
      const int ul = view.local(u);
      const auto table = subset_reach(view, Local{1} << ul);
      const Local close = view.adj[static_cast<std::size_t>(ul)];
      std::array<int, 32> best_to{};
      best_to.fill(-1);
      for (Local t = 1; t <= view.full() && t != 0; ++t) {
        const int size = std::popcount(t);
        if (size < 3) continue;
        for (Local e = table[t] & close; e != 0; e &= e - 1) {
          const int vl = std::countr_zero(e);
          best_to[static_cast<std::size_t>(vl)] = std::max(best_to[static_cast<std::size_t>(vl)], size - 1);
        }
      }
      int vbest = -1;
      for (int vl = 0; vl < view.size(); ++vl)
        if (vbest < 0 || best_to[static_cast<std::size_t>(vl)] > best_to[static_cast<std::size_t>(vbest)]) vbest = vl;
      if (vbest < 0 || best_to[static_cast<std::size_t>(vbest)] < 2) continue;
      const int cyc = best_to[static_cast<std::size_t>(vbest)] + 1;
      if (cyc > length) {
        length = cyc;
        auto p = reconstruct(view, table, vbest, cyc - 1);
        std::reverse(p.begin(), p.end());
        best_path = std::move(p);
      }
      if (length == b) break;
    }
    return Cycle{best_path};
  }
  int best_score = -1;
  for (Vertex u : block) {
    const Mask allowed = block.bits() & ~low_bits(u);
    if (std::popcount(allowed) <= best_score) break;
    Search s(g, Mode::Cycle, allowed);
    s.close = u;
    s.best_score = best_score;
    s.goal = b;
    s.run(u);
    if (s.best_score > best_score) {
      best_score = s.best_score;
      best_path = s.best;
    }
    if (best_score == b) break;
  }
  length = std::max(best_score, 0);
  return Cycle{best_path};
}

std::vector<VertexSet> cyclic_blocks(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexSet comp : components(g)) {
    if (comp.size() < 3) continue;
    for (VertexSet b : decompose(g, comp).blocks)
      if (b.size() >= 3) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  Mask seen = 0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (!g.contains(v) || (seen & bit(v))) return false;
    seen |= bit(v);
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_valid_xy_path(const Graph& g, const Path& p, Vertex x, Vertex y) {
  return is_valid_path(g, p) && p.front() == x && p.back() == y;
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
  if (c.vertices.size() < 3) return false;
  if (!is_valid_path(g, Path{c.vertices})) return false;
  return g.has_edge(c.vertices.back(), c.vertices.front());
}

Path reversed(Path p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

Path longest_xy_path(const Graph& g, Vertex x, Vertex y) {
  check_pair(g, x, y, "longest_xy_path");
  return longest_xy_in(g, relevant(g, x, y, "longest_xy_path"), x, y);
}

std::optional<Path> has_xy_path_at_least(const Graph& g, Vertex x, Vertex y, int k) {
  check_pair(g, x, y, "has_xy_path_at_least");
  const VertexSet within = relevant(g, x, y, "has_xy_path_at_least");
  if (k > within.size() - 1) return std::nullopt;

  Search s(g, Mode::ToTarget, within.bits());
  s.target = y;
  s.goal = std::max(k, 1);
  s.maximize = false;
  if (within.size() <= kSubsetDpLimit) s.budget = quick_budget(within.size());
  else s.articulation = true;
  s.run(x);
  if (s.best_score >= k) return Path{s.best};
  if (!s.aborted) return std::nullopt;

  Path p = longest_xy_in(g, within, x, y);
  if (p.length() >= k) return p;
  return std::nullopt;
}

std::vector<int> longest_xy_lengths(const Graph& g, Vertex x) {
  if (!g.contains(x)) throw Error(ErrorCode::InvalidArgument, "longest_xy_lengths: vertex out of range");
  std::vector<int> out(static_cast<std::size_t>(g.order()), -1);
  const VertexSet comp = component_of(g, x, g.vertices());
  if (comp.size() <= kSubsetDpLimit) {
    const LocalView view(g, comp);
    const auto table = subset_reach(view, Local{1} << view.local(x));
    for (Local t = 1; t <= view.full() && t != 0; ++t) {
      const int len = std::popcount(t) - 1;
      for (Local e = table[t]; e != 0; e &= e - 1) {
        int& slot = out[static_cast<std::size_t>(view.verts[static_cast<std::size_t>(std::countr_zero(e))])];
        slot = std::max(slot, len);
      }
    }
    return out;
  }
  out[static_cast<std::size_t>(x)] = 0;
  for (Vertex y : comp - VertexSet{x}) out[static_cast<std::size_t>(y)] = longest_xy_path(g, x, y).length();
  return out;
}

Path longest_path(const Graph& g) {
  if (g.order() < 1) throw Error(ErrorCode::InvalidArgument, "longest_path: empty graph");
  Path best;
  for (VertexSet comp : components(g)) {
    if (comp.size() - 1 <= best.length()) continue;
    std::vector<Vertex> candidate;
    if (comp.size() <= kSubsetDpLimit) {
      const LocalView view(g, comp);
      const auto table = subset_reach(view, view.full());
      int len = 0;
      Local starts = 0;
      for (Local t = 1; t <= view.full() && t != 0; ++t) {
        const int l = std::popcount(t) - 1;
        if (table[t] == 0) continue;
        if (l > len) {
          len = l;
          starts = 0;
        }
        if (l == len) starts |= table[t];
      }
      if (len <= best.length()) continue;
      candidate = reconstruct(view, table, std::countr_zero(starts), len);
    } else {
      Search s(g, Mode::FreeEnd, comp.bits());
      s.best_score = best.length();
      for (Vertex x : comp) s.run(x);
      if (s.best.empty()) continue;
      candidate = s.best;
    }
    if (static_cast<int>(candidate.size()) - 1 > best.length()) best.vertices = candidate;
  }
  return best;
}

namespace {

CircumferenceResult circumference_with(const Graph& g, bool allow_dp) {
  CircumferenceResult out;
  for (VertexSet block : cyclic_blocks(g)) {
    if (block.size() <= out.length) continue;
    int len = 0;
    Cycle c = cycle_in_block(g, block, len, allow_dp);
    if (len > out.length) {
      out.length = len;
      out.witness = std::move(c);
    }
  }
  return out;
}

}  // namespace

CircumferenceResult circumference(const Graph& g) { return circumference_with(g, true); }

CircumferenceResult circumference_search(const Graph& g) { return circumference_with(g, false); }

Path longest_xy_path_search(const Graph& g, Vertex x, Vertex y) {
  check_pair(g, x, y, "longest_xy_path_search");
  return longest_xy_in(g, relevant(g, x, y, "longest_xy_path_search"), x, y, false);
}

std::optional<Cycle> has_cycle_at_least(const Graph& g, int k) {
  const auto blocks = cyclic_blocks(g);
  for (VertexSet block : blocks) {
    if (block.size() < k) continue;
    const int target = std::max(k, 3);
    for (Vertex u : block) {
      const Mask allowed = block.bits() & ~low_bits(u);
      if (std::popcount(allowed) < target) break;
      Search s(g, Mode::Cycle, allowed);
      s.close = u;
      s.goal = target;
      s.maximize = false;
      if (block.size() <= kSubsetDpLimit) s.budget = quick_budget(block.size());
      s.run(u);
      if (s.best_score >= target) return Cycle{s.best};
      if (s.aborted) {
        int len = 0;
        Cycle c = cycle_in_block(g, block, len);
        if (len >= target) return c;
        break;
      }
    }
  }
  return std::nullopt;
}

int brute_oracle_xy(const Graph& g, Vertex x, Vertex y) {
  if (g.order() > 10) throw Error(ErrorCode::Refused, "brute_oracle_xy: refusing graphs with more than 10 vertices");
  check_pair(g, x, y, "brute_oracle_xy");
  int best = -1;
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  auto dfs = [&](auto&& self, Vertex v, int len) -> void {
    if (v == y) {
      best = std::max(best, len);
      return;
    }
    for (Vertex w = 0; w < g.order(); ++w) {
      if (!g.has_edge(v, w) || on[static_cast<std::size_t>(w)]) continue;
      on[static_cast<std::size_t>(w)] = 1;
      self(self, w, len + 1);
      on[static_cast<std::size_t>(w)] = 0;
    }
  };
  on[static_cast<std::size_t>(x)] = 1;
  dfs(dfs, x, 0);
  return best;
}

int brute_oracle_circumference(const Graph& g) {
  if (g.order() > 10)
    throw Error(ErrorCode::Refused, "brute_oracle_circumference: refusing graphs with more than 10 vertices");
  int best = 0;
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    auto dfs = [&](auto&& self, Vertex v, int len) -> void {
      if (len >= 2 && g.has_edge(v, s)) best = std::max(best, len + 1);
      for (Vertex w = s + 1; w < g.order(); ++w) {
        if (!g.has_edge(v, w) || on[static_cast<std::size_t>(w)]) continue;
        on[static_cast<std::size_t>(w)] = 1;
        self(self, w, len + 1);
        on[static_cast<std::size_t>(w)] = 0;
      }
    };
    on[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s, 0);
    on[static_cast<std::size_t>(s)] = 0;
  }
  return best;
}

}  // namespace longcycle
