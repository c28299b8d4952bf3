#include "longcycle/verifier.hpp"

#include <algorithm>
#include <thread>

#include "json.hpp"
#include "longcycle/connectivity.hpp"
#include "longcycle/graph6.hpp"

namespace longcycle {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::Refused: return "refused";
  }
  return "?";
}

namespace {

std::vector<std::pair<std::string, std::string>> param_fields(const VerificationReport& r) {
  std::vector<std::pair<std::string, std::string>> out;
  const ClaimParams& p = r.params;
  if (p.k) out.emplace_back("k", std::to_string(*p.k));
  if (p.x) out.emplace_back("x", std::to_string(*p.x));
  if (p.y) out.emplace_back("y", std::to_string(*p.y));
  if (p.s) out.emplace_back("s", std::to_string(*p.s));
  if (p.m) out.emplace_back("m", std::to_string(*p.m));
  if (p.c) out.emplace_back("c", std::to_string(*p.c));
  if (p.alpha) out.emplace_back("alpha", p.alpha->str());
  out.insert(out.end(), r.notes.begin(), r.notes.end());
  return out;
}

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

std::string to_tsv(const VerificationReport& r) {
  std::string params;
  for (const auto& [key, value] : param_fields(r)) {
    if (!params.empty()) params += ',';
    params += key + "=" + value;
  }
  std::string witness;
  for (const auto& part : r.witness) {
    if (!witness.empty()) witness += ',';
    witness += join_vertices(part);
  }
  return r.claim + '\t' + r.graph6 + '\t' + (params.empty() ? "-" : params) + '\t' + to_string(r.verdict) + '\t' +
         (witness.empty() ? "-" : witness);
}

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["graph6"] = r.graph6;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : param_fields(r)) j["params"][key] = value;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness;
  return j.dump();
}

// --- GraphContext

GraphContext::GraphContext(Graph g) : g_(std::move(g)) {}

const std::string& GraphContext::graph6() const {
  if (!graph6_) graph6_ = to_graph6(g_);
  return *graph6_;
}

bool GraphContext::two_connected() const {
  if (!two_connected_) two_connected_ = is_two_connected(g_);
  return *two_connected_;
}

int GraphContext::vertex_connectivity() const {
  if (!connectivity_) connectivity_ = ::longcycle::vertex_connectivity(g_);
  return *connectivity_;
}

int GraphContext::count_high_degree(int k, VertexSet exclude) const {
  return ::longcycle::count_high_degree(g_, k, exclude);
}

int GraphContext::xy_length(Vertex x, Vertex y) {
  auto it = lengths_.find(x);
  if (it == lengths_.end()) it = lengths_.emplace(x, longest_xy_lengths(g_, x)).first;
  return it->second[static_cast<std::size_t>(y)];
}

std::optional<Path> GraphContext::xy_path_at_least(Vertex x, Vertex y, int k) {
  if (!g_.contains(x) || !g_.contains(y) || x == y)
    throw Error(ErrorCode::InvalidArgument, "path query needs two distinct vertices of the graph");
  k = std::max(k, 1);
  const auto key = std::minmax(x, y);
  const bool flip = x != key.first;
  auto orient = [&](std::vector<Vertex> vs) {
    if (flip) std::reverse(vs.begin(), vs.end());
    return Path{std::move(vs)};
  };

  if (g_.order() <= kExactOrder) {
    if (xy_length(key.first, key.second) < k) return std::nullopt;
    if (!witnesses_) return Path{};
    auto it = longest_xy_.find(key);
    if (it == longest_xy_.end()) it = longest_xy_.emplace(key, longest_xy_path(g_, key.first, key.second)).first;
    return orient(it->second.vertices);
  }

  Bounds& b = xy_[key];
  if (k <= b.lower) return orient(b.witness);
  if (k > b.upper) return std::nullopt;
  if (!component_of(g_, key.first, g_.vertices()).contains(key.second)) {
    b.upper = -1;
    return std::nullopt;
  }
  const auto found = has_xy_path_at_least(g_, key.first, key.second, k);
  if (!found) {
    b.upper = k - 1;
    return std::nullopt;
  }
  b.lower = found->length();
  b.witness = found->vertices;
  return orient(b.witness);
}

std::optional<Cycle> GraphContext::cycle_at_least(int k) {
  k = std::max(k, 3);
  if (circumference_ || g_.order() <= kExactOrder) {
    const CircumferenceResult& c = circumference();
    if (c.length < k) return std::nullopt;
    return c.witness;
  }
  if (k <= cycle_.lower) return Cycle{cycle_.witness};
  if (k > cycle_.upper) return std::nullopt;
  const auto found = has_cycle_at_least(g_, k);
  if (!found) {
    cycle_.upper = k - 1;
    return std::nullopt;
  }
  cycle_.lower = found->length();
  cycle_.witness = found->vertices;
  return found;
}

const CircumferenceResult& GraphContext::circumference() {
  if (!circumference_) circumference_ = ::longcycle::circumference(g_);
  return *circumference_;
}

const Path& GraphContext::longest_path() {
  if (!longest_path_) longest_path_ = ::longcycle::longest_path(g_);
  return *longest_path_;
}

std::optional<int> GraphContext::best_fan_off_longest_cycle() {
  if (!best_fan_) {
    const CircumferenceResult& c = circumference();
    if (!c.witness || c.length == g_.order()) {
      best_fan_ = std::optional<int>();
    } else {
      VertexSet on;
      for (Vertex v : c.witness->vertices) on.insert(v);
      int best = 0;
      for (VertexSet h : components(g_, g_.vertices() - on)) best = std::max(best, max_fan_edges(g_, on, h));
      best_fan_ = best;
    }
  }
  return *best_fan_;
}

// --- Report helpers

namespace {

VerificationReport start(const char* claim, const GraphContext& ctx, ClaimParams params) {
  VerificationReport r;
  r.claim = claim;
  r.graph6 = ctx.graph6();
  r.params = std::move(params);
  return r;
}

VerificationReport vacuous(VerificationReport r) {
  r.hypothesis_holds = false;
  r.verdict = Verdict::Vacuous;
  return r;
}

VerificationReport refused(VerificationReport r, const std::string& why) {
  r.hypothesis_holds = false;
  r.verdict = Verdict::Refused;
  r.notes.emplace_back("refused", why);
  return r;
}

VerificationReport conclude(VerificationReport r, bool holds, std::vector<std::vector<Vertex>> witness = {}) {
  r.hypothesis_holds = true;
  r.conclusion_holds = holds;
  r.verdict = holds ? Verdict::Pass : Verdict::Counterexample;
  if (holds) {
    std::erase_if(witness, [](const auto& w) { return w.empty(); });
    r.witness = std::move(witness);
  }
  return r;
}

VerificationReport conclude_path(VerificationReport r, const std::optional<Path>& p) {
  if (!p) return conclude(std::move(r), false);
  return conclude(std::move(r), true, {p->vertices});
}

VerificationReport conclude_cycle(VerificationReport r, const std::optional<Cycle>& c) {
  if (!c) return conclude(std::move(r), false);
  return conclude(std::move(r), true, {c->vertices});
}

void require_pair(const Graph& g, Vertex x, Vertex y, const char* who) {
  if (!g.contains(x) || !g.contains(y)) throw Error(ErrorCode::InvalidArgument, std::string(who) + ": vertex out of range");
  if (x == y) throw Error(ErrorCode::InvalidArgument, std::string(who) + ": x equals y");
}

void require_positive(int value, const char* name, const char* who) {
  if (value < 1) throw Error(ErrorCode::InvalidArgument, std::string(who) + ": " + name + " must be at least 1");
}

// min{n, 2k}
int dirac_target(int n, int k) { return std::min(n, 2 * k); }

int min_degree(const Graph& g) {
  int d = g.order() == 0 ? 0 : g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

VertexSet low_degree(const Graph& g, int k, VertexSet exclude) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < k && !exclude.contains(v)) out.insert(v);
  return out;
}

}  // namespace

// --- Checkers

VerificationReport check_main(GraphContext& ctx, Vertex x, Vertex y, int k) {
  const Graph& g = ctx.graph();
  require_pair(g, x, y, "check_main");
  VerificationReport r = start("main", ctx, {.k = k, .x = x, .y = y});
  const int count = ctx.count_high_degree(k, VertexSet{x, y});
  if (!ctx.two_connected() || 2 * count < g.order() - 1) return vacuous(std::move(r));
  return conclude_path(std::move(r), ctx.xy_path_at_least(x, y, k));
}

VerificationReport check_woodall(GraphContext& ctx, int k) {
  const Graph& g = ctx.graph();
  VerificationReport r = start("woodall", ctx, {.k = k});
  if (!ctx.two_connected() || 2 * ctx.count_high_degree(k) < g.order() + 2 * k) return vacuous(std::move(r));
  return conclude_cycle(std::move(r), ctx.cycle_at_least(2 * k));
}

VerificationReport check_fan_theorem(GraphContext& ctx, const Cycle& c, VertexSet h, int k) {
  const Graph& g = ctx.graph();
  if (!is_valid_cycle(g, c)) throw Error(ErrorCode::InvalidArgument, "check_fan_theorem: not a cycle of the graph");
  VertexSet on;
  for (Vertex v : c.vertices) on.insert(v);
  const VertexSet rest = g.vertices() - on;
  if (h.empty() || !h.is_subset_of(rest) || component_of(g, h.front(), rest) != h)
    throw Error(ErrorCode::InvalidArgument, "check_fan_theorem: H is not a component of G - C");

  VerificationReport r = start("fan", ctx, {.k = k});
  r.notes.emplace_back("H", join_vertices(h.to_vector()));
  int high = 0;
  for (Vertex u : h)
    if (g.degree(u) >= k) ++high;
  if (!ctx.two_connected() || 2 * high < h.size() + 1) return vacuous(std::move(r));
  try {
    const Fan f = extract_fan(g, c, h, k);
    std::vector<std::vector<Vertex>> paths;
    for (const Path& p : f.paths) paths.push_back(p.vertices);
    return conclude(std::move(r), f.edge_count() >= k && validate_fan(g, c, h, f).ok, paths);
  } catch (const InvariantFailure& e) {
    r.notes.emplace_back("failure", e.what());
    return conclude(std::move(r), false);
  }
}

namespace {

void require_labeling(const Graph& g, const BermondLabeling& labeling) {
  if (static_cast<int>(labeling.order.size()) != g.order())
    throw Error(ErrorCode::InvalidArgument, "labeling must list every vertex exactly once");
  VertexSet seen;
  for (Vertex v : labeling.order) {
    if (!g.contains(v) || seen.contains(v))
      throw Error(ErrorCode::InvalidArgument, "labeling must list every vertex exactly once");
    seen.insert(v);
  }
}

std::string labeling_string(const BermondLabeling& l) { return join_vertices(l.order); }

}  // namespace

BermondLabeling ascending_degree_labeling(const Graph& g) {
  BermondLabeling l;
  for (Vertex v = 0; v < g.order(); ++v) l.order.push_back(v);
  std::stable_sort(l.order.begin(), l.order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  return l;
}

bool bermond_condition(const Graph& g, const BermondLabeling& labeling, int c) {
  require_labeling(g, labeling);
  const int n = g.order();
  for (int i = 1; i <= n; ++i) {
    const Vertex xi = labeling.order[static_cast<std::size_t>(i - 1)];
    const int di = g.degree(xi);
    for (int j = i + 1; j <= n; ++j) {
      const Vertex xj = labeling.order[static_cast<std::size_t>(j - 1)];
      const int dj = g.degree(xj);
      const bool ok = i + j < c || g.has_edge(xi, xj) || di > i || dj >= j || di + dj >= c;
      if (!ok) return false;
    }
  }
  return true;
}

VerificationReport check_bermond(GraphContext& ctx, const BermondLabeling& labeling, int c, BermondMode mode) {
  const Graph& g = ctx.graph();
  const int n = g.order();
  if (c < 1 || c > n) throw Error(ErrorCode::InvalidArgument, "check_bermond: c must lie in [1, n]");
  VerificationReport r = start("bermond", ctx, {.c = c});
  r.notes.emplace_back("regime", n >= 3 * c - 1 ? "1" : "0");
  if (mode == BermondMode::Given) {
    require_labeling(g, labeling);
    r.notes.emplace_back("labeling", labeling_string(labeling));
    if (!ctx.two_connected() || !bermond_condition(g, labeling, c)) return vacuous(std::move(r));
  } else {
    r.notes.emplace_back("labeling", mode == BermondMode::Exists ? "exists" : "forall");
    if (n > 8) return refused(std::move(r), "labeling modes need n <= 8");
    if (!ctx.two_connected()) return vacuous(std::move(r));
    BermondLabeling l;
    for (Vertex v = 0; v < n; ++v) l.order.push_back(v);
    bool any = false;
    bool all = true;
    do {
      const bool ok = bermond_condition(g, l, c);
      any = any || ok;
      all = all && ok;
      if (mode == BermondMode::Exists ? any : !all) break;
    } while (std::next_permutation(l.order.begin(), l.order.end()));
    if (mode == BermondMode::Exists ? !any : !all) return vacuous(std::move(r));
  }
  return conclude_cycle(std::move(r), ctx.cycle_at_least(c));
}

namespace {

int non_feasible_count(const Graph& g, int c) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (2 * g.degree(v) < c) ++count;
  return count;
}

}  // namespace

bool check_feasible_count_lemma(const Graph& g, const BermondLabeling& labeling, int c) {
  if (!is_two_connected(g) || !bermond_condition(g, labeling, c))
    throw Error(ErrorCode::Precondition, "check_feasible_count_lemma: lemma inapplicable, Bermond hypothesis fails");
  return non_feasible_count(g, c) <= c - 1;
}

VerificationReport check_feasible_count(GraphContext& ctx, const BermondLabeling& labeling, int c) {
  const Graph& g = ctx.graph();
  if (c < 1 || c > g.order()) throw Error(ErrorCode::InvalidArgument, "check_feasible_count: c must lie in [1, n]");
  VerificationReport r = start("feasible-count", ctx, {.c = c});
  r.notes.emplace_back("labeling", labeling_string(labeling));
  if (!ctx.two_connected() || !bermond_condition(g, labeling, c)) return vacuous(std::move(r));
  const int count = non_feasible_count(g, c);
  r.notes.emplace_back("non_feasible", std::to_string(count));
  return conclude(std::move(r), count <= c - 1);
}

VerificationReport check_eg_classic(GraphContext& ctx, Vertex x, Vertex y, int k) {
  const Graph& g = ctx.graph();
  require_pair(g, x, y, "check_eg_classic");
  VerificationReport r = start("eg-classic", ctx, {.k = k, .x = x, .y = y});
  if (!ctx.two_connected() || ctx.count_high_degree(k, VertexSet{x, y}) != g.order() - 2) return vacuous(std::move(r));
  return conclude_path(std::move(r), ctx.xy_path_at_least(x, y, k));
}

VerificationReport check_bondy_jackson(GraphContext& ctx, Vertex x, Vertex y, int k) {
  const Graph& g = ctx.graph();
  require_pair(g, x, y, "check_bondy_jackson");
  VerificationReport r = start("bondy-jackson", ctx, {.k = k, .x = x, .y = y});
  if (!ctx.two_connected() || g.order() < 4 || ctx.count_high_degree(k, VertexSet{x, y}) < g.order() - 3)
    return vacuous(std::move(r));
  return conclude_path(std::move(r), ctx.xy_path_at_least(x, y, k));
}

VerificationReport check_blw(GraphContext& ctx, int k) {
  const Graph& g = ctx.graph();
  VerificationReport r = start("blw", ctx, {.k = k});
  if (g.order() == 0 || 2 * ctx.count_high_degree(k) < g.order()) return vacuous(std::move(r));
  const Path& p = ctx.longest_path();
  if (p.length() < k) return conclude(std::move(r), false);
  return conclude(std::move(r), true, {ctx.witnesses() ? p.vertices : std::vector<Vertex>{}});
}

// --- Independent sets

namespace {

class IndependentEnumerator {
 public:
  IndependentEnumerator(const Graph& g, int size, bool minimise) : g_(g), size_(size), minimise_(minimise) {}

  IndependentSearch run(VertexSet within) {
    if (size_ > kIndependentSizeLimit) {
      out_.refused = true;
      return out_;
    }
    if (size_ <= 0) {
      out_.found = true;
      return out_;
    }
    dfs(within.bits(), 0);
    return out_;
  }

 private:
  void dfs(Mask candidates, int sum) {
    if (out_.refused || (!minimise_ && out_.found)) return;
    if (++out_.nodes > kIndependentNodeLimit) {
      out_.refused = true;
      return;
    }
    if (static_cast<int>(chosen_.size()) == size_) {
      if (!out_.found || sum < best_sum_) {
        out_.found = true;
        best_sum_ = sum;
        out_.set = chosen_;
      }
      return;
    }
    const int need = size_ - static_cast<int>(chosen_.size());
    if (std::popcount(candidates) < need) return;
    if (minimise_ && out_.found) {
      // the smallest remaining degrees bound the best completion
      std::vector<int> degs;
      for (Vertex v : VertexSet(candidates)) degs.push_back(g_.degree(v));
      std::partial_sort(degs.begin(), degs.begin() + need, degs.end());
      int bound = sum;
      for (int i = 0; i < need; ++i) bound += degs[static_cast<std::size_t>(i)];
      if (bound >= best_sum_) return;
    }
    for (Vertex v : VertexSet(candidates)) {
      candidates &= ~bit(v);
      chosen_.push_back(v);
      dfs(candidates & ~g_.row(v), sum + g_.degree(v));
      chosen_.pop_back();
      if (out_.refused || (!minimise_ && out_.found)) return;
      if (std::popcount(candidates) < need) return;
    }
  }

  const Graph& g_;
  int size_;
  bool minimise_;
  std::vector<Vertex> chosen_;
  int best_sum_ = 0;
  IndependentSearch out_;
};

}  // namespace

IndependentSearch find_independent_set(const Graph& g, VertexSet within, int size) {
  return IndependentEnumerator(g, size, false).run(within);
}

IndependentSearch min_degree_sum_independent_set(const Graph& g, int size) {
  return IndependentEnumerator(g, size, true).run(g.vertices());
}

VerificationReport check_independent_path(GraphContext& ctx, Vertex x, Vertex y, int k, int s) {
  const Graph& g = ctx.graph();
  require_positive(k, "k", "check_independent_path");
  require_positive(s, "s", "check_independent_path");
  require_pair(g, x, y, "check_independent_path");
  VerificationReport r = start("independent-path", ctx, {.k = k, .x = x, .y = y, .s = s});
  if (!ctx.two_connected() || g.order() < 2 * k * s + 3) return vacuous(std::move(r));
  const IndependentSearch low = find_independent_set(g, low_degree(g, k, VertexSet{x, y}), s + 1);
  if (low.refused) return refused(std::move(r), "independent-set enumeration too large");
  if (low.found) return vacuous(std::move(r));
  return conclude_path(std::move(r), ctx.xy_path_at_least(x, y, k));
}

VerificationReport check_dirac(GraphContext& ctx, int k) {
  const Graph& g = ctx.graph();
  VerificationReport r = start("dirac", ctx, {.k = k});
  if (!ctx.two_connected() || min_degree(g) < k) return vacuous(std::move(r));
  return conclude_cycle(std::move(r), ctx.cycle_at_least(dirac_target(g.order(), k)));
}

VerificationReport check_one_exception(GraphContext& ctx, int k) {
  const Graph& g = ctx.graph();
  VerificationReport r = start("one-exception", ctx, {.k = k});
  if (!ctx.two_connected() || low_degree(g, k, {}).size() > 1) return vacuous(std::move(r));
  return conclude_cycle(std::move(r), ctx.cycle_at_least(dirac_target(g.order(), k)));
}

VerificationReport check_sigma(GraphContext& ctx, int k, int s) {
  const Graph& g = ctx.graph();
  require_positive(k, "k", "check_sigma");
  require_positive(s, "s", "check_sigma");
  VerificationReport r = start("sigma", ctx, {.k = k, .s = s});
  if (!ctx.two_connected() || g.order() < 2 * k * (s + 1)) return vacuous(std::move(r));
  const IndependentSearch low = find_independent_set(g, low_degree(g, k, {}), s + 1);
  if (low.refused) return refused(std::move(r), "independent-set enumeration too large");
  if (low.found) return vacuous(std::move(r));
  return conclude_cycle(std::move(r), ctx.cycle_at_least(2 * k));
}

VerificationReport check_fournier_fraisse(GraphContext& ctx, int s, int m) {
  const Graph& g = ctx.graph();
  if (s < 2) throw Error(ErrorCode::InvalidArgument, "check_fournier_fraisse: s must be at least 2");
  VerificationReport r = start("fournier-fraisse", ctx, {.s = s, .m = m});
  if (!ctx.two_connected() || ctx.vertex_connectivity() < s) return vacuous(std::move(r));
  const IndependentSearch low = min_degree_sum_independent_set(g, s + 1);
  if (low.refused) return refused(std::move(r), "independent-set enumeration too large");
  if (low.found) {
    int sum = 0;
    for (Vertex v : low.set) sum += g.degree(v);
    if (sum < m) return vacuous(std::move(r));
  }
  // c >= min{2m/(s+1), n}, i.e. c >= min{ceil(2m/(s+1)), n}
  const long long twice = 2LL * m;
  const long long need = twice <= 0 ? 0 : (twice + s) / (s + 1);
  const int target = static_cast<int>(std::min<long long>(need, g.order()));
  return conclude_cycle(std::move(r), ctx.cycle_at_least(target));
}

VerificationReport check_conj_hj(GraphContext& ctx, int k) {
  const Graph& g = ctx.graph();
  VerificationReport r = start("conj-hj", ctx, {.k = k});
  const int count = ctx.count_high_degree(k);
  if (!ctx.two_connected() || count < 2 * k - 1 || 2 * count < g.order() + k + 2) return vacuous(std::move(r));
  return conclude_cycle(std::move(r), ctx.cycle_at_least(dirac_target(g.order(), k)));
}

VerificationReport check_conj_li(GraphContext& ctx, int k) {
  const Graph& g = ctx.graph();
  VerificationReport r = start("conj-li", ctx, {.k = k});
  if (!ctx.two_connected() || 2 * ctx.count_high_degree(k) < g.order() + k) return vacuous(std::move(r));
  return conclude_cycle(std::move(r), ctx.cycle_at_least(2 * k));
}

VerificationReport check_conj_ln(GraphContext& ctx, Vertex x, Vertex y, int k, Rational alpha) {
  const Graph& g = ctx.graph();
  if (alpha.num <= 0 || 2 * alpha.num > alpha.den)
    throw Error(ErrorCode::InvalidArgument, "check_conj_ln: alpha must lie in (0, 1/2]");
  require_pair(g, x, y, "check_conj_ln");
  VerificationReport r = start("conj-ln", ctx, {.k = k, .x = x, .y = y, .alpha = alpha});
  const long long count = ctx.count_high_degree(k, VertexSet{x, y});
  if (!ctx.two_connected() || count * alpha.den <= alpha.num * (g.order() - 2)) return vacuous(std::move(r));
  // ceil(2 alpha k)
  const long long twice = 2LL * alpha.num * k;
  const int target = static_cast<int>((twice + alpha.den - 1) / alpha.den);
  return conclude_path(std::move(r), ctx.xy_path_at_least(x, y, target));
}

VerificationReport check_lemma22(GraphContext& ctx, int k) {
  VerificationReport r = start("lemma22", ctx, {.k = k});
  if (!ctx.two_connected()) return vacuous(std::move(r));
  const std::optional<int> best = ctx.best_fan_off_longest_cycle();
  if (!best) {
    r.notes.emplace_back("hamiltonian", "1");
    return vacuous(std::move(r));
  }
  r.notes.emplace_back("best_fan", std::to_string(*best));
  if (*best < k) return vacuous(std::move(r));
  const CircumferenceResult& c = ctx.circumference();
  if (c.length < 2 * k) return conclude(std::move(r), false);
  return conclude(std::move(r), true, {c.witness->vertices});
}

// --- Sweeps

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{
      "main",        "woodall",          "fan",           "bermond", "feasible-count", "eg-classic",
      "bondy-jackson", "blw",            "independent-path", "dirac", "one-exception",  "sigma",
      "fournier-fraisse", "conj-hj",     "conj-li",       "conj-ln", "lemma22"};
  return ids;
}

bool is_claim(const std::string& id) {
  const auto& ids = claim_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<VerificationReport> check_graph(GraphContext& ctx, const SweepOptions& options) {
  if (!is_claim(options.claim)) throw Error(ErrorCode::InvalidArgument, "unknown claim '" + options.claim + "'");
  const Graph& g = ctx.graph();
  const int n = g.order();
  const std::string& claim = options.claim;
  std::vector<VerificationReport> out;
  const int k_lo = std::max(options.k_min, 1);

  auto each_pair = [&](auto&& fn) {
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y)
        if (x != y) fn(x, y);
  };

  if (claim == "main" || claim == "eg-classic" || claim == "bondy-jackson") {
    each_pair([&](Vertex x, Vertex y) {
      for (int k = k_lo; k <= n; ++k) {
        if (claim == "main") out.push_back(check_main(ctx, x, y, k));
        else if (claim == "eg-classic") out.push_back(check_eg_classic(ctx, x, y, k));
        else out.push_back(check_bondy_jackson(ctx, x, y, k));
      }
    });
  } else if (claim == "independent-path") {
    each_pair([&](Vertex x, Vertex y) {
      for (int k = k_lo; k <= n; ++k)
        for (int s : options.s_values) out.push_back(check_independent_path(ctx, x, y, k, s));
    });
  } else if (claim == "conj-ln") {
    each_pair([&](Vertex x, Vertex y) {
      for (int k = k_lo; k <= n; ++k)
        for (const Rational& a : options.alphas) out.push_back(check_conj_ln(ctx, x, y, k, a));
    });
  } else if (claim == "bermond" || claim == "feasible-count") {
    const BermondLabeling labeling = ascending_degree_labeling(g);
    for (int c = 1; c <= n; ++c) {
      if (claim == "bermond") out.push_back(check_bermond(ctx, labeling, c, options.bermond_mode));
      else out.push_back(check_feasible_count(ctx, labeling, c));
    }
  } else if (claim == "fan") {
    const CircumferenceResult& longest = ctx.circumference();
    if (longest.witness) {
      VertexSet on;
      for (Vertex v : longest.witness->vertices) on.insert(v);
      for (VertexSet h : components(g, g.vertices() - on))
        for (int k = k_lo; k <= n; ++k) out.push_back(check_fan_theorem(ctx, *longest.witness, h, k));
    }
  } else if (claim == "sigma") {
    for (int k = k_lo; k <= n; ++k)
      for (int s : options.s_values) out.push_back(check_sigma(ctx, k, s));
  } else if (claim == "fournier-fraisse") {
    for (int s0 : options.s_values) {
      const int s = s0 + 1;
      const IndependentSearch low = min_degree_sum_independent_set(g, s + 1);
      int m = n * (s + 1);
      if (low.found) {
        m = 0;
        for (Vertex v : low.set) m += g.degree(v);
      }
      out.push_back(check_fournier_fraisse(ctx, s, m));
    }
  } else {
    for (int k = k_lo; k <= n; ++k) {
      if (claim == "woodall") out.push_back(check_woodall(ctx, k));
      else if (claim == "blw") out.push_back(check_blw(ctx, k));
      else if (claim == "dirac") out.push_back(check_dirac(ctx, k));
      else if (claim == "one-exception") out.push_back(check_one_exception(ctx, k));
      else if (claim == "conj-hj") out.push_back(check_conj_hj(ctx, k));
      else if (claim == "conj-li") out.push_back(check_conj_li(ctx, k));
      else out.push_back(check_lemma22(ctx, k));
    }
  }
  return out;
}

std::string SweepSummary::str() const {
  return "graphs=" + std::to_string(graphs) + " instances=" + std::to_string(instances) + " pass=" +
         std::to_string(pass) + " vacuous=" + std::to_string(vacuous) + " counterexample=" +
         std::to_string(counterexamples) + " refused=" + std::to_string(refused) + " errors=" + std::to_string(errors) +
         (skipped > 0 ? " skipped=" + std::to_string(skipped) : "");
}

namespace {

struct LineResult {
  long long line = 0;
  std::vector<VerificationReport> reports;
  std::optional<std::string> error;
  bool skipped = false;
};

LineResult check_line(long long number, const std::string& text, const SweepOptions& options) {
  LineResult out;
  out.line = number;
  try {
    Graph g = parse_graph6(text);
    if (g.order() > options.max_n) {
      out.skipped = true;
      return out;
    }
    GraphContext ctx(std::move(g));
    ctx.set_witnesses(options.keep_all);
    out.reports = check_graph(ctx, options);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

SweepSummary sweep(std::istream& in, const SweepOptions& options, const ReportSink& on_report,
                   const ErrorSink& on_error) {
  if (!is_claim(options.claim)) throw Error(ErrorCode::InvalidArgument, "unknown claim '" + options.claim + "'");
  const int workers = std::max(1, options.workers);
  const std::size_t batch = static_cast<std::size_t>(workers) * 64;
  SweepSummary summary;

  std::vector<std::pair<long long, std::string>> lines;
  std::vector<LineResult> results;
  long long number = 0;
  bool more = true;
  while (more) {
    lines.clear();
    std::string text;
    while (lines.size() < batch && (more = static_cast<bool>(std::getline(in, text)))) {
      ++number;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      if (text.empty() || text[0] == '#') continue;
      lines.emplace_back(number, text);
    }
    results.assign(lines.size(), {});
    if (workers == 1 || lines.size() < 2) {
      for (std::size_t i = 0; i < lines.size(); ++i) results[i] = check_line(lines[i].first, lines[i].second, options);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = static_cast<std::size_t>(w); i < lines.size(); i += static_cast<std::size_t>(workers))
            results[i] = check_line(lines[i].first, lines[i].second, options);
        });
      }
      for (auto& t : pool) t.join();
    }
    for (const LineResult& res : results) {
      if (res.error) {
        ++summary.errors;
        if (on_error) on_error(res.line, *res.error);
        continue;
      }
      if (res.skipped) {
        ++summary.skipped;
        continue;
      }
      ++summary.graphs;
      for (const VerificationReport& r : res.reports) {
        ++summary.instances;
        switch (r.verdict) {
          case Verdict::Pass: ++summary.pass; break;
          case Verdict::Vacuous: ++summary.vacuous; break;
          case Verdict::Counterexample: ++summary.counterexamples; break;
          case Verdict::Refused: ++summary.refused; break;
        }
        if (on_report && (options.keep_all || r.verdict == Verdict::Counterexample)) on_report(r);
      }
    }
  }
  return summary;
}

}  // namespace longcycle
