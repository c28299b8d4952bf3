// Acceptance run: one PASS/FAIL line per criterion. Arguments select
// criteria by number; with none, all of them run.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "longcycle/connectivity.hpp"
#include "longcycle/corpus.hpp"
#include "longcycle/error.hpp"
#include "longcycle/families.hpp"
#include "longcycle/fan.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/kelmans.hpp"
#include "longcycle/solver.hpp"
#include "longcycle/verifier.hpp"

using namespace longcycle;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240229;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Keeps the first few failure messages.
class Failures {
 public:
  void add(const std::string& what) {
    ++count_;
    if (shown_.size() < 5) shown_.push_back(what);
  }
  long long count() const { return count_; }
  std::string str() const {
    std::string out;
    for (const auto& s : shown_) out += "; " + s;
    return out;
  }

 private:
  long long count_ = 0;
  std::vector<std::string> shown_;
};

// --- corpus

GraphEnumerator& enumerator() {
  static GraphEnumerator e;
  return e;
}

// Number of 2-connected graphs on n unlabeled vertices.
const std::vector<long long> kBiconnectedCounts = {0, 0, 0, 1, 3, 10, 56, 468, 7123, 194066};

// Writes every 2-connected graph on 3..max_n vertices to a graph6 file,
// checking the class sizes on the way.
fs::path biconnected_corpus(int max_n, std::string& error) {
  const fs::path path = fs::current_path() / ("biconnected_n3-" + std::to_string(max_n) + ".g6");
  std::ofstream out(path);
  for (int n = 3; n <= max_n; ++n) {
    const auto& level = enumerator().level(n, GraphClass::Biconnected);
    if (static_cast<long long>(level.size()) != kBiconnectedCounts[static_cast<std::size_t>(n)])
      error += " n=" + std::to_string(n) + " has " + std::to_string(level.size()) + " graphs";
    for (const Graph& g : level) out << to_graph6(g) << '\n';
  }
  if (!out) error += " cannot write " + path.string();
  return path;
}

struct SweepRun {
  SweepSummary summary;
  std::vector<std::string> counterexamples;
  std::vector<std::string> errors;
};

SweepRun run_sweep(std::istream& in, const SweepOptions& options) {
  SweepRun run;
  run.summary = sweep(
      in, options,
      [&](const VerificationReport& r) {
        if (r.verdict == Verdict::Counterexample) run.counterexamples.push_back(to_tsv(r));
      },
      [&](long long line, const std::string& message) {
        run.errors.push_back("line " + std::to_string(line) + ": " + message);
      });
  return run;
}

SweepRun sweep_file(const fs::path& path, const SweepOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  return run_sweep(in, options);
}

// --- independent oracles

bool connected_without(const Graph& g, int skip) {
  const int n = g.order();
  std::vector<int> stack;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int start = skip == 0 ? 1 : 0;
  if (start >= n) return true;
  seen[static_cast<std::size_t>(start)] = true;
  stack.push_back(start);
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (w == skip || seen[static_cast<std::size_t>(w)] || !g.has_edge(u, w)) continue;
      seen[static_cast<std::size_t>(w)] = true;
      stack.push_back(w);
      ++reached;
    }
  }
  return reached == n - (skip >= 0 ? 1 : 0);
}

bool oracle_two_connected(const Graph& g) {
  if (g.order() < 3 || !connected_without(g, -1)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!connected_without(g, v)) return false;
  return true;
}

bool oracle_xy_path(const Graph& g, const Path& p, Vertex x, Vertex y) {
  if (p.vertices.empty() || p.front() != x || p.back() != y) return false;
  std::set<Vertex> seen(p.vertices.begin(), p.vertices.end());
  if (seen.size() != p.vertices.size()) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!g.contains(p.vertices[i]) || !g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
  return true;
}

// Every (x,y)-path of g, by plain depth-first search.
void each_xy_path(const Graph& g, Vertex x, Vertex y, const std::function<void(const Path&)>& visit) {
  Path p;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  std::function<void(Vertex)> go = [&](Vertex u) {
    p.vertices.push_back(u);
    used[static_cast<std::size_t>(u)] = true;
    if (u == y) {
      visit(p);
    } else {
      for (Vertex w = 0; w < g.order(); ++w)
        if (!used[static_cast<std::size_t>(w)] && g.has_edge(u, w)) go(w);
    }
    used[static_cast<std::size_t>(u)] = false;
    p.vertices.pop_back();
  };
  go(x);
}

int random_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class T>
const T& random_pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(items.size()) - 1))];
}

// --- criteria

Outcome sharpness() {
  Outcome o;
  Failures f;
  double slowest = 0;
  for (auto [k, t] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    const auto start = Clock::now();
    const LabeledFamily fam = gen_sharpness(k, t);
    const Graph& g = fam.graph;
    const Vertex x = *fam.x;
    const Vertex y = *fam.y;
    const int n = g.order();
    const int high = count_high_degree(g, k, VertexSet{x, y});
    const int len = longest_xy_path(g, x, y).length();
    const double took = seconds_since(start);
    slowest = std::max(slowest, took);
    const int oracle = n <= 10 ? brute_oracle_xy(g, x, y) : longest_xy_path_search(g, x, y).length();
    const std::string tag = "k=" + std::to_string(k) + " t=" + std::to_string(t);
    if (2 * high != n - 2) f.add(tag + " high degree " + std::to_string(high) + " for n=" + std::to_string(n));
    if (len != k - 1) f.add(tag + " longest path " + std::to_string(len));
    if (oracle != len) f.add(tag + " oracle disagrees: " + std::to_string(oracle));
    if (took >= 1.0) f.add(tag + " took " + std::to_string(took) + "s");
  }
  o.pass = f.count() == 0;
  o.detail = "4 instances, slowest " + std::to_string(slowest) + "s" + f.str();
  return o;
}

Outcome exhaustive_main(const fs::path& corpus) {
  SweepOptions opt;
  opt.claim = "main";
  opt.k_min = 2;
  opt.max_n = 8;
  const auto start = Clock::now();
  const SweepRun run = sweep_file(corpus, opt);
  const double took = seconds_since(start);
  Outcome o;
  o.pass = run.summary.graphs == 7661 && run.summary.counterexamples == 0 && run.summary.errors == 0 &&
           run.summary.refused == 0 && took < 15 * 60;
  o.detail = run.summary.str() + ", " + std::to_string(took) + "s";
  for (std::size_t i = 0; i < run.counterexamples.size() && i < 5; ++i) o.detail += "; " + run.counterexamples[i];
  return o;
}

Outcome exhaustive_woodall(const fs::path& corpus) {
  SweepOptions opt;
  opt.claim = "woodall";
  opt.k_min = 1;
  const auto start = Clock::now();
  const SweepRun run = sweep_file(corpus, opt);
  const double took = seconds_since(start);
  Outcome o;
  o.pass = run.summary.graphs == 7661 + 194066 && run.summary.counterexamples == 0 && run.summary.errors == 0 &&
           run.summary.refused == 0 && took < 30 * 60;
  o.detail = run.summary.str() + ", " + std::to_string(took) + "s";
  for (std::size_t i = 0; i < run.counterexamples.size() && i < 5; ++i) o.detail += "; " + run.counterexamples[i];
  return o;
}

Outcome constructions() {
  Failures f;
  for (int k = 3; k <= 5; ++k) {
    for (int t = 1; t <= 3; ++t) {
      const Graph g = gen_hj_g1(k, t).graph;
      const std::string tag = "G1(" + std::to_string(k) + "," + std::to_string(t) + ")";
      const int high = count_high_degree(g, k);
      const int c = circumference(g).length;
      const int oracle = g.order() <= 10 ? brute_oracle_circumference(g) : circumference_search(g).length;
      if (high != 2 * k - 2) f.add(tag + " high degree " + std::to_string(high));
      if (c != 2 * k - 1) f.add(tag + " circumference " + std::to_string(c));
      if (oracle != c) f.add(tag + " oracle circumference " + std::to_string(oracle));
    }
  }
  const int k = 5;
  const Graph g2 = gen_hj_g2(k, 1).graph;
  const int n = g2.order();
  const int high = count_high_degree(g2, k);
  const int c = circumference(g2).length;
  if (2 * high != n + k + 1) f.add("G2 high degree " + std::to_string(high) + " for n=" + std::to_string(n));
  if (c != 9) f.add("G2 circumference " + std::to_string(c));
  if (brute_oracle_circumference(g2) != c) f.add("G2 oracle circumference disagrees");
  GraphContext ctx(g2);
  const VerificationReport r = check_conj_li(ctx, k);
  if (r.verdict != Verdict::Counterexample) f.add("G2 conj-li verdict " + std::string(to_string(r.verdict)));
  Outcome o;
  o.pass = f.count() == 0;
  o.detail = "9 G1 instances, G2(5,1) n=" + std::to_string(n) + " c=" + std::to_string(c) + " refutes (n+k)/2 bound: " +
             to_tsv(r) + f.str();
  return o;
}

Outcome kelmans_suite() {
  const auto start = Clock::now();
  Failures f;
  long long lifts = 0;
  long long tau_checks = 0;
  long long operations = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerator().level(n, GraphClass::Connected)) {
      const std::string g6 = to_graph6(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.neighbors(u)) {
          ++operations;
          const KelmansRecord rec = kelmans(g, u, v);
          const Graph& gp = rec.result;
          if (gp.edge_count() != g.edge_count()) f.add(g6 + " edge count changed");
          const VertexSet nu = g.closed_neighbors(u);
          const VertexSet nv = g.closed_neighbors(v);
          if (!nu.is_subset_of(nv) && !nv.is_subset_of(nu)) {
            ++tau_checks;
            bool increases = false;
            try {
              increases = check_tau_increase(rec);
            } catch (const std::exception& e) {
              f.add(g6 + " tau check threw: " + e.what());
            }
            const bool oracle = tau_compare(degree_sequence(gp), degree_sequence(g)) == TauOrder::Larger;
            if (!increases || !oracle)
              f.add(g6 + " u=" + std::to_string(u) + " v=" + std::to_string(v) + " tau did not increase");
          }
          for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = 0; y < n; ++y) {
              if (x == y || x == u || y == u) continue;
              each_xy_path(gp, x, y, [&](const Path& p) {
                ++lifts;
                try {
                  const Path q = lift_path(rec, p, x, y);
                  if (!oracle_xy_path(g, q, x, y) || q.length() < p.length())
                    f.add(g6 + " lift of a path of length " + std::to_string(p.length()) + " is invalid or shorter");
                } catch (const std::exception& e) {
                  f.add(g6 + " lift threw: " + e.what());
                }
              });
            }
          }
        }
      }
    }
  }
  const double took = seconds_since(start);
  if (took >= 600) f.add("took " + std::to_string(took) + "s");
  Outcome o;
  o.pass = f.count() == 0;
  o.detail = std::to_string(operations) + " operations, " + std::to_string(tau_checks) + " tau checks, " +
             std::to_string(lifts) + " lifts, " + std::to_string(f.count()) + " failures, " + std::to_string(took) +
             "s" + f.str();
  return o;
}

Outcome fan_suite() {
  Failures f;
  std::mt19937_64 rng(kSeed + 6);
  RandomTwoConnected stream(kSeed + 6, 5, 14);
  int instances = 0;
  int exact_checked = 0;
  while (instances < 1000) {
    const Graph g = stream.next();
    const int c = circumference(g).length;
    if (c >= g.order()) continue;
    const auto cycle = has_cycle_at_least(g, random_int(rng, 3, c));
    if (!cycle) {
      f.add(to_graph6(g) + " no cycle below the circumference");
      ++instances;
      continue;
    }
    const VertexSet on_cycle(std::accumulate(cycle->vertices.begin(), cycle->vertices.end(), Mask{0},
                                             [](Mask m, Vertex v) { return m | bit(v); }));
    const auto comps = components(g, g.vertices() - on_cycle);
    const VertexSet h = random_pick(rng, comps);
    std::vector<int> degrees;
    for (Vertex v : h) degrees.push_back(g.degree(v));
    std::sort(degrees.rbegin(), degrees.rend());
    const int need = (h.size() + 2) / 2;  // ceil((|H| + 1) / 2)
    const int k_max = degrees[static_cast<std::size_t>(need - 1)];
    const int k = random_int(rng, 1, k_max);
    ++instances;
    const std::string tag = to_graph6(g) + " k=" + std::to_string(k);
    try {
      const Fan fan = extract_fan(g, *cycle, h, k);
      const FanCheck check = validate_fan(g, *cycle, h, fan);
      if (!check.ok) f.add(tag + " invalid fan: " + check.clause);
      if (fan.edge_count() < k) f.add(tag + " fan has " + std::to_string(fan.edge_count()) + " edges");
      if (h.size() <= 8) {
        ++exact_checked;
        if (max_fan_edges(g, on_cycle, h) < k) f.add(tag + " exact search finds no fan with k edges");
      }
    } catch (const std::exception& e) {
      f.add(tag + " threw: " + e.what());
    }
  }

  long long lemma_instances = 0;
  long long graphs = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : enumerator().level(n, GraphClass::Biconnected)) {
      if (circumference(g).length == n) continue;
      ++graphs;
      for (int k = 1; k <= n; ++k) {
        ++lemma_instances;
        try {
          const Lemma22Report r = verify_lemma22(g, k);
          if (!r.holds) f.add(to_graph6(g) + " lemma fails at k=" + std::to_string(k));
        } catch (const std::exception& e) {
          f.add(to_graph6(g) + " lemma check threw: " + e.what());
        }
      }
    }
  }
  // 2-connected minus Hamiltonian graph counts for n = 5..8: 2 + 8 + 85 + 927
  if (graphs != 1022) f.add(std::to_string(graphs) + " non-Hamiltonian graphs, expected 1022");
  Outcome o;
  o.pass = f.count() == 0;
  o.detail = std::to_string(instances) + " fan instances (" + std::to_string(exact_checked) + " with exact search), " +
             std::to_string(graphs) + " non-Hamiltonian graphs, " + std::to_string(lemma_instances) +
             " implication checks, " + std::to_string(f.count()) + " failures" + f.str();
  return o;
}

Outcome solver_oracle() {
  Failures f;
  std::mt19937_64 rng(kSeed + 7);
  long long pairs = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = random_int(rng, 2, 8);
    const Graph g = random_graph(rng, n, random_int(rng, 150, 850));
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (x == y) continue;
        ++pairs;
        int got = -1;
        try {
          const Path p = longest_xy_path(g, x, y);
          got = p.length();
          if (!oracle_xy_path(g, p, x, y)) f.add(to_graph6(g) + " invalid witness");
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoPath) f.add(to_graph6(g) + " threw: " + e.what());
        }
        const int want = brute_oracle_xy(g, x, y);
        if (got != want)
          f.add(to_graph6(g) + " x=" + std::to_string(x) + " y=" + std::to_string(y) + " solver " +
                std::to_string(got) + " oracle " + std::to_string(want));
      }
    }
  }
  Outcome o;
  o.pass = f.count() == 0;
  o.detail = "500 graphs, " + std::to_string(pairs) + " pairs, " + std::to_string(f.count()) + " mismatches" + f.str();
  return o;
}

// Connected graph with a cut vertex.
Graph random_separable(std::mt19937_64& rng) {
  for (;;) {
    const int n = random_int(rng, 3, 11);
    const Graph g = random_graph(rng, n, random_int(rng, 150, 450));
    if (connected_without(g, -1) && !oracle_two_connected(g)) return g;
  }
}

Graph relabel(const Graph& g, const std::vector<Vertex>& to) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(to[static_cast<std::size_t>(u)], to[static_cast<std::size_t>(v)]);
  return b.build();
}

Outcome block_constructions() {
  Failures f;
  std::mt19937_64 rng(kSeed + 8);
  const int trials = 10000;
  auto accept = [&](const Graph& out, const std::string& tag) {
    if (!is_two_connected(out) || !oracle_two_connected(out)) f.add(tag + " output " + to_graph6(out) + " not 2-connected");
  };

  for (int i = 0; i < trials; ++i) {
    const Graph g = random_separable(rng);
    const BlockDecomposition d = decompose(g);
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g.order(); ++v)
      if (!d.cut_vertices.contains(v)) candidates.push_back(v);
    const Vertex v = random_pick(rng, candidates);
    InnerPicks picks;
    for (std::size_t b = 0; b < d.end_blocks.size(); ++b)
      if (!d.blocks[d.end_blocks[b].block].contains(v))
        picks[b] = random_pick(rng, d.end_blocks[b].inner.to_vector());
    try {
      accept(lemma32_ii_construct(g, v, picks), "join " + to_graph6(g));
    } catch (const std::exception& e) {
      f.add("join " + to_graph6(g) + " threw: " + e.what());
    }
  }

  for (int i = 0; i < trials; ++i) {
    const Graph g = random_separable(rng);
    const BlockDecomposition d = decompose(g);
    InnerPicks picks;
    for (std::size_t b = 0; b < d.end_blocks.size(); ++b) picks[b] = random_pick(rng, d.end_blocks[b].inner.to_vector());
    try {
      accept(lemma32_iii_construct(g, picks), "apex " + to_graph6(g));
    } catch (const std::exception& e) {
      f.add("apex " + to_graph6(g) + " threw: " + e.what());
    }
  }

  RandomTwoConnected two(kSeed + 8, 4, 11);
  for (int i = 0; i < trials;) {
    const Graph g = two.next();
    std::vector<std::pair<Vertex, Vertex>> cuts;
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = x + 1; y < g.order(); ++y)
        if (components(g, g.vertices() - VertexSet{x, y}).size() >= 2) cuts.emplace_back(x, y);
    if (cuts.empty()) continue;
    ++i;
    const auto [x, y] = random_pick(rng, cuts);
    const auto comps = components(g, g.vertices() - VertexSet{x, y});
    std::vector<VertexSet> chosen;
    while (chosen.empty())
      for (const VertexSet& c : comps)
        if (rng() % 2) chosen.push_back(c);
    try {
      accept(lemma32_iv_extract(g, x, y, chosen).graph, "cut side " + to_graph6(g));
    } catch (const std::exception& e) {
      f.add("cut side " + to_graph6(g) + " threw: " + e.what());
    }
  }

  RandomTwoConnected base(kSeed + 9, 3, 10);
  for (int i = 0; i < trials; ++i) {
    const Graph g0 = base.next();
    const int n0 = g0.order();
    // a random clique of size >= 2 grown from a random edge
    const auto edges = g0.edges();
    const Edge e = random_pick(rng, edges);
    VertexSet clique{e.first, e.second};
    std::vector<Vertex> order(static_cast<std::size_t>(n0));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (Vertex w : order)
      if (!clique.contains(w) && (g0.neighbors(w) & clique) == clique && rng() % 2) clique.insert(w);
    GraphBuilder b(g0);
    const Vertex v = b.add_vertex();
    for (Vertex w : clique) b.add_edge(v, w);
    std::vector<Vertex> to(static_cast<std::size_t>(n0 + 1));
    std::iota(to.begin(), to.end(), 0);
    std::shuffle(to.begin(), to.end(), rng);
    const Graph g = relabel(b.build(), to);
    const Vertex moved = to[static_cast<std::size_t>(v)];
    if (!oracle_two_connected(g)) {
      f.add("simplicial input " + to_graph6(g) + " not 2-connected");
      continue;
    }
    try {
      accept(lemma32_v_delete(g, moved).graph, "simplicial " + to_graph6(g));
    } catch (const std::exception& e) {
      f.add("simplicial " + to_graph6(g) + " threw: " + e.what());
    }
  }

  long long end_block_cases = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerator().level(n, GraphClass::Biconnected)) {
      for (Vertex v = 0; v < n; ++v) {
        const Graph rest = remove_vertex(g, v).graph;
        if (rest.order() < 3 || oracle_two_connected(rest)) continue;  // G - v a single block
        ++end_block_cases;
        const std::string tag = to_graph6(g) + " v=" + std::to_string(v);
        try {
          const EndBlockWitnesses r = lemma32_i_check(g, v);
          if (!r.holds) f.add(tag + " end-block without a neighbour of v");
          if (r.witnesses.size() != r.decomposition.end_blocks.size()) f.add(tag + " missing witnesses");
          for (const auto& [b, w] : r.witnesses)
            if (!r.decomposition.end_blocks[b].inner.contains(w) || !g.has_edge(v, w)) f.add(tag + " bad witness");
          if (!is_two_connected(g)) f.add(tag + " input not 2-connected");
        } catch (const std::exception& e) {
          f.add(tag + " threw: " + e.what());
        }
      }
    }
  }
  Outcome o;
  o.pass = f.count() == 0;
  o.detail = std::to_string(trials) + " trials per construction, " + std::to_string(end_block_cases) +
             " end-block cases, " + std::to_string(f.count()) + " failures" + f.str();
  return o;
}

Outcome bermond_regime() {
  Failures f;
  long long instances = 0;
  long long hypothesis = 0;
  long long counting = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : enumerator().level(n, GraphClass::Biconnected)) {
      GraphContext ctx(g);
      const BermondLabeling labeling = ascending_degree_labeling(g);
      for (int c = 1; c <= n; ++c) {
        if (n >= 3 * c - 1) {
          ++instances;
          const VerificationReport r = check_bermond(ctx, labeling, c);
          if (r.verdict == Verdict::Counterexample || r.verdict == Verdict::Refused) f.add(to_tsv(r));
          if (r.hypothesis_holds) ++hypothesis;
        }
        if (!bermond_condition(g, labeling, c)) continue;
        ++counting;
        if (!check_feasible_count_lemma(g, labeling, c)) f.add(to_graph6(g) + " c=" + std::to_string(c) + " too many non-feasible");
      }
    }
  }
  Outcome o;
  o.pass = f.count() == 0;
  o.detail = std::to_string(instances) + " instances in the regime (" + std::to_string(hypothesis) +
             " with the hypothesis), " + std::to_string(counting) + " counting checks, " + std::to_string(f.count()) +
             " failures" + f.str();
  return o;
}

Outcome conjectures(const fs::path& corpus) {
  Outcome o;
  std::vector<std::string> hits;
  for (const std::string claim : {"conj-hj", "conj-ln"}) {
    SweepOptions opt;
    opt.claim = claim;
    opt.max_n = 8;
    const SweepRun small = sweep_file(corpus, opt);

    std::stringstream random;
    RandomTwoConnected graphs(kSeed + 10, 9, 16);
    for (int i = 0; i < 100000; ++i) random << to_graph6(graphs.next()) << '\n';
    opt.max_n = kMaxVertices;
    const SweepRun large = run_sweep(random, opt);

    o.detail += claim + " exhaustive " + small.summary.str() + "; random " + large.summary.str() + "; ";
    for (const auto* run : {&small, &large}) {
      hits.insert(hits.end(), run->counterexamples.begin(), run->counterexamples.end());
      if (run->summary.errors != 0 || run->summary.refused != 0) o.pass = false;
    }
    if (small.summary.graphs != 7661 || large.summary.graphs != 100000) o.pass = false;
  }
  for (const auto& h : hits) std::cout << "  certificate\t" << h << '\n';
  o.detail += std::to_string(hits.size()) + " counterexample certificates";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  auto wanted = [&](int id) { return selected.empty() || selected.count(id) != 0; };

  std::optional<fs::path> corpus8;
  std::optional<fs::path> corpus9;
  std::string corpus_error;
  auto corpus = [&](int max_n) -> const fs::path& {
    auto& slot = max_n == 8 ? corpus8 : corpus9;
    if (!slot) {
      const auto start = Clock::now();
      slot = biconnected_corpus(max_n, corpus_error);
      std::cout << "corpus " << slot->filename().string() << " written in " << seconds_since(start) << "s"
                << (corpus_error.empty() ? "" : " with errors:" + corpus_error) << std::endl;
      if (!corpus_error.empty()) throw Error(ErrorCode::Invariant, "corpus sizes wrong:" + corpus_error);
    }
    return *slot;
  };

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "sharpness family", sharpness},
      {2, "exhaustive (x,y)-path theorem n<=8", [&] { return exhaustive_main(corpus(8)); }},
      {3, "exhaustive Woodall n<=9", [&] { return exhaustive_woodall(corpus(9)); }},
      {4, "G1/G2 constructions", constructions},
      {5, "Kelmans operation n<=6", kelmans_suite},
      {6, "fans and the fan-length lemma", fan_suite},
      {7, "solver against brute force", solver_oracle},
      {8, "block constructions", block_constructions},
      {9, "Bermond regime and feasible count", bermond_regime},
      {10, "conjecture sweeps", [&] { return conjectures(corpus(8)); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!wanted(c.id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  [" << seconds_since(start)
              << "s]  " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
