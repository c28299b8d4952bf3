#pragma once

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/families.hpp"
#include "longcycle/fan.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/solver.hpp"

namespace longcycle {

enum class Verdict { Pass, Vacuous, Counterexample, Refused };

// "pass", "vacuous", "COUNTEREXAMPLE", "refused"
const char* to_string(Verdict v);

struct ClaimParams {
  std::optional<int> k{};
  std::optional<int> x{};
  std::optional<int> y{};
  std::optional<int> s{};
  std::optional<int> m{};
  std::optional<int> c{};
  std::optional<Rational> alpha{};
};

struct VerificationReport {
  std::string claim;
  std::string graph6;
  ClaimParams params;
  // Extra instance facts shown next to the parameters, e.g. regime=1.
  std::vector<std::pair<std::string, std::string>> notes;
  bool hypothesis_holds = false;
  std::optional<bool> conclusion_holds;  // evaluated only under the hypothesis
  // One vertex list for a path or cycle, one per path for a fan; empty
  // when witnesses are switched off or the verdict has none.
  std::vector<std::vector<Vertex>> witness;
  Verdict verdict = Verdict::Vacuous;
};

// claim, graph6, params, verdict, witness (vertices joined by '-', or '-')
std::string to_tsv(const VerificationReport& r);
// The same five fields as a JSON object on one line.
std::string to_json(const VerificationReport& r);

// Per-graph cache shared by every check on one graph. Small graphs get
// exact longest-path tables; larger ones remember the best path/cycle found
// and the smallest target proven impossible, so a sweep over k mostly
// answers from the cache.
class GraphContext {
 public:
  explicit GraphContext(Graph g);

  // Graphs up to this order are handled by exact tables.
  static constexpr int kExactOrder = 12;

  // With witnesses off, checks decide verdicts without building paths.
  void set_witnesses(bool on) { witnesses_ = on; }
  bool witnesses() const { return witnesses_; }

  const Graph& graph() const { return g_; }
  const std::string& graph6() const;
  bool two_connected() const;
  int vertex_connectivity() const;
  // Vertices of degree >= k outside `exclude`.
  int count_high_degree(int k, VertexSet exclude = {}) const;

  // An (x,y)-path of length >= k when one exists.
  std::optional<Path> xy_path_at_least(Vertex x, Vertex y, int k);
  std::optional<Cycle> cycle_at_least(int k);
  const CircumferenceResult& circumference();
  const Path& longest_path();
  // Most edges of a fan off the solver's longest cycle, over all components
  // of G minus that cycle; nullopt when G is Hamiltonian or acyclic.
  std::optional<int> best_fan_off_longest_cycle();

 private:
  struct Bounds {
    int lower = -1;  // witness length
    int upper = 1 << 20;
    std::vector<Vertex> witness;
  };

  int xy_length(Vertex x, Vertex y);

  Graph g_;
  bool witnesses_ = true;
  mutable std::optional<std::string> graph6_;
  mutable std::optional<bool> two_connected_;
  mutable std::optional<int> connectivity_;
  std::map<std::pair<Vertex, Vertex>, Bounds> xy_;
  Bounds cycle_;
  std::optional<CircumferenceResult> circumference_;
  std::optional<Path> longest_path_;
  std::map<Vertex, std::vector<int>> lengths_;
  std::map<std::pair<Vertex, Vertex>, Path> longest_xy_;
  std::optional<std::optional<int>> best_fan_;
};

// Labeling: order[i] is the vertex called x_{i+1}.
struct BermondLabeling {
  std::vector<Vertex> order;
};

// Ascending degree, ties by index.
BermondLabeling ascending_degree_labeling(const Graph& g);

enum class BermondMode { Given, Exists, ForAll };

// --- Checkers. Each returns a report whose verdict is COUNTEREXAMPLE exactly
// when the hypothesis holds and the conclusion fails.

VerificationReport check_main(GraphContext& ctx, Vertex x, Vertex y, int k);
VerificationReport check_woodall(GraphContext& ctx, int k);
VerificationReport check_fan_theorem(GraphContext& ctx, const Cycle& c, VertexSet h, int k);
// Mode Given uses `labeling`; Exists and ForAll range over all labelings
// (refused beyond 8 vertices).
VerificationReport check_bermond(GraphContext& ctx, const BermondLabeling& labeling, int c,
                                 BermondMode mode = BermondMode::Given);
bool bermond_condition(const Graph& g, const BermondLabeling& labeling, int c);
// Non-feasible vertices (degree < c/2) number at most c - 1 whenever the
// Bermond condition holds. The boolean form throws Precondition ("lemma
// inapplicable") when it does not.
bool check_feasible_count_lemma(const Graph& g, const BermondLabeling& labeling, int c);
VerificationReport check_feasible_count(GraphContext& ctx, const BermondLabeling& labeling, int c);
VerificationReport check_eg_classic(GraphContext& ctx, Vertex x, Vertex y, int k);
VerificationReport check_bondy_jackson(GraphContext& ctx, Vertex x, Vertex y, int k);
VerificationReport check_blw(GraphContext& ctx, int k);
VerificationReport check_independent_path(GraphContext& ctx, Vertex x, Vertex y, int k, int s);
VerificationReport check_dirac(GraphContext& ctx, int k);
VerificationReport check_one_exception(GraphContext& ctx, int k);
VerificationReport check_sigma(GraphContext& ctx, int k, int s);
VerificationReport check_fournier_fraisse(GraphContext& ctx, int s, int m);
VerificationReport check_conj_hj(GraphContext& ctx, int k);
// At least (n+k)/2 vertices of degree >= k force a cycle of length >= 2k;
// false in general (the G1 and G2 families violate it).
VerificationReport check_conj_li(GraphContext& ctx, int k);
VerificationReport check_conj_ln(GraphContext& ctx, Vertex x, Vertex y, int k, Rational alpha);
VerificationReport check_lemma22(GraphContext& ctx, int k);

// Result of searching for an independent set of a given size.
struct IndependentSearch {
  bool refused = false;
  bool found = false;
  std::vector<Vertex> set;  // the set found, or the minimum-sum set
  long long nodes = 0;
};

// Some independent set of `size` vertices inside `within`.
IndependentSearch find_independent_set(const Graph& g, VertexSet within, int size);
// Independent set of `size` vertices minimising the degree sum.
IndependentSearch min_degree_sum_independent_set(const Graph& g, int size);

inline constexpr int kIndependentSizeLimit = 12;
inline constexpr long long kIndependentNodeLimit = 10'000'000;

// --- Sweeps

const std::vector<std::string>& claim_ids();
bool is_claim(const std::string& id);

struct SweepOptions {
  std::string claim;
  int k_min = 1;                    // k ranges over [k_min, n]
  std::vector<Rational> alphas{Rational(1, 3), Rational(1, 2)};
  std::vector<int> s_values{1, 2};  // fournier-fraisse takes s + 1 (it needs s >= 2)
  BermondMode bermond_mode = BermondMode::Given;
  bool keep_all = false;            // report every instance, not only counterexamples
  int workers = 1;
  int max_n = kMaxVertices;         // larger graphs are skipped
};

// Every instance of the claim's parameter grid on one graph, in a fixed
// order. Throws InvalidArgument on an unknown claim.
std::vector<VerificationReport> check_graph(GraphContext& ctx, const SweepOptions& options);

struct SweepSummary {
  long long graphs = 0;
  long long instances = 0;
  long long pass = 0;
  long long vacuous = 0;
  long long counterexamples = 0;
  long long refused = 0;
  long long errors = 0;
  long long skipped = 0;  // over max_n

  std::string str() const;
};

using ReportSink = std::function<void(const VerificationReport&)>;
using ErrorSink = std::function<void(long long line, const std::string& message)>;

// Reads graph6 lines (blank lines and lines starting with '#' skipped),
// checks each with `workers` threads, and hands reports to `on_report` in
// input order. Bad lines go to `on_error` and the sweep continues.
SweepSummary sweep(std::istream& in, const SweepOptions& options, const ReportSink& on_report,
                   const ErrorSink& on_error);

}  // namespace longcycle
