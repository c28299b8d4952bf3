#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "longcycle.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240229;

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kIo = 3, kFailure = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(lc_status s) {
  switch (s) {
    case LC_INVALID_ARGUMENT:
    case LC_PARSE:
    case LC_CAPACITY:
    case LC_PRECONDITION:
      return kUsage;
    case LC_IO: return kIo;
    default: return kFailure;
  }
}

void check(lc_status s) {
  if (s != LC_OK) throw Failure{exit_for(s), std::string(lc_status_name(s)) + ": " + lc_last_error()};
}

struct Deleter {
  void operator()(lc_graph* p) const { lc_graph_free(p); }
  void operator()(lc_vertices* p) const { lc_vertices_free(p); }
  void operator()(lc_fan* p) const { lc_fan_free(p); }
  void operator()(lc_family* p) const { lc_family_free(p); }
  void operator()(lc_report* p) const { lc_report_free(p); }
  void operator()(lc_random* p) const { lc_random_free(p); }
  void operator()(char* p) const { lc_string_free(p); }
};

template <class T>
using Owned = std::unique_ptr<T, Deleter>;

std::string take(char* s) {
  Owned<char> owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string graph6_of(const lc_graph* g) {
  char* s = nullptr;
  check(lc_graph_to_graph6(g, &s));
  return take(s);
}

std::vector<int> as_vector(const lc_vertices* p) {
  if (p == nullptr) return {};
  const int* d = lc_vertices_data(p);
  return std::vector<int>(d, d + lc_vertices_size(p));
}

std::string join(const std::vector<int>& vs, char sep = '-') {
  if (vs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

// "0-1-2" or "0,1,2"
std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Failure{kUsage, std::string("bad vertex list for ") + what + ": '" + text + "'"};
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cur.size() || v < 0)
      throw Failure{kUsage, std::string("bad vertex list for ") + what + ": '" + text + "'"};
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == '-' || c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

// --- input and output

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") {
      in_ = &std::cin;
    } else {
      file_.open(path);
      if (!file_) throw Failure{kIo, "cannot open '" + path + "'"};
      in_ = &file_;
    }
  }
  std::istream& stream() { return *in_; }

  // Next graph6 line, skipping blanks and comments.
  std::optional<std::string> next_graph() {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return line;
    }
    if (in_->bad()) throw Failure{kIo, "read error"};
    return std::nullopt;
  }
  long long line() const { return line_; }

 private:
  std::ifstream file_;
  std::istream* in_ = nullptr;
  long long line_ = 0;
};

class Output {
 public:
  Output(const std::string& path, const std::string& default_name) {
    const char* dir = std::getenv("LONGCYCLE_OUTPUT_DIR");
    std::filesystem::path target;
    if (!path.empty() && path != "-") {
      target = path;
      if (dir != nullptr && *dir != '\0' && target.is_relative()) target = std::filesystem::path(dir) / target;
    } else if (path.empty() && dir != nullptr && *dir != '\0') {
      target = std::filesystem::path(dir) / default_name;
    }
    if (target.empty()) {
      out_ = &std::cout;
    } else {
      file_.open(target);
      if (!file_) throw Failure{kIo, "cannot write '" + target.string() + "'"};
      out_ = &file_;
    }
  }
  std::ostream& operator*() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw Failure{kIo, "write error"};
  }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

Owned<lc_graph> parse_graph(const std::string& line, const Input& in) {
  lc_graph* g = nullptr;
  const lc_status s = lc_graph_parse(line.c_str(), &g);
  if (s != LC_OK) throw Failure{kUsage, "line " + std::to_string(in.line()) + ": " + lc_last_error()};
  return Owned<lc_graph>(g);
}

struct Common {
  std::string format = "tsv";
  std::string output;
  bool json() const { return format == "json"; }
  std::string ext() const { return json() ? ".jsonl" : ".tsv"; }
};

using json = nlohmann::ordered_json;

// --- gen

struct GenOptions {
  std::string what;
  int k = 5;
  int t = 1;
  std::string alpha = "1/3";
  int min_n = 1;
  int max_n = 8;
  std::string cls = "biconnected";
  long long count = 10;
  std::uint64_t seed = kDefaultSeed;
};

int run_gen(const GenOptions& o, const Common& c) {
  Output out(c.output, "gen" + (c.json() ? c.ext() : std::string(".g6")));
  if (o.what == "corpus") {
    if (o.min_n < 0 || o.max_n < o.min_n) throw Failure{kUsage, "need 0 <= --min-n <= --max-n"};
    struct Ctx {
      std::ostream* os;
      bool json;
    } ctx{&*out, c.json()};
    for (int n = o.min_n; n <= o.max_n; ++n) {
      check(lc_enumerate(
          n, o.cls.c_str(),
          [](void* p, const lc_graph* g) {
            auto* x = static_cast<Ctx*>(p);
            if (x->json) *x->os << json{{"graph6", graph6_of(g)}, {"n", lc_graph_order(g)}}.dump() << '\n';
            else *x->os << graph6_of(g) << '\n';
            return 0;
          },
          &ctx));
    }
  } else if (o.what == "random") {
    if (o.min_n < 3 || o.max_n < o.min_n) throw Failure{kUsage, "need 3 <= --min-n <= --max-n"};
    lc_random* r = nullptr;
    check(lc_random_new(o.seed, o.min_n, o.max_n, &r));
    Owned<lc_random> gen(r);
    for (long long i = 0; i < o.count; ++i) {
      lc_graph* g = nullptr;
      check(lc_random_next(gen.get(), &g));
      Owned<lc_graph> owned(g);
      if (c.json()) *out << json{{"graph6", graph6_of(g)}, {"n", lc_graph_order(g)}}.dump() << '\n';
      else *out << graph6_of(g) << '\n';
    }
  } else {
    lc_family* f = nullptr;
    check(lc_family_generate(o.what.c_str(), o.k, o.t, o.alpha.c_str(), &f));
    Owned<lc_family> fam(f);
    char* d = nullptr;
    check(lc_family_describe(f, &d));
    const std::string describe = take(d);
    const lc_graph* g = lc_family_graph(f);
    int high = -1, xy = -1, circ = -1;
    lc_family_claims(f, &high, &xy, &circ);
    if (c.json()) {
      json j{{"family", o.what}, {"describe", describe}, {"graph6", graph6_of(g)}, {"n", lc_graph_order(g)}};
      if (lc_family_x(f) >= 0) {
        j["x"] = lc_family_x(f);
        j["y"] = lc_family_y(f);
      }
      j["claims"] = json{{"high_degree", high}};
      if (xy >= 0) j["claims"]["longest_xy"] = xy;
      if (circ >= 0) j["claims"]["circumference"] = circ;
      *out << j.dump() << '\n';
    } else {
      *out << "# " << describe << " high_degree=" << high;
      if (xy >= 0) *out << " longest_xy=" << xy;
      if (circ >= 0) *out << " circumference=" << circ;
      *out << '\n' << graph6_of(g) << '\n';
    }
  }
  out.finish();
  return kOk;
}

// --- solve

struct SolveOptions {
  std::string query;
  std::string input = "-";
  int x = -1;
  int y = -1;
};

int run_solve(const SolveOptions& o, const Common& c) {
  if (o.query == "xy-path" && (o.x < 0 || o.y < 0)) throw Failure{kUsage, "xy-path needs --x and --y"};
  Input in(o.input);
  Output out(c.output, "solve" + c.ext());
  while (auto line = in.next_graph()) {
    Owned<lc_graph> g = parse_graph(*line, in);
    int length = -1;
    std::vector<int> witness;
    if (o.query == "circumference") {
      lc_vertices* w = nullptr;
      check(lc_circumference(g.get(), &length, &w));
      Owned<lc_vertices> owned(w);
      witness = as_vector(w);
    } else if (o.query == "longest-path") {
      lc_vertices* p = nullptr;
      check(lc_longest_path(g.get(), &p));
      Owned<lc_vertices> owned(p);
      witness = as_vector(p);
      length = static_cast<int>(witness.size()) - 1;
    } else {
      lc_vertices* p = nullptr;
      const lc_status s = lc_longest_xy_path(g.get(), o.x, o.y, &p);
      if (s != LC_NO_PATH) check(s);
      Owned<lc_vertices> owned(p);
      witness = as_vector(p);
      length = static_cast<int>(witness.size()) - 1;
    }
    if (c.json()) {
      json j{{"graph6", *line}, {"query", o.query}};
      if (o.query == "xy-path") {
        j["x"] = o.x;
        j["y"] = o.y;
      }
      j["length"] = length;
      j["witness"] = witness;
      *out << j.dump() << '\n';
    } else {
      *out << length << '\t' << join(witness) << '\n';
    }
  }
  out.finish();
  return kOk;
}

// --- lift

struct LiftOptions {
  std::string input = "-";
  int u = -1, v = -1, x = -1, y = -1;
  std::string path;
};

int run_lift(const LiftOptions& o, const Common& c) {
  const std::vector<int> path = parse_list(o.path, "--path");
  Input in(o.input);
  Output out(c.output, "lift" + c.ext());
  while (auto line = in.next_graph()) {
    Owned<lc_graph> g = parse_graph(*line, in);
    lc_graph* moved = nullptr;
    check(lc_kelmans(g.get(), o.u, o.v, &moved));
    Owned<lc_graph> result(moved);
    lc_vertices* p = nullptr;
    check(lc_kelmans_lift(g.get(), o.u, o.v, path.data(), path.size(), o.x, o.y, &p));
    Owned<lc_vertices> lifted(p);
    const std::vector<int> l = as_vector(p);
    if (c.json()) {
      *out << json{{"graph6", *line},        {"result", graph6_of(moved)}, {"u", o.u},
                   {"v", o.v},               {"path", path},               {"lifted", l},
                   {"length", path.size() - 1}, {"lifted_length", l.size() - 1}}
                  .dump()
           << '\n';
    } else {
      *out << graph6_of(moved) << '\t' << join(path) << '\t' << join(l) << '\t' << path.size() - 1 << '\t'
           << l.size() - 1 << '\n';
    }
  }
  out.finish();
  return kOk;
}

// --- fan

struct FanOptions {
  std::string input = "-";
  int k = 2;
  std::string cycle;
  std::string h;
};

int run_fan(const FanOptions& o, const Common& c) {
  if (!o.h.empty() && o.cycle.empty()) throw Failure{kUsage, "--component needs --cycle"};
  Input in(o.input);
  Output out(c.output, "fan" + c.ext());
  while (auto line = in.next_graph()) {
    Owned<lc_graph> g = parse_graph(*line, in);
    std::vector<int> cycle;
    if (!o.cycle.empty()) {
      cycle = parse_list(o.cycle, "--cycle");
    } else {
      int length = 0;
      lc_vertices* w = nullptr;
      check(lc_circumference(g.get(), &length, &w));
      Owned<lc_vertices> owned(w);
      if (!w) throw Failure{kUsage, "line " + std::to_string(in.line()) + ": graph has no cycle"};
      cycle = as_vector(w);
    }
    std::vector<std::vector<int>> parts;
    if (!o.h.empty()) {
      parts.push_back(parse_list(o.h, "--component"));
    } else {
      std::vector<int> labels(static_cast<std::size_t>(lc_graph_order(g.get())));
      int count = 0;
      check(lc_graph_component_labels(g.get(), cycle.data(), cycle.size(), labels.data(), &count));
      parts.assign(static_cast<std::size_t>(count), {});
      for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] >= 0) parts[static_cast<std::size_t>(labels[v])].push_back(static_cast<int>(v));
    }
    for (const std::vector<int>& h : parts) {
      lc_fan* f = nullptr;
      const lc_status s = lc_fan_extract(g.get(), cycle.data(), cycle.size(), h.data(), h.size(), o.k, &f);
      Owned<lc_fan> fan(f);
      std::vector<std::vector<int>> paths;
      if (s == LC_OK) {
        for (std::size_t i = 0; i < lc_fan_path_count(f); ++i) {
          std::size_t size = 0;
          const int* data = lc_fan_path(f, i, &size);
          paths.emplace_back(data, data + size);
        }
      } else if (s != LC_PRECONDITION) {
        check(s);
      }
      const std::string error = s == LC_OK ? "" : lc_last_error();
      if (c.json()) {
        json j{{"graph6", *line}, {"cycle", cycle}, {"h", h}, {"k", o.k}};
        if (s == LC_OK) {
          j["origin"] = lc_fan_origin(f);
          j["edges"] = lc_fan_edge_count(f);
          j["paths"] = paths;
        } else {
          j["error"] = error;
        }
        *out << j.dump() << '\n';
      } else {
        *out << join(h, ',') << '\t';
        if (s == LC_OK) {
          std::string ps;
          for (const auto& p : paths) ps += (ps.empty() ? "" : ",") + join(p);
          *out << lc_fan_origin(f) << '\t' << lc_fan_edge_count(f) << '\t' << ps << '\n';
        } else {
          *out << "-\t-\t" << error << '\n';
        }
      }
    }
  }
  out.finish();
  return kOk;
}

// --- verify and sweep

struct ClaimOptions {
  std::string claim;
  std::optional<int> k, x, y, s, m, c;
  std::optional<std::string> alpha;
  std::string labeling;
  std::string mode = "given";
  std::string cycle;
  std::string h;
  int k_min = 1;
  std::string alphas = "1/3,1/2";
  std::string s_values = "1,2";
  int workers = 1;
  int max_n = 64;
  bool all = false;
  std::string input = "-";
};

struct Emitter {
  Emitter(std::ostream* o, bool j) : os(o), json(j) {}

  std::ostream* os;
  bool json;
  bool counterexample = false;
  std::string error;

  void emit(const lc_report* r) {
    char* s = nullptr;
    const lc_status st = json ? lc_report_json(r, &s) : lc_report_tsv(r, &s);
    if (st != LC_OK) {
      error = lc_last_error();
      return;
    }
    *os << take(s) << '\n';
  }
};

void on_report(void* ctx, const lc_report* r) {
  auto* e = static_cast<Emitter*>(ctx);
  if (lc_report_verdict(r) == LC_COUNTEREXAMPLE) e->counterexample = true;
  e->emit(r);
}

lc_sweep_options sweep_options(const ClaimOptions& o) {
  lc_sweep_options opt;
  lc_sweep_options_init(&opt);
  opt.claim = o.claim.c_str();
  opt.k_min = o.k_min;
  opt.alphas = o.alphas.c_str();
  opt.s_values = o.s_values.c_str();
  opt.bermond_mode = o.mode.c_str();
  opt.keep_all = o.all ? 1 : 0;
  opt.workers = o.workers;
  opt.max_n = o.max_n;
  return opt;
}

int run_verify(const ClaimOptions& o, const Common& c) {
  const bool single = o.k || o.x || o.y || o.s || o.m || o.c || o.alpha || !o.cycle.empty() || !o.h.empty();
  const std::vector<int> labeling = o.labeling.empty() ? std::vector<int>{} : parse_list(o.labeling, "--labeling");
  const std::vector<int> cycle = o.cycle.empty() ? std::vector<int>{} : parse_list(o.cycle, "--cycle");
  const std::vector<int> h = o.h.empty() ? std::vector<int>{} : parse_list(o.h, "--component");

  Input in(o.input);
  Output out(c.output, "verify" + c.ext());
  Emitter emitter(&*out, c.json());
  while (auto line = in.next_graph()) {
    Owned<lc_graph> g = parse_graph(*line, in);
    if (single) {
      lc_params p;
      lc_params_init(&p);
      if (o.k) p.k = *o.k;
      if (o.x) p.x = *o.x;
      if (o.y) p.y = *o.y;
      if (o.s) p.s = *o.s;
      if (o.m) p.m = *o.m;
      if (o.c) p.c = *o.c;
      if (o.alpha) p.alpha = o.alpha->c_str();
      if (!labeling.empty()) {
        p.labeling = labeling.data();
        p.labeling_size = labeling.size();
      }
      p.bermond_mode = o.mode.c_str();
      if (!cycle.empty()) {
        p.cycle = cycle.data();
        p.cycle_size = cycle.size();
      }
      if (!h.empty()) {
        p.h = h.data();
        p.h_size = h.size();
      }
      lc_report* r = nullptr;
      check(lc_check(g.get(), o.claim.c_str(), &p, &r));
      Owned<lc_report> report(r);
      on_report(&emitter, r);
    } else {
      lc_sweep_options opt = sweep_options(o);
      opt.keep_all = 1;
      check(lc_check_grid(g.get(), &opt, on_report, &emitter));
    }
    if (!emitter.error.empty()) throw Failure{kFailure, emitter.error};
  }
  out.finish();
  return emitter.counterexample ? kCounterexample : kOk;
}

long long read_stream(void* ctx, char* buf, std::size_t cap) {
  auto* in = static_cast<std::istream*>(ctx);
  in->read(buf, static_cast<std::streamsize>(cap));
  if (in->bad()) return -1;
  return static_cast<long long>(in->gcount());
}

void on_sweep_error(void*, long long line, const char* message) {
  std::cerr << "line " << line << ": " << message << '\n';
}

int run_sweep(const ClaimOptions& o, const Common& c) {
  if (o.workers < 1) throw Failure{kUsage, "--workers must be at least 1"};
  Input in(o.input);
  Output out(c.output, "sweep-" + o.claim + c.ext());
  Emitter emitter(&*out, c.json());
  const lc_sweep_options opt = sweep_options(o);
  lc_sweep_summary summary{};
  check(lc_sweep(&opt, read_stream, &in.stream(), on_report, on_sweep_error, &emitter, &summary));
  if (!emitter.error.empty()) throw Failure{kFailure, emitter.error};
  out.finish();
  char* s = nullptr;
  check(lc_sweep_summary_format(&summary, &s));
  std::cerr << "summary " << o.claim << ' ' << take(s) << '\n';
  return summary.counterexamples > 0 ? kCounterexample : kOk;
}

// --- bench

struct BenchOptions {
  long long count = 20;
  int min_n = 10;
  int max_n = 16;
  std::uint64_t seed = kDefaultSeed;
};

int run_bench(const BenchOptions& o, const Common& c) {
  if (o.min_n < 3 || o.max_n < o.min_n) throw Failure{kUsage, "need 3 <= --min-n <= --max-n"};
  Output out(c.output, "bench" + c.ext());
  lc_random* r = nullptr;
  check(lc_random_new(o.seed, o.min_n, o.max_n, &r));
  Owned<lc_random> gen(r);
  using clock = std::chrono::steady_clock;
  double circ_ms = 0;
  double xy_ms = 0;
  for (long long i = 0; i < o.count; ++i) {
    lc_graph* raw = nullptr;
    check(lc_random_next(gen.get(), &raw));
    Owned<lc_graph> g(raw);
    const int n = lc_graph_order(raw);

    auto t0 = clock::now();
    int circumference = 0;
    check(lc_circumference(raw, &circumference, nullptr));
    auto t1 = clock::now();
    int best_xy = -1;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        lc_vertices* p = nullptr;
        check(lc_longest_xy_path(raw, x, y, &p));
        Owned<lc_vertices> owned(p);
        best_xy = std::max(best_xy, static_cast<int>(lc_vertices_size(p)) - 1);
      }
    }
    auto t2 = clock::now();
    circ_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
    xy_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
    if (c.json()) {
      *out << json{{"graph6", graph6_of(raw)}, {"n", n}, {"m", lc_graph_edge_count(raw)},
                   {"circumference", circumference}, {"max_xy", best_xy}}
                  .dump()
           << '\n';
    } else {
      *out << graph6_of(raw) << '\t' << n << '\t' << lc_graph_edge_count(raw) << '\t' << circumference << '\t'
           << best_xy << '\n';
    }
  }
  out.finish();
  std::ostringstream summary;
  summary.setf(std::ios::fixed);
  summary.precision(3);
  summary << "bench graphs=" << o.count << " circumference_ms=" << circ_ms << " all_pairs_xy_ms=" << xy_ms;
  std::cerr << summary.str() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact longest paths and cycles, graph transforms and claim verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lc_version()));
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("-o,--output", common.output, "Output file (relative to $LONGCYCLE_OUTPUT_DIR when set)");
  };

  std::vector<std::string> claims;
  for (std::size_t i = 0; i < lc_claim_count(); ++i) claims.emplace_back(lc_claim_name(i));

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate extremal families, corpora or random graphs");
  gen_cmd->add_option("what", gen.what, "sharpness | hj-g1 | hj-g2 | ln | corpus | random")
      ->required()
      ->check(CLI::IsMember({"sharpness", "hj-g1", "hj-g2", "ln", "corpus", "random"}));
  gen_cmd->add_option("--k", gen.k, "Degree parameter k");
  gen_cmd->add_option("--t", gen.t, "Copies (size of the independent side for hj-g1)");
  gen_cmd->add_option("--alpha", gen.alpha, "alpha as p/q (ln)");
  gen_cmd->add_option("--min-n", gen.min_n, "Smallest order (corpus, random)");
  gen_cmd->add_option("--max-n", gen.max_n, "Largest order (corpus, random)");
  gen_cmd->add_option("--class", gen.cls, "Corpus class")->check(CLI::IsMember({"all", "connected", "biconnected"}));
  gen_cmd->add_option("--count", gen.count, "Random graphs to draw")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  add_common(gen_cmd);

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Longest path, (x,y)-path or cycle of each input graph");
  solve_cmd->add_option("query", solve.query, "circumference | longest-path | xy-path")
      ->required()
      ->check(CLI::IsMember({"circumference", "longest-path", "xy-path"}));
  solve_cmd->add_option("input", solve.input, "graph6 file, - for stdin");
  solve_cmd->add_option("--x", solve.x, "Start vertex (xy-path)");
  solve_cmd->add_option("--y", solve.y, "End vertex (xy-path)");
  add_common(solve_cmd);

  LiftOptions lift;
  CLI::App* lift_cmd = app.add_subcommand("lift", "Apply G[u->v] and lift an (x,y)-path of the result back to G");
  lift_cmd->add_option("input", lift.input, "graph6 file, - for stdin");
  lift_cmd->add_option("--u", lift.u, "Vertex whose edges move")->required();
  lift_cmd->add_option("--v", lift.v, "Vertex receiving them")->required();
  lift_cmd->add_option("--x", lift.x, "Path start")->required();
  lift_cmd->add_option("--y", lift.y, "Path end")->required();
  lift_cmd->add_option("--path", lift.path, "Path in G[u->v], e.g. 0-3-2")->required();
  add_common(lift_cmd);

  FanOptions fan;
  CLI::App* fan_cmd = app.add_subcommand("fan", "Extract fans from components off a cycle");
  fan_cmd->add_option("input", fan.input, "graph6 file, - for stdin");
  fan_cmd->add_option("--k", fan.k, "Required fan edges");
  fan_cmd->add_option("--cycle", fan.cycle, "Cycle, e.g. 0-1-2-3 (default: a longest cycle)");
  fan_cmd->add_option("--component", fan.h, "Component of G - C (default: every component)");
  add_common(fan_cmd);

  ClaimOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check one claim on each input graph");
  ClaimOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Check one claim over a corpus, reporting counterexamples");
  for (auto [cmd, o] : {std::pair{verify_cmd, &verify}, std::pair{sweep_cmd, &sweep}}) {
    cmd->add_option("--claim", o->claim, "Claim id")->required()->check(CLI::IsMember(claims));
    cmd->add_option("--k-min", o->k_min, "Smallest k of the grid");
    cmd->add_option("--alphas", o->alphas, "alpha grid, comma-separated");
    cmd->add_option("--s-values", o->s_values, "s grid, comma-separated");
    cmd->add_option("--labeling-mode", o->mode, "Bermond labeling")->check(CLI::IsMember({"given", "exists", "forall"}));
    add_common(cmd);
  }
  verify_cmd->add_option("input", verify.input, "graph6 file, - for stdin");
  verify_cmd->add_option("--k", verify.k, "k (any single parameter selects one instance instead of the grid)");
  verify_cmd->add_option("--x", verify.x, "x");
  verify_cmd->add_option("--y", verify.y, "y");
  verify_cmd->add_option("--s", verify.s, "s");
  verify_cmd->add_option("--m", verify.m, "m");
  verify_cmd->add_option("--c", verify.c, "c");
  verify_cmd->add_option("--alpha", verify.alpha, "alpha as p/q");
  verify_cmd->add_option("--labeling", verify.labeling, "Bermond labeling, e.g. 2,0,1,3");
  verify_cmd->add_option("--cycle", verify.cycle, "Cycle for the fan claim");
  verify_cmd->add_option("--component", verify.h, "Component for the fan claim");
  sweep_cmd->add_option("--corpus", sweep.input, "graph6 file, - for stdin");
  sweep_cmd->add_option("--max-n", sweep.max_n, "Skip graphs with more vertices");
  sweep_cmd->add_option("--workers", sweep.workers, "Worker threads");
  sweep_cmd->add_flag("--all", sweep.all, "Report every instance, not only counterexamples");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the solver on seeded random 2-connected graphs");
  bench_cmd->add_option("--count", bench.count, "Graphs")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--min-n", bench.min_n, "Smallest order");
  bench_cmd->add_option("--max-n", bench.max_n, "Largest order");
  bench_cmd->add_option("--seed", bench.seed, "Random seed");
  add_common(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, common);
    if (solve_cmd->parsed()) return run_solve(solve, common);
    if (lift_cmd->parsed()) return run_lift(lift, common);
    if (fan_cmd->parsed()) return run_fan(fan, common);
    if (verify_cmd->parsed()) return run_verify(verify, common);
    if (sweep_cmd->parsed()) return run_sweep(sweep, common);
    return run_bench(bench, common);
  } catch (const Failure& f) {
    std::cerr << "longcycle: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "longcycle: " << e.what() << '\n';
    return kFailure;
  }
}
