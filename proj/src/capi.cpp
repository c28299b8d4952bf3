#include "longcycle.h"

#include <cstring>
#include <istream>
#include <new>
#include <streambuf>
#include <string>

#include "longcycle/connectivity.hpp"
#include "longcycle/corpus.hpp"
#include "longcycle/families.hpp"
#include "longcycle/fan.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/kelmans.hpp"
#include "longcycle/solver.hpp"
#include "longcycle/verifier.hpp"

using namespace longcycle;

struct lc_graph {
  Graph g;
};
struct lc_vertices {
  std::vector<int> v;
};
struct lc_fan {
  Fan f;
};
struct lc_family {
  LabeledFamily f;
  lc_graph graph;
};
struct lc_report {
  VerificationReport r;
};
struct lc_random {
  RandomTwoConnected gen;
};

namespace {

thread_local std::string last_error;

lc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return LC_INVALID_ARGUMENT;
    case ErrorCode::Parse: return LC_PARSE;
    case ErrorCode::Capacity: return LC_CAPACITY;
    case ErrorCode::NoPath: return LC_NO_PATH;
    case ErrorCode::Precondition: return LC_PRECONDITION;
    case ErrorCode::Invariant: return LC_INVARIANT;
    case ErrorCode::Refused: return LC_REFUSED;
  }
  return LC_INTERNAL;
}

lc_status fail(lc_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
lc_status guard(F&& body) {
  try {
    body();
    return LC_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LC_INTERNAL, e.what());
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lc_vertices* make_vertices(const std::vector<Vertex>& vs) { return new lc_vertices{{vs.begin(), vs.end()}}; }

std::vector<Vertex> vertex_list(const int* data, std::size_t size, const char* what) {
  if (size > 0) need(data, what);
  return size == 0 ? std::vector<Vertex>{} : std::vector<Vertex>(data, data + size);
}

VertexSet vertex_set(const Graph& g, const int* data, std::size_t size, const char* what) {
  VertexSet s;
  for (Vertex v : vertex_list(data, size, what)) {
    if (!g.contains(v)) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": vertex out of range");
    s.insert(v);
  }
  return s;
}

void require_vertex(const Graph& g, int v, const char* what) {
  if (v == LC_UNSET) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is required");
  if (!g.contains(v)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is out of range");
}

int require_int(int v, const char* what) {
  if (v == LC_UNSET) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is required");
  return v;
}

std::vector<std::string> split_commas(const char* text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = text; *p; ++p) {
    if (*p == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += *p;
    }
  }
  out.push_back(cur);
  return out;
}

BermondMode parse_mode(const char* text) {
  if (text == nullptr || std::strcmp(text, "given") == 0) return BermondMode::Given;
  if (std::strcmp(text, "exists") == 0) return BermondMode::Exists;
  if (std::strcmp(text, "forall") == 0) return BermondMode::ForAll;
  throw Error(ErrorCode::InvalidArgument, std::string("unknown labeling mode '") + text + "'");
}

SweepOptions to_options(const lc_sweep_options* o) {
  need(o, "options");
  need(o->claim, "claim");
  SweepOptions out;
  out.claim = o->claim;
  out.k_min = o->k_min;
  if (o->alphas != nullptr) {
    out.alphas.clear();
    for (const std::string& a : split_commas(o->alphas)) out.alphas.push_back(parse_rational(a));
  }
  if (o->s_values != nullptr) {
    out.s_values.clear();
    for (const std::string& s : split_commas(o->s_values)) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.empty() || value < 1)
        throw Error(ErrorCode::InvalidArgument, "bad s value '" + s + "'");
      out.s_values.push_back(value);
    }
  }
  out.bermond_mode = parse_mode(o->bermond_mode);
  out.keep_all = o->keep_all != 0;
  out.workers = o->workers;
  out.max_n = o->max_n;
  if (!is_claim(out.claim)) throw Error(ErrorCode::InvalidArgument, "unknown claim '" + out.claim + "'");
  return out;
}

class CallbackBuf : public std::streambuf {
 public:
  CallbackBuf(lc_read_fn read, void* ctx) : read_(read), ctx_(ctx) {}
  bool failed() const { return failed_; }

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    const long long got = read_(ctx_, buf_, sizeof buf_);
    if (got < 0) failed_ = true;
    if (got <= 0) return traits_type::eof();
    setg(buf_, buf_, buf_ + got);
    return traits_type::to_int_type(*gptr());
  }

 private:
  lc_read_fn read_;
  void* ctx_;
  bool failed_ = false;
  char buf_[1 << 16];
};

VerificationReport check_one(const Graph& g, const std::string& claim, const lc_params& p) {
  GraphContext ctx(g);
  auto k = [&] { return require_int(p.k, "k"); };
  auto s = [&] { return require_int(p.s, "s"); };
  auto xy = [&] {
    require_vertex(g, p.x, "x");
    require_vertex(g, p.y, "y");
  };
  auto alpha = [&] {
    if (p.alpha == nullptr) throw Error(ErrorCode::InvalidArgument, "alpha is required");
    return parse_rational(p.alpha);
  };
  auto labeling = [&] {
    if (p.labeling == nullptr) return ascending_degree_labeling(g);
    return BermondLabeling{vertex_list(p.labeling, p.labeling_size, "labeling")};
  };

  if (claim == "main") return xy(), check_main(ctx, p.x, p.y, k());
  if (claim == "eg-classic") return xy(), check_eg_classic(ctx, p.x, p.y, k());
  if (claim == "bondy-jackson") return xy(), check_bondy_jackson(ctx, p.x, p.y, k());
  if (claim == "independent-path") return xy(), check_independent_path(ctx, p.x, p.y, k(), s());
  if (claim == "conj-ln") return xy(), check_conj_ln(ctx, p.x, p.y, k(), alpha());
  if (claim == "woodall") return check_woodall(ctx, k());
  if (claim == "blw") return check_blw(ctx, k());
  if (claim == "dirac") return check_dirac(ctx, k());
  if (claim == "one-exception") return check_one_exception(ctx, k());
  if (claim == "sigma") return check_sigma(ctx, k(), s());
  if (claim == "conj-hj") return check_conj_hj(ctx, k());
  if (claim == "conj-li") return check_conj_li(ctx, k());
  if (claim == "lemma22") return check_lemma22(ctx, k());
  if (claim == "fournier-fraisse") return check_fournier_fraisse(ctx, s(), require_int(p.m, "m"));
  if (claim == "bermond")
    return check_bermond(ctx, labeling(), require_int(p.c, "c"), parse_mode(p.bermond_mode));
  if (claim == "feasible-count") return check_feasible_count(ctx, labeling(), require_int(p.c, "c"));
  if (claim == "fan") {
    Cycle c;
    if (p.cycle != nullptr) {
      c.vertices = vertex_list(p.cycle, p.cycle_size, "cycle");
    } else {
      const CircumferenceResult& longest = ctx.circumference();
      if (!longest.witness) throw Error(ErrorCode::InvalidArgument, "graph has no cycle");
      c = *longest.witness;
    }
    VertexSet h;
    if (p.h != nullptr) {
      h = vertex_set(g, p.h, p.h_size, "h");
    } else {
      require_vertex(g, p.x, "x (a vertex of H)");
      VertexSet on;
      for (Vertex v : c.vertices) on.insert(v);
      if (on.contains(p.x)) throw Error(ErrorCode::InvalidArgument, "x lies on the cycle");
      h = component_of(g, p.x, g.vertices() - on);
    }
    return check_fan_theorem(ctx, c, h, k());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown claim '" + claim + "'");
}

}  // namespace

extern "C" {

const char* lc_status_name(lc_status status) {
  switch (status) {
    case LC_OK: return "ok";
    case LC_INVALID_ARGUMENT: return "invalid argument";
    case LC_PARSE: return "parse error";
    case LC_CAPACITY: return "capacity exceeded";
    case LC_NO_PATH: return "no path";
    case LC_PRECONDITION: return "precondition failed";
    case LC_INVARIANT: return "invariant failed";
    case LC_REFUSED: return "refused";
    case LC_IO: return "i/o error";
    case LC_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lc_last_error(void) { return last_error.c_str(); }
const char* lc_version(void) { return "1.0.0"; }
void lc_string_free(char* s) { std::free(s); }

// --- graphs

lc_status lc_graph_parse(const char* graph6, lc_graph** out) {
  return guard([&] {
    need(graph6, "graph6");
    need(out, "out");
    *out = new lc_graph{parse_graph6(graph6)};
  });
}

lc_status lc_graph_from_edges(int n, const int* edges, size_t edge_count, lc_graph** out) {
  return guard([&] {
    need(out, "out");
    if (edge_count > 0) need(edges, "edges");
    GraphBuilder b(n);
    for (std::size_t i = 0; i < edge_count; ++i) b.add_edge(edges[2 * i], edges[2 * i + 1]);
    *out = new lc_graph{b.build()};
  });
}

lc_status lc_graph_clone(const lc_graph* g, lc_graph** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = new lc_graph{g->g};
  });
}

void lc_graph_free(lc_graph* g) { delete g; }
int lc_graph_order(const lc_graph* g) { return g ? g->g.order() : 0; }
int lc_graph_edge_count(const lc_graph* g) { return g ? g->g.edge_count() : 0; }

int lc_graph_degree(const lc_graph* g, int v) { return g && g->g.contains(v) ? g->g.degree(v) : -1; }

int lc_graph_has_edge(const lc_graph* g, int u, int v) {
  return g && g->g.contains(u) && g->g.contains(v) && g->g.has_edge(u, v) ? 1 : 0;
}

lc_status lc_graph_to_graph6(const lc_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_string(to_graph6(g->g));
  });
}

lc_status lc_graph_is_two_connected(const lc_graph* g, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = is_two_connected(g->g) ? 1 : 0;
  });
}

lc_status lc_graph_vertex_connectivity(const lc_graph* g, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = vertex_connectivity(g->g);
  });
}

lc_status lc_graph_count_high_degree(const lc_graph* g, int k, const int* exclude, size_t exclude_count, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = count_high_degree(g->g, k, vertex_set(g->g, exclude, exclude_count, "exclude"));
  });
}

lc_status lc_graph_component_labels(const lc_graph* g, const int* removed, size_t removed_count, int* labels,
                                    int* count) {
  return guard([&] {
    need(g, "graph");
    need(count, "count");
    if (g->g.order() > 0) need(labels, "labels");
    const VertexSet rest = g->g.vertices() - vertex_set(g->g, removed, removed_count, "removed");
    for (Vertex v = 0; v < g->g.order(); ++v) labels[v] = -1;
    int index = 0;
    for (VertexSet c : components(g->g, rest)) {
      for (Vertex v : c) labels[v] = index;
      ++index;
    }
    *count = index;
  });
}

// --- vertex lists

void lc_vertices_free(lc_vertices* p) { delete p; }
size_t lc_vertices_size(const lc_vertices* p) { return p ? p->v.size() : 0; }
const int* lc_vertices_data(const lc_vertices* p) { return p ? p->v.data() : nullptr; }

// --- solver

lc_status lc_longest_xy_path(const lc_graph* g, int x, int y, lc_vertices** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = make_vertices(longest_xy_path(g->g, x, y).vertices);
  });
}

lc_status lc_longest_path(const lc_graph* g, lc_vertices** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = make_vertices(longest_path(g->g).vertices);
  });
}

lc_status lc_circumference(const lc_graph* g, int* length, lc_vertices** witness) {
  return guard([&] {
    need(g, "graph");
    need(length, "length");
    const CircumferenceResult r = circumference(g->g);
    *length = r.length;
    if (witness != nullptr) *witness = r.witness ? make_vertices(r.witness->vertices) : nullptr;
  });
}

lc_status lc_xy_path_at_least(const lc_graph* g, int x, int y, int k, lc_vertices** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    const auto p = has_xy_path_at_least(g->g, x, y, k);
    *out = p ? make_vertices(p->vertices) : nullptr;
  });
}

lc_status lc_cycle_at_least(const lc_graph* g, int k, lc_vertices** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    const auto c = has_cycle_at_least(g->g, k);
    *out = c ? make_vertices(c->vertices) : nullptr;
  });
}

// --- Kelmans

lc_status lc_kelmans(const lc_graph* g, int u, int v, lc_graph** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = new lc_graph{kelmans(g->g, u, v).result};
  });
}

lc_status lc_kelmans_tau_increases(const lc_graph* g, int u, int v, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = check_tau_increase(kelmans(g->g, u, v)) ? 1 : 0;
  });
}

lc_status lc_kelmans_lift(const lc_graph* g, int u, int v, const int* path, size_t path_size, int x, int y,
                          lc_vertices** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    const KelmansRecord rec = kelmans(g->g, u, v);
    *out = make_vertices(lift_path(rec, Path{vertex_list(path, path_size, "path")}, x, y).vertices);
  });
}

// --- fans

lc_status lc_fan_extract(const lc_graph* g, const int* cycle, size_t cycle_size, const int* h, size_t h_size, int k,
                         lc_fan** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    const Cycle c{vertex_list(cycle, cycle_size, "cycle")};
    *out = new lc_fan{extract_fan(g->g, c, vertex_set(g->g, h, h_size, "h"), k)};
  });
}

lc_status lc_fan_max_edges(const lc_graph* g, const int* cycle, size_t cycle_size, const int* h, size_t h_size,
                           int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = max_fan_edges(g->g, vertex_set(g->g, cycle, cycle_size, "cycle"), vertex_set(g->g, h, h_size, "h"));
  });
}

void lc_fan_free(lc_fan* f) { delete f; }
int lc_fan_origin(const lc_fan* f) { return f ? f->f.origin : -1; }
int lc_fan_edge_count(const lc_fan* f) { return f ? f->f.edge_count() : 0; }
size_t lc_fan_path_count(const lc_fan* f) { return f ? f->f.paths.size() : 0; }

const int* lc_fan_path(const lc_fan* f, size_t i, size_t* size) {
  if (f == nullptr || i >= f->f.paths.size()) {
    if (size) *size = 0;
    return nullptr;
  }
  if (size) *size = f->f.paths[i].vertices.size();
  return f->f.paths[i].vertices.data();
}

// --- families

lc_status lc_family_generate(const char* name, int k, int t, const char* alpha, lc_family** out) {
  return guard([&] {
    need(name, "family name");
    need(out, "out");
    const std::string n = name;
    LabeledFamily f;
    if (n == "sharpness") f = gen_sharpness(k, t);
    else if (n == "hj-g1") f = gen_hj_g1(k, t);
    else if (n == "hj-g2") f = gen_hj_g2(k, t);
    else if (n == "ln") {
      need(alpha, "alpha");
      f = gen_ln_family(parse_rational(alpha), k, t);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown family '" + n + "'");
    }
    auto* fam = new lc_family{std::move(f), {}};
    fam->graph.g = fam->f.graph;
    *out = fam;
  });
}

void lc_family_free(lc_family* f) { delete f; }
const lc_graph* lc_family_graph(const lc_family* f) { return f ? &f->graph : nullptr; }
int lc_family_x(const lc_family* f) { return f && f->f.x ? *f->f.x : -1; }
int lc_family_y(const lc_family* f) { return f && f->f.y ? *f->f.y : -1; }

lc_status lc_family_describe(const lc_family* f, char** out) {
  return guard([&] {
    need(f, "family");
    need(out, "out");
    *out = copy_string(f->f.describe());
  });
}

void lc_family_claims(const lc_family* f, int* high_degree, int* longest_xy, int* circumference) {
  FamilyClaims c;
  if (f) c = claimed(f->f);
  if (high_degree) *high_degree = f ? c.high_degree : -1;
  if (longest_xy) *longest_xy = c.longest_xy.value_or(-1);
  if (circumference) *circumference = c.circumference.value_or(-1);
}

// --- corpora

lc_status lc_enumerate(int n, const char* cls, lc_graph_sink sink, void* ctx) {
  return guard([&] {
    need(cls, "class");
    need(reinterpret_cast<const void*>(sink), "sink");
    const std::string c = cls;
    GraphClass gc;
    if (c == "all") gc = GraphClass::All;
    else if (c == "connected") gc = GraphClass::Connected;
    else if (c == "biconnected") gc = GraphClass::Biconnected;
    else throw Error(ErrorCode::InvalidArgument, "unknown graph class '" + c + "'");
    GraphEnumerator e;
    for (const Graph& g : e.level(n, gc)) {
      const lc_graph view{g};
      if (sink(ctx, &view) != 0) break;
    }
  });
}

lc_status lc_random_new(uint64_t seed, int min_n, int max_n, lc_random** out) {
  return guard([&] {
    need(out, "out");
    *out = new lc_random{RandomTwoConnected(seed, min_n, max_n)};
  });
}

lc_status lc_random_next(lc_random* r, lc_graph** out) {
  return guard([&] {
    need(r, "generator");
    need(out, "out");
    *out = new lc_graph{r->gen.next()};
  });
}

void lc_random_free(lc_random* r) { delete r; }

// --- verifier

size_t lc_claim_count(void) { return claim_ids().size(); }
const char* lc_claim_name(size_t i) { return i < claim_ids().size() ? claim_ids()[i].c_str() : nullptr; }

void lc_params_init(lc_params* p) {
  if (p == nullptr) return;
  *p = lc_params{};
  p->k = p->x = p->y = p->s = p->m = p->c = LC_UNSET;
}

lc_status lc_check(const lc_graph* g, const char* claim, const lc_params* params, lc_report** out) {
  return guard([&] {
    need(g, "graph");
    need(claim, "claim");
    need(out, "out");
    lc_params defaults;
    lc_params_init(&defaults);
    *out = new lc_report{check_one(g->g, claim, params ? *params : defaults)};
  });
}

void lc_report_free(lc_report* r) { delete r; }

lc_verdict lc_report_verdict(const lc_report* r) {
  if (r == nullptr) return LC_REFUSED_VERDICT;
  switch (r->r.verdict) {
    case Verdict::Pass: return LC_PASS;
    case Verdict::Vacuous: return LC_VACUOUS;
    case Verdict::Counterexample: return LC_COUNTEREXAMPLE;
    case Verdict::Refused: return LC_REFUSED_VERDICT;
  }
  return LC_REFUSED_VERDICT;
}

const char* lc_verdict_name(lc_verdict v) {
  switch (v) {
    case LC_PASS: return to_string(Verdict::Pass);
    case LC_VACUOUS: return to_string(Verdict::Vacuous);
    case LC_COUNTEREXAMPLE: return to_string(Verdict::Counterexample);
    case LC_REFUSED_VERDICT: return to_string(Verdict::Refused);
  }
  return "?";
}

lc_status lc_report_tsv(const lc_report* r, char** out) {
  return guard([&] {
    need(r, "report");
    need(out, "out");
    *out = copy_string(to_tsv(r->r));
  });
}

lc_status lc_report_json(const lc_report* r, char** out) {
  return guard([&] {
    need(r, "report");
    need(out, "out");
    *out = copy_string(to_json(r->r));
  });
}

void lc_sweep_options_init(lc_sweep_options* o) {
  if (o == nullptr) return;
  *o = lc_sweep_options{};
  o->k_min = 1;
  o->workers = 1;
  o->max_n = kMaxVertices;
}

lc_status lc_check_grid(const lc_graph* g, const lc_sweep_options* o, lc_report_sink sink, void* ctx) {
  return guard([&] {
    need(g, "graph");
    const SweepOptions options = to_options(o);
    GraphContext gc(g->g);
    gc.set_witnesses(true);
    for (VerificationReport& r : check_graph(gc, options)) {
      if (sink == nullptr) continue;
      lc_report wrapped{std::move(r)};
      sink(ctx, &wrapped);
    }
  });
}

lc_status lc_sweep(const lc_sweep_options* o, lc_read_fn read, void* read_ctx, lc_report_sink on_report,
                   lc_error_sink on_error, void* sink_ctx, lc_sweep_summary* summary) {
  bool read_failed = false;
  const lc_status s = guard([&] {
    need(reinterpret_cast<const void*>(read), "reader");
    const SweepOptions options = to_options(o);
    CallbackBuf buf(read, read_ctx);
    std::istream in(&buf);
    ReportSink report_sink;
    if (on_report != nullptr) {
      report_sink = [&](const VerificationReport& r) {
        const lc_report wrapped{r};
        on_report(sink_ctx, &wrapped);
      };
    }
    ErrorSink error_sink;
    if (on_error != nullptr) {
      error_sink = [&](long long line, const std::string& message) { on_error(sink_ctx, line, message.c_str()); };
    }
    const SweepSummary sum = sweep(in, options, report_sink, error_sink);
    read_failed = buf.failed();
    if (summary != nullptr)
      *summary = lc_sweep_summary{sum.graphs,           sum.instances, sum.pass,  sum.vacuous,
                                  sum.counterexamples, sum.refused,   sum.errors, sum.skipped};
  });
  if (s == LC_OK && read_failed) return fail(LC_IO, "read error on sweep input");
  return s;
}

lc_status lc_sweep_summary_format(const lc_sweep_summary* s, char** out) {
  return guard([&] {
    need(s, "summary");
    need(out, "out");
    SweepSummary sum;
    sum.graphs = s->graphs;
    sum.instances = s->instances;
    sum.pass = s->pass;
    sum.vacuous = s->vacuous;
    sum.counterexamples = s->counterexamples;
    sum.refused = s->refused;
    sum.errors = s->errors;
    sum.skipped = s->skipped;
    *out = copy_string(sum.str());
  });
}

}  // extern "C"
