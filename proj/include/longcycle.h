#ifndef LONGCYCLE_H
#define LONGCYCLE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define LC_API __attribute__((visibility("default")))
#else
#define LC_API
#endif

/* Every fallible call returns a status; on failure lc_last_error() holds a
   message for the calling thread until its next failing call. */
typedef enum lc_status {
  LC_OK = 0,
  LC_INVALID_ARGUMENT = 1,
  LC_PARSE = 2,
  LC_CAPACITY = 3,
  LC_NO_PATH = 4,
  LC_PRECONDITION = 5,
  LC_INVARIANT = 6,
  LC_REFUSED = 7,
  LC_IO = 8,
  LC_INTERNAL = 9
} lc_status;

typedef enum lc_verdict { LC_PASS = 0, LC_VACUOUS = 1, LC_COUNTEREXAMPLE = 2, LC_REFUSED_VERDICT = 3 } lc_verdict;

/* Marks an integer parameter as absent. */
#define LC_UNSET (-2147483647 - 1)

typedef struct lc_graph lc_graph;
typedef struct lc_vertices lc_vertices; /* a path or cycle */
typedef struct lc_fan lc_fan;
typedef struct lc_family lc_family;
typedef struct lc_report lc_report;
typedef struct lc_random lc_random;

LC_API const char* lc_status_name(lc_status status);
LC_API const char* lc_last_error(void);
LC_API const char* lc_version(void);
/* Frees strings returned through char** out-parameters. */
LC_API void lc_string_free(char* s);

/* --- graphs */

LC_API lc_status lc_graph_parse(const char* graph6, lc_graph** out);
/* edges holds edge_count pairs (u, v). */
LC_API lc_status lc_graph_from_edges(int n, const int* edges, size_t edge_count, lc_graph** out);
LC_API lc_status lc_graph_clone(const lc_graph* g, lc_graph** out);
LC_API void lc_graph_free(lc_graph* g);
LC_API int lc_graph_order(const lc_graph* g);
LC_API int lc_graph_edge_count(const lc_graph* g);
/* -1 when v is not a vertex. */
LC_API int lc_graph_degree(const lc_graph* g, int v);
LC_API int lc_graph_has_edge(const lc_graph* g, int u, int v);
LC_API lc_status lc_graph_to_graph6(const lc_graph* g, char** out);
LC_API lc_status lc_graph_is_two_connected(const lc_graph* g, int* out);
LC_API lc_status lc_graph_vertex_connectivity(const lc_graph* g, int* out);
/* Vertices of degree >= k, skipping the ones listed in exclude. */
LC_API lc_status lc_graph_count_high_degree(const lc_graph* g, int k, const int* exclude, size_t exclude_count,
                                            int* out);

/* Component index per vertex of G minus the removed vertices (-1 for
   removed ones); labels is filled for all n vertices, numbered in order of
   smallest member. */
LC_API lc_status lc_graph_component_labels(const lc_graph* g, const int* removed, size_t removed_count, int* labels,
                                           int* count);

/* --- vertex lists */

LC_API void lc_vertices_free(lc_vertices* p);
LC_API size_t lc_vertices_size(const lc_vertices* p);
LC_API const int* lc_vertices_data(const lc_vertices* p);

/* --- solver. Optional results come back as NULL. */

LC_API lc_status lc_longest_xy_path(const lc_graph* g, int x, int y, lc_vertices** out);
LC_API lc_status lc_longest_path(const lc_graph* g, lc_vertices** out);
/* witness may be NULL; *witness is NULL for forests. */
LC_API lc_status lc_circumference(const lc_graph* g, int* length, lc_vertices** witness);
LC_API lc_status lc_xy_path_at_least(const lc_graph* g, int x, int y, int k, lc_vertices** out);
LC_API lc_status lc_cycle_at_least(const lc_graph* g, int k, lc_vertices** out);

/* --- Kelmans operation G[u -> v] */

LC_API lc_status lc_kelmans(const lc_graph* g, int u, int v, lc_graph** out);
LC_API lc_status lc_kelmans_tau_increases(const lc_graph* g, int u, int v, int* out);
/* Lifts an (x,y)-path of G[u -> v] back to G. */
LC_API lc_status lc_kelmans_lift(const lc_graph* g, int u, int v, const int* path, size_t path_size, int x, int y,
                                 lc_vertices** out);

/* --- fans */

LC_API lc_status lc_fan_extract(const lc_graph* g, const int* cycle, size_t cycle_size, const int* h, size_t h_size,
                                int k, lc_fan** out);
LC_API lc_status lc_fan_max_edges(const lc_graph* g, const int* cycle, size_t cycle_size, const int* h,
                                  size_t h_size, int* out);
LC_API void lc_fan_free(lc_fan* f);
LC_API int lc_fan_origin(const lc_fan* f);
LC_API int lc_fan_edge_count(const lc_fan* f);
LC_API size_t lc_fan_path_count(const lc_fan* f);
LC_API const int* lc_fan_path(const lc_fan* f, size_t i, size_t* size);

/* --- extremal families: "sharpness", "hj-g1", "hj-g2", "ln". alpha ("p/q")
   is read only by "ln"; for "hj-g2" t is the number of copies. */

LC_API lc_status lc_family_generate(const char* name, int k, int t, const char* alpha, lc_family** out);
LC_API void lc_family_free(lc_family* f);
LC_API const lc_graph* lc_family_graph(const lc_family* f);
/* -1 when the family has no distinguished pair. */
LC_API int lc_family_x(const lc_family* f);
LC_API int lc_family_y(const lc_family* f);
LC_API lc_status lc_family_describe(const lc_family* f, char** out);
/* Claimed statistics; -1 where the family claims nothing. */
LC_API void lc_family_claims(const lc_family* f, int* high_degree, int* longest_xy, int* circumference);

/* --- corpora */

/* Return nonzero from the sink to stop early. */
typedef int (*lc_graph_sink)(void* ctx, const lc_graph* g);
/* cls: "all", "connected" or "biconnected"; one graph per isomorphism class. */
LC_API lc_status lc_enumerate(int n, const char* cls, lc_graph_sink sink, void* ctx);
LC_API lc_status lc_random_new(uint64_t seed, int min_n, int max_n, lc_random** out);
LC_API lc_status lc_random_next(lc_random* r, lc_graph** out);
LC_API void lc_random_free(lc_random* r);

/* --- verifier */

LC_API size_t lc_claim_count(void);
LC_API const char* lc_claim_name(size_t i);

/* Parameters of a single check. Integers default to LC_UNSET; the checker
   named by claim says which it needs. labeling is for "bermond" and
   "feasible-count" (NULL: ascending degree); bermond_mode is "given",
   "exists" or "forall". "fan" takes cycle and h (NULL: the solver's
   longest cycle and the component of G - C holding x). */
typedef struct lc_params {
  int k, x, y, s, m, c;
  const char* alpha;
  const int* labeling;
  size_t labeling_size;
  const char* bermond_mode;
  const int* cycle;
  size_t cycle_size;
  const int* h;
  size_t h_size;
} lc_params;

LC_API void lc_params_init(lc_params* p);
LC_API lc_status lc_check(const lc_graph* g, const char* claim, const lc_params* params, lc_report** out);

LC_API void lc_report_free(lc_report* r);
LC_API lc_verdict lc_report_verdict(const lc_report* r);
LC_API const char* lc_verdict_name(lc_verdict v);
LC_API lc_status lc_report_tsv(const lc_report* r, char** out);
LC_API lc_status lc_report_json(const lc_report* r, char** out);

typedef struct lc_sweep_options {
  const char* claim;
  int k_min;               /* default 1 */
  const char* alphas;      /* comma-separated, default "1/3,1/2" */
  const char* s_values;    /* comma-separated, default "1,2" */
  const char* bermond_mode;
  int keep_all;            /* report every instance, not only counterexamples */
  int workers;
  int max_n;               /* larger graphs are skipped; default 64 */
} lc_sweep_options;

typedef struct lc_sweep_summary {
  long long graphs, instances, pass, vacuous, counterexamples, refused, errors, skipped;
} lc_sweep_summary;

typedef void (*lc_report_sink)(void* ctx, const lc_report* r);
typedef void (*lc_error_sink)(void* ctx, long long line, const char* message);
/* Fills buf with up to cap bytes; returns the count, 0 at end of input and
   -1 on a read error. */
typedef long long (*lc_read_fn)(void* ctx, char* buf, size_t cap);

LC_API void lc_sweep_options_init(lc_sweep_options* o);
/* Every instance of the claim's parameter grid on one graph. */
LC_API lc_status lc_check_grid(const lc_graph* g, const lc_sweep_options* o, lc_report_sink sink, void* ctx);
/* Graph6 lines from read; reports in input order. */
LC_API lc_status lc_sweep(const lc_sweep_options* o, lc_read_fn read, void* read_ctx, lc_report_sink on_report,
                          lc_error_sink on_error, void* sink_ctx, lc_sweep_summary* summary);
LC_API lc_status lc_sweep_summary_format(const lc_sweep_summary* s, char** out);

#ifdef __cplusplus
}
#endif

#endif
