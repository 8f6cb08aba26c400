/* C interface to the garsidekit library.
 *
 * Every call returns a gk_status; *out (when present) receives a
 * NUL-terminated JSON document allocated by the library - the result on
 * GK_OK, an {"error": "..."} record otherwise. Release it with
 * gk_string_free. Handles are opaque and must be freed with gk_graph_free.
 * All functions are thread-safe for concurrent use of one graph handle.
 */
#ifndef GARSIDEKIT_H
#define GARSIDEKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gk_graph gk_graph;

typedef enum gk_status {
  GK_OK = 0,
  GK_USAGE = 1,     /* malformed input, unknown generator, bad subset */
  GK_CAP = 2,       /* a resource cap was exceeded */
  GK_UNDECIDED = 3, /* oracle unknown / certificate not exact */
  GK_ERROR = 4      /* internal failure */
} gk_status;

const char* gk_version(void);
void gk_string_free(char* s);

/* Parse the graph text format (generators:, default:, pair lines). */
gk_status gk_graph_from_text(const char* text, gk_graph** out_graph, char** out_err);
void gk_graph_free(gk_graph* g);

/* Words are whitespace-separated generator names with an optional ^-1
 * suffix; "1" or "" is the empty word. Subsets are comma-separated names;
 * NULL or "" means every generator. Parabolics are "conjWord|a,b,c". */

gk_status gk_nf(gk_graph* g, const char* word, const char* subset, int rightForm,
                char** out);
gk_status gk_delta(gk_graph* g, const char* subset, char** out);
gk_status gk_center(gk_graph* g, const char* subset, char** out);
gk_status gk_closure(gk_graph* g, const char* word, char** out);
gk_status gk_intersect(gk_graph* g, const char* p, const char* q, int ball,
                       char** out);
gk_status gk_restandardise(gk_graph* g, const char* p, const char* subset,
                           char** out);
gk_status gk_retract(gk_graph* g, const char* word, const char* subset,
                     int withTrace, char** out);
gk_status gk_member(gk_graph* g, const char* word, const char* subset, char** out);
gk_status gk_wordeq(gk_graph* g, const char* w1, const char* w2, char** out);
gk_status gk_fc_intersect(gk_graph* g, const char* p, const char* q, int ball,
                          char** out);
gk_status gk_euclid_intersect(gk_graph* g, const char* p, const char* q, int ball,
                              char** out);

/* kind: "salvetti" | "deligne" | "artin" | "clique" | "cayley2";
 * format: "json" | "dot" (poset kinds only); derive: emit the order complex. */
gk_status gk_complex(gk_graph* g, const char* kind, int radius, const char* format,
                     int derive, char** out);

/* Run the acceptance battery; out receives per-criterion results. */
gk_status gk_selftest(char** out);

#ifdef __cplusplus
}
#endif

#endif /* GARSIDEKIT_H */
