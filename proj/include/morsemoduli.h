/* morsemoduli: combinatorial engine for spaces of Morse functions on closed
 * oriented surfaces. Classes are leveled surgery programs; the library
 * enumerates them, builds the stratification poset with chart data, and
 * evaluates the associated Euler/inequality invariants.
 *
 * All functions return mm_status; every other output goes through out
 * parameters. Strings returned through char** are heap-allocated and must be
 * released with mm_string_free. Handles are opaque; release with the matching
 * *_free. On failure, mm_last_error() describes what went wrong (the message
 * is thread-local and overwritten by the next failing call on that thread).
 */
#ifndef MORSEMODULI_H
#define MORSEMODULI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mm_status {
    MM_OK = 0,
    MM_ERR_INVALID_ARGUMENT = 1,
    MM_ERR_PARSE = 2,
    MM_ERR_INVALID_PROGRAM = 3,
    MM_ERR_NOT_A_REFINEMENT = 4,
    MM_ERR_BUDGET_EXCEEDED = 5,
    MM_ERR_INCOMPLETE_INPUT = 6,
    MM_ERR_MISSING_STRATUM_DATA = 7,
    MM_ERR_RANK_MISMATCH = 8,
    MM_ERR_NON_UNIMODULAR = 9,
    MM_ERR_VALUE_OUT_OF_RANGE = 10,
    MM_ERR_NOT_IN_STAR = 11,
    MM_ERR_NON_POSITIVE_PERIOD = 12,
    MM_ERR_FOREIGN_ELEMENT = 13,
    MM_ERR_NOT_ADJACENT = 14,
    MM_ERR_CONE_VIOLATION = 15,
    MM_ERR_IO = 16,
    MM_ERR_INTERNAL = 17
} mm_status;

typedef struct mm_program mm_program;
typedef struct mm_classset mm_classset;
typedef struct mm_poset mm_poset;

const char* mm_version(void);
const char* mm_last_error(void);
void mm_string_free(char* s);

/* ---- programs ---- */

/* Parses a versioned morse-program JSON document (see README for the schema).
 * Parsing does not validate the surgery structure; mm_program_validate does. */
mm_status mm_program_parse(const char* json, mm_program** out);
mm_status mm_program_to_json(const mm_program* p, char** json);
/* Validation report as JSON: {"ok":bool,"violations":[{"code","detail"}...]}.
 * Returns MM_OK even for invalid programs; the report carries the verdict. */
mm_status mm_program_validate(const char* json, char** report_json);
mm_status mm_program_signature(const mm_program* p, int* minima, int* saddles, int* maxima,
                               int* euler_char, int* genus);
/* Level graph as JSON: vertices with levels, 2q oriented arcs. */
mm_status mm_program_level_graph(const mm_program* p, char** json);
/* Canonical representative and its content digest. */
mm_status mm_program_canonical(const mm_program* p, char** class_id, mm_program** canonical);
/* Automorphism group of the canonical class: saddle and arc permutations. */
mm_status mm_program_automorphisms(const mm_program* p, char** json);
/* Relative homology data: rank, torsion, leveled edge-basis certificate. */
mm_status mm_program_homology(const mm_program* p, char** json);
/* Class of the program re-leveled by a finer partition (JSON array of arrays). */
mm_status mm_program_delta(const mm_program* p, const char* finer_json, char** class_id,
                           mm_program** canonical);
/* Incidence data into the finer class: saddle permutation + period matrix. */
mm_status mm_program_incidence(const mm_program* p, const char* finer_json, char** json);
void mm_program_free(mm_program* p);

/* ---- enumeration ---- */

/* Query JSON: {"minima":p,"saddles":q,"maxima":r,
 *              "labels":"all"|"none"|{"labeled_minima":..,...},
 *              "filter_s":s?,"genus":g?,"budget":n?,"threads":n?} */
mm_status mm_enumerate(const char* query_json, mm_classset** out);
/* Same, through a content-addressed cache directory ("" disables). */
mm_status mm_enumerate_cached(const char* query_json, const char* cache_dir, int use_cache,
                              mm_classset** out);
mm_status mm_classset_count(const mm_classset* c, long long* n);
mm_status mm_classset_class_id(const mm_classset* c, long long index, char** id);
mm_status mm_classset_program(const mm_classset* c, long long index, mm_program** out);
/* Histogram {"1": n1, "2": n2, ...} of classes per saddle-level count. */
mm_status mm_classset_histogram(const mm_classset* c, char** json);
mm_status mm_classset_to_json(const mm_classset* c, char** json);
/* (-1)^(q-1) times the number of one-level classes. */
mm_status mm_classset_euler(const mm_classset* c, long long* chi);
void mm_classset_free(mm_classset* c);

/* ---- poset and invariants ---- */

mm_status mm_poset_build(const mm_classset* c, mm_poset** out);
mm_status mm_poset_counts(const mm_poset* p, long long* nodes, long long* edges);
/* format: "json", "dot" or "csv". */
mm_status mm_poset_export(const mm_poset* p, const char* format, char** out);
/* Q(t) plus inequality reports. Plugin JSON: {"mode":"contractible"} or
 * {"mode":"table","entries":{"<class_id>":{"torus_dim":d,"poincare":[...]}},
 *  "betti":[...]?}. */
mm_status mm_poset_q_polynomial(const mm_poset* p, const char* plugin_json, char** report_json);
void mm_poset_free(mm_poset* p);

/* Alternating and coefficientwise bounds of betti against Q (JSON arrays). */
mm_status mm_morse_smale(const char* betti_json, const char* q_coeffs_json, char** report_json);

/* Seeded chart consistency run over every class: transition cocycles, cone
 * positivity, fixed-point observations. */
mm_status mm_atlas_check(const mm_classset* c, long long samples_per_chart, unsigned long long seed,
                         char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* MORSEMODULI_H */
