#ifndef TWISTED_H
#define TWISTED_H

/* C interface to the twisted-conjugacy library.
 *
 * Conventions:
 *  - Functions return TWC_OK (0) on success or a twc_status code; on failure
 *    twc_last_error() describes the problem (thread-local storage).
 *  - Output strings (char** out) are heap-allocated JSON documents; release
 *    them with twc_string_free. Reports are deterministic for fixed inputs.
 *  - Handles are owned by the caller and released with the matching _free.
 *    A handle may cache computed results; do not share one handle across
 *    threads without external locking.
 *  - Element indices are 0-based. Cycle notation in group files is 1-based.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twc_status {
    TWC_OK = 0,
    TWC_ERROR_PARSE = 1,    /* malformed input, unknown name, bad index */
    TWC_ERROR_DOMAIN = 2,   /* valid syntax, impossible request */
    TWC_ERROR_LIMIT = 3,    /* window or budget exceeded */
    TWC_ERROR_INTERNAL = 4  /* invariant violation inside the library */
} twc_status;

typedef struct twc_group twc_group;
typedef struct twc_aut twc_aut;
typedef struct twc_scenario twc_scenario;

const char* twc_version(void);
/* Message for the most recent failure on this thread; empty if none. */
const char* twc_last_error(void);
void twc_string_free(char* s);

/* ---- groups ---- */

/* {"name","order","table"} or {"name","generators":["(1 2 3)",...]} */
int twc_group_from_json(const char* text, twc_group** out);
int twc_group_from_file(const char* path, twc_group** out);
/* One of the groups shipped with the library (every group of order <= 24 up
 * to isomorphism, plus A5), by name. */
int twc_group_bundled(const char* name, twc_group** out);
/* JSON array of {"name","order"} for all bundled groups. */
int twc_group_list_bundled(char** out);
void twc_group_free(twc_group* g);
int twc_group_order(const twc_group* g);
/* Borrowed pointer, valid while the handle lives. */
const char* twc_group_name(const twc_group* g);
int twc_group_to_json(const twc_group* g, char** out);

/* ---- automorphisms ---- */

/* {"image":[...]} listing the image of every element. */
int twc_aut_from_json(const twc_group* g, const char* text, twc_aut** out);
int twc_aut_from_file(const twc_group* g, const char* path, twc_aut** out);
void twc_aut_free(twc_aut* a);

/* ---- finite-group reports ---- */

/* Twisted conjugacy classes x ~ g x phi(g)^-1: count, representatives,
 * class members, class index per element. */
int twc_classes_report(const twc_group* g, const twc_aut* a, char** out);
/* Fixed subgroup {x : phi(x) = x}. */
int twc_fixed_report(const twc_group* g, const twc_aut* a, char** out);
/* Exact character table; values are integer coordinate vectors over the
 * power basis of the cyclotomic field of the group exponent. */
int twc_char_table_report(const twc_group* g, char** out);
/* Compares the class count with the number of fixed irreducible characters. */
int twc_tbft_report(const twc_group* g, const twc_aut* a, char** out);
/* Derived series of the group. */
int twc_solvability_group_report(const twc_group* g, char** out);

/* ---- lattice automorphisms ---- */

/* matrix_json: {"k","entries"} or bare [[...]]; must be unimodular of finite
 * order. Reports the class count of the induced map on Z^k, the invariant
 * factors of I-d, and the unimodular Smith witnesses. */
int twc_zk_report(const char* matrix_json, char** out);

/* ---- wreath-product scenarios ---- */

/* Scenario JSON: {"group": path-or-inline, "k", "d", "b", "a0", "window",
 * "budget"}. Overrides <= 0 keep the file values. */
int twc_scenario_from_json(const char* text, const char* base_dir, long long window_override,
                           long long budget_override, twc_scenario** out);
int twc_scenario_from_file(const char* path, long long window_override,
                           long long budget_override, twc_scenario** out);
/* Scenario shipped with the library, by name. */
int twc_scenario_bundled(const char* name, twc_scenario** out);
/* JSON array of {"name","summary"} for all bundled scenarios. */
int twc_scenario_list_bundled(char** out);
void twc_scenario_free(twc_scenario* s);
/* Validation certificate plus the windowed order evidence; the order
 * condition is reported as holding or failing on the window, never proved. */
int twc_wreath_check_report(const twc_scenario* s, char** out);
/* Fixed-element witnesses: sigma0 in wire form [{"point":[...],"g":i},...],
 * m as "1,0,..." or a JSON array. */
int twc_witness_report(const twc_scenario* s, const char* sigma0_json, const char* m_text,
                       int count, char** out);
/* Class-separation evidence across the base classes; witness_count <= 0 uses
 * the default of 10. The result is cached on the handle. */
int twc_separate_report(twc_scenario* s, int witness_count, char** out);
/* Class label of one element {"sigma":[...],"z":[...]} under the separating
 * map; requires every base class to carry identity-only evidence. Runs (and
 * caches) the separation pipeline if needed. */
int twc_separate_classify(twc_scenario* s, const char* element_json, char** out);
/* Closure of the origin copy of the group, its induced map, and derived
 * series of both the closure and the base group. */
int twc_solvability_scenario_report(const twc_scenario* s, char** out);

/* ---- verification suite ---- */

/* check_id NULL or "" runs every check; group_name NULL or "" means no
 * filter. failures receives the number of failing reports (may be nonzero
 * with TWC_OK; failing checks are reports, not errors). */
int twc_verify(const char* check_id, const char* group_name, unsigned long long seed,
               int* failures, char** out);
/* JSON array of the available check ids. */
int twc_verify_check_ids(char** out);

#ifdef __cplusplus
}
#endif

#endif /* TWISTED_H */
