/* C API for the lpbc matroid kernel.
 *
 * Objects are opaque handles created by the parse/construct calls and
 * released with lpbc_obj_free. Every function returns an error code
 * (LPBC_OK on success); lpbc_last_error() describes the most recent
 * failure on the calling thread. Strings returned through char** are
 * heap-allocated and must be released with lpbc_string_free.
 */
#ifndef LPBC_H
#define LPBC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lpbc_obj lpbc_obj;

enum lpbc_status {
  LPBC_OK = 0,
  LPBC_E_PARSE = 1,
  LPBC_E_VALIDATION = 2,
  LPBC_E_NON_UNIFORM_BASES = 3,
  LPBC_E_EXCHANGE_VIOLATION = 4,
  LPBC_E_OVERLAPPING_SETS = 5,
  LPBC_E_RANK_ZERO = 6,
  LPBC_E_BAD_TARGET_RANK = 7,
  LPBC_E_GROUND_SET_TOO_LARGE = 8,
  LPBC_E_HAS_FREE_EDGE = 9,
  LPBC_E_NOT_CIRCUIT_HYPERPLANE = 10,
  LPBC_E_BUDGET_EXCEEDED = 11,
  LPBC_E_NO_CIRCUIT = 12,
  LPBC_E_GIRTH_TOO_SMALL = 13,
  LPBC_E_UNKNOWN_NAME = 14,
  LPBC_E_BAD_PARAMETERS = 15,
  LPBC_E_PRECONDITION_VIOLATED = 16,
  LPBC_E_INTERNAL = 100
};

enum lpbc_obj_kind {
  LPBC_OBJ_MATROID = 1,
  LPBC_OBJ_GRAPH = 2,
  LPBC_OBJ_LPM = 3,
  LPBC_OBJ_INTERVALS = 4,
  LPBC_OBJ_FAMILY = 5
};

/* Thread-local message for the last failing call. Never NULL. */
const char* lpbc_last_error(void);

void lpbc_obj_free(lpbc_obj* obj);
void lpbc_string_free(char* s);

/* Text formats: matroid / graph / lpm / intervals / family. */
int lpbc_parse(const char* text, lpbc_obj** out);
int lpbc_obj_kind(const lpbc_obj* obj, int* kind);
int lpbc_obj_text(const lpbc_obj* obj, char** out);

/* Realize any object as a matroid (graphs via the bicircular matroid). */
int lpbc_as_matroid(const lpbc_obj* obj, lpbc_obj** out);
/* Cycle matroid of a graph object. */
int lpbc_cycle_matroid(const lpbc_obj* graph, lpbc_obj** out);

int lpbc_uniform(int rank, int size, lpbc_obj** out);
/* name is one of P, Pprime, A, B, C, D, E; k is ignored except for B and C. */
int lpbc_family(const char* name, int n, int k, lpbc_obj** out);

int lpbc_matroid_params(const lpbc_obj* matroid, int* size, int* rank, int* basis_count);
int lpbc_bases_text(const lpbc_obj* matroid, char** out);
int lpbc_circuits_text(const lpbc_obj* matroid, char** out);
int lpbc_rank_of(const lpbc_obj* matroid, const int* set, int set_len, int* rank);
int lpbc_dual(const lpbc_obj* matroid, lpbc_obj** out);
int lpbc_minor(const lpbc_obj* matroid, const int* contract, int contract_len,
               const int* remove, int remove_len, lpbc_obj** out);

/* verdict: 1 member / 0 non-member. Optional out-texts are set to NULL when
 * there is nothing to report (e.g. no witness). */
int lpbc_check_lattice_path(const lpbc_obj* matroid, uint64_t node_budget, int max_elements,
                            int* verdict, char** witness_text);
int lpbc_check_bicircular(const lpbc_obj* matroid, uint64_t node_budget,
                          int* verdict, char** graph_text);
int lpbc_check_member(const lpbc_obj* matroid, uint64_t node_budget, int max_elements,
                      int* verdict, char** witness_text);

int lpbc_catalog_list(char** out);
/* rep: "matroid", "graph" or "lpm". */
int lpbc_catalog_emit(const char* name, const char* rep, char** out);

/* Each corpus member serialized in matroid format, blank-line separated. */
int lpbc_corpus_lpm(int max_n, char** out);
int lpbc_corpus_graphs(int max_edges, int max_vertices, char** out);

int lpbc_verify_theorem1(uint64_t node_budget, int max_elements, int lpm_corpus_max,
                         int graph_corpus_edges, int graph_corpus_vertices,
                         char** report, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* LPBC_H */
