#ifndef QCI_H
#define QCI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QCI_API __declspec(dllexport)
#elif defined(__GNUC__) || defined(__clang__)
#define QCI_API __attribute__((visibility("default")))
#else
#define QCI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Exact computational algebra for quantum complete intersections over prime
 * fields: algebra constructors, Nakayama data, twisted tensor
 * decompositions, Ext dimension tables, Hochschild cohomology, and
 * reproducible verification campaigns.
 *
 * Every function returns a status code; QCI_OK is 0. On failure
 * qci_last_error() describes the problem for the calling thread. Strings
 * handed back through char** are heap-allocated JSON documents; release
 * them with qci_string_free. Handles are opaque and freed with their
 * matching *_free function.
 */

typedef struct qci_algebra qci_algebra;
typedef struct qci_module qci_module;

enum {
  QCI_OK = 0,
  QCI_E_PARSE = 1,      /* malformed JSON or campaign spec */
  QCI_E_BAD_PARAMS = 2, /* structurally invalid input */
  QCI_E_RESOURCE = 3,   /* computation exceeds its budget */
  QCI_E_INTERNAL = 4    /* invariant failure inside the library */
};

QCI_API const char* qci_status_name(int status);
QCI_API const char* qci_last_error(void);
QCI_API void qci_string_free(char* s);

/* Algebra lifecycle. JSON shape: {"p": 5, "c": 2, "a": [2,2], "q": [[1,4],[4,1]]}
 * with q entries as residues mod p. */
QCI_API int qci_algebra_from_json(const char* text, qci_algebra** out);
QCI_API int qci_algebra_to_json(const qci_algebra* a, char** out);
QCI_API void qci_algebra_free(qci_algebra* a);

/* Named families as algebra JSON: "exterior" uses (p, c); "truncated" uses
 * (p, c, a); "root-of-unity" uses (p, c, a, q) and requires q^(a-1) = 1.
 * Parameters a family does not use are ignored. */
QCI_API int qci_example(const char* family, uint64_t p, size_t c, uint32_t a, uint64_t q, char** out);

QCI_API int qci_algebra_dim(const qci_algebra* a, size_t* out);
QCI_API int qci_algebra_gen_count(const qci_algebra* a, size_t* out);

/* {"gamma": [...], "symmetric": bool, "identity_holds": bool}, where gamma
 * lists the scalars by which the Nakayama automorphism rescales each
 * generator and identity_holds reports the defining identity checked over
 * all basis pairs. */
QCI_API int qci_nakayama_json(const qci_algebra* a, char** out);

/* Algebra JSON of the symmetric double on 2c generators. */
QCI_API int qci_symmetric_double_json(const qci_algebra* a, char** out);

/* Algebra JSON of the opposite algebra (transposed commutation matrix). */
QCI_API int qci_opposite_json(const qci_algebra* a, char** out);

/* Compares the algebra against the twisted tensor product of its
 * restrictions to the generator set `split` and its complement, over every
 * structure constant; *out_match becomes 1 or 0. Entries of `split` are
 * zero-based generator indices. */
QCI_API int qci_decomposition_check(const qci_algebra* a, const size_t* split, size_t split_len,
                            int* out_match);

/* Module lifecycle. JSON shape: {"dim": n, "actions": [one n x n matrix per
 * generator], "degrees": [[d1..dc] per basis row]}; omit degrees for an
 * ungraded module. Construction validates the generator relations. */
QCI_API int qci_module_from_json(const qci_algebra* a, const char* text, qci_module** out);
QCI_API int qci_module_to_json(const qci_module* m, char** out);
QCI_API int qci_module_trivial(const qci_algebra* a, qci_module** out);
QCI_API void qci_module_free(qci_module* m);

/* dim Ext^0..Ext^window for a module pair over the same algebra, as
 * {"dims": [...], "window": W}. */
QCI_API int qci_ext_table_json(const qci_module* m, const qci_module* n, size_t window, char** out);

/* Hochschild cohomology dims over the enveloping algebra, with the center
 * cross-check: {"dims", "window", "center_dim", "hh0_matches_center"}. */
QCI_API int qci_hochschild_json(const qci_algebra* a, size_t window, char** out);

/* Runs a verification campaign from a spec object:
 * {"campaign": "nakayama"|"double"|"decompose"|"kunneth"|"ext-symmetry"|
 *  "hochschild", "algebra"?: {...}, "window": W, "corpus": N, "seed": S,
 *  "budget_dim": D}.
 * *report_out receives the JSON-lines report body (spec echo, one record
 * per case, summary); *pass_out becomes 1 exactly when the aggregate
 * verdict is PASS. Reruns with the same spec produce identical bytes. */
QCI_API int qci_run_campaign(const char* spec_text, char** report_out, int* pass_out);

#ifdef __cplusplus
}
#endif

#endif
