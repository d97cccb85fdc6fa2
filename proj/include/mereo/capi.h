/* C interface to the mereotopology workbench core.
 *
 * All functions return a status code:
 *   0  success / every checked axiom holds
 *   1  axiom failures (a report with witnesses was produced)
 *   2  input error (parse, kind, or algebra mismatch)
 *   3  capacity exceeded
 *
 * On codes 2 and 3, mereo_last_error() describes the problem. Strings
 * returned through out-parameters are heap-allocated; release them with
 * mereo_string_free(). Documents are opaque handles released with
 * mereo_doc_free().
 */
#ifndef MEREO_CAPI_H
#define MEREO_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mereo_doc mereo_doc;

/* Parses a JSON structure document (types: contact, lca, mvd, hom, meetmap,
 * space, map). */
int mereo_doc_parse(const char* json_text, mereo_doc** out);
void mereo_doc_free(mereo_doc* doc);

/* Canonical serialization: sorted keys, two-space indent, trailing newline. */
int mereo_doc_serialize(const mereo_doc* doc, char** out_json);

/* suite: one of "contact" (C1-C4), "nca" (C1-C6), "lca", "mvd", "connected",
 * "galois", or a comma-separated list of axiom ids. out_report receives a
 * JSON verdict list with witnesses. */
int mereo_check(const mereo_doc* doc, const char* suite, char** out_report);

/* direction: "kappa" (lca -> mvd) or "tau" (mvd -> lca). out receives the
 * converted document, out_report the round-trip/form-agreement report. */
int mereo_convert(const mereo_doc* doc, const char* direction, mereo_doc** out,
                  char** out_report);

/* src and dst are both lca or both mvd documents; map is a hom or meetmap
 * document between their algebras. out_report receives per-category
 * membership flags plus per-axiom witnesses. */
int mereo_classify(const mereo_doc* src, const mereo_doc* dst,
                   const mereo_doc* map, char** out_report);

/* style: "dhlc" or "mvdhlc". Composes psi2 after psi1; first_domain is the
 * structure on psi1's domain algebra (lca for dhlc, mvd for mvdhlc), whose
 * bounded set / relation indexes the defining join. */
int mereo_compose(const char* style, const mereo_doc* psi2,
                  const mereo_doc* psi1, const mereo_doc* first_domain,
                  mereo_doc** out);

/* op for space documents: "rc", "lca", "mvd", "connected";
 * op for map documents: "map_properties". */
int mereo_space_op(const mereo_doc* doc, const char* op, char** out_report);

/* hom document + element expression over the codomain; out_expr receives the
 * canonical expression of the lower adjoint's value. */
int mereo_adjoint(const mereo_doc* hom, const char* element_expr,
                  char** out_expr);

/* spec_json: {"kind": ..., "n": ..., "codomain_n"?, "filter"?: [ids],
 * "seed"?, "budget"?}. out_jsonl receives one canonical document per line
 * followed by a summary record. */
int mereo_enumerate(const char* spec_json, char** out_jsonl);

/* spec_json as above plus "hypothesis" and "conclusion" axiom-id arrays.
 * out_report receives the SearchOutcome JSON. Returns 0 whether or not a
 * counterexample exists; the report carries the status. */
int mereo_search(const char* spec_json, char** out_report);

/* Description of the most recent failure in this thread; empty on success. */
const char* mereo_last_error(void);

void mereo_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
