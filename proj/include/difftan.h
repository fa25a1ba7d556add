/* difftan — internal tangent spaces of diffeological spaces from finite
 * presentations of their germ categories.
 *
 * C interface of the shared library. All computation is exact (rational
 * arithmetic); reports are returned as JSON documents whose field values are
 * deterministic for a fixed input. Strings returned through char** or char*
 * are allocated by the library and must be released with
 * difftan_string_free(). On any failure the functions return a nonzero
 * status and difftan_last_error() describes the problem; the message stays
 * valid until the next difftan call on the same thread.
 */

#ifndef DIFFTAN_H
#define DIFFTAN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct difftan_diagram difftan_diagram;
typedef struct difftan_functor difftan_functor;
typedef struct difftan_space difftan_space;

typedef enum difftan_status {
    DIFFTAN_OK = 0,
    DIFFTAN_ERR_PARSE = 1,    /* malformed presentation / functor / vector text */
    DIFFTAN_ERR_VALIDATE = 2, /* the data is not a valid category / diagram / functor */
    DIFFTAN_ERR_ARGUMENT = 3, /* null handle or bad argument */
    DIFFTAN_ERR_UNKNOWN_NAME = 4,
    DIFFTAN_ERR_INTERNAL = 5
} difftan_status;

const char* difftan_version(void);

/* Thread-local message for the most recent failure; never NULL. */
const char* difftan_last_error(void);

void difftan_string_free(char* s);

/* -- diagrams ---------------------------------------------------------- */

/* Parses and validates one presentation. The handle is immutable. */
difftan_status difftan_diagram_parse(const char* text, difftan_diagram** out);
void difftan_diagram_free(difftan_diagram* d);

/* Name from the presentation's "space" line; owned by the handle. */
const char* difftan_diagram_name(const difftan_diagram* d);

/* Canonical presentation text. */
char* difftan_diagram_serialize(const difftan_diagram* d);

/* Validation facts, including the injective-generation verdict when the
 * presentation flags separated objects. */
difftan_status difftan_validate_json(const difftan_diagram* d, char** json_out);

int difftan_diagram_is_weakly_filtered(const difftan_diagram* d);
int difftan_diagram_is_filtered(const difftan_diagram* d);
difftan_status difftan_filtered_json(const difftan_diagram* d, char** json_out);

/* Product diagram: paired objects with added dimensions, paired morphisms
 * with block-diagonal Jacobians. */
difftan_status difftan_product(const difftan_diagram* a, const difftan_diagram* b,
                               difftan_diagram** out);

/* -- functors ---------------------------------------------------------- */

/* Parses and validates a dimension- and Jacobian-preserving functor between
 * two already-loaded diagrams. The functor keeps both diagrams alive. */
difftan_status difftan_functor_parse(const char* text, const difftan_diagram* src,
                                     const difftan_diagram* dst, difftan_functor** out);
void difftan_functor_free(difftan_functor* f);

/* -- tangent spaces ---------------------------------------------------- */

/* Computes the tangent space of a diagram: dimension and one projection
 * matrix per object. The space keeps the diagram alive. */
difftan_status difftan_space_compute(const difftan_diagram* d, difftan_space** out);
void difftan_space_free(difftan_space* s);

int difftan_space_dimension(const difftan_space* s);
difftan_status difftan_tangent_json(const difftan_space* s, char** json_out);

int difftan_space_is_one_representable(const difftan_space* s);
difftan_status difftan_onerep_json(const difftan_space* s, char** json_out);

/* Vectors use the command-line syntax "<oid>:r,r,...;<oid>:...". */
difftan_status difftan_zero_json(const difftan_diagram* d, const char* vec, char** json_out);
difftan_status difftan_witness_json(const difftan_diagram* d, const char* vec, char** json_out);

/* -- bundles ----------------------------------------------------------- */

/* Verifies the exactness facts of a fiber/total/base presentation with
 * functors iota: fiber -> total and pi: total -> base. group_quotient only
 * switches the report heading. */
difftan_status difftan_bundle_json(const difftan_diagram* fiber, const difftan_diagram* total,
                                   const difftan_diagram* base, const difftan_functor* iota,
                                   const difftan_functor* pi, int group_quotient, char** json_out);

/* -- corpus ------------------------------------------------------------ */

difftan_status difftan_corpus_list_json(char** json_out);

/* Emits one part of a corpus entry ("diagram" for single-space entries;
 * fiber/total/base/iota/pi for bundle entries). A NULL part selects the
 * entry's only part and fails when the entry has several. */
difftan_status difftan_corpus_emit(const char* name, const char* part, char** text_out);

#ifdef __cplusplus
}
#endif

#endif /* DIFFTAN_H */
