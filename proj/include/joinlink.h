#ifndef JOINLINK_H
#define JOINLINK_H

/* C interface to the joinlink shared library.
 *
 * Conventions:
 *   - Functions returning a pointer yield NULL on failure; functions
 *     returning jl_status yield JL_ERROR.  The failing call stores a
 *     machine-readable code and a message in thread-local slots readable
 *     through jl_error_code / jl_error_message until the next failing call
 *     on the same thread.
 *   - Every char* returned by the library is heap-allocated JSON or plain
 *     text owned by the caller; release it with jl_string_free.
 *   - Structured requests and replies are UTF-8 JSON documents.  Integer
 *     matrices are arrays of row arrays; univariate polynomials are
 *     coefficient arrays, constant term first; entries wider than 64 bits
 *     travel as decimal strings.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum { JL_OK = 0, JL_ERROR = 1 } jl_status;

/* Library version string, e.g. "0.1.0".  Static storage; do not free. */
const char* jl_version(void);

/* Error slot accessors.  Empty strings before the first failure. */
const char* jl_error_code(void);
const char* jl_error_message(void);

void jl_string_free(char* s);

/* ---- mixed polynomials ---- */

/* Opaque handle for a polynomial in z1..zn and their conjugates with exact
 * Gaussian-rational coefficients. */
typedef struct jl_poly jl_poly;

/* Parses the expression grammar (z1, zb2, conj(...), ^, *, +, -, rational
 * and complex coefficients).  declared_vars forces the ambient variable
 * count; 0 infers it from the highest index used. */
jl_poly* jl_poly_parse(const char* source, int declared_vars);

/* Reads the {"n": ..., "terms": [...]} serialization. */
jl_poly* jl_poly_from_json(const char* text);

void jl_poly_free(jl_poly* p);

int jl_poly_vars(const jl_poly* p);

/* Canonical expression text (terms in canonical order). */
char* jl_poly_text(const jl_poly* p);

/* {"n": int, "terms": [{"nu": [...], "mu": [...], "c": ["re", "im"]}, ...]}
 * with rationals as strings. */
char* jl_poly_to_json(const jl_poly* p);

/* ---- Newton boundary ---- */

/* {"n": ..., "generators": [[...]], "vertices": [[...]], "convenient": bool,
 *  "faces": [{"normal": [...], "points": [[...]], "dim": d}, ...]}
 * listing every compact face of the unbounded Newton polytope. */
char* jl_newton_boundary(const jl_poly* p);

/* Per-face non-degeneracy reports.  options is a JSON object; recognized
 * members (all optional): "seed", "samples", "iters", "radius_min",
 * "radius_max", "tolerance".  Reports carry a verdict of
 * ExactlyNondegenerate, NoWitnessFound (probabilistic, not a proof), or
 * DegenerateWitness with the witness point and its residual. */
char* jl_newton_nondegeneracy(const jl_poly* p, const char* options);

/* ---- mapping degree ---- */

/* Winding number of p/|p| on the circle |z| = eps for a 1-variable
 * polynomial, with automatic radius halving (at most max_halvings times)
 * when a sample lands too close to zero.  samples is the initial circle
 * subdivision; samples <= 0 selects 64, max_halvings < 0 selects 6, and
 * max_halvings = 0 disables the retries.
 * Reply: {"degree": m, "eps": e, "radius_used": r, "samples": n,
 * "stable": bool}. */
char* jl_mapping_degree(const jl_poly* p, double eps, int samples,
                        int max_halvings);

/* ---- Seifert forms ---- */

/* Dispatcher for integer bilinear form operations.  request is a JSON
 * object {"op": ..., ...}:
 *   {"op": "lambda", "m": M}                         building block form of
 *                                                    z^M, size |M|-1
 *   {"op": "tensor", "a": A, "b": B, "n": N, "m": M} signed tensor product
 *                                                    for variable counts N, M
 *   {"op": "brieskorn", "exponents": [a1, ...]}      full Brieskorn form
 *   {"op": "extend", "a": A, "b": [..], "eps": +-1}  bordered extension
 *   {"op": "charpoly", "a": A, "alternate": bool}    det(Id - t A^{-1} A^T)
 *   {"op": "invariants", "a": A}                     congruence invariants
 *   {"op": "congruent", "a": A, "b": B, "depth": D, "state_cap": C}
 * Form replies carry "matrix", "rank", and "k" (null when unknown). */
char* jl_seifert(const char* request);

/* ---- zeta functions ---- */

/* Dispatcher:
 *   {"op": "join", "num1": [..], "den1": [..], "num2": [..], "den2": [..]}
 *   {"op": "from_charpolys", "charpolys": [[..], ...]}
 *   {"op": "from_charpolys", "charpoly": [..]}   shorthand for the two-variable
 *                                                list [1 - t, p]
 *   {"op": "reduced", ...same inputs as from_charpolys...}
 *   {"op": "composed_product", "p": [..], "q": [..]}
 * Divisors are replied as {"num": [..], "den": [..]}, reduced, primitive,
 * positive leading coefficients. */
char* jl_zeta(const char* request);

/* ---- enhanced Milnor numbers ---- */

/* Dispatcher:
 *   {"op": "join", "mu1": .., "lambda1": .., "k1": ..,
 *                  "mu2": .., "lambda2": .., "k2": .., "k": optional}
 *   {"op": "brieskorn", "exponents": [a1, ...]}
 *   {"op": "witness", "ell": L, "k": K}
 *   {"op": "base_cases", "p": P}
 * Invariant replies carry "mu", "lambda", "k" and the signed "display"
 * pair [(-1)^{k+1} mu, lambda]. */
char* jl_enhanced(const char* request);

/* ---- pipelines ---- */

/* Executes a JSON array of steps [{"op": ..., "args": {...},
 * "inputs": [indices]}, ...].  Each step may splice earlier results by
 * index; result shapes are matched by their keys ("matrix", "charpoly",
 * "charpolys", "num"/"den", "poly").  Runs sequentially; the reply is
 * {"results": [...]} on success, or {"results": [...partial...],
 * "error": {"step": i, "op": ..., "code": ..., "message": ...}} when a
 * step fails (malformed step, dangling input index, or operation error).
 * Only an unparsable or non-array script fails the whole call. */
char* jl_pipeline(const char* steps);

#ifdef __cplusplus
}
#endif

#endif /* JOINLINK_H */
