/*
 * hexcsl — coincidence site lattices of the hexagonal lattice, its shifted
 * copies, and the hexagonal packing, over exact arithmetic.
 *
 * C interface of the shared library.  All computations are exact; results are
 * returned as JSON (or CSV/SVG) strings allocated by the library.  Every
 * function returns a hexcsl_status code; on failure a human-readable message
 * is available from hexcsl_last_error() until the next call on the same
 * context.  Output strings must be released with hexcsl_string_free().
 *
 * Contexts are not thread-safe; use one hexcsl_ctx per thread.
 */
#ifndef HEXCSL_H
#define HEXCSL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hexcsl_ctx hexcsl_ctx;

typedef enum hexcsl_status {
    HEXCSL_OK = 0,
    HEXCSL_ERR_INVALID_ARGUMENT = 1, /* bad parameter or malformed domain value */
    HEXCSL_ERR_DOMAIN = 2,           /* precondition violated (e.g. zero divisor) */
    HEXCSL_ERR_PARSE = 3,            /* malformed JSON input */
    HEXCSL_ERR_INTERNAL = 4
} hexcsl_status;

const char* hexcsl_version(void);

hexcsl_ctx* hexcsl_ctx_new(void);
void hexcsl_ctx_free(hexcsl_ctx* ctx);

/* Message for the most recent failing call on this context ("" if none). */
const char* hexcsl_last_error(const hexcsl_ctx* ctx);

void hexcsl_string_free(char* s);

/*
 * Factorization of m + n*xi into canonical primes, with class labels
 * (ramified / inert / split).  m and n are decimal strings of any length.
 * Output: {"unit": k, "unit_name": ..., "factors": [{"prime": {"m","n"},
 * "norm", "exponent", "class"}]}
 */
hexcsl_status hexcsl_factor(hexcsl_ctx* ctx, const char* m, const char* n, char** json_out);

/*
 * Table of every coincidence site lattice with index <= max_index.
 * format is "json" or "csv".  The CSV columns are index,z_m,z_n,angle_deg
 * (angle to 6 decimal places, display only) followed by per-index summary
 * comment lines.
 */
hexcsl_status hexcsl_enumerate(hexcsl_ctx* ctx, long max_index, const char* format, char** out);

/*
 * {"m": m, "f": count of CSLs of index m, "f_hat": count of rotations}.
 */
hexcsl_status hexcsl_count(hexcsl_ctx* ctx, long m, char** json_out);

/*
 * {"coefficients": [f(1), ..., f(max_m)]}.
 */
hexcsl_status hexcsl_dirichlet(hexcsl_ctx* ctx, long max_m, char** json_out);

/*
 * Coincidence group description of a shifted lattice x + Gamma.
 * shift_json: {"kind": "rational", "a": "2/3", "b": "1/3"}
 *           | {"kind": "irrational-a", "b": "0"}      (a irrational)
 *           | {"kind": "irrational-b", "a": "1"}      (b irrational)
 *           | {"kind": "both-independent"}
 *           | {"kind": "affinely-related", "p1":., "q1":., "p2":., "q2":.}
 * Output: {"kind", "units": [k...], "reflection": {...}|null,
 *          "certified_group": bool, "denominator": {...}|null, "structure"}
 */
hexcsl_status hexcsl_shift_describe(hexcsl_ctx* ctx, const char* shift_json, char** json_out);

/*
 * CSL of one isometry; with a rational shift, the coset CSL of x + Gamma.
 * isometry_json: {"z": {"m":., "n":.}, "eps": k, "reflect": bool}
 * where eps encodes the unit (1+xi)^k, k in 0..5.
 * shift_json may be NULL for the unshifted lattice.
 */
hexcsl_status hexcsl_csl(hexcsl_ctx* ctx, const char* isometry_json, const char* shift_json,
                         char** json_out);

/*
 * Coincidence of the hexagonal packing (honeycomb).  With shifted = 0 the
 * packing Gamma u (x+Gamma); with shifted != 0 the packing recentered on a
 * hexagon center.  Output includes the exact index, the sigma pair set, and
 * the CSML components.
 */
hexcsl_status hexcsl_packing(hexcsl_ctx* ctx, const char* isometry_json, int shifted,
                             char** json_out);

/*
 * Deterministic SVG rendering.
 * render_json: {"scene": "lattice"|"shifted-lattice"|"honeycomb"|
 *               "csl-overlay"|"csml-overlay",
 *               "radius": "6", "rotation": {...}|null, "shift": {...}|null,
 *               "fundamental_domain": bool, "scale": px, "point_radius": px}
 */
hexcsl_status hexcsl_render(hexcsl_ctx* ctx, const char* render_json, char** svg_out);

/*
 * Brute-force verification suite: every closed-form result cross-checked
 * against exact point-set geometry.  passed != 0 iff all checks pass.
 * Output: {"reports": [{"name","expected","observed","pass","context"}],
 *          "passed": bool}
 */
hexcsl_status hexcsl_verify(hexcsl_ctx* ctx, long norm_bound, long radius, char** json_out,
                            int* passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEXCSL_H */
