/* tripick: varieties of the unit tridisc and extremal 3-point interpolation.
 *
 * C API of the shared library. All objects are opaque handles created and
 * destroyed through these functions; every fallible call returns a tp_status
 * and writes results through out-parameters. tp_last_error() carries a
 * thread-local diagnostic message for the last failing call on this thread.
 *
 * Complex scalars travel as tp_complex {re, im}; points of the tridisc as
 * tp_complex[3].
 */

#ifndef TRIPICK_H
#define TRIPICK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Symbol visibility: the shared library is built with hidden visibility and
 * exports exactly this surface. */
#ifndef TP_API
#if defined(_WIN32)
#define TP_API
#else
#define TP_API __attribute__((visibility("default")))
#endif
#endif

typedef struct tp_complex {
    double re;
    double im;
} tp_complex;

typedef enum tp_status {
    TP_OK = 0,
    TP_ERR_INVALID_ARGUMENT = 1,
    TP_ERR_SINGULAR = 2,       /* rational evaluation with denominator below the guard */
    TP_ERR_DEGENERATE = 3,     /* collinear nodes, zero triple, coincident points */
    TP_ERR_NO_CONVERGENCE = 4, /* Newton stall or sampler starvation */
    TP_ERR_VERIFICATION = 5,   /* constructed object failed its own residual check */
    TP_ERR_OUT_OF_RANGE = 6
} tp_status;

TP_API const char* tp_status_name(tp_status s);
TP_API const char* tp_last_error(void);
TP_API const char* tp_version(void);

/* ---- opaque handles ---- */

typedef struct tp_alpha tp_alpha;               /* variety parameter triple */
typedef struct tp_automorphism tp_automorphism; /* automorphism of the tridisc */
typedef struct tp_nodal tp_nodal;               /* nodal data of a 3-point problem */
typedef struct tp_poly tp_poly;                 /* sparse multivariate polynomial */
typedef struct tp_report tp_report;             /* verification report */

TP_API void tp_alpha_destroy(tp_alpha* a);
TP_API void tp_automorphism_destroy(tp_automorphism* m);
TP_API void tp_nodal_destroy(tp_nodal* n);
TP_API void tp_poly_destroy(tp_poly* p);
TP_API void tp_report_destroy(tp_report* r);

/* ---- disc primitives ---- */

TP_API tp_status tp_mobius(tp_complex a, tp_complex z, tp_complex* out);
TP_API tp_status tp_magic(double a, tp_complex eta, tp_complex x, tp_complex y, tp_complex* out);
/* degree-2 Blaschke product lambda * m_a(lambda) */
TP_API tp_status tp_nodal_coordinate(tp_complex a, tp_complex lambda, tp_complex* out);
TP_API tp_status tp_hyperbolic_distance(tp_complex z, tp_complex w, double* out);
TP_API tp_status tp_caratheodory_tridisc(const tp_complex z[3], const tp_complex w[3], double* out);

/* ---- varieties ---- */

TP_API tp_status tp_alpha_create(const tp_complex coeffs[3], tp_alpha** out);
TP_API tp_status tp_alpha_get(const tp_alpha* a, tp_complex out[3]);
TP_API tp_status tp_alpha_triangle_check(const tp_alpha* a, int* out);
TP_API tp_status tp_alpha_residual(const tp_alpha* a, const tp_complex p[3], tp_complex* out);
TP_API tp_status tp_alpha_membership(const tp_alpha* a, const tp_complex p[3], double tol, int* out);
TP_API tp_status tp_alpha_graph_z3(const tp_alpha* a, tp_complex z1, tp_complex z2, tp_complex* out);
TP_API tp_status tp_realization_contains(double a, double b, tp_complex z1, tp_complex z2, int* out);

/* rotation automorphism carrying M_alpha onto M_|alpha|; beta = |alpha| */
TP_API tp_status tp_alpha_rotation_normalize(const tp_alpha* a, tp_automorphism** auto_out,
                                      tp_alpha** beta_out);

/* normalized parameters (A,B) reached from M_(1,1,1) at real (lambda,mu) in V */
TP_API tp_status tp_base_map(double lambda, double mu, double out_ab[2]);
/* inverse of the base map on W+; out = (lambda, mu), Newton iteration count */
TP_API tp_status tp_solve_base_point(double target_a, double target_b, double out_lambda_mu[2],
                              int* iterations);

TP_API tp_status tp_build_biholo(const tp_alpha* a, const tp_alpha* b, tp_automorphism** out);

/* n points of M_alpha, written as 3n complex numbers (z1,z2,z3 per point) */
TP_API tp_status tp_alpha_sample(const tp_alpha* a, size_t n, uint64_t seed, tp_complex* out);
TP_API tp_status tp_alpha_sample_shilov(const tp_alpha* a, size_t n, uint64_t seed, tp_complex* out);

/* ---- boundary classification ---- */

typedef enum tp_boundary_class {
    TP_CLASS_INTERIOR = 0,
    TP_CLASS_SHILOV = 1,
    TP_CLASS_BOUNDARY_NON_SHILOV = 2,
    TP_CLASS_OUTSIDE_CLOSURE = 3,
    TP_CLASS_AMBIGUOUS = 4
} tp_boundary_class;

TP_API const char* tp_boundary_class_name(tp_boundary_class c);

TP_API tp_status tp_closure_condition(tp_complex z, tp_complex w, int* out);
TP_API tp_status tp_xi_disc(tp_complex z, tp_complex zeta2, tp_complex out[3]);
TP_API tp_status tp_classify_point(const tp_alpha* a, const tp_complex p[3], double tol,
                            tp_boundary_class* out);

/* ---- automorphisms of the tridisc ---- */

TP_API tp_status tp_automorphism_identity(tp_automorphism** out);
TP_API tp_status tp_automorphism_apply(const tp_automorphism* m, const tp_complex p[3], tp_complex out[3]);
TP_API tp_status tp_automorphism_compose(const tp_automorphism* f, const tp_automorphism* g,
                                  tp_automorphism** out); /* f after g */
TP_API tp_status tp_automorphism_invert(const tp_automorphism* m, tp_automorphism** out);
/* factored form: coordinate j of the image is rot[j] * m_{center[j]}(z[perm[j]]) */
TP_API tp_status tp_automorphism_describe(const tp_automorphism* m, int perm[3], tp_complex rot[3],
                                   tp_complex center[3]);

/* ---- 3-point Pick machinery ---- */

TP_API tp_status tp_nodal_create(const tp_complex nodes[3], tp_complex gamma, tp_nodal** out);
TP_API tp_status tp_nodal_get(const tp_nodal* n, tp_complex nodes_out[3], tp_complex* gamma_out);
TP_API tp_status tp_nodal_disc_point(const tp_nodal* n, double t, tp_complex lambda, tp_complex out[3]);
TP_API tp_status tp_nodal_barycentric_split(const tp_nodal* n, int apex, double* s, double* t);

/* variant is 1 or 2; parameters of F_variant */
TP_API tp_status tp_nodal_interpolant(const tp_nodal* n, int variant, double* s, double* t,
                               tp_complex* nu, tp_complex* omega);
TP_API tp_status tp_interpolant_eval(const tp_nodal* n, int variant, const tp_complex p[3],
                              tp_complex* out);
/* coefficients A,B,C,D,E,F and the z1z2z3 coefficient, in that order */
TP_API tp_status tp_interpolant_coeffs(const tp_nodal* n, int variant, tp_complex out[7]);

/* the alpha triple whose variety contains the nodal surface of (a1,a2,a3) */
TP_API tp_status tp_nodal_variety(const tp_nodal* n, tp_alpha** out);
TP_API tp_status tp_variety_from_nodes(const tp_complex nodes[3], tp_alpha** out);

/* double root of the uniqueness quadratic at (z1, z2) */
TP_API tp_status tp_nodal_double_root_z3(const tp_nodal* n, tp_complex z1, tp_complex z2,
                                  tp_complex* out);

/* discriminant q1^2 - 4 q2 q0 of the uniqueness quadratic as a bivariate
 * polynomial; rel_max (optional) receives its largest coefficient magnitude
 * relative to that of q1^2 */
TP_API tp_status tp_nodal_discriminant(const tp_nodal* n, tp_poly** out, double* rel_max);

TP_API tp_status tp_recover_lambda(tp_complex z1, tp_complex z2, tp_complex a1, tp_complex a2,
                            tp_complex* lambda_t, tp_complex* lambda_sq);

/* normal form of the nodal disc: reparam and coordinate maps as
 * (rotation, center) pairs meaning w -> rot * m_center(w) */
TP_API tp_status tp_normalize_disc(const tp_complex nodes[3], tp_complex reparam[2],
                            tp_complex coord_maps[6], double* b2, tp_complex* b3);

/* nodes: three points of the tridisc (9 complex numbers), targets: three disc
 * points; out = 1 iff no two-point subproblem is extremal within margin_tol */
TP_API tp_status tp_pick_nondegenerate(const tp_complex nodes[9], const tp_complex targets[3],
                                double margin_tol, int* out);

/* ---- polynomials ---- */

TP_API tp_status tp_poly_create(int arity, size_t nterms, const int* exponents, const tp_complex* coeffs,
                         tp_poly** out);
TP_API tp_status tp_poly_arity(const tp_poly* p, int* out);
TP_API tp_status tp_poly_add(const tp_poly* p, const tp_poly* q, tp_poly** out);
TP_API tp_status tp_poly_mul(const tp_poly* p, const tp_poly* q, tp_poly** out);
TP_API tp_status tp_poly_eval(const tp_poly* p, const tp_complex* point, size_t npoint, tp_complex* out);
TP_API tp_status tp_poly_term_count(const tp_poly* p, size_t* out);
/* terms indexed in canonical graded-lex order */
TP_API tp_status tp_poly_term(const tp_poly* p, size_t index, int exponents_out[3], tp_complex* coeff_out);
TP_API tp_status tp_poly_is_zero(const tp_poly* p, double tol, int* out);
/* canonical text form; writes up to cap bytes (NUL included), reports the
 * full required size through needed */
TP_API tp_status tp_poly_to_string(const tp_poly* p, char* buf, size_t cap, size_t* needed);

/* ---- verification suite ---- */

typedef enum tp_check_status {
    TP_CHECK_PASS = 0,
    TP_CHECK_FAIL = 1,
    TP_CHECK_AMBIGUOUS = 2
} tp_check_status;

/* scale_percent scales sample counts (100 = specified counts; must be > 0) */
TP_API tp_status tp_verify_run(uint64_t seed, int scale_percent, tp_report** out);
TP_API tp_status tp_report_count(const tp_report* r, size_t* out);
TP_API tp_status tp_report_name(const tp_report* r, size_t index, const char** out);
TP_API tp_status tp_report_status(const tp_report* r, size_t index, tp_check_status* out);
TP_API tp_status tp_report_residual(const tp_report* r, size_t index, double* out);
TP_API tp_status tp_report_samples(const tp_report* r, size_t index, long* out);
TP_API tp_status tp_report_seed(const tp_report* r, size_t index, uint64_t* out);
TP_API tp_status tp_report_wall_seconds(const tp_report* r, size_t index, double* out);
TP_API tp_status tp_report_detail(const tp_report* r, size_t index, const char** out);
TP_API tp_status tp_report_all_passed(const tp_report* r, int* out);
TP_API tp_status tp_report_total_wall_seconds(const tp_report* r, double* out);

#ifdef __cplusplus
}
#endif

#endif /* TRIPICK_H */
