#include "tripick.h"

#include <cstring>
#include <string>

#include "core/boundary.hpp"
#include "core/equivalence.hpp"
#include "core/multipoly.hpp"
#include "core/pick.hpp"
#include "core/variety.hpp"
#include "core/verify.hpp"

using tripick::Complex;
using tripick::Point3;

struct tp_alpha {
    tripick::AlphaTriple v;
};
struct tp_automorphism {
    tripick::TridiscAutomorphism v;
};
struct tp_nodal {
    tripick::NodalData v;
};
struct tp_poly {
    tripick::MultiPoly v;
};
struct tp_report {
    tripick::VerificationReport v;
};

namespace {

thread_local std::string g_last_error;

tp_status map_code(tripick::ErrorCode c) {
    switch (c) {
        case tripick::ErrorCode::invalid_argument: return TP_ERR_INVALID_ARGUMENT;
        case tripick::ErrorCode::singular: return TP_ERR_SINGULAR;
        case tripick::ErrorCode::degenerate: return TP_ERR_DEGENERATE;
        case tripick::ErrorCode::no_convergence: return TP_ERR_NO_CONVERGENCE;
        case tripick::ErrorCode::verification: return TP_ERR_VERIFICATION;
        case tripick::ErrorCode::out_of_range: return TP_ERR_OUT_OF_RANGE;
    }
    return TP_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
tp_status wrap(Fn&& fn) {
    try {
        fn();
        return TP_OK;
    } catch (const tripick::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TP_ERR_INVALID_ARGUMENT;
    }
}

Complex in(tp_complex c) { return {c.re, c.im}; }
tp_complex out_c(Complex c) { return {c.real(), c.imag()}; }

Point3 in3(const tp_complex p[3]) { return {in(p[0]), in(p[1]), in(p[2])}; }

void put3(const Point3& p, tp_complex out[3]) {
    for (int j = 0; j < 3; ++j) out[j] = out_c(p[static_cast<std::size_t>(j)]);
}

[[noreturn]] void bad_arg(const char* what) { tripick::throw_invalid(what); }

template <typename T>
T& deref(T* p, const char* what) {
    if (p == nullptr) bad_arg(what);
    return *p;
}
template <typename T>
const T& deref(const T* p, const char* what) {
    if (p == nullptr) bad_arg(what);
    return *p;
}

} // namespace

extern "C" {

const char* tp_status_name(tp_status s) {
    switch (s) {
        case TP_OK: return "ok";
        case TP_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case TP_ERR_SINGULAR: return "singular";
        case TP_ERR_DEGENERATE: return "degenerate";
        case TP_ERR_NO_CONVERGENCE: return "no-convergence";
        case TP_ERR_VERIFICATION: return "verification";
        case TP_ERR_OUT_OF_RANGE: return "out-of-range";
    }
    return "?";
}

const char* tp_last_error(void) { return g_last_error.c_str(); }

const char* tp_version(void) { return "1.0.0"; }

void tp_alpha_destroy(tp_alpha* a) { delete a; }
void tp_automorphism_destroy(tp_automorphism* m) { delete m; }
void tp_nodal_destroy(tp_nodal* n) { delete n; }
void tp_poly_destroy(tp_poly* p) { delete p; }
void tp_report_destroy(tp_report* r) { delete r; }

/* ---- disc primitives ---- */

tp_status tp_mobius(tp_complex a, tp_complex z, tp_complex* out) {
    return wrap([&] { deref(out, "out") = out_c(tripick::mobius(in(a), in(z))); });
}

tp_status tp_magic(double a, tp_complex eta, tp_complex x, tp_complex y, tp_complex* out) {
    return wrap([&] {
        const tripick::MagicParams p(a, tripick::TorusPoint(in(eta)));
        deref(out, "out") = out_c(tripick::magic(p, in(x), in(y)));
    });
}

tp_status tp_nodal_coordinate(tp_complex a, tp_complex lambda, tp_complex* out) {
    return wrap([&] { deref(out, "out") = out_c(tripick::nodal_coordinate(in(a), in(lambda))); });
}

tp_status tp_hyperbolic_distance(tp_complex z, tp_complex w, double* out) {
    return wrap([&] { deref(out, "out") = tripick::hyperbolic_distance(in(z), in(w)); });
}

tp_status tp_caratheodory_tridisc(const tp_complex z[3], const tp_complex w[3], double* out) {
    return wrap([&] {
        deref(out, "out") =
            tripick::caratheodory_tridisc(in3(&deref(z, "z")), in3(&deref(w, "w")));
    });
}

/* ---- varieties ---- */

tp_status tp_alpha_create(const tp_complex coeffs[3], tp_alpha** out) {
    return wrap([&] {
        const tp_complex* c = &deref(coeffs, "coeffs");
        deref(out, "out") = new tp_alpha{tripick::AlphaTriple(in(c[0]), in(c[1]), in(c[2]))};
    });
}

tp_status tp_alpha_get(const tp_alpha* a, tp_complex out[3]) {
    return wrap([&] {
        const auto& v = deref(a, "alpha").v;
        put3({v.a1, v.a2, v.a3}, &deref(out, "out"));
    });
}

tp_status tp_alpha_triangle_check(const tp_alpha* a, int* out) {
    return wrap([&] { deref(out, "out") = deref(a, "alpha").v.triangle_ok ? 1 : 0; });
}

tp_status tp_alpha_residual(const tp_alpha* a, const tp_complex p[3], tp_complex* out) {
    return wrap([&] {
        deref(out, "out") =
            out_c(tripick::defining_residual(deref(a, "alpha").v, in3(&deref(p, "p"))));
    });
}

tp_status tp_alpha_membership(const tp_alpha* a, const tp_complex p[3], double tol, int* out) {
    return wrap([&] {
        deref(out, "out") =
            tripick::membership(deref(a, "alpha").v, in3(&deref(p, "p")), tol) ? 1 : 0;
    });
}

tp_status tp_alpha_graph_z3(const tp_alpha* a, tp_complex z1, tp_complex z2, tp_complex* out) {
    return wrap([&] {
        deref(out, "out") = out_c(tripick::graph_z3(deref(a, "alpha").v, in(z1), in(z2)));
    });
}

tp_status tp_realization_contains(double a, double b, tp_complex z1, tp_complex z2, int* out) {
    return wrap([&] {
        deref(out, "out") = tripick::realization_contains(a, b, in(z1), in(z2)) ? 1 : 0;
    });
}

tp_status tp_alpha_rotation_normalize(const tp_alpha* a, tp_automorphism** auto_out,
                                      tp_alpha** beta_out) {
    return wrap([&] {
        auto [rot, beta] = tripick::rotation_normalize(deref(a, "alpha").v);
        deref(auto_out, "auto_out") = new tp_automorphism{rot};
        deref(beta_out, "beta_out") = new tp_alpha{beta};
    });
}

tp_status tp_base_map(double lambda, double mu, double out_ab[2]) {
    return wrap([&] {
        const auto [A, B] = tripick::base_map(lambda, mu);
        double* o = &deref(out_ab, "out_ab");
        o[0] = A;
        o[1] = B;
    });
}

tp_status tp_solve_base_point(double target_a, double target_b, double out_lambda_mu[2],
                              int* iterations) {
    return wrap([&] {
        const tripick::BasePoint bp = tripick::solve_base_point(target_a, target_b);
        double* o = &deref(out_lambda_mu, "out_lambda_mu");
        o[0] = bp.lambda;
        o[1] = bp.mu;
        if (iterations != nullptr) *iterations = bp.iterations;
    });
}

tp_status tp_build_biholo(const tp_alpha* a, const tp_alpha* b, tp_automorphism** out) {
    return wrap([&] {
        deref(out, "out") =
            new tp_automorphism{tripick::build_biholo(deref(a, "alpha").v, deref(b, "beta").v)};
    });
}

tp_status tp_alpha_sample(const tp_alpha* a, size_t n, uint64_t seed, tp_complex* out) {
    return wrap([&] {
        const auto pts = tripick::sample_variety(deref(a, "alpha").v, n, seed);
        if (n == 0) return;
        tp_complex* o = &deref(out, "out");
        for (size_t i = 0; i < pts.size(); ++i) put3(pts[i], o + 3 * i);
    });
}

tp_status tp_alpha_sample_shilov(const tp_alpha* a, size_t n, uint64_t seed, tp_complex* out) {
    return wrap([&] {
        const auto pts = tripick::sample_shilov(deref(a, "alpha").v, n, seed);
        if (n == 0) return;
        tp_complex* o = &deref(out, "out");
        for (size_t i = 0; i < pts.size(); ++i) put3(pts[i], o + 3 * i);
    });
}

/* ---- boundary ---- */

const char* tp_boundary_class_name(tp_boundary_class c) {
    switch (c) {
        case TP_CLASS_INTERIOR: return "interior";
        case TP_CLASS_SHILOV: return "shilov";
        case TP_CLASS_BOUNDARY_NON_SHILOV: return "boundary-non-shilov";
        case TP_CLASS_OUTSIDE_CLOSURE: return "outside-closure";
        case TP_CLASS_AMBIGUOUS: return "ambiguous";
    }
    return "?";
}

tp_status tp_closure_condition(tp_complex z, tp_complex w, int* out) {
    return wrap([&] { deref(out, "out") = tripick::closure_condition(in(z), in(w)) ? 1 : 0; });
}

tp_status tp_xi_disc(tp_complex z, tp_complex zeta2, tp_complex out[3]) {
    return wrap([&] { put3(tripick::xi_disc(in(z), in(zeta2)), &deref(out, "out")); });
}

tp_status tp_classify_point(const tp_alpha* a, const tp_complex p[3], double tol,
                            tp_boundary_class* out) {
    return wrap([&] {
        const tripick::BoundaryClass c =
            tripick::classify_point(deref(a, "alpha").v, in3(&deref(p, "p")), tol);
        tp_boundary_class r = TP_CLASS_AMBIGUOUS;
        switch (c) {
            case tripick::BoundaryClass::interior: r = TP_CLASS_INTERIOR; break;
            case tripick::BoundaryClass::shilov: r = TP_CLASS_SHILOV; break;
            case tripick::BoundaryClass::boundary_non_shilov:
                r = TP_CLASS_BOUNDARY_NON_SHILOV;
                break;
            case tripick::BoundaryClass::outside_closure: r = TP_CLASS_OUTSIDE_CLOSURE; break;
            case tripick::BoundaryClass::ambiguous: r = TP_CLASS_AMBIGUOUS; break;
        }
        deref(out, "out") = r;
    });
}

/* ---- automorphisms ---- */

tp_status tp_automorphism_identity(tp_automorphism** out) {
    return wrap([&] {
        deref(out, "out") = new tp_automorphism{tripick::TridiscAutomorphism::identity()};
    });
}

tp_status tp_automorphism_apply(const tp_automorphism* m, const tp_complex p[3],
                                tp_complex out[3]) {
    return wrap([&] {
        put3(deref(m, "automorphism").v.apply(in3(&deref(p, "p"))), &deref(out, "out"));
    });
}

tp_status tp_automorphism_compose(const tp_automorphism* f, const tp_automorphism* g,
                                  tp_automorphism** out) {
    return wrap([&] {
        deref(out, "out") =
            new tp_automorphism{deref(f, "f").v * deref(g, "g").v};
    });
}

tp_status tp_automorphism_invert(const tp_automorphism* m, tp_automorphism** out) {
    return wrap([&] {
        deref(out, "out") = new tp_automorphism{deref(m, "automorphism").v.inverse()};
    });
}

tp_status tp_automorphism_describe(const tp_automorphism* m, int perm[3], tp_complex rot[3],
                                   tp_complex center[3]) {
    return wrap([&] {
        const auto& v = deref(m, "automorphism").v;
        int* po = &deref(perm, "perm");
        tp_complex* ro = &deref(rot, "rot");
        tp_complex* co = &deref(center, "center");
        for (std::size_t j = 0; j < 3; ++j) {
            po[j] = v.perm[j];
            ro[j] = out_c(v.factor[j].rotation_part());
            co[j] = out_c(v.factor[j].center());
        }
    });
}

/* ---- Pick machinery ---- */

tp_status tp_nodal_create(const tp_complex nodes[3], tp_complex gamma, tp_nodal** out) {
    return wrap([&] {
        const tp_complex* c = &deref(nodes, "nodes");
        deref(out, "out") =
            new tp_nodal{tripick::NodalData(in(c[0]), in(c[1]), in(c[2]), in(gamma))};
    });
}

tp_status tp_nodal_get(const tp_nodal* n, tp_complex nodes_out[3], tp_complex* gamma_out) {
    return wrap([&] {
        const auto& v = deref(n, "nodal").v;
        put3({v.a1, v.a2, v.a3}, &deref(nodes_out, "nodes_out"));
        deref(gamma_out, "gamma_out") = out_c(v.gamma);
    });
}

tp_status tp_nodal_disc_point(const tp_nodal* n, double t, tp_complex lambda, tp_complex out[3]) {
    return wrap([&] {
        put3(tripick::nodal_point(deref(n, "nodal").v, t, in(lambda)), &deref(out, "out"));
    });
}

tp_status tp_nodal_barycentric_split(const tp_nodal* n, int apex, double* s, double* t) {
    return wrap([&] {
        const auto [sv, tv] = tripick::barycentric_split(deref(n, "nodal").v, apex);
        deref(s, "s") = sv;
        deref(t, "t") = tv;
    });
}

namespace {

tripick::Variant variant_of(int v) {
    if (v == 1) return tripick::Variant::F1;
    if (v == 2) return tripick::Variant::F2;
    bad_arg("variant must be 1 or 2");
}

} // namespace

tp_status tp_nodal_interpolant(const tp_nodal* n, int variant, double* s, double* t,
                               tp_complex* nu, tp_complex* omega) {
    return wrap([&] {
        const auto spec = tripick::build_interpolant(deref(n, "nodal").v, variant_of(variant));
        deref(s, "s") = spec.s;
        deref(t, "t") = spec.t;
        deref(nu, "nu") = out_c(spec.nu);
        deref(omega, "omega") = out_c(spec.omega);
    });
}

tp_status tp_interpolant_eval(const tp_nodal* n, int variant, const tp_complex p[3],
                              tp_complex* out) {
    return wrap([&] {
        const auto spec = tripick::build_interpolant(deref(n, "nodal").v, variant_of(variant));
        deref(out, "out") = out_c(tripick::eval_interpolant(spec, in3(&deref(p, "p"))));
    });
}

tp_status tp_interpolant_coeffs(const tp_nodal* n, int variant, tp_complex out[7]) {
    return wrap([&] {
        const auto c = tripick::trilinear_coeffs(
            tripick::build_interpolant(deref(n, "nodal").v, variant_of(variant)));
        tp_complex* o = &deref(out, "out");
        o[0] = out_c(c.A);
        o[1] = out_c(c.B);
        o[2] = out_c(c.C);
        o[3] = out_c(c.D);
        o[4] = out_c(c.E);
        o[5] = out_c(c.F);
        o[6] = out_c(c.top);
    });
}

tp_status tp_nodal_variety(const tp_nodal* n, tp_alpha** out) {
    return wrap([&] {
        const auto& v = deref(n, "nodal").v;
        deref(out, "out") = new tp_alpha{tripick::variety_from_nodes(v.a1, v.a2, v.a3)};
    });
}

tp_status tp_variety_from_nodes(const tp_complex nodes[3], tp_alpha** out) {
    return wrap([&] {
        const tp_complex* c = &deref(nodes, "nodes");
        deref(out, "out") =
            new tp_alpha{tripick::variety_from_nodes(in(c[0]), in(c[1]), in(c[2]))};
    });
}

tp_status tp_nodal_double_root_z3(const tp_nodal* n, tp_complex z1, tp_complex z2,
                                  tp_complex* out) {
    return wrap([&] {
        const auto& v = deref(n, "nodal").v;
        const auto q = tripick::uniqueness_quadratic(
            tripick::trilinear_coeffs(tripick::build_interpolant(v, tripick::Variant::F1)),
            tripick::trilinear_coeffs(tripick::build_interpolant(v, tripick::Variant::F2)));
        deref(out, "out") = out_c(tripick::double_root_z3(q, in(z1), in(z2)));
    });
}

tp_status tp_nodal_discriminant(const tp_nodal* n, tp_poly** out, double* rel_max) {
    return wrap([&] {
        const auto& v = deref(n, "nodal").v;
        const auto q = tripick::uniqueness_quadratic(
            tripick::trilinear_coeffs(tripick::build_interpolant(v, tripick::Variant::F1)),
            tripick::trilinear_coeffs(tripick::build_interpolant(v, tripick::Variant::F2)));
        const tripick::MultiPoly disc = tripick::discriminant(q);
        if (rel_max != nullptr)
            *rel_max = disc.max_coeff_magnitude() / (q.q1 * q.q1).max_coeff_magnitude();
        deref(out, "out") = new tp_poly{disc};
    });
}

tp_status tp_recover_lambda(tp_complex z1, tp_complex z2, tp_complex a1, tp_complex a2,
                            tp_complex* lambda_t, tp_complex* lambda_sq) {
    return wrap([&] {
        const auto [lt, lsq] = tripick::recover_lambda(in(z1), in(z2), in(a1), in(a2));
        deref(lambda_t, "lambda_t") = out_c(lt);
        deref(lambda_sq, "lambda_sq") = out_c(lsq);
    });
}

tp_status tp_normalize_disc(const tp_complex nodes[3], tp_complex reparam[2],
                            tp_complex coord_maps[6], double* b2, tp_complex* b3) {
    return wrap([&] {
        const tp_complex* c = &deref(nodes, "nodes");
        const auto nf = tripick::normalize_disc(in(c[0]), in(c[1]), in(c[2]));
        tp_complex* rp = &deref(reparam, "reparam");
        rp[0] = out_c(nf.reparam.rotation_part());
        rp[1] = out_c(nf.reparam.center());
        tp_complex* cm = &deref(coord_maps, "coord_maps");
        for (std::size_t j = 0; j < 3; ++j) {
            cm[2 * j] = out_c(nf.coord_maps[j].rotation_part());
            cm[2 * j + 1] = out_c(nf.coord_maps[j].center());
        }
        deref(b2, "b2") = nf.b2;
        deref(b3, "b3") = out_c(nf.b3);
    });
}

tp_status tp_pick_nondegenerate(const tp_complex nodes[9], const tp_complex targets[3],
                                double margin_tol, int* out) {
    return wrap([&] {
        const tp_complex* nn = &deref(nodes, "nodes");
        const tp_complex* tt = &deref(targets, "targets");
        std::array<Point3, 3> np;
        std::array<Complex, 3> tg;
        for (std::size_t i = 0; i < 3; ++i) {
            np[i] = in3(nn + 3 * i);
            tg[i] = in(tt[i]);
        }
        deref(out, "out") =
            tripick::nondegenerate(tripick::PickProblem(np, tg), margin_tol) ? 1 : 0;
    });
}

/* ---- polynomials ---- */

tp_status tp_poly_create(int arity, size_t nterms, const int* exponents, const tp_complex* coeffs,
                         tp_poly** out) {
    return wrap([&] {
        tripick::MultiPoly p(arity);
        if (nterms > 0) {
            const int* e = &deref(exponents, "exponents");
            const tp_complex* c = &deref(coeffs, "coeffs");
            for (size_t i = 0; i < nterms; ++i) {
                tripick::MultiPoly::Exponents ex{0, 0, 0};
                for (int v = 0; v < arity; ++v)
                    ex[static_cast<std::size_t>(v)] = e[i * static_cast<size_t>(arity) +
                                                        static_cast<size_t>(v)];
                p.add_term(ex, in(c[i]));
            }
        }
        deref(out, "out") = new tp_poly{p};
    });
}

tp_status tp_poly_arity(const tp_poly* p, int* out) {
    return wrap([&] { deref(out, "out") = deref(p, "poly").v.arity(); });
}

tp_status tp_poly_add(const tp_poly* p, const tp_poly* q, tp_poly** out) {
    return wrap([&] { deref(out, "out") = new tp_poly{deref(p, "p").v + deref(q, "q").v}; });
}

tp_status tp_poly_mul(const tp_poly* p, const tp_poly* q, tp_poly** out) {
    return wrap([&] { deref(out, "out") = new tp_poly{deref(p, "p").v * deref(q, "q").v}; });
}

tp_status tp_poly_eval(const tp_poly* p, const tp_complex* point, size_t npoint, tp_complex* out) {
    return wrap([&] {
        const tp_complex* pt = &deref(point, "point");
        std::vector<Complex> z(npoint);
        for (size_t i = 0; i < npoint; ++i) z[i] = in(pt[i]);
        deref(out, "out") = out_c(deref(p, "poly").v.eval(z));
    });
}

tp_status tp_poly_term_count(const tp_poly* p, size_t* out) {
    return wrap([&] { deref(out, "out") = deref(p, "poly").v.term_count(); });
}

tp_status tp_poly_term(const tp_poly* p, size_t index, int exponents_out[3],
                       tp_complex* coeff_out) {
    return wrap([&] {
        const auto& terms = deref(p, "poly").v.terms();
        if (index >= terms.size())
            throw tripick::Error(tripick::ErrorCode::out_of_range, "term index out of range");
        auto it = terms.begin();
        std::advance(it, static_cast<long>(index));
        int* eo = &deref(exponents_out, "exponents_out");
        for (std::size_t v = 0; v < 3; ++v) eo[v] = it->first[v];
        deref(coeff_out, "coeff_out") = out_c(it->second);
    });
}

tp_status tp_poly_is_zero(const tp_poly* p, double tol, int* out) {
    return wrap([&] { deref(out, "out") = deref(p, "poly").v.is_zero(tol) ? 1 : 0; });
}

tp_status tp_poly_to_string(const tp_poly* p, char* buf, size_t cap, size_t* needed) {
    return wrap([&] {
        const std::string s = deref(p, "poly").v.to_string();
        if (needed != nullptr) *needed = s.size() + 1;
        if (buf != nullptr && cap > 0) {
            const size_t n = std::min(cap - 1, s.size());
            std::memcpy(buf, s.data(), n);
            buf[n] = '\0';
        }
    });
}

/* ---- verification ---- */

tp_status tp_verify_run(uint64_t seed, int scale_percent, tp_report** out) {
    return wrap([&] {
        if (scale_percent <= 0) bad_arg("scale_percent must be positive");
        tripick::VerifyConfig cfg;
        cfg.seed = seed;
        cfg.scale = scale_percent / 100.0;
        deref(out, "out") = new tp_report{tripick::verify_suite(cfg)};
    });
}

namespace {

const tripick::CheckResult& check_at(const tp_report* r, size_t index) {
    const auto& checks = deref(r, "report").v.checks;
    if (index >= checks.size())
        throw tripick::Error(tripick::ErrorCode::out_of_range, "check index out of range");
    return checks[index];
}

} // namespace

tp_status tp_report_count(const tp_report* r, size_t* out) {
    return wrap([&] { deref(out, "out") = deref(r, "report").v.checks.size(); });
}

tp_status tp_report_name(const tp_report* r, size_t index, const char** out) {
    return wrap([&] { deref(out, "out") = check_at(r, index).name.c_str(); });
}

tp_status tp_report_status(const tp_report* r, size_t index, tp_check_status* out) {
    return wrap([&] {
        switch (check_at(r, index).status) {
            case tripick::CheckStatus::pass: deref(out, "out") = TP_CHECK_PASS; break;
            case tripick::CheckStatus::fail: deref(out, "out") = TP_CHECK_FAIL; break;
            case tripick::CheckStatus::ambiguous: deref(out, "out") = TP_CHECK_AMBIGUOUS; break;
        }
    });
}

tp_status tp_report_residual(const tp_report* r, size_t index, double* out) {
    return wrap([&] { deref(out, "out") = check_at(r, index).worst_residual; });
}

tp_status tp_report_samples(const tp_report* r, size_t index, long* out) {
    return wrap([&] { deref(out, "out") = check_at(r, index).samples; });
}

tp_status tp_report_seed(const tp_report* r, size_t index, uint64_t* out) {
    return wrap([&] { deref(out, "out") = check_at(r, index).seed; });
}

tp_status tp_report_wall_seconds(const tp_report* r, size_t index, double* out) {
    return wrap([&] { deref(out, "out") = check_at(r, index).wall_seconds; });
}

tp_status tp_report_detail(const tp_report* r, size_t index, const char** out) {
    return wrap([&] { deref(out, "out") = check_at(r, index).detail.c_str(); });
}

tp_status tp_report_all_passed(const tp_report* r, int* out) {
    return wrap([&] { deref(out, "out") = deref(r, "report").v.all_passed() ? 1 : 0; });
}

tp_status tp_report_total_wall_seconds(const tp_report* r, double* out) {
    return wrap([&] { deref(out, "out") = deref(r, "report").v.wall_seconds; });
}

} /* extern "C" */
