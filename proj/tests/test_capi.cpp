#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "tripick.h"

namespace {

double dist(tp_complex a, tp_complex b) { return std::hypot(a.re - b.re, a.im - b.im); }
double mag(tp_complex a) { return std::hypot(a.re, a.im); }

} // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(tp_status_name(TP_OK)) == "ok");
    CHECK(std::string(tp_status_name(TP_ERR_SINGULAR)) == "singular");
    CHECK(std::string(tp_version()).size() > 0);
}

TEST_CASE("disc primitives through the C surface") {
    tp_complex out;
    REQUIRE(tp_mobius({0.5, 0.0}, {0.2, 0.0}, &out) == TP_OK);
    CHECK(std::abs(out.re - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(out.im) < 1e-15);

    CHECK(tp_mobius({1.5, 0.0}, {0.0, 0.0}, &out) == TP_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(tp_last_error()) > 0);

    REQUIRE(tp_magic(1.0, {1.0, 0.0}, {0.3, 0.1}, {0.2, -0.4}, &out) == TP_OK);
    CHECK(dist(out, {0.3, 0.1}) < 1e-14);
    CHECK(tp_magic(0.5, {1.0, 0.0}, {-1.0, 0.0}, {-1.0, 0.0}, &out) == TP_ERR_SINGULAR);

    REQUIRE(tp_nodal_coordinate({0.0, 0.0}, {0.5, 0.0}, &out) == TP_OK);
    CHECK(dist(out, {-0.25, 0.0}) < 1e-15);

    double d = 0.0;
    REQUIRE(tp_hyperbolic_distance({0.0, 0.0}, {0.5, 0.0}, &d) == TP_OK);
    CHECK(d == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));

    const tp_complex z3[3] = {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    const tp_complex w3[3] = {{0.6, 0.0}, {0.3, 0.0}, {0.0, 0.0}};
    REQUIRE(tp_caratheodory_tridisc(z3, w3, &d) == TP_OK);
    CHECK(d == doctest::Approx(std::atanh(0.6)).epsilon(1e-14));
}

TEST_CASE("alpha lifecycle, residual, graph, membership") {
    const tp_complex ones[3] = {{1, 0}, {1, 0}, {1, 0}};
    tp_alpha* a = nullptr;
    REQUIRE(tp_alpha_create(ones, &a) == TP_OK);
    int tri = 0;
    REQUIRE(tp_alpha_triangle_check(a, &tri) == TP_OK);
    CHECK(tri == 1);

    const tp_complex origin[3] = {{0, 0}, {0, 0}, {0, 0}};
    tp_complex res;
    REQUIRE(tp_alpha_residual(a, origin, &res) == TP_OK);
    CHECK(mag(res) == 0.0);
    int member = 0;
    REQUIRE(tp_alpha_membership(a, origin, 1e-10, &member) == TP_OK);
    CHECK(member == 1);

    tp_complex z3;
    REQUIRE(tp_alpha_graph_z3(a, {0.2, 0.1}, {0.3, -0.2}, &z3) == TP_OK);
    const tp_complex pt[3] = {{0.2, 0.1}, {0.3, -0.2}, z3};
    REQUIRE(tp_alpha_residual(a, pt, &res) == TP_OK);
    CHECK(mag(res) < 1e-14);

    const tp_complex zero[3] = {{0, 0}, {0, 0}, {0, 0}};
    tp_alpha* bad = nullptr;
    CHECK(tp_alpha_create(zero, &bad) == TP_ERR_INVALID_ARGUMENT);
    CHECK(bad == nullptr);

    tp_alpha_destroy(a);
}

TEST_CASE("sampling determinism and rotation normalization via C API") {
    const tp_complex coeffs[3] = {{0.5, 0.5}, {1, 0}, {0.8, -0.2}};
    tp_alpha* a = nullptr;
    REQUIRE(tp_alpha_create(coeffs, &a) == TP_OK);

    std::vector<tp_complex> p1(30), p2(30);
    REQUIRE(tp_alpha_sample(a, 10, 99, p1.data()) == TP_OK);
    REQUIRE(tp_alpha_sample(a, 10, 99, p2.data()) == TP_OK);
    for (int i = 0; i < 30; ++i) {
        CHECK(p1[static_cast<std::size_t>(i)].re == p2[static_cast<std::size_t>(i)].re);
        CHECK(p1[static_cast<std::size_t>(i)].im == p2[static_cast<std::size_t>(i)].im);
    }

    std::vector<tp_complex> sh(30);
    REQUIRE(tp_alpha_sample_shilov(a, 10, 3, sh.data()) == TP_OK);
    for (const tp_complex& c : sh) CHECK(std::abs(mag(c) - 1.0) < 1e-10);

    tp_automorphism* rot = nullptr;
    tp_alpha* beta = nullptr;
    REQUIRE(tp_alpha_rotation_normalize(a, &rot, &beta) == TP_OK);
    tp_complex bc[3];
    REQUIRE(tp_alpha_get(beta, bc) == TP_OK);
    for (int j = 0; j < 3; ++j) {
        CHECK(bc[j].im == 0.0);
        CHECK(bc[j].re > 0.0);
    }
    // mapped sample satisfies the |alpha| equation
    tp_complex img[3], r;
    REQUIRE(tp_automorphism_apply(rot, p1.data(), img) == TP_OK);
    REQUIRE(tp_alpha_residual(beta, img, &r) == TP_OK);
    CHECK(mag(r) < 1e-10);

    tp_automorphism_destroy(rot);
    tp_alpha_destroy(beta);
    tp_alpha_destroy(a);
}

TEST_CASE("base map and Newton inverse via C API") {
    double ab[2];
    REQUIRE(tp_base_map(0.0, 0.0, ab) == TP_OK);
    CHECK(ab[0] == doctest::Approx(1.0));
    CHECK(ab[1] == doctest::Approx(1.0));
    double lm[2];
    int iters = -1;
    REQUIRE(tp_solve_base_point(1.4, 0.9, lm, &iters) == TP_OK);
    CHECK(iters >= 0);
    CHECK(iters <= 30);
    REQUIRE(tp_base_map(lm[0], lm[1], ab) == TP_OK);
    CHECK(std::abs(ab[0] - 1.4) < 1e-10);
    CHECK(std::abs(ab[1] - 0.9) < 1e-10);
    CHECK(tp_solve_base_point(0.2, 0.2, lm, nullptr) == TP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("biholomorphism and automorphism algebra via C API") {
    const tp_complex ca[3] = {{0.9, 0.1}, {0.7, -0.3}, {1, 0}};
    const tp_complex cb[3] = {{1, 0}, {1, 0}, {1, 0}};
    tp_alpha *a = nullptr, *b = nullptr;
    REQUIRE(tp_alpha_create(ca, &a) == TP_OK);
    REQUIRE(tp_alpha_create(cb, &b) == TP_OK);
    tp_automorphism* phi = nullptr;
    REQUIRE(tp_build_biholo(a, b, &phi) == TP_OK);

    std::vector<tp_complex> pts(60);
    REQUIRE(tp_alpha_sample(a, 20, 5, pts.data()) == TP_OK);
    tp_complex img[3], res;
    for (int i = 0; i < 20; ++i) {
        REQUIRE(tp_automorphism_apply(phi, &pts[static_cast<std::size_t>(3 * i)], img) == TP_OK);
        REQUIRE(tp_alpha_residual(b, img, &res) == TP_OK);
        CHECK(mag(res) < 1e-9);
    }

    tp_automorphism* inv = nullptr;
    REQUIRE(tp_automorphism_invert(phi, &inv) == TP_OK);
    tp_automorphism* id = nullptr;
    REQUIRE(tp_automorphism_compose(inv, phi, &id) == TP_OK);
    tp_complex back[3];
    REQUIRE(tp_automorphism_apply(id, pts.data(), back) == TP_OK);
    for (int j = 0; j < 3; ++j) CHECK(dist(back[j], pts[static_cast<std::size_t>(j)]) < 1e-11);

    int perm[3];
    tp_complex rot[3], cen[3];
    REQUIRE(tp_automorphism_describe(phi, perm, rot, cen) == TP_OK);
    for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(mag(rot[j]) - 1.0) < 1e-12);
        CHECK(mag(cen[j]) < 1.0);
    }

    tp_automorphism_destroy(id);
    tp_automorphism_destroy(inv);
    tp_automorphism_destroy(phi);
    tp_alpha_destroy(b);
    tp_alpha_destroy(a);
}

TEST_CASE("nodal data, interpolants, discriminant via C API") {
    const tp_complex nodes[3] = {{0.1, 0.2}, {0.5, -0.1}, {-0.2, 0.4}};
    const tp_complex gamma = {0.1333, 0.1667};
    tp_nodal* nd = nullptr;
    REQUIRE(tp_nodal_create(nodes, gamma, &nd) == TP_OK);

    double s = 0.0, t = 0.0;
    tp_complex nu, omega;
    REQUIRE(tp_nodal_interpolant(nd, 1, &s, &t, &nu, &omega) == TP_OK);
    CHECK(std::abs(mag(nu) - 1.0) < 1e-13);
    CHECK(std::abs(mag(omega) - 1.0) < 1e-13);
    CHECK(s > 0.0);
    CHECK(s < 1.0);

    // interpolation identity spot check through the C API
    tp_complex disc_pt[3], val, want;
    REQUIRE(tp_nodal_disc_point(nd, 0.6, {0.3, 0.25}, disc_pt) == TP_OK);
    REQUIRE(tp_interpolant_eval(nd, 1, disc_pt, &val) == TP_OK);
    REQUIRE(tp_nodal_coordinate({0.6 * 0.1333, 0.6 * 0.1667}, {0.3, 0.25}, &want) == TP_OK);
    CHECK(dist(val, want) < 1e-12);

    tp_complex coeffs[7];
    REQUIRE(tp_interpolant_coeffs(nd, 2, coeffs) == TP_OK);
    CHECK(std::abs(mag(coeffs[6]) - 1.0) < 1e-13);
    CHECK(tp_interpolant_coeffs(nd, 3, coeffs) == TP_ERR_INVALID_ARGUMENT);

    tp_poly* disc = nullptr;
    double rel = 1.0;
    REQUIRE(tp_nodal_discriminant(nd, &disc, &rel) == TP_OK);
    CHECK(rel < 1e-9);
    int arity = 0;
    REQUIRE(tp_poly_arity(disc, &arity) == TP_OK);
    CHECK(arity == 2);

    tp_complex root, gz;
    REQUIRE(tp_nodal_double_root_z3(nd, {0.2, 0.1}, {-0.3, 0.2}, &root) == TP_OK);
    tp_alpha* alpha = nullptr;
    REQUIRE(tp_nodal_variety(nd, &alpha) == TP_OK);
    REQUIRE(tp_alpha_graph_z3(alpha, {0.2, 0.1}, {-0.3, 0.2}, &gz) == TP_OK);
    CHECK(dist(root, gz) < 1e-9);

    tp_alpha_destroy(alpha);
    tp_poly_destroy(disc);
    tp_nodal_destroy(nd);

    // degenerate nodal data surfaces as an error code
    const tp_complex collinear[3] = {{0.0, 0.0}, {0.2, 0.0}, {0.4, 0.0}};
    tp_nodal* bad = nullptr;
    CHECK(tp_nodal_create(collinear, {0.2, 0.0}, &bad) == TP_ERR_DEGENERATE);
}

TEST_CASE("normalize-disc and nondegenerate via C API") {
    const tp_complex nodes[3] = {{0.1, 0.2}, {0.5, -0.1}, {-0.2, 0.4}};
    tp_complex reparam[2], maps[6], b3;
    double b2 = 0.0;
    REQUIRE(tp_normalize_disc(nodes, reparam, maps, &b2, &b3) == TP_OK);
    CHECK(b2 > 0.0);
    CHECK(mag(b3) < 1.0);
    CHECK(std::abs(mag(reparam[0]) - 1.0) < 1e-12);

    const tp_complex pnodes[9] = {{0.1, 0.0}, {0.0, 0.0}, {0.0, 0.0},
                                  {-0.3, 0.0}, {0.0, 0.0}, {0.0, 0.0},
                                  {0.0, 0.0}, {0.5, 0.0}, {0.0, 0.0}};
    const tp_complex ptargets[3] = {{0.1, 0.0}, {-0.3, 0.0}, {0.4, 0.0}};
    int ndg = 1;
    REQUIRE(tp_pick_nondegenerate(pnodes, ptargets, 1e-10, &ndg) == TP_OK);
    CHECK(ndg == 0);
}

TEST_CASE("polynomial handles: build, arithmetic, serialization") {
    const int exps[4] = {1, 0, 0, 1}; // z1 and z2
    const tp_complex cs[2] = {{1.0, 0.0}, {1.0, 0.0}};
    tp_poly *p = nullptr, *q = nullptr, *prod = nullptr;
    REQUIRE(tp_poly_create(2, 2, exps, cs, &p) == TP_OK);
    const int exps2[4] = {1, 0, 0, 1};
    const tp_complex cs2[2] = {{1.0, 0.0}, {-1.0, 0.0}};
    REQUIRE(tp_poly_create(2, 2, exps2, cs2, &q) == TP_OK);
    REQUIRE(tp_poly_mul(p, q, &prod) == TP_OK); // z1^2 - z2^2
    size_t terms = 0;
    REQUIRE(tp_poly_term_count(prod, &terms) == TP_OK);
    CHECK(terms == 2);
    const tp_complex at[2] = {{2.0, 0.0}, {3.0, 0.0}};
    tp_complex v;
    REQUIRE(tp_poly_eval(prod, at, 2, &v) == TP_OK);
    CHECK(dist(v, {-5.0, 0.0}) < 1e-13);

    int e[3];
    tp_complex c;
    REQUIRE(tp_poly_term(prod, 0, e, &c) == TP_OK);
    CHECK(tp_poly_term(prod, 5, e, &c) == TP_ERR_OUT_OF_RANGE);

    size_t needed = 0;
    REQUIRE(tp_poly_to_string(prod, nullptr, 0, &needed) == TP_OK);
    std::vector<char> buf(needed);
    REQUIRE(tp_poly_to_string(prod, buf.data(), buf.size(), &needed) == TP_OK);
    CHECK(std::string(buf.data()) == "(-1,0) z1^0 z2^2 + (1,0) z1^2 z2^0");

    int zero = 0;
    REQUIRE(tp_poly_is_zero(prod, 1e-9, &zero) == TP_OK);
    CHECK(zero == 0);

    tp_poly* sum = nullptr;
    REQUIRE(tp_poly_add(p, q, &sum) == TP_OK);
    tp_poly_destroy(sum);
    tp_poly_destroy(prod);
    tp_poly_destroy(q);
    tp_poly_destroy(p);
}

TEST_CASE("boundary classification via C API") {
    int cond = 0;
    REQUIRE(tp_closure_condition({0.0, 0.0}, {-1.0, 0.0}, &cond) == TP_OK);
    CHECK(cond == 1);
    REQUIRE(tp_closure_condition({0.0, 0.0}, {1.0, 0.0}, &cond) == TP_OK);
    CHECK(cond == 0);

    tp_complex xi[3];
    REQUIRE(tp_xi_disc({0.0, 0.0}, {-1.0, 0.0}, xi) == TP_OK);
    CHECK(dist(xi[2], {0.5, 0.0}) < 1e-15);

    const tp_complex ones[3] = {{1, 0}, {1, 0}, {1, 0}};
    tp_alpha* a = nullptr;
    REQUIRE(tp_alpha_create(ones, &a) == TP_OK);
    tp_boundary_class cls;
    const tp_complex origin[3] = {{0, 0}, {0, 0}, {0, 0}};
    REQUIRE(tp_classify_point(a, origin, 1e-8, &cls) == TP_OK);
    CHECK(cls == TP_CLASS_INTERIOR);
    CHECK(std::string(tp_boundary_class_name(cls)) == "interior");
    const tp_complex edge[3] = {{0.0, 0.0}, {-1.0, 0.0}, {0.5, 0.0}};
    REQUIRE(tp_classify_point(a, edge, 1e-8, &cls) == TP_OK);
    CHECK(cls == TP_CLASS_BOUNDARY_NON_SHILOV);
    tp_alpha_destroy(a);
}

TEST_CASE("verification report via C API") {
    tp_report* rep = nullptr;
    REQUIRE(tp_verify_run(2026, 5, &rep) == TP_OK); // 5% scale for speed
    size_t count = 0;
    REQUIRE(tp_report_count(rep, &count) == TP_OK);
    CHECK(count >= 20);
    int all = 0;
    REQUIRE(tp_report_all_passed(rep, &all) == TP_OK);
    CHECK(all == 1);
    const char* name = nullptr;
    REQUIRE(tp_report_name(rep, 0, &name) == TP_OK);
    CHECK(name != nullptr);
    // canonical check ordering: sorted by name
    std::string prev;
    for (size_t i = 0; i < count; ++i) {
        REQUIRE(tp_report_name(rep, i, &name) == TP_OK);
        CHECK(prev <= std::string(name));
        prev = name;
        tp_check_status st;
        REQUIRE(tp_report_status(rep, i, &st) == TP_OK);
        CHECK(st == TP_CHECK_PASS);
        double worst = -1.0, secs = -1.0;
        long samples = 0;
        REQUIRE(tp_report_residual(rep, i, &worst) == TP_OK);
        REQUIRE(tp_report_wall_seconds(rep, i, &secs) == TP_OK);
        REQUIRE(tp_report_samples(rep, i, &samples) == TP_OK);
        CHECK(worst >= 0.0);
        CHECK(secs >= 0.0);
        CHECK(samples >= 0);
    }
    const char* out = nullptr;
    CHECK(tp_report_name(rep, count, &out) == TP_ERR_OUT_OF_RANGE);
    tp_report_destroy(rep);

    tp_report* bad = nullptr;
    CHECK(tp_verify_run(1, 0, &bad) == TP_ERR_INVALID_ARGUMENT);
}
