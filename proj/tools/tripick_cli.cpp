// tripick command-line interface. Everything goes through the public C API in
// tripick.h; complex numbers are [re, im] pairs in all JSON payloads.
//
// Exit codes: 0 success / boolean true, 1 verification failed / boolean false,
// 2 invalid input. Results go to stdout, diagnostics to stderr.

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tripick.h"

using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail_invalid(const std::string& msg) { throw CliError{kExitInvalid, msg}; }

void check(tp_status s) {
    if (s != TP_OK)
        fail_invalid(std::string(tp_status_name(s)) + ": " + tp_last_error());
}

json to_json(tp_complex c) { return json::array({c.re, c.im}); }

tp_complex complex_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail_invalid(std::string(what) + ": expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail_invalid(std::string(what) + ": malformed JSON");
    return j;
}

void parse_triple(const std::string& text, const char* what, tp_complex out[3]) {
    const json j = parse(text, what);
    if (!j.is_array() || j.size() != 3)
        fail_invalid(std::string(what) + ": expected three [re, im] pairs");
    for (int i = 0; i < 3; ++i) out[i] = complex_from(j[static_cast<std::size_t>(i)], what);
}

tp_complex parse_complex(const std::string& text, const char* what) {
    return complex_from(parse(text, what), what);
}

using AlphaPtr = std::unique_ptr<tp_alpha, decltype(&tp_alpha_destroy)>;
using NodalPtr = std::unique_ptr<tp_nodal, decltype(&tp_nodal_destroy)>;
using AutoPtr = std::unique_ptr<tp_automorphism, decltype(&tp_automorphism_destroy)>;
using PolyPtr = std::unique_ptr<tp_poly, decltype(&tp_poly_destroy)>;
using ReportPtr = std::unique_ptr<tp_report, decltype(&tp_report_destroy)>;

AlphaPtr make_alpha(const std::string& text) {
    tp_complex c[3];
    parse_triple(text, "alpha", c);
    tp_alpha* a = nullptr;
    check(tp_alpha_create(c, &a));
    return {a, &tp_alpha_destroy};
}

NodalPtr make_nodal(const std::string& nodes_text, const std::string& gamma_text) {
    tp_complex nodes[3];
    parse_triple(nodes_text, "nodes", nodes);
    const tp_complex gamma = parse_complex(gamma_text, "gamma");
    tp_nodal* n = nullptr;
    check(tp_nodal_create(nodes, gamma, &n));
    return {n, &tp_nodal_destroy};
}

json automorphism_json(const tp_automorphism* m) {
    int perm[3];
    tp_complex rot[3], cen[3];
    check(tp_automorphism_describe(m, perm, rot, cen));
    json rotations = json::array(), centers = json::array();
    for (int j = 0; j < 3; ++j) {
        rotations.push_back(to_json(rot[j]));
        centers.push_back(to_json(cen[j]));
    }
    return {{"perm", {perm[0], perm[1], perm[2]}},
            {"rotations", rotations},
            {"centers", centers}};
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

int cmd_check_alpha(const std::string& alpha_text) {
    AlphaPtr a = make_alpha(alpha_text);
    tp_complex c[3];
    check(tp_alpha_get(a.get(), c));
    int tri = 0;
    check(tp_alpha_triangle_check(a.get(), &tri));
    emit({{"alpha", {to_json(c[0]), to_json(c[1]), to_json(c[2])}}, {"triangle", tri != 0}});
    return tri != 0 ? kExitTrue : kExitFalse;
}

int cmd_membership(const std::string& alpha_text, const std::string& point_text, double tol) {
    AlphaPtr a = make_alpha(alpha_text);
    tp_complex p[3];
    parse_triple(point_text, "point", p);
    tp_complex res;
    check(tp_alpha_residual(a.get(), p, &res));
    int member = 0;
    check(tp_alpha_membership(a.get(), p, tol, &member));
    emit({{"member", member != 0},
          {"residual", to_json(res)},
          {"residual_abs", std::hypot(res.re, res.im)},
          {"tol", tol}});
    return member != 0 ? kExitTrue : kExitFalse;
}

int cmd_graph(const std::string& alpha_text, const std::string& z1_text,
              const std::string& z2_text) {
    AlphaPtr a = make_alpha(alpha_text);
    const tp_complex z1 = parse_complex(z1_text, "z1");
    const tp_complex z2 = parse_complex(z2_text, "z2");
    tp_complex z3;
    check(tp_alpha_graph_z3(a.get(), z1, z2, &z3));
    emit({{"z3", to_json(z3)}, {"in_disc", std::hypot(z3.re, z3.im) < 1.0}});
    return kExitTrue;
}

int cmd_biholo(const std::string& alpha_text, const std::string& beta_text, std::uint64_t seed,
               long samples, double tol) {
    AlphaPtr a = make_alpha(alpha_text);
    AlphaPtr b = make_alpha(beta_text);
    tp_automorphism* phi_raw = nullptr;
    check(tp_build_biholo(a.get(), b.get(), &phi_raw));
    AutoPtr phi(phi_raw, &tp_automorphism_destroy);
    tp_automorphism* inv_raw = nullptr;
    check(tp_automorphism_invert(phi.get(), &inv_raw));
    AutoPtr inv(inv_raw, &tp_automorphism_destroy);

    const auto worst_residual = [&](const tp_alpha* src, const tp_automorphism* map,
                                    const tp_alpha* dst, std::uint64_t s) {
        std::vector<tp_complex> pts(static_cast<std::size_t>(3 * samples));
        check(tp_alpha_sample(src, static_cast<size_t>(samples), s, pts.data()));
        tp_complex beta_c[3];
        check(tp_alpha_get(dst, beta_c));
        double norm = 0.0;
        for (const tp_complex& c : beta_c) norm = std::max(norm, std::hypot(c.re, c.im));
        tp_complex scaled[3];
        for (int j = 0; j < 3; ++j) scaled[j] = {beta_c[j].re / norm, beta_c[j].im / norm};
        tp_alpha* dn = nullptr;
        check(tp_alpha_create(scaled, &dn));
        AlphaPtr dst_norm(dn, &tp_alpha_destroy);
        double worst = 0.0;
        for (long i = 0; i < samples; ++i) {
            tp_complex img[3], res;
            check(tp_automorphism_apply(map, &pts[static_cast<std::size_t>(3 * i)], img));
            check(tp_alpha_residual(dst_norm.get(), img, &res));
            worst = std::max(worst, std::hypot(res.re, res.im));
        }
        return worst;
    };
    const double fwd = worst_residual(a.get(), phi.get(), b.get(), seed);
    const double bwd = worst_residual(b.get(), inv.get(), a.get(), seed + 1);
    const bool pass = fwd < tol && bwd < tol;
    json out = automorphism_json(phi.get());
    out["max_residual_forward"] = fwd;
    out["max_residual_inverse"] = bwd;
    out["samples"] = samples;
    out["seed"] = seed;
    out["pass"] = pass;
    emit(out);
    return pass ? kExitTrue : kExitFalse;
}

int cmd_normalize_alpha(const std::string& alpha_text) {
    AlphaPtr a = make_alpha(alpha_text);
    tp_automorphism* rot_raw = nullptr;
    tp_alpha* beta_raw = nullptr;
    check(tp_alpha_rotation_normalize(a.get(), &rot_raw, &beta_raw));
    AutoPtr rot(rot_raw, &tp_automorphism_destroy);
    AlphaPtr beta(beta_raw, &tp_alpha_destroy);
    tp_complex c[3];
    check(tp_alpha_get(beta.get(), c));
    json out = automorphism_json(rot.get());
    out["beta"] = {to_json(c[0]), to_json(c[1]), to_json(c[2])};
    emit(out);
    return kExitTrue;
}

json interpolant_json(const tp_nodal* nd, int variant) {
    double s = 0.0, t = 0.0;
    tp_complex nu, omega;
    check(tp_nodal_interpolant(nd, variant, &s, &t, &nu, &omega));
    tp_complex coeffs[7];
    check(tp_interpolant_coeffs(nd, variant, coeffs));
    return {{"s", s},
            {"t", t},
            {"nu", to_json(nu)},
            {"omega", to_json(omega)},
            {"coeffs",
             {{"A", to_json(coeffs[0])},
              {"B", to_json(coeffs[1])},
              {"C", to_json(coeffs[2])},
              {"D", to_json(coeffs[3])},
              {"E", to_json(coeffs[4])},
              {"F", to_json(coeffs[5])},
              {"top", to_json(coeffs[6])}}}};
}

int cmd_interpolants(const std::string& nodes_text, const std::string& gamma_text) {
    NodalPtr nd = make_nodal(nodes_text, gamma_text);
    emit({{"F1", interpolant_json(nd.get(), 1)}, {"F2", interpolant_json(nd.get(), 2)}});
    return kExitTrue;
}

int cmd_verify_discriminant(const std::string& nodes_text, const std::string& gamma_text,
                            std::uint64_t seed, double tol) {
    NodalPtr nd = make_nodal(nodes_text, gamma_text);
    tp_poly* disc_raw = nullptr;
    double rel_max = 0.0;
    check(tp_nodal_discriminant(nd.get(), &disc_raw, &rel_max));
    PolyPtr disc(disc_raw, &tp_poly_destroy);

    // seeded spot evaluation as an independent identity test
    double grid_max = 0.0;
    std::uint64_t state = seed;
    const auto next_unit = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 100; ++i) {
        const double r1 = 0.9 * std::sqrt(next_unit()), th1 = 6.2831853 * next_unit();
        const double r2 = 0.9 * std::sqrt(next_unit()), th2 = 6.2831853 * next_unit();
        const tp_complex pt[2] = {{r1 * std::cos(th1), r1 * std::sin(th1)},
                                  {r2 * std::cos(th2), r2 * std::sin(th2)}};
        tp_complex v;
        check(tp_poly_eval(disc.get(), pt, 2, &v));
        grid_max = std::max(grid_max, std::hypot(v.re, v.im));
    }
    size_t terms = 0;
    check(tp_poly_term_count(disc.get(), &terms));
    size_t needed = 0;
    check(tp_poly_to_string(disc.get(), nullptr, 0, &needed));
    std::vector<char> text(needed);
    check(tp_poly_to_string(disc.get(), text.data(), text.size(), nullptr));
    const bool pass = rel_max < tol;
    emit({{"rel_max_coeff", rel_max},
          {"grid_max_abs", grid_max},
          {"discriminant_terms", terms},
          {"discriminant", std::string(text.data())},
          {"seed", seed},
          {"tol", tol},
          {"pass", pass}});
    return pass ? kExitTrue : kExitFalse;
}

int cmd_uniqueness_z3(const std::string& nodes_text, const std::string& gamma_text,
                      const std::string& z1_text, const std::string& z2_text) {
    NodalPtr nd = make_nodal(nodes_text, gamma_text);
    const tp_complex z1 = parse_complex(z1_text, "z1");
    const tp_complex z2 = parse_complex(z2_text, "z2");
    tp_complex root;
    check(tp_nodal_double_root_z3(nd.get(), z1, z2, &root));
    tp_alpha* al_raw = nullptr;
    check(tp_nodal_variety(nd.get(), &al_raw));
    AlphaPtr al(al_raw, &tp_alpha_destroy);
    tp_complex gz;
    check(tp_alpha_graph_z3(al.get(), z1, z2, &gz));
    tp_complex alpha_c[3];
    check(tp_alpha_get(al.get(), alpha_c));
    emit({{"z3", to_json(root)},
          {"graph_z3", to_json(gz)},
          {"difference", std::hypot(root.re - gz.re, root.im - gz.im)},
          {"alpha", {to_json(alpha_c[0]), to_json(alpha_c[1]), to_json(alpha_c[2])}}});
    return kExitTrue;
}

int cmd_normalize_disc(const std::string& nodes_text) {
    tp_complex nodes[3];
    parse_triple(nodes_text, "nodes", nodes);
    tp_complex reparam[2], coord_maps[6], b3;
    double b2 = 0.0;
    check(tp_normalize_disc(nodes, reparam, coord_maps, &b2, &b3));
    json maps = json::array();
    for (int j = 0; j < 3; ++j)
        maps.push_back({{"rotation", to_json(coord_maps[2 * j])},
                        {"center", to_json(coord_maps[2 * j + 1])}});
    emit({{"reparam", {{"rotation", to_json(reparam[0])}, {"center", to_json(reparam[1])}}},
          {"coord_maps", maps},
          {"b2", b2},
          {"b3", to_json(b3)}});
    return kExitTrue;
}

int cmd_nondegenerate(const std::string& problem_text, double tol) {
    const json j = parse(problem_text, "problem");
    if (!j.is_object() || !j.contains("nodes") || !j.contains("targets"))
        fail_invalid("problem: expected {\"nodes\": [...], \"targets\": [...]}");
    const json& jn = j["nodes"];
    const json& jt = j["targets"];
    if (!jn.is_array() || jn.size() != 3 || !jt.is_array() || jt.size() != 3)
        fail_invalid("problem: three nodes and three targets required");
    tp_complex nodes[9], targets[3];
    for (std::size_t i = 0; i < 3; ++i) {
        const json& node = jn[i];
        if (!node.is_array() || node.size() != 3)
            fail_invalid("problem: each node is a point of the tridisc");
        for (std::size_t k = 0; k < 3; ++k)
            nodes[3 * i + k] = complex_from(node[k], "node coordinate");
        targets[i] = complex_from(jt[i], "target");
    }
    int nd = 0;
    check(tp_pick_nondegenerate(nodes, targets, tol, &nd));
    emit({{"nondegenerate", nd != 0}, {"tol", tol}});
    return nd != 0 ? kExitTrue : kExitFalse;
}

int cmd_shilov_classify(const std::string& alpha_text, const std::string& point_text, double tol) {
    AlphaPtr a = make_alpha(alpha_text);
    tp_complex p[3];
    parse_triple(point_text, "point", p);
    tp_boundary_class cls;
    check(tp_classify_point(a.get(), p, tol, &cls));
    emit({{"class", tp_boundary_class_name(cls)}, {"tol", tol}});
    return kExitTrue;
}

int cmd_sample(const std::string& alpha_text, long n, std::uint64_t seed,
               const std::string& format, bool shilov) {
    if (n < 0) fail_invalid("sample count must be nonnegative");
    AlphaPtr a = make_alpha(alpha_text);
    std::vector<tp_complex> pts(static_cast<std::size_t>(3 * std::max<long>(n, 1)));
    check(shilov ? tp_alpha_sample_shilov(a.get(), static_cast<size_t>(n), seed, pts.data())
                 : tp_alpha_sample(a.get(), static_cast<size_t>(n), seed, pts.data()));
    if (format == "csv") {
        std::printf("re1,im1,re2,im2,re3,im3\n");
        for (long i = 0; i < n; ++i) {
            const tp_complex* p = &pts[static_cast<std::size_t>(3 * i)];
            std::printf("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", p[0].re, p[0].im, p[1].re,
                        p[1].im, p[2].re, p[2].im);
        }
    } else if (format == "json") {
        json points = json::array();
        for (long i = 0; i < n; ++i) {
            const tp_complex* p = &pts[static_cast<std::size_t>(3 * i)];
            points.push_back({to_json(p[0]), to_json(p[1]), to_json(p[2])});
        }
        emit({{"points", points}, {"seed", seed}, {"count", n}});
    } else {
        fail_invalid("format must be json or csv");
    }
    return kExitTrue;
}

int cmd_verify_all(std::uint64_t seed, int scale_percent) {
    tp_report* rep_raw = nullptr;
    check(tp_verify_run(seed, scale_percent, &rep_raw));
    ReportPtr rep(rep_raw, &tp_report_destroy);

    size_t count = 0;
    check(tp_report_count(rep.get(), &count));
    json checks = json::array();
    long total_samples = 0;
    for (size_t i = 0; i < count; ++i) {
        const char *name = nullptr, *detail = nullptr;
        tp_check_status st;
        double worst = 0.0, secs = 0.0;
        long samples = 0;
        std::uint64_t cseed = 0;
        check(tp_report_name(rep.get(), i, &name));
        check(tp_report_status(rep.get(), i, &st));
        check(tp_report_residual(rep.get(), i, &worst));
        check(tp_report_samples(rep.get(), i, &samples));
        check(tp_report_seed(rep.get(), i, &cseed));
        check(tp_report_wall_seconds(rep.get(), i, &secs));
        check(tp_report_detail(rep.get(), i, &detail));
        total_samples += samples;
        checks.push_back({{"name", name},
                          {"status", st == TP_CHECK_PASS      ? "pass"
                                     : st == TP_CHECK_FAIL    ? "fail"
                                                              : "ambiguous"},
                          {"worst_residual", worst},
                          {"samples", samples},
                          {"seed", cseed},
                          {"wall_seconds", secs},
                          {"detail", detail}});
    }
    int all = 0;
    check(tp_report_all_passed(rep.get(), &all));
    double total_secs = 0.0;
    check(tp_report_total_wall_seconds(rep.get(), &total_secs));
    emit({{"checks", checks},
          {"check_count", count},
          {"total_samples", total_samples},
          {"seed", seed},
          {"scale_percent", scale_percent},
          {"wall_seconds", total_secs},
          {"all_passed", all != 0}});
    return all != 0 ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"varieties of the unit tridisc and extremal 3-point interpolation"};
    app.require_subcommand(1);

    std::string alpha_text, beta_text, point_text, nodes_text, gamma_text;
    std::string z1_text, z2_text, problem_text, format = "json";
    double tol = 1e-10;
    double class_tol = 1e-8;
    double disc_tol = 1e-9;
    std::uint64_t seed = 0;
    long n = 0, samples = 200;
    int scale_percent = 100;

    auto* c_check = app.add_subcommand("check-alpha", "triangle-inequality classification");
    c_check->add_option("alpha", alpha_text, "alpha triple as JSON [[re,im] x3]")->required();

    auto* c_member = app.add_subcommand("membership", "membership of a point in M_alpha");
    c_member->add_option("--alpha", alpha_text)->required();
    c_member->add_option("--point", point_text)->required();
    c_member->add_option("--tol", tol);

    auto* c_graph = app.add_subcommand("graph", "graph coordinate z3(z1,z2)");
    c_graph->add_option("--alpha", alpha_text)->required();
    c_graph->add_option("--z1", z1_text)->required();
    c_graph->add_option("--z2", z2_text)->required();

    auto* c_biholo = app.add_subcommand("biholo", "automorphism with phi(M_alpha) = M_beta");
    c_biholo->add_option("--alpha", alpha_text)->required();
    c_biholo->add_option("--beta", beta_text)->required();
    c_biholo->add_option("--seed", seed)->required();
    c_biholo->add_option("--samples", samples);
    c_biholo->add_option("--tol", tol);

    auto* c_norm = app.add_subcommand("normalize-alpha", "rotation onto M_|alpha|");
    c_norm->add_option("--alpha", alpha_text)->required();

    auto* c_interp = app.add_subcommand("interpolants", "magic-function interpolants F1, F2");
    c_interp->add_option("--nodes", nodes_text)->required();
    c_interp->add_option("--gamma", gamma_text)->required();

    auto* c_disc = app.add_subcommand("verify-discriminant",
                                      "uniqueness-quadratic discriminant vanishing");
    c_disc->add_option("--nodes", nodes_text)->required();
    c_disc->add_option("--gamma", gamma_text)->required();
    c_disc->add_option("--seed", seed)->required();
    c_disc->add_option("--tol", disc_tol);

    auto* c_uniq = app.add_subcommand("uniqueness-z3",
                                      "double root of the uniqueness quadratic vs the graph");
    c_uniq->add_option("--nodes", nodes_text)->required();
    c_uniq->add_option("--gamma", gamma_text)->required();
    c_uniq->add_option("--z1", z1_text)->required();
    c_uniq->add_option("--z2", z2_text)->required();

    auto* c_nd = app.add_subcommand("normalize-disc", "normal form of a nodal disc");
    c_nd->add_option("--nodes", nodes_text)->required();

    auto* c_nondeg = app.add_subcommand("nondegenerate", "two-point subproblem extremality test");
    c_nondeg->add_option("--problem", problem_text)->required();
    c_nondeg->add_option("--tol", tol);

    auto* c_class = app.add_subcommand("shilov-classify", "closure/Shilov classification");
    c_class->add_option("--alpha", alpha_text)->required();
    c_class->add_option("--point", point_text)->required();
    c_class->add_option("--tol", class_tol);

    auto* c_sample = app.add_subcommand("sample", "seeded samples of M_alpha");
    c_sample->add_option("--alpha", alpha_text)->required();
    c_sample->add_option("-n,--count", n)->required();
    c_sample->add_option("--seed", seed)->required();
    c_sample->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* c_shilov = app.add_subcommand("sample-shilov", "seeded torus samples of the closure");
    c_shilov->add_option("--alpha", alpha_text)->required();
    c_shilov->add_option("-n,--count", n)->required();
    c_shilov->add_option("--seed", seed)->required();
    c_shilov->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* c_verify = app.add_subcommand("verify-all", "full deterministic verification suite");
    c_verify->add_option("--seed", seed)->required();
    c_verify->add_option("--scale-percent", scale_percent);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitInvalid;
    }

    try {
        if (c_check->parsed()) return cmd_check_alpha(alpha_text);
        if (c_member->parsed()) return cmd_membership(alpha_text, point_text, tol);
        if (c_graph->parsed()) return cmd_graph(alpha_text, z1_text, z2_text);
        if (c_biholo->parsed()) return cmd_biholo(alpha_text, beta_text, seed, samples, tol);
        if (c_norm->parsed()) return cmd_normalize_alpha(alpha_text);
        if (c_interp->parsed()) return cmd_interpolants(nodes_text, gamma_text);
        if (c_disc->parsed()) return cmd_verify_discriminant(nodes_text, gamma_text, seed, disc_tol);
        if (c_uniq->parsed()) return cmd_uniqueness_z3(nodes_text, gamma_text, z1_text, z2_text);
        if (c_nd->parsed()) return cmd_normalize_disc(nodes_text);
        if (c_nondeg->parsed()) return cmd_nondegenerate(problem_text, tol);
        if (c_class->parsed()) return cmd_shilov_classify(alpha_text, point_text, class_tol);
        if (c_sample->parsed()) return cmd_sample(alpha_text, n, seed, format, false);
        if (c_shilov->parsed()) return cmd_sample(alpha_text, n, seed, format, true);
        if (c_verify->parsed()) return cmd_verify_all(seed, scale_percent);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
    return kExitInvalid;
}
