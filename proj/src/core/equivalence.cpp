#include "core/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/rng.hpp"

namespace tripick {

namespace {
constexpr double kNewtonTol = 1e-12;
constexpr int kNewtonMaxIter = 100;
constexpr double kVerifyTol = 1e-9;

double Q_of(double lam, double mu) { return 2.0 * lam + 2.0 * mu - lam * mu - 1.0; }
} // namespace

bool in_V(double lambda, double mu) {
    return std::abs(lambda) < 1.0 && std::abs(mu) < 1.0 && Q_of(lambda, mu) < 0.0;
}

bool in_W_plus(double x1, double x2) {
    return x1 > 0.0 && x2 > 0.0 && x1 + x2 > 1.0 && x1 + 1.0 > x2 && x2 + 1.0 > x1;
}

double gamma_of(double lambda, double mu) {
    return (lambda + mu - lambda * mu) / (lambda + mu - 1.0);
}

std::pair<double, double> base_map(double lambda, double mu) {
    if (!in_V(lambda, mu)) throw_invalid("base_map: (lambda, mu) outside V");
    const double denom =
        1.0 + 2.0 * (lambda + mu) * (lambda * mu - 1.0) - lambda * lambda * mu * mu;
    const double A = (1.0 - lambda * lambda) * (mu * mu - mu + 1.0) / denom;
    const double B = (1.0 - mu * mu) * (lambda * lambda - lambda + 1.0) / denom;
    return {A, B};
}

std::pair<double, double> psi_map(double lambda, double mu) {
    const double Q = Q_of(lambda, mu);
    const double P = 1.0 - lambda * mu;
    return {(lambda + mu - 2.0 * lambda * mu - 2.0) / Q, (lambda - mu) / P};
}

std::array<std::array<double, 2>, 2> psi_jacobian(double lambda, double mu) {
    const double Q = Q_of(lambda, mu);
    const double P = 1.0 - lambda * mu;
    return {{{3.0 * (1.0 - mu * mu) / (Q * Q), 3.0 * (1.0 - lambda * lambda) / (Q * Q)},
             {(1.0 - mu * mu) / (P * P), (lambda * lambda - 1.0) / (P * P)}}};
}

namespace {

// one damped Newton run for psi(x) = (u,v); returns true on convergence
bool newton_psi(double u, double v, double& lam, double& mu, int& iters) {
    for (int it = 0; it < kNewtonMaxIter; ++it) {
        const auto [u0, v0] = psi_map(lam, mu);
        const double f1 = u0 - u, f2 = v0 - v;
        if (std::max(std::abs(f1), std::abs(f2)) < kNewtonTol) return true;
        const auto J = psi_jacobian(lam, mu);
        const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
        if (std::abs(det) < 1e-300) return false;
        const double dlam = -(f1 * J[1][1] - f2 * J[0][1]) / det;
        const double dmu = -(J[0][0] * f2 - J[1][0] * f1) / det;
        double step = 1.0;
        ++iters;
        bool moved = false;
        for (int h = 0; h < 60; ++h) {
            const double nl = lam + step * dlam, nm = mu + step * dmu;
            if (in_V(nl, nm)) {
                lam = nl;
                mu = nm;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) return false;
    }
    const auto [u0, v0] = psi_map(lam, mu);
    return std::max(std::abs(u0 - u), std::abs(v0 - v)) < kNewtonTol;
}

} // namespace

BasePoint solve_base_point(double target_a, double target_b) {
    if (!in_W_plus(target_a, target_b))
        throw_invalid("solve_base_point: target outside W+");
    const double u = target_a + target_b, v = target_a - target_b;

    double lam = 0.0, mu = 0.0;
    int iters = 0;
    bool ok = newton_psi(u, v, lam, mu, iters);

    if (!ok) {
        // continuation along the segment from (1,1) to the target; W+ is an
        // intersection of half-planes in the positive quadrant, hence convex
        lam = 0.0;
        mu = 0.0;
        iters = 0;
        const int steps = 64;
        ok = true;
        for (int k = 1; k <= steps && ok; ++k) {
            const double f = static_cast<double>(k) / steps;
            const double ta = 1.0 + f * (target_a - 1.0);
            const double tb = 1.0 + f * (target_b - 1.0);
            if (!in_W_plus(ta, tb) && k < steps) continue;
            ok = newton_psi(ta + tb, ta - tb, lam, mu, iters);
        }
    }
    if (!ok)
        throw_no_convergence("solve_base_point: Newton failed for target (" +
                             std::to_string(target_a) + ", " + std::to_string(target_b) + ")");
    return BasePoint{lam, mu, gamma_of(lam, mu), iters};
}

namespace {

// algebraic samples of M_alpha through the graph formula, third coordinate
// unconstrained; usable with rotation maps on all of C^3
std::vector<Point3> graph_samples(const AlphaTriple& alpha, int n, std::uint64_t seed) {
    int slot = 0;
    for (int j = 1; j < 3; ++j)
        if (std::abs(alpha.at(j)) > std::abs(alpha.at(slot))) slot = j;
    std::array<int, 3> perm{0, 1, 2};
    std::swap(perm[static_cast<std::size_t>(slot)], perm[2]);
    const AlphaTriple work(alpha.at(perm[0]), alpha.at(perm[1]), alpha.at(perm[2]));
    const Complex a = work.a1 / std::conj(work.a3);
    const Complex b = work.a2 / std::conj(work.a3);
    const Complex omega = std::conj(work.a3) / work.a3;

    std::vector<Point3> out;
    out.reserve(static_cast<std::size_t>(n));
    Rng rng(splitmix64(seed ^ 0x616c676272616963ull));
    while (static_cast<int>(out.size()) < n) {
        const Complex z1 = rng.disc(0.8), z2 = rng.disc(0.8);
        const Complex den = std::conj(b) * z1 + std::conj(a) * z2 - 1.0;
        if (std::abs(den) < 1e-3) continue;
        const Complex z3 = omega * (a * z1 + b * z2 - z1 * z2) / den;
        Point3 p;
        p[static_cast<std::size_t>(perm[0])] = z1;
        p[static_cast<std::size_t>(perm[1])] = z2;
        p[static_cast<std::size_t>(perm[2])] = z3;
        out.push_back(p);
    }
    return out;
}

double worst_residual(const std::vector<Point3>& pts, const TridiscAutomorphism& phi,
                      const AlphaTriple& dst) {
    const AlphaTriple d = dst.normalized();
    double worst = 0.0;
    for (const Point3& p : pts)
        worst = std::max(worst, std::abs(defining_residual(d, phi.apply(p))));
    return worst;
}

} // namespace

double max_mapped_residual_algebraic(const AlphaTriple& src, const TridiscAutomorphism& phi,
                                     const AlphaTriple& dst, int n, std::uint64_t seed) {
    return worst_residual(graph_samples(src, n, seed), phi, dst);
}

double max_mapped_residual(const AlphaTriple& src, const TridiscAutomorphism& phi,
                           const AlphaTriple& dst, int n, std::uint64_t seed) {
    return worst_residual(sample_variety(src, static_cast<std::size_t>(n), seed), phi, dst);
}

std::pair<TridiscAutomorphism, AlphaTriple> rotation_normalize(const AlphaTriple& alpha) {
    std::array<double, 3> s{};
    for (int j = 0; j < 3; ++j) {
        const Complex aj = alpha.at(j);
        s[static_cast<std::size_t>(j)] = std::abs(aj) == 0.0 ? 0.0 : std::arg(aj);
    }
    const AlphaTriple beta(std::abs(alpha.a1), std::abs(alpha.a2), std::abs(alpha.a3));

    // half-phases t solving A t = -s with A = 2I - J; closed form t_j = (s_k + s_l)/2
    const auto build = [](const std::array<double, 3>& t) {
        std::array<Complex, 3> rots;
        for (std::size_t j = 0; j < 3; ++j) rots[j] = std::polar(1.0, -2.0 * t[j]);
        return TridiscAutomorphism::rotations(rots);
    };
    std::array<double, 3> t{(s[1] + s[2]) / 2.0, (s[0] + s[2]) / 2.0, (s[0] + s[1]) / 2.0};

    TridiscAutomorphism rot = build(t);
    if (max_mapped_residual_algebraic(alpha, rot, beta, 32, 2026) > kVerifyTol) {
        for (double& tj : t) tj = -tj;
        rot = build(t);
        const double r = max_mapped_residual_algebraic(alpha, rot, beta, 32, 2026);
        if (r > kVerifyTol)
            throw_verification("rotation_normalize: both sign conventions failed, residual " +
                               std::to_string(r));
    }
    return {rot, beta};
}

namespace {

// Theorem-1 chain piece: automorphism carrying M_{(1,1,1)} onto M_{(a,b,1)}.
// The Moebius triple lands on M_{i(a,b,1)} (a unimodular phase away from the
// real-parameter variety); a rotation normalization fixes the phase.
TridiscAutomorphism base_to_target(double a, double b, int& newton_iters) {
    const BasePoint bp = solve_base_point(a, b);
    newton_iters = bp.iterations;
    const TridiscAutomorphism m =
        TridiscAutomorphism::mobius_triple(bp.lambda, bp.mu, bp.gamma);
    const AlphaTriple img(Complex(0.0, a), Complex(0.0, b), Complex(0.0, 1.0));
    auto [rot, beta] = rotation_normalize(img);
    return rot * m;
}

} // namespace

TridiscAutomorphism build_biholo(const AlphaTriple& alpha, const AlphaTriple& beta) {
    if (!alpha.triangle_ok || !beta.triangle_ok)
        throw_invalid("build_biholo requires the triangle inequality on both triples");

    auto [rot_a, abs_a] = rotation_normalize(alpha);
    auto [rot_b, abs_b] = rotation_normalize(beta);
    int it = 0;
    const TridiscAutomorphism theta_a =
        base_to_target(std::abs(alpha.a1) / std::abs(alpha.a3),
                       std::abs(alpha.a2) / std::abs(alpha.a3), it);
    const TridiscAutomorphism theta_b =
        base_to_target(std::abs(beta.a1) / std::abs(beta.a3),
                       std::abs(beta.a2) / std::abs(beta.a3), it);

    const TridiscAutomorphism phi =
        rot_b.inverse() * theta_b * theta_a.inverse() * rot_a;

    const double fwd = max_mapped_residual(alpha, phi, beta, 32, 77);
    const double bwd = max_mapped_residual(beta, phi.inverse(), alpha, 32, 78);
    if (fwd > kVerifyTol || bwd > kVerifyTol)
        throw_verification("build_biholo: verification residual " + std::to_string(fwd) + " / " +
                           std::to_string(bwd));
    return phi;
}

} // namespace tripick
