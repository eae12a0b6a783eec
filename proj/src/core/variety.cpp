#include "core/variety.hpp"

#include <algorithm>
#include <cmath>

#include "core/rng.hpp"

namespace tripick {

AlphaTriple::AlphaTriple(Complex a1_, Complex a2_, Complex a3_) : a1(a1_), a2(a2_), a3(a3_) {
    const double m1 = std::abs(a1), m2 = std::abs(a2), m3 = std::abs(a3);
    if (m1 == 0.0 && m2 == 0.0 && m3 == 0.0) throw_invalid("alpha triple must be nonzero");
    triangle_ok = (m1 + m2 > m3) && (m1 + m3 > m2) && (m2 + m3 > m1);
}

AlphaTriple AlphaTriple::normalized() const {
    const double m = std::max({std::abs(a1), std::abs(a2), std::abs(a3)});
    return AlphaTriple(a1 / m, a2 / m, a3 / m);
}

bool triangle_check(const AlphaTriple& alpha) { return alpha.triangle_ok; }

Complex defining_residual(const AlphaTriple& alpha, const Point3& p) {
    const Complex lhs = alpha.a1 * p[0] + alpha.a2 * p[1] + alpha.a3 * p[2];
    const Complex rhs = std::conj(alpha.a1) * p[1] * p[2] + std::conj(alpha.a2) * p[0] * p[2] +
                        std::conj(alpha.a3) * p[0] * p[1];
    return lhs - rhs;
}

bool membership(const AlphaTriple& alpha, const Point3& p, double tol) {
    for (const Complex& z : p)
        if (!(std::abs(z) < 1.0)) return false;
    return std::abs(defining_residual(alpha.normalized(), p)) < tol;
}

Complex graph_z3(const AlphaTriple& alpha, Complex z1, Complex z2) {
    if (std::abs(alpha.a3) < kDenominatorGuard)
        throw_degenerate("graph_z3: alpha3 = 0; permute coordinates first");
    const Complex a = alpha.a1 / std::conj(alpha.a3);
    const Complex b = alpha.a2 / std::conj(alpha.a3);
    const Complex omega = std::conj(alpha.a3) / alpha.a3;
    const Complex num = a * z1 + b * z2 - z1 * z2;
    const Complex den = std::conj(b) * z1 + std::conj(a) * z2 - 1.0;
    return omega * guarded_div(num, den, "graph_z3: singular denominator");
}

bool realization_contains(double a, double b, Complex z1, Complex z2) {
    if (!(a > 0.0 && b > 0.0 && a + b > 1.0 && a + 1.0 > b && b + 1.0 > a))
        throw_invalid("realization_contains: (a,b,1) must satisfy the triangle inequality");
    const Complex num = a * z1 + b * z2 - z1 * z2;
    const Complex den = b * z1 + a * z2 - 1.0;
    return std::abs(guarded_div(num, den, "realization_contains: singular denominator")) < 1.0;
}

namespace {

// permutation moving the largest |alpha_j| into the graph slot (index 2)
std::array<int, 3> graph_permutation(const AlphaTriple& alpha) {
    int k = 0;
    for (int j = 1; j < 3; ++j)
        if (std::abs(alpha.at(j)) > std::abs(alpha.at(k))) k = j;
    std::array<int, 3> perm{0, 1, 2};
    std::swap(perm[static_cast<std::size_t>(k)], perm[2]);
    return perm;
}

} // namespace

std::vector<Point3> sample_variety(const AlphaTriple& alpha, std::size_t n, std::uint64_t seed) {
    if (!alpha.triangle_ok) throw_invalid("sample_variety requires the triangle inequality");
    const auto perm = graph_permutation(alpha);
    const AlphaTriple work(alpha.at(perm[0]), alpha.at(perm[1]), alpha.at(perm[2]));

    constexpr double kRadius = 0.97;
    constexpr double kDenFloor = 1e-3;
    constexpr int kMaxAttempts = 100000;

    const Complex a = work.a1 / std::conj(work.a3);
    const Complex b = work.a2 / std::conj(work.a3);
    const Complex omega = std::conj(work.a3) / work.a3;

    std::vector<Point3> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        bool accepted = false;
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            const Complex z1 = rng.disc(kRadius);
            const Complex z2 = rng.disc(kRadius);
            const Complex den = std::conj(b) * z1 + std::conj(a) * z2 - 1.0;
            if (std::abs(den) <= kDenFloor) continue;
            const Complex z3 = omega * (a * z1 + b * z2 - z1 * z2) / den;
            if (!(std::abs(z3) < kRadius)) continue;
            Point3 p;
            p[static_cast<std::size_t>(perm[0])] = z1;
            p[static_cast<std::size_t>(perm[1])] = z2;
            p[static_cast<std::size_t>(perm[2])] = z3;
            out[i] = p;
            accepted = true;
            break;
        }
        if (!accepted)
            throw_no_convergence("sample_variety: acceptance rate collapsed (sampler starvation)");
    }
    return out;
}

} // namespace tripick
