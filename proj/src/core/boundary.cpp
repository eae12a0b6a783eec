#include "core/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "core/equivalence.hpp"
#include "core/rng.hpp"

namespace tripick {

const char* to_string(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::interior: return "interior";
        case BoundaryClass::shilov: return "shilov";
        case BoundaryClass::boundary_non_shilov: return "boundary-non-shilov";
        case BoundaryClass::outside_closure: return "outside-closure";
        case BoundaryClass::ambiguous: return "ambiguous";
    }
    return "?";
}

bool closure_condition(Complex z, Complex w) {
    const double nz = std::norm(z), nw = std::norm(w);
    if (nz > 1.0 + 1e-9 || nw > 1.0 + 1e-9)
        throw_invalid("closure_condition: inputs must lie in the closed disc");
    return 2.0 * z.real() * (1.0 - nw) + 2.0 * w.real() * (1.0 - nz) <= 1.0 - nz * nw;
}

Point3 xi_disc(Complex z, Complex zeta2) {
    const Complex den = z + zeta2 - 1.0;
    if (std::abs(den) < kDenominatorGuard) throw_singular("xi_disc: z + zeta2 = 1");
    return {z, zeta2, (z + zeta2 - z * zeta2) / den};
}

namespace {

bool is_positive_real_multiple_of_ones(const AlphaTriple& a) {
    const AlphaTriple n = a.normalized();
    for (int j = 0; j < 3; ++j) {
        const Complex v = n.at(j);
        if (std::abs(v - Complex(1.0)) > 1e-14) return false;
    }
    return true;
}

} // namespace

BoundaryClass classify_point(const AlphaTriple& alpha, const Point3& p, double tol) {
    if (!alpha.triangle_ok) throw_invalid("classify_point requires the triangle inequality");
    if (!(tol > 0.0)) throw_invalid("classify_point: tol must be positive");
    for (const Complex& z : p)
        if (std::abs(z) > 1.0 + 1e-9) throw_invalid("classify_point: point outside closed tridisc");

    const AlphaTriple ones(1.0, 1.0, 1.0);
    Point3 w = p;
    if (!is_positive_real_multiple_of_ones(alpha)) {
        const TridiscAutomorphism phi = build_biholo(alpha, ones);
        w = phi.apply(p);
        tol *= 10.0;
    }

    const double r = std::abs(defining_residual(ones, w));
    if (r >= 10.0 * tol) return BoundaryClass::outside_closure;
    if (r >= tol) return BoundaryClass::ambiguous;

    std::array<double, 3> m;
    for (std::size_t j = 0; j < 3; ++j) m[j] = std::abs(w[j]);
    const bool all_interior = std::all_of(m.begin(), m.end(),
                                          [&](double mj) { return mj < 1.0 - tol; });
    if (all_interior) return BoundaryClass::interior;
    const bool all_torus = std::all_of(m.begin(), m.end(),
                                       [&](double mj) { return mj > 1.0 - tol; });
    if (all_torus) return BoundaryClass::shilov;

    // mixed: residual-zero points of the closed tridisc extend to the closure
    // exactly when each circle coordinate satisfies the closure condition
    // against an interior one (for the symmetric (1,1,1) model the pairing
    // choice is immaterial)
    std::size_t inner = 0;
    for (std::size_t j = 1; j < 3; ++j)
        if (m[j] < m[inner]) inner = j;
    for (std::size_t j = 0; j < 3; ++j) {
        if (j == inner || m[j] < 1.0 - tol) continue;
        const Complex zj = w[j] / std::max(m[j], 1.0); // clamp tiny overshoots
        if (!closure_condition(w[inner], zj)) return BoundaryClass::outside_closure;
    }
    return BoundaryClass::boundary_non_shilov;
}

std::vector<Point3> sample_shilov(const AlphaTriple& alpha, std::size_t n, std::uint64_t seed) {
    if (!alpha.triangle_ok) throw_invalid("sample_shilov requires the triangle inequality");
    int slot = 0;
    for (int j = 1; j < 3; ++j)
        if (std::abs(alpha.at(j)) > std::abs(alpha.at(slot))) slot = j;
    std::array<int, 3> perm{0, 1, 2};
    std::swap(perm[static_cast<std::size_t>(slot)], perm[2]);
    const AlphaTriple work(alpha.at(perm[0]), alpha.at(perm[1]), alpha.at(perm[2]));

    const Complex a = work.a1 / std::conj(work.a3);
    const Complex b = work.a2 / std::conj(work.a3);
    const Complex omega = std::conj(work.a3) / work.a3;

    constexpr double kDenFloor = 1e-3;
    constexpr int kMaxAttempts = 100000;

    std::vector<Point3> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        bool accepted = false;
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            const Complex z1 = rng.torus(), z2 = rng.torus();
            const Complex den = std::conj(b) * z1 + std::conj(a) * z2 - 1.0;
            if (std::abs(den) <= kDenFloor) continue;
            const Complex z3 = omega * (a * z1 + b * z2 - z1 * z2) / den;
            Point3 p;
            p[static_cast<std::size_t>(perm[0])] = z1;
            p[static_cast<std::size_t>(perm[1])] = z2;
            p[static_cast<std::size_t>(perm[2])] = z3;
            out[i] = p;
            accepted = true;
            break;
        }
        if (!accepted)
            throw_no_convergence("sample_shilov: starvation near the singular torus set");
    }
    return out;
}

} // namespace tripick
