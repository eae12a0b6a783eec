#pragma once

#include <cstdint>
#include <vector>

#include "core/automorphism.hpp"
#include "core/complex_disc.hpp"

namespace tripick {

// Parameter of the variety M_alpha in the tridisc, cut out by
//   a1 z1 + a2 z2 + a3 z3 = conj(a1) z2 z3 + conj(a2) z1 z3 + conj(a3) z1 z2.
// The triple is nonzero; whether it satisfies the strict triangle inequality
// |a_i| + |a_j| > |a_k| (all permutations) is decided at construction.
struct AlphaTriple {
    Complex a1, a2, a3;
    bool triangle_ok;

    AlphaTriple(Complex a1_, Complex a2_, Complex a3_);

    Complex at(int j) const { return j == 0 ? a1 : (j == 1 ? a2 : a3); }

    // scaled so max_j |a_j| = 1 (positive real scaling leaves M_alpha unchanged)
    AlphaTriple normalized() const;
};

bool triangle_check(const AlphaTriple& alpha);

// LHS - RHS of the defining equation at p (p need not lie in the tridisc).
Complex defining_residual(const AlphaTriple& alpha, const Point3& p);

// membership in M_alpha: residual of the max-normalized triple below tol and
// p strictly inside the tridisc
bool membership(const AlphaTriple& alpha, const Point3& p, double tol = kDefaultTol);

// Graph realization z3(z1,z2) = omega (a z1 + b z2 - z1 z2)/(conj(b) z1 + conj(a) z2 - 1)
// with a = alpha1/conj(alpha3), b = alpha2/conj(alpha3), omega = conj(alpha3)/alpha3.
// Requires alpha3 != 0; callers permute coordinates first otherwise.
Complex graph_z3(const AlphaTriple& alpha, Complex z1, Complex z2);

// |f_{a,b}(z1,z2)| < 1 for f_{a,b} = (a z1 + b z2 - z1 z2)/(b z1 + a z2 - 1),
// the domain realization D_{a,b}; (a,b,1) must satisfy the triangle inequality.
bool realization_contains(double a, double b, Complex z1, Complex z2);

// Deterministic rejection sampler: n points of M_alpha strictly inside the
// tridisc with residual at machine scale. Each index draws from its own
// seed-derived substream, so the output is independent of evaluation order.
std::vector<Point3> sample_variety(const AlphaTriple& alpha, std::size_t n, std::uint64_t seed);

} // namespace tripick
