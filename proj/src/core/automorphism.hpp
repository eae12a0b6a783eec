#pragma once

#include <array>

#include "core/complex_disc.hpp"

namespace tripick {

// Automorphism of the unit disc in the self-adjoint matrix form
//   f(z) = (a z + b) / (conj(b) z + conj(a)),   |b| < |a|.
// This representation composes by 2x2 matrix multiplication and stays
// numerically tame under normalization (cf. the usual SU(1,1) picture).
// The factored form rotation * m_center is recovered on demand:
//   rotation = -a^2/|a|^2,  center = -b/a.
struct DiscAutomorphism {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    static DiscAutomorphism identity() { return {}; }

    // z -> rot * z, |rot| = 1
    static DiscAutomorphism rotation(Complex rot);

    // z -> m_c(z) = (c - z)/(1 - conj(c) z)
    static DiscAutomorphism mobius(Complex c);

    // z -> rot * m_c(z)
    static DiscAutomorphism from_rotation_center(Complex rot, Complex c);

    Complex apply(Complex z) const;
    DiscAutomorphism inverse() const { return {std::conj(a), -b}; }
    DiscAutomorphism normalized() const;

    Complex rotation_part() const { return -(a * a) / std::norm(a); }
    Complex center() const { return -b / a; }

    friend DiscAutomorphism operator*(const DiscAutomorphism& f, const DiscAutomorphism& g);
};

// Automorphism of the tridisc: coordinate permutation followed by a disc
// automorphism in each slot,
//   phi(z)_j = factor[j]( z[perm[j]] ).
struct TridiscAutomorphism {
    std::array<int, 3> perm{0, 1, 2};
    std::array<DiscAutomorphism, 3> factor{};

    static TridiscAutomorphism identity() { return {}; }
    static TridiscAutomorphism rotations(const std::array<Complex, 3>& rots);
    static TridiscAutomorphism mobius_triple(Complex c1, Complex c2, Complex c3);

    Point3 apply(const Point3& p) const;
    TridiscAutomorphism inverse() const;

    friend TridiscAutomorphism operator*(const TridiscAutomorphism& f,
                                         const TridiscAutomorphism& g);  // f after g
};

} // namespace tripick
