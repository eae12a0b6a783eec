#pragma once

#include <array>
#include <complex>

#include "core/errors.hpp"

namespace tripick {

using Complex = std::complex<double>;
using Point3 = std::array<Complex, 3>;

// Any rational evaluation whose denominator modulus falls below this guard
// raises ErrorCode::singular instead of returning a huge value.
inline constexpr double kDenominatorGuard = 1e-12;

// Default absolute tolerance for identities evaluated on inputs of modulus <= 0.95.
inline constexpr double kDefaultTol = 1e-10;

// A point of the open unit disc; the constructor enforces |value| < 1.
struct DiscPoint {
    Complex value;

    explicit DiscPoint(Complex v) : value(v) {
        if (!(std::abs(v) < 1.0)) throw_invalid("DiscPoint requires |value| < 1");
    }
};

// A unimodular constant; the constructor normalizes onto the circle.
struct TorusPoint {
    Complex value;

    explicit TorusPoint(Complex v) {
        const double m = std::abs(v);
        if (m < kDenominatorGuard) throw_invalid("TorusPoint requires a nonzero value");
        value = v / m;
    }
    static TorusPoint from_arg(double theta) { return TorusPoint(std::polar(1.0, theta)); }
};

// Parameters (a, eta) of a magic function, a in [0,1], |eta| = 1.
struct MagicParams {
    double a;
    TorusPoint eta;

    MagicParams(double a_, TorusPoint eta_) : a(a_), eta(eta_) {
        if (!(a >= 0.0 && a <= 1.0)) throw_invalid("MagicParams requires a in [0,1]");
    }
};

// m_a(z) = (a - z) / (1 - conj(a) z), an involution of the disc for |a| < 1.
Complex mobius(Complex a, Complex z);

// Phi_{a,eta}(x,y) = (a x + (1-a) y + eta x y) / (1 + eta (1-a) x + eta a y),
// the rational inner function on the bidisc used to assemble interpolants.
Complex magic(const MagicParams& p, Complex x, Complex y);

// Degree-2 Blaschke product lambda * m_a(lambda): the coordinate functions of
// nodal discs. Zeros exactly at 0 and a.
Complex nodal_coordinate(Complex a, Complex lambda);

// Poincare distance rho(z,w) = artanh |(z-w)/(1 - conj(z) w)| on the disc.
double hyperbolic_distance(Complex z, Complex w);

// Caratheodory distance of the tridisc: max_j rho(z_j, w_j).
double caratheodory_tridisc(const Point3& z, const Point3& w);

// (numerator, denominator) of a guarded rational evaluation.
inline Complex guarded_div(Complex num, Complex den, const char* where) {
    if (std::abs(den) < kDenominatorGuard) throw_singular(where);
    return num / den;
}

} // namespace tripick
