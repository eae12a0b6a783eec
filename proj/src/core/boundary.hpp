#pragma once

#include <cstdint>
#include <vector>

#include "core/variety.hpp"

namespace tripick {

enum class BoundaryClass {
    interior,
    shilov,              // closure point on the three-torus
    boundary_non_shilov, // closure point with some coordinate strictly inside
    outside_closure,
    ambiguous, // within the tolerance band; honest reporting over a forced call
};

const char* to_string(BoundaryClass c);

// Denominator-free closure test for the (1,1,1) model:
//   2 Re(z)(1-|w|^2) + 2 Re(w)(1-|z|^2) <= 1 - |z|^2 |w|^2,
// equivalent to |f_{1,1}(z,w)| <= 1 where both sides make sense.
bool closure_condition(Complex z, Complex w);

// The analytic disc (z, zeta2, (z + zeta2 - z zeta2)/(z + zeta2 - 1)); lies in
// the closure of M_{(1,1,1)} exactly when Re(zeta2) <= 1/2.
Point3 xi_disc(Complex z, Complex zeta2);

// Classification of a point of the closed tridisc relative to the closure of
// M_alpha. General alpha is transported to the (1,1,1) model through the
// Theorem-1 automorphism (which extends continuously to the closed tridisc);
// the tolerance is transported conservatively (x10).
BoundaryClass classify_point(const AlphaTriple& alpha, const Point3& p, double tol = 1e-8);

// Points of closure(M_alpha) with all coordinates on the circle, parametrized
// through the graph formula over the two-torus. Deterministic per seed.
std::vector<Point3> sample_shilov(const AlphaTriple& alpha, std::size_t n, std::uint64_t seed);

} // namespace tripick
