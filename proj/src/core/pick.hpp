#pragma once

#include <utility>

#include "core/automorphism.hpp"
#include "core/complex_disc.hpp"
#include "core/multipoly.hpp"
#include "core/variety.hpp"

namespace tripick {

// Data of a strictly 3-dimensional extremal problem in reduced form: three
// pairwise distinct, non-collinear disc points and a target parameter gamma
// strictly inside their open triangle.
struct NodalData {
    Complex a1, a2, a3;
    Complex gamma;

    NodalData(Complex a1_, Complex a2_, Complex a3_, Complex gamma_);

    Complex node(int j) const { return j == 0 ? a1 : (j == 1 ? a2 : a3); }

    // barycentric coordinates of gamma with respect to (a1, a2, a3)
    std::array<double, 3> barycentric() const;
};

// A 3-point Pick problem: nodes in the tridisc, targets in the disc.
struct PickProblem {
    std::array<Point3, 3> nodes;
    std::array<Complex, 3> targets;

    PickProblem(const std::array<Point3, 3>& nodes_, const std::array<Complex, 3>& targets_);
};

enum class Variant { F1, F2 };

// Composed magic-function interpolant
//   F1 = Phi_{t,omega}(Phi_{s,nu}(z1, z2), z3)
//   F2 = Phi_{t,omega}(Phi_{s,nu}(z1, z3), z2)
struct InterpolantSpec {
    Variant variant;
    double s, t;       // in (0,1)
    Complex nu, omega; // unimodular
};

// Coefficients of the trilinear rational form shared by both variants:
//   (A z1 + B z2 + C z3 + D z1z2 + E z1z3 + F z2z3 + top z1z2z3) /
//   (1 + top (conj(F) z1 + conj(E) z2 + conj(D) z3 + C z1z2 + B z1z3 + A z2z3))
// with |top| = 1 (the self-inversive denominator structure).
struct TrilinearCoeffs {
    Complex A, B, C, D, E, F;
    Complex top;
};

// Coefficients q2 z3^2 + q1 z3 + q0 of the cross-multiplied F1 - F2 numerator,
// each a bivariate polynomial in (z1, z2).
struct UniquenessQuadratic {
    MultiPoly q2, q1, q0;
};

// The nodal disc scaled by t: (B_{t a1}(lambda), B_{t a2}(lambda), B_{t a3}(lambda)).
Point3 nodal_point(const NodalData& nd, double t, Complex lambda);

// No two-point subproblem extremal: for every node pair the target distance
// stays below the Caratheodory distance by more than margin_tol.
bool nondegenerate(const PickProblem& p, double margin_tol = kDefaultTol);

// (s, t) with gamma = t (s a_i + (1-s) a_j) + (1-t) a_apex, apex in {1,2,3}
// (1-based), (i,j) the remaining indices in increasing order.
std::pair<double, double> barycentric_split(const NodalData& nd, int apex);

InterpolantSpec build_interpolant(const NodalData& nd, Variant variant);

Complex eval_interpolant(const InterpolantSpec& spec, const Point3& p);

TrilinearCoeffs trilinear_coeffs(const InterpolantSpec& spec);

Complex eval_trilinear(const TrilinearCoeffs& c, const Point3& p);

UniquenessQuadratic uniqueness_quadratic(const TrilinearCoeffs& c1, const TrilinearCoeffs& c2);

// q1^2 - 4 q2 q0; identically zero for coefficient sets derived from one
// consistent NodalData.
MultiPoly discriminant(const UniquenessQuadratic& q);
MultiPoly discriminant_poly(const TrilinearCoeffs& c1, const TrilinearCoeffs& c2);

// -q1/(2 q2), with the linear fallback -q0/q1 where |q2| < 1e-12; both
// degenerate is reported as a singular sample.
Complex double_root_z3(const UniquenessQuadratic& q, Complex z1, Complex z2);

// The alpha triple whose variety contains the nodal surface
// {(lambda m_{t a_j}(lambda))_j}: graph parameters
//   omega = (conj(a2)-conj(a1))/(a2-a1),
//   a = (a3-a2)/(conj(a2)-conj(a1)), b = (a1-a3)/(conj(a2)-conj(a1)),
// phase-split into an alpha triple scaled to max modulus 1.
AlphaTriple variety_from_nodes(Complex a1, Complex a2, Complex a3);

// Inversion of the nodal-disc coordinates: for z_i = lambda m_{t a_i}(lambda)
// returns (lambda t, lambda^2).
std::pair<Complex, Complex> recover_lambda(Complex z1, Complex z2, Complex a1, Complex a2);

// Normal form of a nodal disc: maps carrying (lambda m_{a_j}(lambda))_j onto
// (-lambda^2, lambda m_{b2}(lambda), lambda m_{b3}(lambda)) with b2 > 0.
struct DiscNormalization {
    DiscAutomorphism reparam;                   // lambda -> m_p(xi lambda)
    std::array<DiscAutomorphism, 3> coord_maps; // w -> rho_j m_{c_j}(w)
    double b2;
    Complex b3;
};

DiscNormalization normalize_disc(Complex a1, Complex a2, Complex a3);

} // namespace tripick
