#pragma once

#include <cstdint>
#include <utility>

#include "core/automorphism.hpp"
#include "core/variety.hpp"

namespace tripick {

// Real Moebius parameters (lambda, mu) with the induced third coordinate
// gamma = (lambda + mu - lambda mu)/(lambda + mu - 1); (lambda,mu,gamma) lies
// on M_{(1,1,1)} whenever (lambda, mu) is in the admissible region V.
struct BasePoint {
    double lambda;
    double mu;
    double gamma;
    int iterations = 0;  // Newton steps spent finding it (0 if constructed directly)
};

// V = {(lambda,mu) in (-1,1)^2 : |gamma| < 1}. Algebraically
// gamma^2 - 1 = Q P / (lambda+mu-1)^2 with Q = 2 lambda + 2 mu - lambda mu - 1
// and P = 1 - lambda mu > 0, so membership reduces to Q < 0.
bool in_V(double lambda, double mu);

// W+ = positive-quadrant component of the planar triangle-inequality region.
bool in_W_plus(double x1, double x2);

double gamma_of(double lambda, double mu);

// (A,B)(lambda,mu): the normalized variety parameters reached from M_{(1,1,1)}
// by the Moebius triple (m_lambda, m_mu, m_gamma) composed with a phase-fixing
// rotation. Maps V onto W+.
std::pair<double, double> base_map(double lambda, double mu);

// psi = (A+B, A-B) in closed form, and its Jacobian; psi sends V onto the
// strip {u > 1, |v| < 1}, with everywhere-nonzero determinant.
std::pair<double, double> psi_map(double lambda, double mu);
std::array<std::array<double, 2>, 2> psi_jacobian(double lambda, double mu);

// Damped Newton (step-halving to stay inside V) from (0,0), with a
// continuation fallback along the segment from (1,1) to the target inside W+.
// Residual tolerance 1e-12, at most 100 iterations.
BasePoint solve_base_point(double target_a, double target_b);

// Rotation triple carrying M_alpha onto M_{|alpha|}. The linear system for
// the half-phases admits both sign conventions depending on map direction;
// the candidate is verified on sampled variety points and negated if needed.
std::pair<TridiscAutomorphism, AlphaTriple> rotation_normalize(const AlphaTriple& alpha);

// Automorphism of the tridisc with phi(M_alpha) = M_beta (Theorem-1 chain
// M_alpha -> M_|alpha| -> M_(1,1,1) -> M_|beta| -> M_beta), verified on samples.
TridiscAutomorphism build_biholo(const AlphaTriple& alpha, const AlphaTriple& beta);

// Verification helper: worst |defining_residual(dst, phi(p))| over points p of
// M_src sampled algebraically through the graph formula (no disc constraint
// on the third coordinate; valid for rotation maps on all of C^3).
double max_mapped_residual_algebraic(const AlphaTriple& src, const TridiscAutomorphism& phi,
                                     const AlphaTriple& dst, int n, std::uint64_t seed);

// Same, with points drawn strictly inside the tridisc via sample_variety
// (required when phi contains Moebius factors).
double max_mapped_residual(const AlphaTriple& src, const TridiscAutomorphism& phi,
                           const AlphaTriple& dst, int n, std::uint64_t seed);

} // namespace tripick
