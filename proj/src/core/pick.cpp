#include "core/pick.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tripick {

namespace {
constexpr double kCollinearTol = 1e-10;
constexpr double kInteriorGuard = 1e-12;
} // namespace

NodalData::NodalData(Complex a1_, Complex a2_, Complex a3_, Complex gamma_)
    : a1(a1_), a2(a2_), a3(a3_), gamma(gamma_) {
    for (const Complex& a : {a1, a2, a3})
        if (!(std::abs(a) < 1.0)) throw_invalid("nodes must lie in the open disc");
    if (std::abs(a1 - a2) < kInteriorGuard || std::abs(a1 - a3) < kInteriorGuard ||
        std::abs(a2 - a3) < kInteriorGuard)
        throw_degenerate("nodes must be pairwise distinct");
    const double area = std::imag((a2 - a1) * std::conj(a3 - a1));
    if (std::abs(area) < kCollinearTol) throw_degenerate("nodes must not be collinear");
    const auto w = barycentric();
    for (double wj : w)
        if (!(wj > kInteriorGuard && wj < 1.0 - kInteriorGuard))
            throw_invalid("gamma must lie strictly inside the node triangle");
}

std::array<double, 3> NodalData::barycentric() const {
    // gamma - a3 = w1 (a1 - a3) + w2 (a2 - a3), a real 2x2 system
    const Complex u = a1 - a3, v = a2 - a3, r = gamma - a3;
    const double det = u.real() * v.imag() - v.real() * u.imag();
    const double w1 = (r.real() * v.imag() - v.real() * r.imag()) / det;
    const double w2 = (u.real() * r.imag() - r.real() * u.imag()) / det;
    return {w1, w2, 1.0 - w1 - w2};
}

PickProblem::PickProblem(const std::array<Point3, 3>& nodes_,
                         const std::array<Complex, 3>& targets_)
    : nodes(nodes_), targets(targets_) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            if (std::abs(targets[si] - targets[sj]) < kInteriorGuard)
                throw_invalid("targets must be pairwise distinct");
            double sep = 0.0;
            for (std::size_t k = 0; k < 3; ++k)
                sep = std::max(sep, std::abs(nodes[si][k] - nodes[sj][k]));
            if (sep < kInteriorGuard) throw_invalid("nodes must be pairwise distinct");
        }
    }
}

Point3 nodal_point(const NodalData& nd, double t, Complex lambda) {
    if (!(t >= 0.0 && t <= 1.0)) throw_invalid("nodal_point: t must lie in [0,1]");
    if (!(std::abs(lambda) < 1.0)) throw_invalid("nodal_point: lambda must lie in the disc");
    return {nodal_coordinate(t * nd.a1, lambda), nodal_coordinate(t * nd.a2, lambda),
            nodal_coordinate(t * nd.a3, lambda)};
}

bool nondegenerate(const PickProblem& p, double margin_tol) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            const double lhs = hyperbolic_distance(p.targets[si], p.targets[sj]);
            const double rhs = caratheodory_tridisc(p.nodes[si], p.nodes[sj]);
            if (!(rhs - lhs > margin_tol)) return false;
        }
    }
    return true;
}

std::pair<double, double> barycentric_split(const NodalData& nd, int apex) {
    if (apex < 1 || apex > 3) throw_invalid("barycentric_split: apex must be 1, 2 or 3");
    const auto w = nd.barycentric();
    const auto ap = static_cast<std::size_t>(apex - 1);
    const double t = 1.0 - w[ap];
    std::size_t i = (ap == 0) ? 1 : 0; // smaller remaining index
    const double s = w[i] / t;
    // reconstruction is exact by construction; guard the open-interval contract
    if (!(s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0))
        throw_degenerate("barycentric_split: gamma on the triangle boundary");
    return {s, t};
}

InterpolantSpec build_interpolant(const NodalData& nd, Variant variant) {
    const auto phase = [](Complex from, Complex to) {
        return guarded_div(std::conj(to) - std::conj(from), to - from,
                           "build_interpolant: coincident split points");
    };
    if (variant == Variant::F1) {
        const auto [s, t] = barycentric_split(nd, 3);
        const Complex b = s * nd.a1 + (1.0 - s) * nd.a2;
        return {Variant::F1, s, t, phase(nd.a1, nd.a2), phase(b, nd.a3)};
    }
    const auto [s, t] = barycentric_split(nd, 2);
    const Complex b = s * nd.a1 + (1.0 - s) * nd.a3;
    return {Variant::F2, s, t, phase(nd.a1, nd.a3), phase(b, nd.a2)};
}

Complex eval_interpolant(const InterpolantSpec& spec, const Point3& p) {
    const MagicParams inner(spec.s, TorusPoint(spec.nu));
    const MagicParams outer(spec.t, TorusPoint(spec.omega));
    if (spec.variant == Variant::F1)
        return magic(outer, magic(inner, p[0], p[1]), p[2]);
    return magic(outer, magic(inner, p[0], p[2]), p[1]);
}

TrilinearCoeffs trilinear_coeffs(const InterpolantSpec& spec) {
    const double s = spec.s, t = spec.t;
    const Complex nu = spec.nu, om = spec.omega;
    if (spec.variant == Variant::F1) {
        return {t * s,
                t * (1.0 - s),
                Complex(1.0 - t),
                nu * t,
                om * s + nu * (1.0 - s) * (1.0 - t),
                nu * s * (1.0 - t) + om * (1.0 - s),
                om * nu};
    }
    // the inner pair of F2 is (z1, z3): same expansion with z2 and z3 swapped
    return {t * s,
            Complex(1.0 - t),
            t * (1.0 - s),
            om * s + nu * (1.0 - s) * (1.0 - t),
            nu * t,
            nu * s * (1.0 - t) + om * (1.0 - s),
            om * nu};
}

Complex eval_trilinear(const TrilinearCoeffs& c, const Point3& p) {
    const Complex z1 = p[0], z2 = p[1], z3 = p[2];
    const Complex num = c.A * z1 + c.B * z2 + c.C * z3 + c.D * z1 * z2 + c.E * z1 * z3 +
                        c.F * z2 * z3 + c.top * z1 * z2 * z3;
    const Complex den = 1.0 + c.top * (std::conj(c.F) * z1 + std::conj(c.E) * z2 +
                                       std::conj(c.D) * z3 + c.C * z1 * z2 + c.B * z1 * z3 +
                                       c.A * z2 * z3);
    return guarded_div(num, den, "eval_trilinear: singular denominator");
}

namespace {

struct FractionalLinear {
    // F = (de + al z3)/(ga + be z3) with coefficients bivariate in (z1, z2)
    MultiPoly al, be, ga, de;
};

FractionalLinear split_in_z3(const TrilinearCoeffs& c) {
    MultiPoly al(2), be(2), ga(2), de(2);
    al.add_term({0, 0, 0}, c.C);
    al.add_term({1, 0, 0}, c.E);
    al.add_term({0, 1, 0}, c.F);
    al.add_term({1, 1, 0}, c.top);
    be.add_term({0, 0, 0}, c.top * std::conj(c.D));
    be.add_term({1, 0, 0}, c.top * c.B);
    be.add_term({0, 1, 0}, c.top * c.A);
    ga.add_term({0, 0, 0}, Complex(1.0));
    ga.add_term({1, 0, 0}, c.top * std::conj(c.F));
    ga.add_term({0, 1, 0}, c.top * std::conj(c.E));
    ga.add_term({1, 1, 0}, c.top * c.C);
    de.add_term({1, 0, 0}, c.A);
    de.add_term({0, 1, 0}, c.B);
    de.add_term({1, 1, 0}, c.D);
    return {al, be, ga, de};
}

} // namespace

UniquenessQuadratic uniqueness_quadratic(const TrilinearCoeffs& c1, const TrilinearCoeffs& c2) {
    const auto f = split_in_z3(c1);
    const auto g = split_in_z3(c2);
    return {f.al * g.be - g.al * f.be,
            f.al * g.ga - g.al * f.ga + g.be * f.de - f.be * g.de,
            g.ga * f.de - f.ga * g.de};
}

MultiPoly discriminant(const UniquenessQuadratic& q) {
    return q.q1 * q.q1 - (q.q2 * q.q0).scaled(Complex(4.0));
}

MultiPoly discriminant_poly(const TrilinearCoeffs& c1, const TrilinearCoeffs& c2) {
    return discriminant(uniqueness_quadratic(c1, c2));
}

Complex double_root_z3(const UniquenessQuadratic& q, Complex z1, Complex z2) {
    const std::array<Complex, 2> pt{z1, z2};
    const Complex v2 = q.q2.eval(pt);
    const Complex v1 = q.q1.eval(pt);
    if (std::abs(v2) >= kDenominatorGuard) return -v1 / (2.0 * v2);
    if (std::abs(v1) >= kDenominatorGuard) return -q.q0.eval(pt) / v1;
    throw_singular("double_root_z3: quadratic doubly degenerate at the sample");
}

AlphaTriple variety_from_nodes(Complex a1, Complex a2, Complex a3) {
    const Complex d = a2 - a1;
    if (std::abs(d) < kInteriorGuard) throw_degenerate("variety_from_nodes: a1 = a2");
    const Complex omega = std::conj(d) / d;
    const Complex a = (a3 - a2) / std::conj(d);
    const Complex b = (a1 - a3) / std::conj(d);
    const Complex eta = std::sqrt(omega);
    return AlphaTriple(a * eta, b * eta, std::conj(eta)).normalized();
}

std::pair<Complex, Complex> recover_lambda(Complex z1, Complex z2, Complex a1, Complex a2) {
    const Complex den = a1 - a2 + std::conj(a1) * z1 - std::conj(a2) * z2;
    if (std::abs(den) < kDenominatorGuard) throw_singular("recover_lambda: singular denominator");
    const Complex lambda_t = (z1 - z2) / den;
    const Complex lambda_sq = (a2 * z1 - a1 * z2 + (std::conj(a2) - std::conj(a1)) * z1 * z2) / den;
    return {lambda_t, lambda_sq};
}

namespace {

// derivative of B_a(lambda) = lambda m_a(lambda):
// B' = (conj(a) lambda^2 - 2 lambda + a)/(1 - conj(a) lambda)^2
Complex blaschke_derivative(Complex a, Complex lambda) {
    const Complex d = 1.0 - std::conj(a) * lambda;
    return (std::conj(a) * lambda * lambda - 2.0 * lambda + a) / (d * d);
}

// the critical point of B_a inside the disc: root of conj(a) p^2 - 2p + a
Complex blaschke_critical_point(Complex a) {
    const double m = std::abs(a);
    if (m < 1e-14) return Complex(0.0);
    return (1.0 - std::sqrt(1.0 - m * m)) / std::conj(a);
}

Complex unimodular(Complex z, const char* what) {
    const double m = std::abs(z);
    if (std::abs(m - 1.0) > 1e-6) throw_verification(std::string(what) + ": phase not unimodular");
    return z / m;
}

} // namespace

DiscNormalization normalize_disc(Complex a1, Complex a2, Complex a3) {
    const std::array<Complex, 3> nodes{a1, a2, a3};
    for (const Complex& a : nodes)
        if (!(std::abs(a) < 1.0)) throw_invalid("normalize_disc: nodes must lie in the disc");
    if (std::abs(a1 - a2) < kInteriorGuard || std::abs(a1 - a3) < kInteriorGuard ||
        std::abs(a2 - a3) < kInteriorGuard)
        throw_degenerate("normalize_disc: nodes must be pairwise distinct");

    const Complex p = blaschke_critical_point(a1);
    const double one_m_p2 = 1.0 - std::norm(p);

    std::array<Complex, 3> c, q, sigma;
    for (std::size_t j = 0; j < 3; ++j) {
        const Complex aj = nodes[j];
        c[j] = nodal_coordinate(aj, p);
        // second preimage of c_j under B_{a_j}: the quadratic
        // w^2 - (a_j + c_j conj(a_j)) w + c_j has p as one root
        const Complex w2 = (aj + c[j] * std::conj(aj)) - p;
        q[j] = mobius(p, w2);
        const double one_m_c2 = 1.0 - std::norm(c[j]);
        if (j == 0) {
            // B_1 o m_p has a critical point at 0; the quadratic coefficient is
            // closed-form (B_1'(p) = 0 kills the first-derivative term)
            sigma[j] = -(one_m_p2 * one_m_p2) /
                       ((1.0 - std::conj(a1) * p) * one_m_c2);
        } else {
            sigma[j] = blaschke_derivative(aj, p) * one_m_p2 / (one_m_c2 * q[j]);
        }
        sigma[j] = unimodular(sigma[j], "normalize_disc sigma");
    }

    const double q2m = std::abs(q[1]);
    if (q2m < kInteriorGuard)
        throw_degenerate("normalize_disc: coordinate-2 normal parameter vanished");
    const Complex xi = q[1] / q2m;

    DiscNormalization out;
    out.reparam = DiscAutomorphism::mobius(p) * DiscAutomorphism::rotation(xi);
    for (std::size_t j = 0; j < 3; ++j)
        out.coord_maps[j] =
            DiscAutomorphism::from_rotation_center(std::conj(sigma[j] * xi * xi), c[j]);
    out.b2 = q2m;
    out.b3 = q[2] * std::conj(xi);

    // the construction promises the normal form; spot-check it
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
        const Complex lam = std::polar(0.15 + 0.1 * k, 0.8 * k);
        for (std::size_t j = 0; j < 3; ++j) {
            const Complex got =
                out.coord_maps[j].apply(nodal_coordinate(nodes[j], out.reparam.apply(lam)));
            const Complex want = (j == 0) ? -lam * lam
                                          : nodal_coordinate(j == 1 ? Complex(out.b2) : out.b3, lam);
            worst = std::max(worst, std::abs(got - want));
        }
    }
    if (worst > 1e-10)
        throw_verification("normalize_disc: normal form check failed, error " +
                           std::to_string(worst));
    return out;
}

} // namespace tripick
