#include "core/automorphism.hpp"

#include <cmath>

namespace tripick {

DiscAutomorphism DiscAutomorphism::rotation(Complex rot) {
    const double m = std::abs(rot);
    if (m < kDenominatorGuard) throw_invalid("disc automorphism: zero rotation factor");
    // with b = 0, apply() gives (a/conj(a)) z = (a^2/|a|^2) z
    const Complex a = std::sqrt(rot / m);
    return {a, Complex(0.0, 0.0)};
}

DiscAutomorphism DiscAutomorphism::mobius(Complex c) {
    return from_rotation_center(Complex(1.0, 0.0), c);
}

DiscAutomorphism DiscAutomorphism::from_rotation_center(Complex rot, Complex c) {
    const double m = std::abs(rot);
    if (m < kDenominatorGuard) throw_invalid("disc automorphism: zero rotation factor");
    rot /= m;
    if (!(std::abs(c) < 1.0)) throw_invalid("disc automorphism: center must satisfy |c| < 1");
    // Solve (a z + b)/(conj(b) z + conj(a)) = rot * (c - z)/(1 - conj(c) z):
    // a = -chi rot, b = chi rot c with chi^2 = -conj(rot).
    const Complex eta = std::sqrt(rot);
    const Complex chi = Complex(0.0, 1.0) * std::conj(eta);
    return DiscAutomorphism{-chi * rot, chi * rot * c}.normalized();
}

Complex DiscAutomorphism::apply(Complex z) const {
    return guarded_div(a * z + b, std::conj(b) * z + std::conj(a),
                       "disc automorphism applied outside the closed disc");
}

DiscAutomorphism DiscAutomorphism::normalized() const {
    const double det = std::norm(a) - std::norm(b);
    if (det <= 0.0) throw_invalid("disc automorphism requires |b| < |a|");
    const double s = std::sqrt(det);
    return {a / s, b / s};
}

DiscAutomorphism operator*(const DiscAutomorphism& f, const DiscAutomorphism& g) {
    return DiscAutomorphism{f.a * g.a + f.b * std::conj(g.b),
                            f.a * g.b + f.b * std::conj(g.a)}
        .normalized();
}

TridiscAutomorphism TridiscAutomorphism::rotations(const std::array<Complex, 3>& rots) {
    TridiscAutomorphism t;
    for (std::size_t j = 0; j < 3; ++j) t.factor[j] = DiscAutomorphism::rotation(rots[j]);
    return t;
}

TridiscAutomorphism TridiscAutomorphism::mobius_triple(Complex c1, Complex c2, Complex c3) {
    TridiscAutomorphism t;
    t.factor = {DiscAutomorphism::mobius(c1), DiscAutomorphism::mobius(c2),
                DiscAutomorphism::mobius(c3)};
    return t;
}

Point3 TridiscAutomorphism::apply(const Point3& p) const {
    Point3 out;
    for (std::size_t j = 0; j < 3; ++j)
        out[j] = factor[j].apply(p[static_cast<std::size_t>(perm[j])]);
    return out;
}

TridiscAutomorphism TridiscAutomorphism::inverse() const {
    TridiscAutomorphism inv;
    for (int k = 0; k < 3; ++k) {
        const auto sk = static_cast<std::size_t>(k);
        // perm maps output slot j to input slot perm[j]; invert the table
        for (int j = 0; j < 3; ++j) {
            if (perm[static_cast<std::size_t>(j)] == k) {
                inv.perm[sk] = j;
                inv.factor[sk] = factor[static_cast<std::size_t>(j)].inverse();
            }
        }
    }
    return inv;
}

TridiscAutomorphism operator*(const TridiscAutomorphism& f, const TridiscAutomorphism& g) {
    TridiscAutomorphism h;
    for (std::size_t j = 0; j < 3; ++j) {
        const auto k = static_cast<std::size_t>(f.perm[j]);
        h.perm[j] = g.perm[k];
        h.factor[j] = f.factor[j] * g.factor[k];
    }
    return h;
}

} // namespace tripick
