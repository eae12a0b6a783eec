#include "core/complex_disc.hpp"

#include <algorithm>
#include <cmath>

namespace tripick {

Complex mobius(Complex a, Complex z) {
    if (!(std::abs(a) < 1.0)) throw_invalid("mobius: center must satisfy |a| < 1");
    return guarded_div(a - z, 1.0 - std::conj(a) * z, "mobius: denominator vanished");
}

Complex magic(const MagicParams& p, Complex x, Complex y) {
    const Complex eta = p.eta.value;
    const double a = p.a;
    const Complex num = a * x + (1.0 - a) * y + eta * x * y;
    const Complex den = 1.0 + eta * (1.0 - a) * x + eta * a * y;
    return guarded_div(num, den, "magic: denominator vanished");
}

Complex nodal_coordinate(Complex a, Complex lambda) {
    return lambda * mobius(a, lambda);
}

double hyperbolic_distance(Complex z, Complex w) {
    if (!(std::abs(z) < 1.0 && std::abs(w) < 1.0))
        throw_invalid("hyperbolic_distance: points must lie in the open disc");
    const double m = std::abs((z - w) / (1.0 - std::conj(z) * w));
    return std::atanh(m);
}

double caratheodory_tridisc(const Point3& z, const Point3& w) {
    double d = 0.0;
    for (int j = 0; j < 3; ++j) d = std::max(d, hyperbolic_distance(z[j], w[j]));
    return d;
}

} // namespace tripick
