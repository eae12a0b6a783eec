#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/complex_disc.hpp"
#include "core/rng.hpp"

using namespace tripick;

TEST_CASE("mobius: fixed values") {
    CHECK(std::abs(mobius(0.0, Complex(0.3, 0.4)) - Complex(-0.3, -0.4)) < 1e-15);
    CHECK(std::abs(mobius(Complex(0.2, 0.5), Complex(0.2, 0.5))) < 1e-15);
    // (0.5 - 0.2) / (1 - 0.1) = 1/3
    CHECK(std::abs(mobius(0.5, 0.2) - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("mobius: involution and boundary behaviour") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Complex a = rng.disc(0.95);
        const Complex z = rng.disc(0.999);
        CHECK(std::abs(mobius(a, mobius(a, z)) - z) < 1e-13);
        CHECK(std::abs(mobius(a, z)) < 1.0);
        const Complex u = rng.torus();
        CHECK(std::abs(std::abs(mobius(a, u)) - 1.0) < 1e-13);
    }
}

TEST_CASE("mobius: rejects centers outside the disc") {
    CHECK_THROWS_AS(mobius(Complex(1.0, 0.0), 0.0), Error);
    CHECK_THROWS_AS(mobius(Complex(0.8, 0.7), 0.0), Error);
}

TEST_CASE("magic: collapse and fixed point") {
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        const TorusPoint eta(rng.torus());
        const Complex x = rng.disc(0.9), y = rng.disc(0.9);
        CHECK(std::abs(magic(MagicParams(1.0, eta), x, y) - x) < 1e-14);
        CHECK(std::abs(magic(MagicParams(0.0, eta), x, y) - y) < 1e-14);
        CHECK(std::abs(magic(MagicParams(rng.uniform(), eta), 0.0, 0.0)) == 0.0);
    }
}

TEST_CASE("magic: inner on the torus, contraction inside") {
    Rng rng(13);
    int used = 0;
    while (used < 200) {
        const MagicParams p(rng.uniform(), TorusPoint(rng.torus()));
        const Complex x = rng.torus(), y = rng.torus();
        const Complex den = 1.0 + p.eta.value * ((1.0 - p.a) * x + p.a * y);
        if (std::abs(den) < 0.1) continue;
        CHECK(std::abs(std::abs(magic(p, x, y)) - 1.0) < 1e-12);
        ++used;
    }
    for (int i = 0; i < 200; ++i) {
        const MagicParams p(rng.uniform(), TorusPoint(rng.torus()));
        CHECK(std::abs(magic(p, rng.disc(0.95), rng.disc(0.95))) < 1.0);
    }
}

TEST_CASE("magic: parameter validation and denominator guard") {
    CHECK_THROWS_AS(MagicParams(-0.1, TorusPoint(Complex(1.0))), Error);
    CHECK_THROWS_AS(MagicParams(1.5, TorusPoint(Complex(1.0))), Error);
    CHECK_THROWS_AS(TorusPoint(Complex(0.0)), Error);
    // a = 1/2, eta = 1, x = y = -1 makes the denominator vanish exactly
    CHECK_THROWS_AS(magic(MagicParams(0.5, TorusPoint(Complex(1.0))), -1.0, -1.0), Error);
}

TEST_CASE("nodal_coordinate: zeros and the center-0 form") {
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        const Complex a = rng.disc(0.9);
        const Complex lam = rng.disc(0.999);
        CHECK(std::abs(nodal_coordinate(0.0, lam) + lam * lam) < 1e-15);
        CHECK(std::abs(nodal_coordinate(a, 0.0)) == 0.0);
        CHECK(std::abs(nodal_coordinate(a, a)) < 1e-15);
        CHECK(std::abs(nodal_coordinate(a, lam)) < 1.0);
    }
}

TEST_CASE("nodal_coordinate: winding number 2 on circles enclosing both zeros") {
    Rng rng(15);
    for (int rep = 0; rep < 5; ++rep) {
        const Complex a = rng.disc(0.6);
        const double r = std::abs(a) + 0.2;
        double total = 0.0;
        const int steps = 4000;
        Complex prev = nodal_coordinate(a, std::polar(r, 0.0));
        for (int k = 1; k <= steps; ++k) {
            const Complex cur = nodal_coordinate(a, std::polar(r, 2.0 * M_PI * k / steps));
            total += std::arg(cur / prev);
            prev = cur;
        }
        CHECK(std::abs(total / (2.0 * M_PI) - 2.0) < 1e-9);
    }
}

TEST_CASE("hyperbolic distance: formula, symmetry, invariance") {
    CHECK(hyperbolic_distance(Complex(0.3, -0.2), Complex(0.3, -0.2)) == 0.0);
    for (const double r : {0.1, 0.5, 0.9}) CHECK(hyperbolic_distance(0.0, r) == doctest::Approx(std::atanh(r)).epsilon(1e-14));
    Rng rng(16);
    for (int i = 0; i < 100; ++i) {
        const Complex z = rng.disc(0.9), w = rng.disc(0.9), a = rng.disc(0.9);
        const double d = hyperbolic_distance(z, w);
        CHECK(d == doctest::Approx(hyperbolic_distance(w, z)).epsilon(1e-13));
        CHECK(d == doctest::Approx(hyperbolic_distance(mobius(a, z), mobius(a, w))).epsilon(1e-10));
        CHECK((d == 0.0) == (z == w));
    }
}

TEST_CASE("caratheodory tridisc: max over coordinates") {
    const Point3 o{Complex(0.0), Complex(0.0), Complex(0.0)};
    CHECK(caratheodory_tridisc(o, o) == 0.0);
    CHECK(caratheodory_tridisc(o, {Complex(0.4), Complex(0.0), Complex(0.0)}) ==
          doctest::Approx(std::atanh(0.4)).epsilon(1e-14));
    CHECK(caratheodory_tridisc(o, {Complex(0.6), Complex(0.3), Complex(0.0)}) ==
          doctest::Approx(std::atanh(0.6)).epsilon(1e-14));
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        const Point3 z{rng.disc(0.9), rng.disc(0.9), rng.disc(0.9)};
        const Point3 w{rng.disc(0.9), rng.disc(0.9), rng.disc(0.9)};
        double m = 0.0;
        for (int j = 0; j < 3; ++j)
            m = std::max(m, hyperbolic_distance(z[static_cast<std::size_t>(j)],
                                                w[static_cast<std::size_t>(j)]));
        CHECK(caratheodory_tridisc(z, w) == doctest::Approx(m).epsilon(1e-14));
    }
}

TEST_CASE("disc point invariants") {
    CHECK_THROWS_AS(DiscPoint(Complex(1.0, 0.0)), Error);
    CHECK_NOTHROW(DiscPoint(Complex(0.99, 0.0)));
    const TorusPoint t(Complex(3.0, 4.0));
    CHECK(std::abs(std::abs(t.value) - 1.0) < 1e-15);
}
