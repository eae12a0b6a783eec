#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/automorphism.hpp"
#include "core/rng.hpp"

using namespace tripick;

TEST_CASE("disc automorphism: factored form round trip") {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const Complex rot = rng.torus();
        const Complex c = rng.disc(0.95);
        const DiscAutomorphism f = DiscAutomorphism::from_rotation_center(rot, c);
        CHECK(std::abs(f.rotation_part() - rot) < 1e-13);
        CHECK(std::abs(f.center() - c) < 1e-13);
        const Complex z = rng.disc(0.999);
        CHECK(std::abs(f.apply(z) - rot * mobius(c, z)) < 1e-13);
        CHECK(std::abs(f.apply(z)) < 1.0);
    }
}

TEST_CASE("disc automorphism: group laws") {
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        const DiscAutomorphism f = DiscAutomorphism::from_rotation_center(rng.torus(), rng.disc(0.9));
        const DiscAutomorphism g = DiscAutomorphism::from_rotation_center(rng.torus(), rng.disc(0.9));
        const Complex z = rng.disc(0.95);
        CHECK(std::abs((f * g).apply(z) - f.apply(g.apply(z))) < 1e-12);
        CHECK(std::abs((f * f.inverse()).apply(z) - z) < 1e-12);
        CHECK(std::abs(f.inverse().apply(f.apply(z)) - z) < 1e-12);
    }
    CHECK(std::abs(DiscAutomorphism::identity().apply(Complex(0.3, 0.2)) - Complex(0.3, 0.2)) ==
          0.0);
    CHECK(std::abs(DiscAutomorphism::rotation(Complex(0.0, 1.0)).apply(Complex(0.5)) -
                   Complex(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(DiscAutomorphism::mobius(Complex(0.4)).apply(Complex(0.4))) < 1e-15);
}

TEST_CASE("tridisc automorphism: identity, inverse, rotation moduli") {
    Rng rng(43);
    const TridiscAutomorphism id = TridiscAutomorphism::identity();
    for (int i = 0; i < 50; ++i) {
        const Point3 p{rng.disc(0.9), rng.disc(0.9), rng.disc(0.9)};
        const Point3 q = id.apply(p);
        for (int j = 0; j < 3; ++j) CHECK(p[static_cast<std::size_t>(j)] == q[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < 50; ++i) {
        TridiscAutomorphism t;
        t.perm = {1, 2, 0};
        for (int j = 0; j < 3; ++j)
            t.factor[static_cast<std::size_t>(j)] =
                DiscAutomorphism::from_rotation_center(rng.torus(), rng.disc(0.8));
        const TridiscAutomorphism inv = t.inverse();
        const Point3 p{rng.disc(0.9), rng.disc(0.9), rng.disc(0.9)};
        const Point3 back = inv.apply(t.apply(p));
        const Point3 fwd = t.apply(inv.apply(p));
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(std::abs(back[j] - p[j]) < 1e-12);
            CHECK(std::abs(fwd[j] - p[j]) < 1e-12);
        }
    }
    const TridiscAutomorphism rot =
        TridiscAutomorphism::rotations({Complex(0.0, 1.0), Complex(-1.0, 0.0), Complex(1.0, 0.0)});
    for (int i = 0; i < 50; ++i) {
        const Point3 p{rng.disc(0.9), rng.disc(0.9), rng.disc(0.9)};
        const Point3 q = rot.apply(p);
        for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(std::abs(q[j]) - std::abs(p[j])) < 1e-15);
        CHECK(std::abs(q[0] - Complex(0.0, 1.0) * p[0]) < 1e-15);
    }
}

TEST_CASE("tridisc automorphism: composition respects permutation bookkeeping") {
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        TridiscAutomorphism f, g;
        f.perm = {2, 0, 1};
        g.perm = {1, 0, 2};
        for (std::size_t j = 0; j < 3; ++j) {
            f.factor[j] = DiscAutomorphism::from_rotation_center(rng.torus(), rng.disc(0.7));
            g.factor[j] = DiscAutomorphism::from_rotation_center(rng.torus(), rng.disc(0.7));
        }
        const TridiscAutomorphism h = f * g;
        const Point3 p{rng.disc(0.9), rng.disc(0.9), rng.disc(0.9)};
        const Point3 expect = f.apply(g.apply(p));
        const Point3 got = h.apply(p);
        for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(got[j] - expect[j]) < 1e-12);
    }
}
