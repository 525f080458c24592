#include <catch2/catch_amalgamated.hpp>

#include "sympair/orbital.hpp"

using namespace sympair;
using namespace sympair::gl4;

TEST_CASE("rs change of variables") {
    SECTION("exact determinant identity with rational exponential stand-ins") {
        RationalSampler s(61, 5, 3);
        for (int t = 0; t < 25; ++t) {
            Rational u1 = s.nonzero(), u2 = s.nonzero();
            Rational ex = abs(s.nonzero()) + Rational(1, 7);
            Rational ey = abs(s.nonzero()) + Rational(2, 5);
            for (int e1 : {1, -1})
                for (int e2 : {1, -1})
                    CHECK(rs_jacobian_exact(e1, e2, u1, u2, ex, ey) ==
                          Rational(e2) * u2 * u2 - Rational(e1) * u1 * u1);
        }
    }
    SECTION("float determinant matches |e1 u1^2 - e2 u2^2| to 1e-12") {
        std::mt19937_64 rng(62);
        std::uniform_real_distribution<double> d(-2.0, 2.0);
        for (int t = 0; t < 50; ++t) {
            double u1 = d(rng), u2 = d(rng), x = d(rng), y = d(rng);
            int e1 = rng() & 1 ? 1 : -1, e2 = rng() & 1 ? 1 : -1;
            double det = (u2 * std::exp(y)) * (e2 * u2 * std::exp(-y)) -
                         (-u1 * std::exp(x)) * (-e1 * u1 * std::exp(-x));
            CHECK(std::abs(std::abs(det) - std::abs(e2 * u2 * u2 - e1 * u1 * u1)) <= 1e-12);
        }
    }
}

TEST_CASE("orbit point parametrizations") {
    // the (r, s) point is the (xi, eta) point under the linear substitution
    double u1 = 0.7, u2 = 1.1, x = 0.3, y = -0.2, xi = 0.4, eta = -0.9;
    int e1 = 1, e2 = -1;
    double r = xi * u2 * std::exp(y) - eta * u1 * std::exp(x);
    double s = -xi * e1 * u1 * std::exp(-x) + eta * e2 * u2 * std::exp(-y);
    Q8 a = orbit_point_xieta(e1, e2, u1, u2, x, y, xi, eta);
    Q8 b = orbit_point_rs(e1, e2, u1, u2, x, y, r, s);
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(a.y[i] - b.y[i]) < 1e-13);
        CHECK(std::abs(a.z[i] - b.z[i]) < 1e-13);
    }
    // orbit points share the invariants of the base point
    Q8 base;
    base.y = {u1, 0, 0, u2};
    base.z = {e1 * u1, 0, 0, e2 * u2};
    InvariantsD i0 = invariants_d(base);
    InvariantsD ia = invariants_d(a);
    CHECK(std::abs(ia.Q - i0.Q) < 1e-12);
    CHECK(std::abs(ia.S - i0.S) < 1e-12);
}

TEST_CASE("orbital integral routes agree") {
    Bump f;
    f.radius = 2.6;
    f.kinvariant = true;
    OrbitalCfg cfg;
    cfg.tol = 1e-7;
    cfg.n_outer = 20;
    cfg.n_inner = 20;
    cfg.max_doublings = 4;
    auto r1 = orbital_integral(f, 1, 1, 0.7, 1.2, OrbitalRoute::RS, cfg);
    auto r2 = orbital_integral(f, 1, 1, 0.7, 1.2, OrbitalRoute::XiEta, cfg);
    REQUIRE(r1.value > 0);
    CHECK(std::abs(r1.value - r2.value) <= 1e-6 * r1.value);

    SECTION("K-averaged path for a non-invariant bump") {
        Bump g;
        g.radius = 2.6;
        g.center.y = {0.2, 0, 0, -0.1};
        OrbitalCfg c2;
        c2.adaptive = false;
        c2.n_outer = 14;
        c2.n_inner = 14;
        c2.n_angle = 8;
        auto a = orbital_integral(g, 1, -1, 0.8, 0.9, OrbitalRoute::RS, c2);
        auto b = orbital_integral(g, 1, -1, 0.8, 0.9, OrbitalRoute::XiEta, c2);
        REQUIRE(a.value > 0);
        CHECK(std::abs(a.value - b.value) <= 5e-3 * a.value);
    }
}

TEST_CASE("orbital integral vanishes outside the support") {
    Bump f;
    f.radius = 1.5;
    f.kinvariant = true;
    OrbitalCfg cfg;
    cfg.adaptive = false;
    // |u1| > radius: every orbit point has an entry larger than the support
    CHECK(orbital_integral(f, 1, 1, 2.0, 0.5, OrbitalRoute::RS, cfg).value == 0);
    CHECK(orbital_integral(f, 1, 1, 2.0, 0.5, OrbitalRoute::XiEta, cfg).value == 0);
}

TEST_CASE("degenerate u is rejected") {
    Bump f;
    f.kinvariant = true;
    OrbitalCfg cfg;
    cfg.adaptive = false;
    CHECK_THROWS_AS(orbital_integral(f, 1, 1, 1.0, 1.0, OrbitalRoute::RS, cfg), Error);
}
