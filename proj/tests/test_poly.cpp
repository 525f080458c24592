#include <catch2/catch_amalgamated.hpp>

#include "sympair/poly.hpp"

using namespace sympair;

TEST_CASE("polynomial arithmetic") {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly p = x * x + y * Rational(2) + Rational(3);
    CHECK(p.eval({Rational(2), Rational(5)}) == 17);
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((x * y).eval({Rational(3), Rational(4)}) == 12);

    Poly dp = p.derivative(0);
    CHECK(dp.eval({Rational(7), Rational(0)}) == 14);
    CHECK(p.derivative(1).eval({Rational(0), Rational(0)}) == 2);

    Poly sub = p.substitute({{0, Rational(1)}});
    CHECK(sub.eval({Rational(0), Rational(2)}) == 8);

    VarPool pool;
    pool.add("x");
    pool.add("y");
    CHECK(Poly().str(pool) == "0");
    CHECK((x * x - y).str(pool) == "x^2 - y");
}

TEST_CASE("polynomial determinant") {
    Poly x = Poly::var(0), y = Poly::var(1);
    SECTION("2x2") {
        std::vector<std::vector<Poly>> m = {{x, Poly(Rational(1))}, {Poly(Rational(2)), y}};
        Poly d = poly_determinant(m);
        CHECK(d == x * y - Rational(2));
    }
    SECTION("3x3 against cofactor expansion at random points") {
        std::vector<std::vector<Poly>> m = {
            {x + Rational(1), y, Poly(Rational(2))},
            {x * y, Poly(Rational(3)), x},
            {Poly(Rational(1)), y * y, x + y},
        };
        Poly d = poly_determinant(m);
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b) {
                std::vector<Rational> pt{Rational(a), Rational(b)};
                // direct numeric cofactor expansion
                Rational e[3][3];
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) e[i][j] = m[i][j].eval(pt);
                Rational det = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
                               e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                               e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
                CHECK(d.eval(pt) == det);
            }
    }
    SECTION("empty matrix has determinant 1") {
        CHECK(poly_determinant({}) == Poly(Rational(1)));
    }
}
