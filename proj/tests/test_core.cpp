#include <catch2/catch_amalgamated.hpp>

#include "sympair/jordan.hpp"
#include "sympair/gl4.hpp"

using namespace sympair;
using gl4::block_q;
using gl4::mat2;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(Rational(-3, 7)) == "-3/7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(sqrt_exact(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(sqrt_exact(Rational(2)).has_value());
}

TEST_CASE("matrix arithmetic") {
    MatQ e12 = MatQ(2, 2), e21 = MatQ(2, 2);
    e12(0, 1) = 1;
    e21(1, 0) = 1;
    MatQ h = bracket(e12, e21);
    CHECK(h(0, 0) == 1);
    CHECK(h(1, 1) == -1);
    CHECK(h(0, 1) == 0);

    MatQ x = MatQ::from_rows({{1, 2}, {3, 4}});
    CHECK(bracket(x, x).is_zero());
    CHECK(x.transpose()(0, 1) == 3);
    CHECK(mat_pow(x, 0) == MatQ::identity(2));
}

TEST_CASE("rref, nullspace, solve, determinant") {
    MatQ m = MatQ::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    // verify m * v = 0 exactly
    for (std::size_t i = 0; i < 3; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * ns[0][j];
        CHECK(acc == 0);
    }
    auto sol = solve(m, {6, 12, 3});
    REQUIRE(sol.has_value());
    Rational acc = 0;
    for (std::size_t j = 0; j < 3; ++j) acc += m(0, j) * (*sol)[j];
    CHECK(acc == 6);
    CHECK_FALSE(solve(m, {1, 0, 0}).has_value());

    CHECK(determinant(MatQ::from_rows({{2, 1}, {7, 4}})) == 1);
    CHECK(determinant(m) == 0);
    auto inv = inverse(MatQ::from_rows({{2, 1}, {7, 4}}));
    REQUIRE(inv.has_value());
    CHECK((*inv)(0, 0) == 4);
}

TEST_CASE("univariate polynomials and characteristic polynomial") {
    UPoly p;  // t^2 - 1
    p.c = {-1, 0, 1};
    CHECK(p.eval(Rational(3)) == 8);
    UPoly d = derivative(p);
    CHECK(d.c == std::vector<Rational>{0, 2});

    MatQ m = MatQ::from_rows({{0, 1}, {1, 0}});
    UPoly cp = char_poly(m);
    CHECK(cp.c == std::vector<Rational>{-1, 0, 1});
    CHECK(squarefree_part(cp).degree() == 2);

    // (t-1)^2: squarefree part is t-1
    UPoly q;
    q.c = {1, -2, 1};
    UPoly sf = squarefree_part(q);
    REQUIRE(sf.degree() == 1);
    CHECK(sf.eval(Rational(1)) == 0);

    // Bezout certificate for a squarefree polynomial and its derivative
    auto [s, t] = poly_bezout(p, derivative(p));
    UPoly one = s * p + t * derivative(p);
    REQUIRE(one.degree() == 0);
    CHECK(one.c[0] == 1);
}

TEST_CASE("classify") {
    using gl4::cartan_point;
    using gl4::CartanLabel;
    CHECK(classify(cartan_point(CartanLabel::PP, 1, 2).embed()) == ElementKind::Semisimple);
    CHECK(classify(block_q(MatQ::identity(2), MatQ(2, 2))) == ElementKind::Nilpotent);
    MatQ mixed = block_q(MatQ::identity(2), mat2(1, 1, 0, 1));
    CHECK(classify(mixed) == ElementKind::Mixed);
}

TEST_CASE("jordan decomposition") {
    SECTION("diagonal is its own semisimple part") {
        MatQ d = MatQ::from_rows({{1, 0}, {0, 2}});
        auto jp = jordan_chevalley(d);
        CHECK(jp.semisimple == d);
        CHECK(jp.nilpotent.is_zero());
    }
    SECTION("square-zero element is nilpotent part") {
        MatQ x = block_q(MatQ::identity(2), MatQ(2, 2));
        auto jp = jordan_chevalley(x);
        CHECK(jp.semisimple.is_zero());
        CHECK(jp.nilpotent == x);
    }
    SECTION("mixed element splits with all three properties") {
        MatQ x = block_q(MatQ::identity(2), mat2(1, 1, 0, 1));
        auto jp = jordan_chevalley(x);
        CHECK(is_semisimple(jp.semisimple));
        CHECK(is_nilpotent(jp.nilpotent));
        CHECK_FALSE(jp.nilpotent.is_zero());
        CHECK(bracket(jp.semisimple, jp.nilpotent).is_zero());
        CHECK(jp.semisimple + jp.nilpotent == x);
        // uniqueness: decomposing the sum returns the same pair
        auto again = jordan_chevalley(jp.semisimple + jp.nilpotent);
        CHECK(again.semisimple == jp.semisimple);
    }
    SECTION("sigma-equivariance: parts of a q-element stay in q") {
        SymmetricPair pair = make_block_pair(2, 2);
        MatQ x = block_q(mat2(1, 2, 0, 1), mat2(1, 0, 3, 1));
        auto jp = jordan_chevalley(x);
        CHECK(pair.in_q(jp.semisimple));
        CHECK(pair.in_q(jp.nilpotent));
    }
}
