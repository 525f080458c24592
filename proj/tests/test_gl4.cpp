#include <catch2/catch_amalgamated.hpp>

#include "sympair/eigenfun.hpp"
#include "sympair/gl4.hpp"

using namespace sympair;
using namespace sympair::gl4;

TEST_CASE("cartan points") {
    QElement x = cartan_point(CartanLabel::PP, 1, 2);
    CHECK(x.Y == mat2(1, 0, 0, 2));
    CHECK(x.Z == mat2(1, 0, 0, 2));
    CHECK(cartan_point(CartanLabel::PM, 1, 1).Z == mat2(1, 0, 0, -1));
    CHECK(cartan_point(CartanLabel::MM, 1, 2).Z == mat2(-1, 0, 0, -2));
    QElement a2 = cartan_point(CartanLabel::A2, 1, 0);
    CHECK(a2.Y == mat2(0, -1, 1, 0));
    CHECK(a2.Z == a2.Y);
    CHECK(QElement::from_embed(x.embed()).Y == x.Y);
}

TEST_CASE("invariants") {
    SECTION("++ (1,2)") {
        InvariantData d = invariants(cartan_point(CartanLabel::PP, 1, 2));
        CHECK(d.Q == 5);
        CHECK(d.S == 4);
        CHECK(d.S0 == 9);
        REQUIRE(d.nu_exact.has_value());
        CHECK(d.nu_exact->first == 4);
        CHECK(d.nu_exact->second == 1);
        CHECK(d.regular);
    }
    SECTION("zero point") {
        InvariantData d = invariants(QElement{});
        CHECK(d.Q == 0);
        CHECK(d.S == 0);
        CHECK_FALSE(d.regular);
    }
    SECTION("a2 (theta,tau) = (1,1)") {
        InvariantData d = invariants(cartan_point(CartanLabel::A2, 1, 1));
        CHECK(d.Q == 0);
        CHECK(d.S == 4);
        CHECK(d.S0 == -16);
        CHECK(std::abs(d.nu1 - Cx(0, 2)) < 1e-14);
        CHECK(std::abs(d.nu2 - Cx(0, -2)) < 1e-14);
        CHECK(d.regular);
    }
    SECTION("eigenvalue set matches the sign pattern exactly on a rational grid") {
        for (CartanLabel l : {CartanLabel::PP, CartanLabel::PM, CartanLabel::MM}) {
            auto [e1, e2] = cartan_signs(l);
            int n = 0;
            for (long p = 1; p <= 5 && n < 10; ++p)
                for (long q = 1; q <= 2 && n < 10; ++q, ++n) {
                    Rational u1(p, 3), u2(q, 2);
                    InvariantData d = invariants(cartan_point(l, u1, u2));
                    REQUIRE(d.nu_exact.has_value());
                    Rational nu1 = e1 * u1 * u1, nu2 = e2 * u2 * u2;
                    bool same = (d.nu_exact->first == nu1 && d.nu_exact->second == nu2) ||
                                (d.nu_exact->first == nu2 && d.nu_exact->second == nu1);
                    CHECK(same);
                }
        }
    }
    SECTION("exact invariance under random block conjugation") {
        RationalSampler s(21);
        QElement x = cartan_point(CartanLabel::PM, Rational(3, 2), 1);
        InvariantData d0 = invariants(x);
        int done = 0;
        while (done < 20) {
            MatQ a(2, 2), b(2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    a(i, j) = s();
                    b(i, j) = s();
                }
            if (determinant(a) == 0 || determinant(b) == 0) continue;
            InvariantData d = invariants(conjugate(x, a, b));
            CHECK(d.Q == d0.Q);
            CHECK(d.S == d0.S);
            CHECK(d.S0 == d0.S0);
            ++done;
        }
    }
}

TEST_CASE("eigenfunction families") {
    SpectralParams sp{1.0, 2.0};

    SECTION("F+ vanishes on regular a2 points") {
        for (double th : {0.5, 1.0, 2.0})
            for (double ta : {0.25, 1.0}) {
                InvariantsD inv = invariants_d(Q8{{ta, -th, th, ta}, {ta, -th, th, ta}});
                for (PlusKind k :
                     {PlusKind::PhiPhi, PlusKind::PhiWr, PlusKind::WrPhi, PlusKind::WrWr})
                    CHECK(f_plus(k, inv.S0, inv.nu1, inv.nu2, sp) == Cx(0));
            }
    }
    SECTION("F_ana at nu = (4, 1) equals the bracket of Phi values") {
        Cx direct = (phi(1.0, 4.0) * phi(2.0, 1.0) - phi(1.0, 1.0) * phi(2.0, 4.0)) / 3.0;
        CHECK(std::abs(f_ana(4.0, 1.0, sp) - direct) < 1e-12);
    }
    SECTION("confluent limit matches nearby direct evaluations") {
        double nu = 1.7;
        Cx conf = f_ana(nu, nu, sp);
        // Richardson from two separations h and h/2
        auto at = [&](double h) { return f_ana(nu + h, nu - h, sp); };
        Cx rich = 2.0 * at(5e-4) - at(1e-3);
        CHECK(std::abs(conf - rich) < 1e-6 * (1 + std::abs(conf)));
        Cx confs = f_sing(nu, nu, sp);
        auto ats = [&](double h) { return f_sing(nu + h, nu - h, sp); };
        Cx richs = 2.0 * ats(5e-4) - ats(1e-3);
        CHECK(std::abs(confs - richs) < 1e-5 * (1 + std::abs(confs)));
    }
    SECTION("F+ rejects the coincidence set") {
        InvariantsD inv = invariants_d(Q8{{1, 0, 0, 1}, {1, 0, 0, 1}});  // nu1 = nu2 = 1
        CHECK(inv.S0 == 0);
        CHECK_THROWS_AS(f_plus(PlusKind::PhiPhi, inv.S0, inv.nu1, inv.nu2, sp), Error);
    }
    SECTION("eigenfunction values are invariant under conjugation") {
        RationalSampler s(33);
        QElement x = cartan_point(CartanLabel::PP, Rational(1), Rational(3, 2));
        EigenfunctionRequest req;
        req.which = EigenfunctionRequest::Which::Ana;
        req.sp = sp;
        Cx v0 = eigenfunction_eval(req, x);
        int done = 0;
        while (done < 10) {
            MatQ a(2, 2), b(2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    a(i, j) = s();
                    b(i, j) = s();
                }
            if (determinant(a) == 0 || determinant(b) == 0) continue;
            CHECK(std::abs(eigenfunction_eval(req, conjugate(x, a, b)) - v0) < 1e-10);
            ++done;
        }
    }
}
