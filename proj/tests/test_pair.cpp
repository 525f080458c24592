#include <catch2/catch_amalgamated.hpp>

#include "sympair/gl4.hpp"
#include "sympair/jordan.hpp"

using namespace sympair;
using namespace sympair::gl4;

namespace {
MatQ random_gl4(RationalSampler& s) {
    MatQ m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = s();
    return m;
}
}  // namespace

TEST_CASE("block pair construction") {
    SymmetricPair pair = make_block_pair(2, 2);
    CHECK(pair.h_space.dim() == 8);
    CHECK(pair.q_space.dim() == 8);
    CHECK(pair.q_s_space.dim() == 8);  // q is traceless
    CHECK(pair.c_q_space.dim() == 0);
    CHECK(pair.rank == 2);

    // bracket relations [h,h] in h, [h,q] in q, [q,q] in h (spot checks)
    RationalSampler s(5);
    for (int t = 0; t < 5; ++t) {
        MatQ a = random_gl4(s), b = random_gl4(s);
        auto [ah, aq] = pair.sigma_split(a);
        auto [bh, bq] = pair.sigma_split(b);
        CHECK(pair.in_h(bracket(ah, bh)));
        CHECK(pair.in_q(bracket(ah, bq)));
        CHECK(pair.in_h(bracket(aq, bq)));
    }
}

TEST_CASE("sigma split") {
    SymmetricPair pair = make_block_pair(2, 2);
    MatQ d = split_diag(mat2(1, 2, 3, 4));  // block diagonal
    auto [dh, dq] = pair.sigma_split(d);
    CHECK(dh == d);
    CHECK(dq.is_zero());

    MatQ off = block_q(mat2(1, 0, 0, 2), mat2(0, 1, 1, 0));
    auto [oh, oq] = pair.sigma_split(off);
    CHECK(oh.is_zero());
    CHECK(oq == off);

    auto [mh, mq] = pair.sigma_split(d + off);
    CHECK(mh == d);
    CHECK(mq == off);

    // idempotence of the projections
    CHECK(pair.sigma_split(mh).first == mh);
    CHECK(pair.sigma_split(mq).second == mq);
}

TEST_CASE("trace form") {
    MatQ e12(4, 4), e21(4, 4);
    e12(0, 1) = 1;
    e21(1, 0) = 1;
    CHECK(trace_form(e12, e21) == Rational(1, 2));
    CHECK(omega(cartan_point(CartanLabel::PP, 1, 2).embed()) == 5);

    SymmetricPair pair = make_block_pair(2, 2);
    SECTION("h and q are orthogonal") {
        for (const auto& a : pair.h_space.basis)
            for (const auto& b : pair.q_space.basis) CHECK(trace_form(a, b) == 0);
    }
    SECTION("invariance B([Z,X],Y) = -B(X,[Z,Y])") {
        RationalSampler s(11);
        for (int t = 0; t < 8; ++t) {
            MatQ x = random_gl4(s), y = random_gl4(s), z = random_gl4(s);
            CHECK(trace_form(bracket(z, x), y) == -trace_form(x, bracket(z, y)));
        }
    }
    SECTION("Jacobi identity") {
        RationalSampler s(13);
        for (int t = 0; t < 5; ++t) {
            MatQ x = random_gl4(s), y = random_gl4(s), z = random_gl4(s);
            MatQ j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
            CHECK(j.is_zero());
        }
    }
}

TEST_CASE("centralizers") {
    SymmetricPair pair = make_block_pair(2, 2);
    SECTION("centralizer of zero is everything") {
        CHECK(centralizer(pair.q_space, MatQ(4, 4)).dim() == 8);
    }
    SECTION("centralizer of f tensor I in q") {
        Subspace c = centralizer(pair.q_space, lower_block(MatQ::identity(2)));
        CHECK(c.dim() == 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                MatQ eij(2, 2);
                eij(i, j) = 1;
                CHECK(c.contains(lower_block(eij)));
            }
    }
    SECTION("centralizer of a regular semisimple element is the Cartan line span") {
        Subspace c = centralizer(pair.q_space, cartan_point(CartanLabel::PP, 1, 2).embed());
        CHECK(c.dim() == 2);
        CHECK(c.contains(cartan_point(CartanLabel::PP, 1, 0).embed()));
        CHECK(c.contains(cartan_point(CartanLabel::PP, 0, 1).embed()));
    }
    SECTION("basis vectors commute exactly and rank-nullity holds") {
        MatQ x = upper_block(mat2(1, 0, 0, 0));
        Subspace c = centralizer(pair.q_space, x);
        for (const auto& v : c.basis) CHECK(bracket(x, v).is_zero());
        CHECK(c.dim() + ad_image(x, pair.q_space).dim() == pair.q_space.dim());
    }
}

TEST_CASE("centralizer pair data") {
    SymmetricPair pair = make_block_pair(2, 2);
    SECTION("A0 = 0 recovers the ambient pair with z_s = sl(4)") {
        CentralizerData cd = build_centralizer_data(pair, MatQ(4, 4));
        CHECK(cd.z.dim() == 16);
        CHECK(cd.c.dim() == 1);
        CHECK(cd.z_s.dim() == 15);
        CHECK(cd.zs_minus.dim() == 8);
        CHECK(cd.zs_plus.dim() == 7);
        CHECK(cd.c_minus.dim() == 0);
    }
    SECTION("A0 = X_{++}(1,1)") {
        CentralizerData cd =
            build_centralizer_data(pair, cartan_point(CartanLabel::PP, 1, 1).embed());
        CHECK(cd.z.dim() == 8);
        CHECK(cd.c.dim() == 2);
        CHECK(cd.z_s.dim() == 6);
        CHECK(cd.zs_minus.dim() == 3);
        CHECK(cd.z_minus.dim() == 4);
    }
    SECTION("non-semisimple A0 is rejected") {
        CHECK_THROWS_AS(build_centralizer_data(pair, upper_block(MatQ::identity(2))), Error);
    }
}
