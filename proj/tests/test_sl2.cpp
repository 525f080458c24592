#include <catch2/catch_amalgamated.hpp>

#include "sympair/gl4.hpp"
#include "sympair/sl2.hpp"

using namespace sympair;
using namespace sympair::gl4;

namespace {
const SymmetricPair& gl4_pair() {
    static SymmetricPair p = make_block_pair(2, 2);
    return p;
}
const CentralizerData& ambient() {
    static CentralizerData cd = build_centralizer_data(gl4_pair(), MatQ(4, 4));
    return cd;
}
}  // namespace

TEST_CASE("normal triple completion") {
    SECTION("e tensor I") {
        auto t = complete_normal_triple(upper_block(MatQ::identity(2)), ambient());
        CHECK(t.transpose_convention);
        CHECK(t.b0 == split_diag(MatQ::identity(2)));
        CHECK(t.y0 == lower_block(MatQ::identity(2)));
    }
    SECTION("e tensor E11") {
        auto t = complete_normal_triple(upper_block(mat2(1, 0, 0, 0)), ambient());
        CHECK(t.b0 == split_diag(mat2(1, 0, 0, 0)));
        CHECK(t.y0 == lower_block(mat2(1, 0, 0, 0)));
    }
    SECTION("semisimple input is rejected") {
        CHECK_THROWS_AS(
            complete_normal_triple(cartan_point(CartanLabel::PP, 1, 2).embed(), ambient()),
            Error);
    }
    SECTION("regular nilpotent falls back to the general solve") {
        MatQ x0 = block_q(MatQ::identity(2), mat2(0, 1, 0, 0));
        auto t = complete_normal_triple(x0, ambient());
        CHECK_FALSE(t.transpose_convention);
        CHECK(t.note.find("NoTransposeCompatibleTriple") != std::string::npos);
        CHECK(bracket(t.b0, t.x0) == t.x0 * Rational(2));
        CHECK(bracket(t.b0, t.y0) == t.y0 * Rational(-2));
        CHECK(bracket(t.x0, t.y0) == t.b0);
    }
}

TEST_CASE("weight decomposition") {
    SECTION("e tensor I: weights (2,2,2,2)") {
        auto t = complete_normal_triple(upper_block(MatQ::identity(2)), ambient());
        auto wd = weight_decomposition(t, ambient());
        CHECK(wd.r() == 4);
        CHECK(wd.weights == std::vector<int>{2, 2, 2, 2});
        CHECK(wd.dim_zs_minus == 8);
        CHECK(wd.c0_sq == 1);
        CHECK(wd.delta_q() == 8);
        CHECK(wd.basis[0] == t.y0);
        // eigenvector relation [B0, w_i] = -n_i w_i holds exactly
        for (int i = 0; i < wd.r(); ++i)
            CHECK(bracket(t.b0, wd.basis[i]) == wd.basis[i] * Rational(-wd.weights[i]));
    }
    SECTION("e tensor E11: weights (2,1,1,0,0)") {
        auto t = complete_normal_triple(upper_block(mat2(1, 0, 0, 0)), ambient());
        auto wd = weight_decomposition(t, ambient());
        CHECK(wd.weights == std::vector<int>{2, 1, 1, 0, 0});
        CHECK(wd.delta_q() == 6);
        // U = span{f x E11, f x E12, f x E21, f x E22, e x E22}
        CHECK(wd.u_space.dim() == 5);
        CHECK(wd.u_space.contains(lower_block(mat2(1, 0, 0, 0))));
        CHECK(wd.u_space.contains(lower_block(mat2(0, 0, 0, 1))));
        CHECK(wd.u_space.contains(upper_block(mat2(0, 0, 0, 1))));
    }
    SECTION("theta symmetry: U is the transpose image of the X0 centralizer") {
        auto t = complete_normal_triple(upper_block(MatQ::identity(2)), ambient());
        auto wd = weight_decomposition(t, ambient());
        Subspace cx0 = centralizer(ambient().zs_minus, t.x0);
        for (const auto& v : cx0.basis) CHECK(wd.u_space.contains(v.transpose()));
    }
}

TEST_CASE("delta_q arithmetic on injected weight data") {
    // sum (n_i + 2) - dim z_s^-: pure arithmetic on hypothetical data
    auto dq = [](std::vector<int> n, int dim) {
        int s = 0;
        for (int v : n) s += v + 2;
        return s - dim;
    };
    CHECK(dq({2}, 4) == 0);
    CHECK(dq({2}, 5) == -1);
    CHECK(dq({2, 2, 2, 2}, 8) == 8);
    CHECK(dq({2, 1, 1, 0, 0}, 8) == 6);
}

TEST_CASE("distinguished report") {
    SECTION("e tensor I is distinguished") {
        auto rep = distinguished_report(upper_block(MatQ::identity(2)), ambient());
        CHECK(rep.verdict);
        CHECK(rep.omega_zero_on_cx0);
        CHECK(rep.omega_zero_on_cy0);
        CHECK(rep.weights_positive);
        CHECK(rep.zero_intersection);
        CHECK(rep.no_semisimple_witness);
        CHECK(rep.omega_affine_identity);
        CHECK(intersect(centralizer(ambient().zs_minus, rep.wd.triple.x0), rep.wd.u_space)
                  .dim() == 0);
    }
    SECTION("e tensor E11 is not distinguished; witness exists") {
        auto rep = distinguished_report(upper_block(mat2(1, 0, 0, 0)), ambient());
        CHECK_FALSE(rep.verdict);
        CHECK_FALSE(rep.weights_positive);  // weight 0 occurs
        CHECK_FALSE(rep.omega_zero_on_cx0);
        CHECK_FALSE(rep.no_semisimple_witness);
        REQUIRE(rep.witness.has_value());
        CHECK(classify(*rep.witness) == ElementKind::Semisimple);
        CHECK_FALSE(rep.witness->is_zero());
    }
}

TEST_CASE("delta_q independent of basis presentation") {
    // permute and rescale the z_s^- basis; the decomposition data must agree
    CentralizerData cd = ambient();
    std::reverse(cd.zs_minus.basis.begin(), cd.zs_minus.basis.end());
    for (auto& b : cd.zs_minus.basis) b = b * Rational(3, 2);
    auto t = complete_normal_triple(upper_block(MatQ::identity(2)), cd);
    auto wd = weight_decomposition(t, cd);
    CHECK(wd.weights == std::vector<int>{2, 2, 2, 2});
    CHECK(wd.delta_q() == 8);
}
