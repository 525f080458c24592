#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sympair/gl4.hpp"
#include "sympair/niceness.hpp"
#include "sympair/diffop.hpp"
#include "sympair/radial.hpp"

using namespace sympair;
using namespace sympair::gl4;

namespace {
const SymmetricPair& gl4_pair() {
    static SymmetricPair p = make_block_pair(2, 2);
    return p;
}

std::vector<std::vector<double>> ginv_dense(const TransverseSplit& sp) {
    std::size_t k = sp.z_minus.dim();
    std::vector<std::vector<double>> g(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g[i][j] = to_double(sp.gram_inv(i, j));
    return g;
}
}  // namespace

TEST_CASE("transverse split dimensions") {
    CHECK(transverse_split(gl4_pair(), cartan_point(CartanLabel::PP, 1, 2).embed())
              .z_minus.dim() == 2);
    CHECK(transverse_split(gl4_pair(), cartan_point(CartanLabel::PP, 1, 2).embed())
              .v_minus.dim() == 6);
    CHECK(transverse_split(gl4_pair(), cartan_point(CartanLabel::PP, 1, 1).embed())
              .z_minus.dim() == 4);
    TransverseSplit sp0 = transverse_split(gl4_pair(), MatQ(4, 4));
    CHECK(sp0.z_minus.dim() == 8);
    CHECK(sp0.v_minus.dim() == 0);
    CHECK_THROWS_AS(transverse_split(gl4_pair(), upper_block(MatQ::identity(2))), Error);
}

TEST_CASE("xi polynomial") {
    TransverseSplit sp = transverse_split(gl4_pair(), cartan_point(CartanLabel::PP, 1, 2).embed());
    Poly xi = xi_polynomial(sp, gl4_pair());
    CHECK(xi.constant_term() == 1);
    CHECK(xi.degree() <= sp.v_minus.dim());

    SECTION("symbolic determinant equals the pointwise determinant, exactly") {
        // the z^- basis for this split consists of the two Cartan directions;
        // evaluate at integer coordinates and compare with the direct
        // elimination determinant of the assembled eta_Z matrix
        Rational det0 = oracles::eta_determinant_at(gl4_pair(), sp, MatQ(4, 4));
        REQUIRE(det0 != 0);
        for (long a : {1L, -1L, 2L})
            for (long b : {1L, 0L, -2L}) {
                MatQ z(4, 4);
                z = sp.z_minus.basis[0] * Rational(a) + sp.z_minus.basis[1] * Rational(b);
                Rational direct = oracles::eta_determinant_at(gl4_pair(), sp, z) / det0;
                // coordinates of z in the split basis are (a, b) by construction
                CHECK(xi.eval({Rational(a), Rational(b)}) == direct);
            }
    }
    SECTION("xi = 1 identically when V^- is trivial") {
        TransverseSplit sp0 = transverse_split(gl4_pair(), MatQ(4, 4));
        Poly xi0 = xi_polynomial(sp0, gl4_pair());
        CHECK(xi0 == Poly(Rational(1)));
    }
}

TEST_CASE("mu rational function") {
    RadialSemisimple rad = radial_semisimple(gl4_pair(), cartan_point(CartanLabel::PP, 1, 2).embed());

    SECTION("mu vanishes when xi is constant") {
        RadialSemisimple rad0 = radial_semisimple(gl4_pair(), MatQ(4, 4));
        CHECK(rad0.mu.is_zero());
    }
    SECTION("scaling xi by a positive constant leaves mu unchanged") {
        RatFn mu2 = mu_rational(rad.split, rad.xi * Rational(7, 3));
        for (long a = -1; a <= 1; ++a) {
            std::vector<Rational> z{Rational(a, 4), Rational(1, 3)};
            auto v1 = rad.mu.eval(z), v2 = mu2.eval(z);
            REQUIRE(v1.has_value());
            CHECK(*v1 == *v2);
        }
    }
    SECTION("mu matches the finite-difference conjugation at regular points") {
        auto gi = ginv_dense(rad.split);
        RationalSampler s(404, 3, 5);
        int checked = 0;
        while (checked < 5) {
            std::vector<Rational> z{s(), s()};
            Rational xv = rad.xi.eval(z);
            if (xv <= Rational(1, 10)) continue;
            auto muv = rad.mu.eval(z);
            REQUIRE(muv.has_value());
            std::vector<double> zd{to_double(z[0]), to_double(z[1])};
            auto sqrt_xi = [&](const std::vector<double>& p) {
                return std::sqrt(rad.xi.eval_double(p));
            };
            double lap = oracles::fd_form_laplacian(sqrt_xi, zd, gi, 0.02);
            double mu_fd = lap / std::sqrt(rad.xi.eval_double(zd));
            CHECK(std::abs(to_double(*muv) - mu_fd) <=
                  1e-6 * std::max(1.0, std::abs(mu_fd)));
            ++checked;
        }
    }
}

TEST_CASE("radial semisimple operator") {
    RadialSemisimple rad = radial_semisimple(gl4_pair(), cartan_point(CartanLabel::PP, 1, 2).embed());

    SECTION("Rad(1) = 0") {
        auto v = rad.apply(Poly(Rational(1)), {Rational(1, 5), Rational(-1, 7)});
        REQUIRE(v.has_value());
        CHECK(*v == 0);
    }
    SECTION("constant-coefficient limit at A0 = 0 is the plain form Laplacian") {
        RadialSemisimple rad0 = radial_semisimple(gl4_pair(), MatQ(4, 4));
        Poly f = Poly::var(0) * Poly::var(0);
        std::vector<Rational> z(8, Rational(0));
        auto v = rad0.apply(f, z);
        REQUIRE(v.has_value());
        CHECK(*v == 2 * rad0.split.gram_inv(0, 0));
    }
    SECTION("dual path: exact operator vs numeric conjugation") {
        auto gi = ginv_dense(rad.split);
        Poly f = Poly::var(0) * Poly::var(0);  // z1^2
        RationalSampler s(405, 2, 4);
        int checked = 0;
        while (checked < 4) {
            std::vector<Rational> z{s(), s()};
            if (rad.xi.eval(z) <= Rational(1, 10)) continue;
            auto exact = rad.apply(f, z);
            REQUIRE(exact.has_value());
            std::vector<double> zd{to_double(z[0]), to_double(z[1])};
            auto g = [&](const std::vector<double>& p) {
                return std::sqrt(rad.xi.eval_double(p)) * f.eval_double(p);
            };
            double lap = oracles::fd_form_laplacian(g, zd, gi, 0.02);
            auto muv = rad.mu.eval(z);
            double numeric = lap / std::sqrt(rad.xi.eval_double(zd)) -
                             to_double(*muv) * f.eval_double(zd);
            CHECK(std::abs(to_double(*exact) - numeric) <=
                  1e-9 * std::max(1.0, std::abs(numeric)));
            ++checked;
        }
    }
}

TEST_CASE("lambda ladder") {
    CentralizerData cd = build_centralizer_data(gl4_pair(), MatQ(4, 4));
    auto t = complete_normal_triple(upper_block(MatQ::identity(2)), cd);
    WeightData wd = weight_decomposition(t, cd).data();

    CHECK(lambda_alpha(wd, {0, 0, 0, 0}) == -8);
    CHECK(lambda_alpha(wd, {1, 0, 0, 0}) == -10);
    CHECK_THROWS_AS(lambda_alpha(wd, {0, 0}), std::invalid_argument);

    SECTION("negative for all |alpha| <= 6 on nice data") {
        std::vector<int> a(4, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
            if (pos == a.size()) {
                CHECK(lambda_alpha(wd, a) < 0);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                a[pos] = v;
                rec(pos + 1, rem - v);
            }
            a[pos] = 0;
        };
        rec(0, 6);
    }
}

TEST_CASE("nilpotent radial operator shape") {
    CentralizerData cd = build_centralizer_data(gl4_pair(), MatQ(4, 4));
    auto t = complete_normal_triple(upper_block(MatQ::identity(2)), cd);
    WeightData wd = weight_decomposition(t, cd).data();
    NilpotentRadialOp op = nilpotent_radial_operator(wd);
    CHECK(op.distinguished);
    CHECK(op.leading_total_degree() == 1);
    REQUIRE(op.leading.size() == 5);  // 2x1 d1^2, 8 d1, and three x_i d1 d_i
    CHECK(op.leading[0].coef == Poly(Rational(2)));
    CHECK(op.leading[1].coef == Poly(Rational(8)));
    for (std::size_t i = 2; i < 5; ++i) CHECK(op.leading[i].coef == Poly(Rational(4)));
    // atom bookkeeping: a_{i,j} vanish to order 1, a_i to order 0
    int order1 = 0, order0 = 0;
    for (const auto& term : op.word)
        if (term.atom) (term.atom->vanishing_order == 1 ? order1 : order0)++;
    CHECK(order1 == 6);
    CHECK(order0 == 3);

    WeightData bad = wd;
    bad.weights = {2, 1, 0};
    NilpotentRadialOp generic = nilpotent_radial_operator(bad);
    CHECK_FALSE(generic.distinguished);
    CHECK(generic.word.empty());  // caller builds the generic order-2 model
}
