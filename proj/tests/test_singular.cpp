#include <catch2/catch_amalgamated.hpp>

#include "sympair/gl4.hpp"
#include "sympair/niceness.hpp"
#include "sympair/singular.hpp"

using namespace sympair;

namespace {
WeightData e_tensor_i_data() {
    static WeightData wd = [] {
        SymmetricPair pair = make_block_pair(2, 2);
        CentralizerData cd = build_centralizer_data(pair, MatQ(4, 4));
        auto t = complete_normal_triple(gl4::upper_block(MatQ::identity(2)), cd);
        return weight_decomposition(t, cd).data();
    }();
    return wd;
}

void for_all_alphas(int r, int max_total, const std::function<void(const MultiIndex&)>& f) {
    MultiIndex a(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
        if (pos == a.size()) {
            f(a);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            a[pos] = v;
            rec(pos + 1, rem - v);
        }
        a[pos] = 0;
    };
    rec(0, max_total);
}
}  // namespace

TEST_CASE("monomial action") {
    SECTION("x1 on delta^(1,0)") {
        auto r = monomial_action({1, 0}, {1, 0});
        REQUIRE(r.has_value());
        CHECK(r->first == -1);
        CHECK(r->second == MultiIndex{0, 0});
    }
    SECTION("x1 kills delta^(0,3)") {
        CHECK_FALSE(monomial_action({1, 0}, {0, 3}).has_value());
    }
    SECTION("x^alpha delta^(alpha) = (-1)^|alpha| alpha! delta_0, |alpha| <= 5") {
        for (int r : {2, 3})
            for_all_alphas(r, 5, [&](const MultiIndex& a) {
                auto res = monomial_action(a, a);
                REQUIRE(res.has_value());
                Rational expect = mi_factorial(a);
                if (mi_total(a) % 2) expect = -expect;
                CHECK(res->first == expect);
                CHECK(mi_total(res->second) == 0);
            });
    }
    SECTION("x^beta delta^(alpha) = 0 whenever some beta_i > alpha_i") {
        for_all_alphas(2, 5, [&](const MultiIndex& a) {
            for_all_alphas(2, 6, [&](const MultiIndex& b) {
                bool exceeds = false;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (b[i] > a[i]) exceeds = true;
                if (exceeds) CHECK_FALSE(monomial_action(b, a).has_value());
            });
        });
    }
}

TEST_CASE("operator application") {
    VarPool pool;
    SymbolTable symbols;
    ApplyContext ctx(&pool, &symbols);
    int s = symbols.fresh("S");

    SECTION("d1 shifts the index") {
        DeltaExpansion e = delta_term(2, {1, 1}, s);
        OpTerm d1;
        d1.xpow = {0, 0};
        d1.dx = {1, 0};
        DeltaExpansion r = apply_term(d1, e, ctx);
        CHECK(r.terms.count({{2, 1}, s}) == 1);
        CHECK(degree_of_singularity(r) == 4);
    }
    SECTION("2 x1 d1^2 on delta_0 gives -4 delta^(e1)") {
        DeltaExpansion e = delta_term(2, {0, 0}, s);
        OpTerm t;
        t.coef = Poly(Rational(2));
        t.xpow = {1, 0};
        t.dx = {2, 0};
        DeltaExpansion r = apply_term(t, e, ctx);
        auto it = r.terms.find({{1, 0}, s});
        REQUIRE(it != r.terms.end());
        CHECK(it->second == Poly(Rational(-4)));
    }
    SECTION("c0 D0 on delta_0 for the (2,2,2,2) data has witness -8") {
        WeightData wd = e_tensor_i_data();
        NilpotentRadialOp op = nilpotent_radial_operator(wd);
        DeltaExpansion e = delta_term(4, {0, 0, 0, 0}, s);
        DeltaExpansion r = apply_word(op.word, e, ctx);
        auto it = r.terms.find({{1, 0, 0, 0}, s});
        REQUIRE(it != r.terms.end());
        CHECK(it->second == Poly(Rational(-8)));
        CHECK(degree_of_singularity(r) == 2);
    }
    SECTION("transverse tags derive fresh symbols") {
        DeltaExpansion e = delta_term(2, {0, 0}, s);
        OpTerm t;
        t.xpow = {0, 0};
        t.dx = {0, 0};
        t.transverse_tag = "D";
        DeltaExpansion r = apply_term(t, e, ctx);
        REQUIRE(r.terms.size() == 1);
        CHECK(r.terms.begin()->first.second != s);
        CHECK(symbols.name(r.terms.begin()->first.second) == "D.S");
    }
}

TEST_CASE("degree of singularity") {
    SymbolTable symbols;
    int s = symbols.fresh("S");
    CHECK(degree_of_singularity(delta_term(2, {0, 0}, s)) == 1);
    CHECK(degree_of_singularity(delta_term(2, {2, 1}, s)) == 4);
    DeltaExpansion reg;
    reg.r = 2;
    reg.regular_part = true;
    CHECK(degree_of_singularity(reg) == 0);
}

TEST_CASE("lowering and raising rules") {
    VarPool pool;
    SymbolTable symbols;
    ApplyContext ctx(&pool, &symbols);
    int s = symbols.fresh("S");

    SECTION("x_i on single deltas, exhaustive |alpha| <= 5") {
        for_all_alphas(2, 5, [&](const MultiIndex& a) {
            DeltaExpansion e = delta_term(2, a, s);
            int k = degree_of_singularity(e);
            for (std::size_t i = 0; i < 2; ++i) {
                OpTerm xi;
                xi.xpow = mi_unit(2, i);
                xi.dx = {0, 0};
                DeltaExpansion r = apply_term(xi, e, ctx);
                if (a[i] == 0)
                    CHECK(r.terms.empty());
                else
                    CHECK(degree_of_singularity(r) == k - 1);
            }
        });
    }
    SECTION("d_i raises by at most one on random expansions") {
        std::mt19937_64 rng(9);
        for (int t = 0; t < 30; ++t) {
            DeltaExpansion e;
            e.r = 3;
            int terms = 1 + int(rng() % 4);
            for (int j = 0; j < terms; ++j) {
                MultiIndex a(3);
                for (auto& v : a) v = int(rng() % 4);
                e.add(a, s, Poly(Rational(1 + long(rng() % 5))));
            }
            int k = degree_of_singularity(e);
            OpTerm di;
            di.xpow = {0, 0, 0};
            di.dx = mi_unit(3, rng() % 3);
            CHECK(degree_of_singularity(apply_term(di, e, ctx)) <= k + 1);
        }
    }
    SECTION("total degree bounds the raise: random words on random expansions") {
        std::mt19937_64 rng(10);
        for (int t = 0; t < 40; ++t) {
            DeltaExpansion e;
            e.r = 2;
            for (int j = 0; j < 3; ++j) {
                MultiIndex a{int(rng() % 4), int(rng() % 4)};
                e.add(a, s, Poly(Rational(1 + long(rng() % 3))));
            }
            OpTerm term;
            term.xpow = {int(rng() % 3), int(rng() % 3)};
            term.dx = {int(rng() % 3), int(rng() % 3)};
            int d = term.total_degree();
            int before = degree_of_singularity(e);
            int after = degree_of_singularity(apply_term(term, e, ctx));
            if (after > 0) CHECK(after <= before + d);
        }
    }
}

TEST_CASE("scaling exponent consistency") {
    SymbolTable symbols;
    int s = symbols.fresh("S");
    for (int r : {2, 3})
        for_all_alphas(r, 5, [&](const MultiIndex& a) {
            DeltaExpansion e = delta_term(r, a, s);
            CHECK(scaling_exponent(e) == mi_total(a));
            CHECK(degree_of_singularity(e) == scaling_exponent(e) + 1);
        });
}

TEST_CASE("proof degree bookkeeping") {
    WeightData wd = e_tensor_i_data();
    SECTION("distinguished, l = 0, N = 1: degree 2, witness -8") {
        ProofAudit a = proof_degree_check(true, wd, 0, 1, 42);
        CHECK(a.pass);
        CHECK(a.measured_degree == 2);
        CHECK(a.lambda_product == -8);
    }
    SECTION("distinguished, l = 2, N = 2: degree 5") {
        ProofAudit a = proof_degree_check(true, wd, 2, 2, 7);
        CHECK(a.pass);
        CHECK(a.measured_degree == 5);
        CHECK(a.lambda_product > 0);  // product of two negative ladder values
    }
    SECTION("non-distinguished, l = 1, N = 1: degree 4") {
        WeightData nd = wd;
        nd.weights = {2, 1, 0};
        ProofAudit a = proof_degree_check(false, nd, 1, 1, 11);
        CHECK(a.pass);
        CHECK(a.measured_degree == 4);
    }
    SECTION("distinguished case rejects weight-0 data") {
        WeightData nd = wd;
        nd.weights = {2, 0};
        CHECK_THROWS_AS(proof_degree_check(true, nd, 1, 1, 3), Error);
    }
}
