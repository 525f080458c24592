#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "sympair/diffop.hpp"
#include "sympair/errors.hpp"
#include "sympair/radial.hpp"

namespace sympair {

/// Free generators standing for distributions on the transverse factor.
/// Operators with a transverse tag send a symbol to a fresh derived one.
class SymbolTable {
public:
    int fresh(const std::string& name) {
        names_.push_back(name);
        return static_cast<int>(names_.size() - 1);
    }
    int derive(const std::string& tag, int base) {
        auto key = std::make_pair(tag, base);
        auto it = derived_.find(key);
        if (it != derived_.end()) return it->second;
        int id = fresh(tag + "." + names_[base]);
        derived_.emplace(key, id);
        return id;
    }
    const std::string& name(int id) const { return names_[id]; }

private:
    std::vector<std::string> names_;
    std::map<std::pair<std::string, int>, int> derived_;
};

/// x^beta * delta^(alpha) = prod_i [alpha_i >= beta_i] (-1)^{beta_i}
/// alpha_i!/(alpha_i-beta_i)! * delta^(alpha-beta); zero if any beta_i
/// exceeds alpha_i.
inline std::optional<std::pair<Rational, MultiIndex>> monomial_action(const MultiIndex& beta,
                                                                      const MultiIndex& alpha) {
    if (!mi_leq(beta, alpha)) return std::nullopt;
    Rational c = 1;
    MultiIndex out(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        out[i] = alpha[i] - beta[i];
        if (beta[i] == 0) continue;
        Int falling = 1;
        for (int k = 0; k < beta[i]; ++k) falling *= alpha[i] - k;
        c *= Rational(falling);
        if (beta[i] % 2) c = -c;
    }
    return std::make_pair(c, out);
}

/// Finite combination of delta derivatives along the transversal tensored
/// with free transverse symbols, plus an optional regular-part marker.
/// Coefficients are polynomials in symbolic scalars (Taylor atoms, generic
/// operator coefficients).
struct DeltaExpansion {
    int r = 0;
    bool regular_part = false;
    std::map<std::pair<MultiIndex, int>, Poly> terms;

    void add(const MultiIndex& alpha, int symbol, const Poly& coef) {
        if (coef.is_zero()) return;
        auto key = std::make_pair(alpha, symbol);
        auto [it, fresh] = terms.emplace(key, coef);
        if (!fresh) {
            it->second += coef;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    DeltaExpansion operator+(const DeltaExpansion& o) const {
        DeltaExpansion s = *this;
        s.regular_part = regular_part || o.regular_part;
        for (const auto& [k, c] : o.terms) s.add(k.first, k.second, c);
        return s;
    }
};

inline DeltaExpansion delta_term(int r, const MultiIndex& alpha, int symbol,
                                 const Poly& coef = Poly(Rational(1))) {
    DeltaExpansion e;
    e.r = r;
    e.add(alpha, symbol, coef);
    return e;
}

/// Degree of singularity along {0} x R^m: |alpha| + 1 on delta terms, 0 for a
/// pure regular part (and for the zero expansion).
inline int degree_of_singularity(const DeltaExpansion& e) {
    int d = 0;
    for (const auto& [k, c] : e.terms) d = std::max(d, mi_total(k.first) + 1);
    return d;
}

/// Exponent of the scaling action: the pairing of (delta^(alpha) ox S)_eps
/// against a fixed test functional scales as eps^{-|alpha|}.
inline int scaling_exponent(const DeltaExpansion& e) {
    int d = 0;
    for (const auto& [k, c] : e.terms) d = std::max(d, mi_total(k.first));
    return d;
}

/// Shared state for operator application: atom Taylor coefficients become
/// pooled polynomial variables, transverse tags derive new symbols.
struct ApplyContext {
    VarPool* pool = nullptr;
    SymbolTable* symbols = nullptr;

    ApplyContext(VarPool* p, SymbolTable* s) : pool(p), symbols(s) {}

    std::uint32_t atom_var(const std::string& atom, const MultiIndex& gamma) {
        auto key = atom + mi_str(gamma);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::uint32_t id = pool->add(key);
        memo_.emplace(key, id);
        return id;
    }

private:
    std::map<std::string, std::uint32_t> memo_;
};

namespace detail {

inline void enumerate_bounded(const MultiIndex& bound, int min_total, MultiIndex& cur,
                              std::size_t pos, const std::function<void(const MultiIndex&)>& f) {
    if (pos == cur.size()) {
        if (mi_total(cur) >= min_total) f(cur);
        return;
    }
    for (int v = 0; v <= bound[pos]; ++v) {
        cur[pos] = v;
        enumerate_bounded(bound, min_total, cur, pos + 1, f);
    }
    cur[pos] = 0;
}

}  // namespace detail

inline DeltaExpansion apply_term(const OpTerm& t, const DeltaExpansion& e, ApplyContext& ctx) {
    DeltaExpansion out;
    out.r = e.r;
    for (const auto& [key, coef] : e.terms) {
        const auto& [alpha, sym] = key;
        int sym2 = t.transverse_tag ? ctx.symbols->derive(*t.transverse_tag, sym) : sym;
        MultiIndex a1 = mi_add(alpha, t.dx);
        Poly base = coef * t.coef;
        if (!t.atom) {
            if (auto act = monomial_action(t.xpow, a1))
                out.add(act->second, sym2, base * act->first);
            continue;
        }
        // a(X) = sum_{|gamma| >= v} a_gamma x^gamma, truncated by the support
        // of the delta derivative: only gamma with x^{xpow+gamma} acting
        // nontrivially survive.
        MultiIndex cur(e.r, 0);
        detail::enumerate_bounded(
            a1, t.atom->vanishing_order, cur, 0, [&](const MultiIndex& gamma) {
                if (mi_total(gamma) < t.atom->vanishing_order) return;
                auto act = monomial_action(mi_add(t.xpow, gamma), a1);
                if (!act) return;
                Poly av = Poly::var(ctx.atom_var(t.atom->name, gamma));
                out.add(act->second, sym2, base * av * act->first);
            });
    }
    return out;
}

inline DeltaExpansion apply_word(const OperatorWord& w, const DeltaExpansion& e,
                                 ApplyContext& ctx) {
    DeltaExpansion out;
    out.r = e.r;
    out.regular_part = e.regular_part;
    for (const auto& t : w) out = out + apply_term(t, e, ctx);
    return out;
}

inline DeltaExpansion apply_word_power(const OperatorWord& w, unsigned n, DeltaExpansion e,
                                       ApplyContext& ctx) {
    for (unsigned k = 0; k < n; ++k) e = apply_word(w, e, ctx);
    return e;
}

/// Audit record of one degree-bookkeeping replay.
struct ProofAudit {
    bool distinguished_case = true;
    int r = 0, l = 0, n_power = 1;
    int expected_degree = 0, measured_degree = 0;
    MultiIndex witness_alpha;       // the selected top index of the input
    MultiIndex witness_result;      // where the witness lands
    Rational lambda_product = 0;    // distinguished case: product of ladder values
    std::string witness_coefficient;
    bool pass = false;
};

namespace detail {

/// Random expansion with top order exactly l; one symbol per index.
inline DeltaExpansion random_expansion(int r, int l, std::mt19937_64& rng, SymbolTable& symbols) {
    DeltaExpansion e;
    e.r = r;
    std::uniform_int_distribution<int> coin(0, 1), coefd(1, 9), sign(0, 1);
    std::vector<MultiIndex> all;
    MultiIndex cur(r, 0);
    MultiIndex bound(r, l);
    enumerate_bounded(bound, 0, cur, 0, [&](const MultiIndex& a) {
        if (mi_total(a) <= l) all.push_back(a);
    });
    bool have_top = false;
    for (const auto& a : all) {
        bool top = mi_total(a) == l;
        if (!top && coin(rng) == 0) continue;
        if (top && have_top && coin(rng) == 0) continue;
        Rational c(coefd(rng) * (sign(rng) ? 1 : -1));
        e.add(a, symbols.fresh("S" + mi_str(a)), Poly(c));
        if (top) have_top = true;
    }
    if (!have_top) {
        MultiIndex a(r, 0);
        a[0] = l;
        e.add(a, symbols.fresh("S" + mi_str(a)), Poly(Rational(1)));
    }
    return e;
}

/// The proof's selection rule: among top-order indices with nonzero symbol
/// coefficient, take alpha_1 maximal (lexicographically largest on ties).
inline MultiIndex select_witness(const DeltaExpansion& e, int l) {
    MultiIndex best;
    for (const auto& [key, coef] : e.terms) {
        const MultiIndex& a = key.first;
        if (mi_total(a) != l) continue;
        if (best.empty() || a[0] > best[0] || (a[0] == best[0] && a > best)) best = a;
    }
    return best;
}

/// Random operator of total degree at most d_max, standing in for the lower
/// order remainder D1 (includes a transverse-tagged constant-degree term).
inline OperatorWord random_lower_word(int r, int d_max, std::mt19937_64& rng) {
    OperatorWord w;
    std::uniform_int_distribution<int> cnt(1, 3), pick(0, r - 1), coefd(1, 5), sign(0, 1);
    int terms = cnt(rng);
    for (int t = 0; t < terms; ++t) {
        OpTerm term;
        term.xpow = MultiIndex(r, 0);
        term.dx = MultiIndex(r, 0);
        int degree = d_max - (t % 2);
        int raises = std::max(0, degree);
        for (int k = 0; k < raises; ++k) term.dx[pick(rng)] += 1;
        int lowers = mi_total(term.dx) - degree;
        for (int k = 0; k < lowers; ++k) term.xpow[pick(rng)] += 1;
        term.coef = Poly(Rational(coefd(rng) * (sign(rng) ? 1 : -1)));
        w.push_back(term);
    }
    OpTerm trans;  // transverse operator, total degree 0
    trans.xpow = MultiIndex(r, 0);
    trans.dx = MultiIndex(r, 0);
    trans.transverse_tag = "D";
    w.push_back(trans);
    return w;
}

}  // namespace detail

/// Replays the degree-of-singularity count: applies (D0^N + D1) to a random
/// seeded expansion of top order l, locates the proof's witness term and
/// compares the measured degree with 1+l+N (distinguished) or l+1+2N
/// (non-distinguished, with per-instance symbolic non-cancellation).
inline ProofAudit proof_degree_check(bool distinguished, const WeightData& wd, int l, int n_power,
                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SymbolTable symbols;
    VarPool pool;
    ApplyContext ctx{&pool, &symbols};
    int r = static_cast<int>(wd.weights.size());

    ProofAudit audit;
    audit.distinguished_case = distinguished;
    audit.r = r;
    audit.l = l;
    audit.n_power = n_power;

    DeltaExpansion s3 = detail::random_expansion(r, l, rng, symbols);
    audit.witness_alpha = detail::select_witness(s3, l);
    int witness_sym = -1;
    for (const auto& [key, coef] : s3.terms)
        if (key.first == audit.witness_alpha) witness_sym = key.second;

    NilpotentRadialOp op;
    if (distinguished) {
        op = nilpotent_radial_operator(wd);
        if (!op.distinguished)
            throw domain_error("distinguished case requires strictly positive weights");
        audit.expected_degree = 1 + l + n_power;
        audit.witness_result = mi_add(audit.witness_alpha, mi_unit(r, 0, n_power));
        Rational prod = 1;
        MultiIndex a = audit.witness_alpha;
        for (int k = 0; k < n_power; ++k) {
            prod *= Rational(lambda_alpha(wd, a));
            a = mi_add(a, mi_unit(r, 0));
        }
        audit.lambda_product = prod;
    } else {
        op = generic_order2_operator(r, wd, pool);
        audit.expected_degree = l + 1 + 2 * n_power;
        audit.witness_result = mi_add(audit.witness_alpha, mi_unit(r, 0, 2 * n_power));
    }

    OperatorWord d1 = detail::random_lower_word(
        r, n_power * op.leading_total_degree() - 1, rng);

    DeltaExpansion result = apply_word_power(op.word, unsigned(n_power), s3, ctx);
    result = result + apply_word(d1, s3, ctx);

    audit.measured_degree = degree_of_singularity(result);

    auto it = result.terms.find(std::make_pair(audit.witness_result, witness_sym));
    Poly wcoef = (it == result.terms.end()) ? Poly() : it->second;
    audit.witness_coefficient = wcoef.str(pool);

    if (distinguished) {
        Poly s0 = s3.terms.at(std::make_pair(audit.witness_alpha, witness_sym));
        // the witness coefficient is exactly the lambda ladder product
        audit.pass = (audit.measured_degree == audit.expected_degree) &&
                     (wcoef == s0 * audit.lambda_product);
    } else {
        if (wcoef.is_zero())
            throw non_cancellation_failure("generic top coefficient vanished at " +
                                           mi_str(audit.witness_result));
        audit.pass = audit.measured_degree == audit.expected_degree;
    }
    return audit;
}

}  // namespace sympair
