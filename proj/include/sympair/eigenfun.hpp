#pragma once

#include <complex>

#include "sympair/bessel.hpp"
#include "sympair/errors.hpp"
#include "sympair/gl4.hpp"

namespace sympair::gl4 {

struct SpectralParams {
    Cx lambda1, lambda2;

    bool regular() const {
        return lambda1 != Cx(0) && lambda2 != Cx(0) && lambda1 != lambda2;
    }
};

inline Cx antisym_bracket(Cx f1, Cx f2, Cx g1, Cx g2) { return f1 * g2 - f2 * g1; }

enum class PlusKind { PhiPhi, PhiWr, WrPhi, WrWr };

inline const char* plus_kind_name(PlusKind k) {
    switch (k) {
        case PlusKind::PhiPhi: return "phi,phi";
        case PlusKind::PhiWr: return "phi,wr";
        case PlusKind::WrPhi: return "wr,phi";
        case PlusKind::WrWr: return "wr,wr";
    }
    return "?";
}

namespace detail {

inline bool confluent(Cx nu1, Cx nu2) {
    return std::abs(nu1 - nu2) < 1e-6 * (1.0 + std::abs(nu1) + std::abs(nu2));
}

}  // namespace detail

/// F_ana = [Phi_l1, Phi_l2] / (nu1 - nu2). Extends analytically across
/// nu1 = nu2; the confluent value is the first-order expansion
/// Phi'_l1(nu) Phi_l2(nu) - Phi_l1(nu) Phi'_l2(nu).
inline Cx f_ana(Cx nu1, Cx nu2, const SpectralParams& sp, const SeriesConfig& cfg = {}) {
    if (detail::confluent(nu1, nu2)) {
        Cx nu = (nu1 + nu2) / 2.0;
        return phi_prime(sp.lambda1, nu, cfg) * phi(sp.lambda2, nu, cfg) -
               phi(sp.lambda1, nu, cfg) * phi_prime(sp.lambda2, nu, cfg);
    }
    Cx p11 = phi(sp.lambda1, nu1, cfg), p12 = phi(sp.lambda1, nu2, cfg);
    Cx p21 = phi(sp.lambda2, nu1, cfg), p22 = phi(sp.lambda2, nu2, cfg);
    return antisym_bracket(p11, p12, p21, p22) / (nu1 - nu2);
}

/// F_sing = ([Phi_l1, w_l2] + [w_l1, Phi_l2] + log|nu1 nu2| [Phi_l1, Phi_l2])
///          / (nu1 - nu2), with the same confluent limit treatment.
inline Cx f_sing(Cx nu1, Cx nu2, const SpectralParams& sp, const SeriesConfig& cfg = {}) {
    if (nu1 == Cx(0) || nu2 == Cx(0)) throw non_regular("F_sing needs nu1 nu2 != 0");
    if (detail::confluent(nu1, nu2)) {
        Cx nu = (nu1 + nu2) / 2.0;
        Cx p1 = phi(sp.lambda1, nu, cfg), dp1 = phi_prime(sp.lambda1, nu, cfg);
        Cx p2 = phi(sp.lambda2, nu, cfg), dp2 = phi_prime(sp.lambda2, nu, cfg);
        Cx w1 = small_w(sp.lambda1, nu, cfg), dw1 = small_w_prime(sp.lambda1, nu, cfg);
        Cx w2 = small_w(sp.lambda2, nu, cfg), dw2 = small_w_prime(sp.lambda2, nu, cfg);
        Cx lg = std::log(std::abs(nu * nu));
        return (dp1 * w2 - p1 * dw2) + (dw1 * p2 - w1 * dp2) + lg * (dp1 * p2 - p1 * dp2);
    }
    Cx p11 = phi(sp.lambda1, nu1, cfg), p12 = phi(sp.lambda1, nu2, cfg);
    Cx p21 = phi(sp.lambda2, nu1, cfg), p22 = phi(sp.lambda2, nu2, cfg);
    Cx w11 = small_w(sp.lambda1, nu1, cfg), w12 = small_w(sp.lambda1, nu2, cfg);
    Cx w21 = small_w(sp.lambda2, nu1, cfg), w22 = small_w(sp.lambda2, nu2, cfg);
    Cx lg = std::log(std::abs(nu1 * nu2));
    Cx numerator = antisym_bracket(p11, p12, w21, w22) + antisym_bracket(w11, w12, p21, p22) +
                   lg * antisym_bracket(p11, p12, p21, p22);
    return numerator / (nu1 - nu2);
}

/// F+_{A,B} = Y(S0) S+(A,B) / |nu1 - nu2| on the S0 > 0 region, for the four
/// (A, B) combinations of Phi and W^r. Zero when S0 < 0; the coincidence set
/// nu1 = nu2 is a genuine singularity and is rejected.
inline Cx f_plus(PlusKind kind, double s0, Cx nu1, Cx nu2, const SpectralParams& sp,
                 const SeriesConfig& cfg = {}) {
    if (s0 < 0) return 0.0;
    if (nu1 == nu2 || s0 == 0) throw non_regular("F+ is singular on nu1 = nu2");
    double n1 = nu1.real(), n2 = nu2.real();
    if (n1 == 0.0 || n2 == 0.0) throw non_regular("F+ needs nu1 nu2 != 0");
    auto a_at = [&](double t) {
        return (kind == PlusKind::WrPhi || kind == PlusKind::WrWr)
                   ? big_w_real(sp.lambda1, t, cfg)
                   : phi(sp.lambda1, t, cfg);
    };
    auto b_at = [&](double t) {
        return (kind == PlusKind::PhiWr || kind == PlusKind::WrWr)
                   ? big_w_real(sp.lambda2, t, cfg)
                   : phi(sp.lambda2, t, cfg);
    };
    Cx splus = a_at(n1) * b_at(n2) + a_at(n2) * b_at(n1);
    return splus / std::abs(n1 - n2);
}

/// Invariant functions of a point, routed through the invariants.
struct EigenfunctionRequest {
    enum class Which { Ana, Sing, Plus } which = Which::Ana;
    PlusKind plus_kind = PlusKind::PhiPhi;
    SpectralParams sp;
    SeriesConfig cfg;
};

inline Cx eigenfunction_eval(const EigenfunctionRequest& req, const InvariantsD& inv) {
    switch (req.which) {
        case EigenfunctionRequest::Which::Ana:
            return f_ana(inv.nu1, inv.nu2, req.sp, req.cfg);
        case EigenfunctionRequest::Which::Sing:
            return f_sing(inv.nu1, inv.nu2, req.sp, req.cfg);
        case EigenfunctionRequest::Which::Plus:
            return f_plus(req.plus_kind, inv.S0, inv.nu1, inv.nu2, req.sp, req.cfg);
    }
    return 0.0;
}

inline Cx eigenfunction_eval(const EigenfunctionRequest& req, const QElement& x) {
    InvariantData d = invariants(x);
    InvariantsD id{to_double(d.Q), to_double(d.S), to_double(d.S0), d.nu1, d.nu2};
    return eigenfunction_eval(req, id);
}

}  // namespace sympair::gl4
