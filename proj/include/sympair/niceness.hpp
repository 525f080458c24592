#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sympair/gl4.hpp"
#include "sympair/sl2.hpp"

namespace sympair {

struct CatalogEntry {
    std::string label;
    MatQ a0;  // semisimple, possibly zero
    MatQ x0;  // nilpotent in z_s^- of a0
};

enum class Completeness { BuiltinComplete, UserSupplied };

struct NilpotentCatalog {
    std::vector<CatalogEntry> entries;
    Completeness completeness = Completeness::UserSupplied;
};

/// Conjugation-invariant fingerprint used only to deduplicate catalog entries:
/// (rank Y, rank Z, rank YZ, nilpotency index) of the 4x4 element.
inline std::tuple<int, int, int, int> gl4_signature(const MatQ& x) {
    gl4::QElement q = gl4::QElement::from_embed(x);
    int ry = static_cast<int>(rank(q.Y));
    int rz = static_cast<int>(rank(q.Z));
    int ryz = static_cast<int>(rank(q.Y * q.Z));
    int idx = 0;
    MatQ p = MatQ::identity(4);
    for (int k = 1; k <= 4; ++k) {
        p = p * x;
        ++idx;
        if (p.is_zero()) break;
    }
    return {ry, rz, ryz, idx};
}

/// Built-in representatives for the gl(4)/gl(2)xgl(2) pair: the A0 = 0
/// nilpotents and samples with nonzero non-regular semisimple part, with the
/// nilpotent directions of their z_s^-, deduplicated by gl4_signature.
inline NilpotentCatalog build_catalog_gl4(const SymmetricPair& pair) {
    using namespace gl4;
    NilpotentCatalog cat;
    cat.completeness = Completeness::BuiltinComplete;
    MatQ zero4(4, 4);
    MatQ e2 = mat2(0, 1, 0, 0), i2 = MatQ::identity(2);

    cat.entries.push_back({"zero", zero4, zero4});
    cat.entries.push_back({"e_tensor_E11", zero4, upper_block(mat2(1, 0, 0, 0))});
    cat.entries.push_back({"f_tensor_E11", zero4, lower_block(mat2(1, 0, 0, 0))});
    cat.entries.push_back({"e_tensor_I", zero4, upper_block(i2)});
    cat.entries.push_back({"f_tensor_I", zero4, lower_block(i2)});
    cat.entries.push_back({"mixed_YI_Ze", zero4, block_q(i2, e2)});

    // non-regular semisimple samples and the nilpotent cone of their z_s^-
    std::vector<std::pair<std::string, MatQ>> a0s = {
        {"a0_u11", cartan_point(CartanLabel::PP, 1, 1).embed()},
        {"a0_u10", cartan_point(CartanLabel::PP, 1, 0).embed()},
    };
    for (const auto& [name, a0] : a0s) {
        CentralizerData cd = build_centralizer_data(pair, a0);
        std::map<std::tuple<int, int, int, int>, MatQ> found;
        std::size_t d = cd.zs_minus.dim();
        // small integer coefficient sweep over the z_s^- basis
        std::vector<int> coef(d, -1);
        for (;;) {
            MatQ x(4, 4);
            for (std::size_t i = 0; i < d; ++i)
                if (coef[i] != 0) x = x + cd.zs_minus.basis[i] * Rational(coef[i]);
            if (!x.is_zero() && classify(x) == ElementKind::Nilpotent)
                found.emplace(gl4_signature(x), x);
            std::size_t pos = 0;
            while (pos < d && coef[pos] == 1) coef[pos++] = -1;
            if (pos == d) break;
            ++coef[pos];
        }
        int k = 0;
        for (const auto& [sig, x] : found)
            cat.entries.push_back({name + "_nil" + std::to_string(k++), a0, x});
    }
    return cat;
}

enum class NiceVerdictKind { Nice, NotNice, NiceRelativeToCatalog };

struct NiceRow {
    std::string label;
    bool applicable = false;  // X0 = 0 entries are reported, not judged
    bool distinguished = false;
    int delta_q = 0;
    std::vector<int> weights;
};

struct NiceVerdict {
    NiceVerdictKind verdict = NiceVerdictKind::NiceRelativeToCatalog;
    std::vector<NiceRow> rows;
    std::vector<std::string> warnings;
};

/// Aggregation of per-entry data into the verdict; separated out so synthetic
/// rows can be injected in tests.
inline NiceVerdict verdict_from_rows(std::vector<NiceRow> rows, Completeness completeness,
                                     std::vector<std::string> warnings = {}) {
    NiceVerdict v;
    v.rows = std::move(rows);
    v.warnings = std::move(warnings);
    bool failed = false, vacuous = true;
    for (const auto& r : v.rows) {
        if (!r.applicable || !r.distinguished) continue;
        vacuous = false;
        if (r.delta_q <= 0) failed = true;
    }
    if (failed)
        v.verdict = NiceVerdictKind::NotNice;
    else if (completeness == Completeness::BuiltinComplete)
        v.verdict = NiceVerdictKind::Nice;
    else
        v.verdict = NiceVerdictKind::NiceRelativeToCatalog;
    if (vacuous && !failed)
        v.warnings.push_back("no distinguished entries in catalog; verdict is vacuous");
    return v;
}

inline NiceVerdict nice_verdict(const SymmetricPair& pair, const NilpotentCatalog& cat,
                                std::uint64_t seed = 7) {
    std::vector<NiceRow> rows;
    std::vector<std::string> warnings;
    for (const auto& entry : cat.entries) {
        if (!entry.a0.is_zero() && classify(entry.a0) != ElementKind::Semisimple)
            throw not_semisimple("catalog entry " + entry.label + ": A0 is not semisimple");
        if (!entry.x0.is_zero() && !bracket(entry.a0, entry.x0).is_zero())
            throw domain_error("catalog entry " + entry.label + ": [A0, X0] != 0");
        NiceRow row;
        row.label = entry.label;
        if (entry.x0.is_zero()) {
            row.applicable = false;  // not defined for X0 = 0; reported as such
            rows.push_back(row);
            continue;
        }
        CentralizerData cd = build_centralizer_data(pair, entry.a0);
        DistinguishedReport rep = distinguished_report(entry.x0, cd, seed);
        row.applicable = true;
        row.distinguished = rep.verdict;
        row.delta_q = rep.wd.delta_q();
        row.weights = rep.wd.weights;
        rows.push_back(row);
    }
    return verdict_from_rows(std::move(rows), cat.completeness, std::move(warnings));
}

}  // namespace sympair
