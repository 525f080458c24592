// Batch front-end: parses pair/catalog/config inputs, dispatches the library
// computations and emits deterministic structured reports on stdout. Timing
// goes to stderr so reports stay byte-identical across runs.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "sympair/acceptance.hpp"

using json = nlohmann::ordered_json;
using namespace sympair;

namespace {

int exit_assertion = 1, exit_usage = 2, exit_domain = 3;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json exact(const Rational& r) { return {{"kind", "exact"}, {"value", to_string(r)}}; }
json exact(long v) { return {{"kind", "exact"}, {"value", std::to_string(v)}}; }
json approx(double v, double err = 0) {
    return {{"kind", "float"}, {"value", format_double(v)}, {"error", format_double(err)}};
}
json approx(Cx v, double err = 0) {
    return {{"kind", "float"},
            {"value", {format_double(v.real()), format_double(v.imag())}},
            {"error", format_double(err)}};
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(parse_rational(cur));
            cur.clear();
        } else
            cur.push_back(c);
    }
    if (!cur.empty()) out.push_back(parse_rational(cur));
    return out;
}

/// Rows separated by ';', entries by ','. The dimension must be square.
MatQ parse_matrix(const std::string& s) {
    std::vector<std::vector<Rational>> rows;
    std::string cur;
    for (char c : s + ";") {
        if (c == ';') {
            if (!cur.empty()) rows.push_back(parse_rational_list(cur));
            cur.clear();
        } else
            cur.push_back(c);
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    MatQ m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    return m;
}

MatQ mat2_from_list(const std::string& s) {
    auto v = parse_rational_list(s);
    if (v.size() != 4) throw std::invalid_argument("block shorthand needs 4 entries");
    return gl4::mat2(v[0], v[1], v[2], v[3]);
}

json matrix_json(const MatQ& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

struct PairSpec {
    std::string tag = "builtin:gl4";
    SymmetricPair pair;
};

PairSpec load_pair(const std::string& tag) {
    PairSpec ps;
    ps.tag = tag;
    if (tag == "builtin:gl4") {
        ps.pair = make_block_pair(2, 2);
        return ps;
    }
    std::ifstream in(tag);
    if (!in) throw std::invalid_argument("cannot open pair spec " + tag);
    json j = json::parse(in);
    std::size_t p = j.at("p"), q = j.at("q");
    PairOptions opts;
    if (j.contains("rank")) opts.rank_override = j["rank"].get<std::size_t>();
    if (j.contains("seed")) opts.seed = j["seed"].get<std::uint64_t>();
    ps.pair = make_block_pair(p, q, opts);
    return ps;
}

MatQ matrix_from_json(const json& j) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        rows.emplace_back();
        for (const auto& v : row)
            rows.back().push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                                : Rational(v.get<long>()));
    }
    MatQ m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j2 = 0; j2 < rows[i].size(); ++j2) m(i, j2) = rows[i][j2];
    return m;
}

NilpotentCatalog load_catalog(const std::string& path, const SymmetricPair& pair) {
    if (path.empty()) return build_catalog_gl4(pair);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog " + path);
    json j = json::parse(in);
    NilpotentCatalog cat;
    cat.completeness = Completeness::UserSupplied;
    for (const auto& e : j.at("entries")) {
        CatalogEntry entry;
        entry.label = e.at("label");
        entry.a0 = e.contains("a0") ? matrix_from_json(e["a0"]) : MatQ(pair.n, pair.n);
        entry.x0 = matrix_from_json(e.at("x0"));
        cat.entries.push_back(std::move(entry));
    }
    return cat;
}

MatQ builtin_rep(const std::string& name) {
    using namespace gl4;
    if (name == "e_tensor_I") return upper_block(MatQ::identity(2));
    if (name == "f_tensor_I") return lower_block(MatQ::identity(2));
    if (name == "e_tensor_E11") return upper_block(mat2(1, 0, 0, 0));
    if (name == "f_tensor_E11") return lower_block(mat2(1, 0, 0, 0));
    if (name == "mixed_YI_Ze") return block_q(MatQ::identity(2), mat2(0, 1, 0, 0));
    throw std::invalid_argument("unknown representative " + name);
}

struct Emitter {
    std::string command, format = "json";
    json config = json::object();
    json results = json::object();
    std::vector<std::string> warnings;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int emit() {
        json out;
        out["command"] = command;
        out["config"] = config;
        out["inputs_digest"] = [&] {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%016llx",
                          (unsigned long long)fnv1a(command + config.dump()));
            return std::string(buf);
        }();
        out["results"] = results;
        out["warnings"] = warnings;
        if (format == "json") {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "# " << command << "\n";
            for (auto& [k, v] : results.items())
                std::cout << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump())
                          << "\n";
            for (auto& w : warnings) std::cout << "warning\t" << w << "\n";
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "timing: " << format_double(secs) << " s\n";
        return 0;
    }
};

json weights_json(const std::vector<int>& w) {
    json a = json::array();
    for (int v : w) a.push_back(v);
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure toolkit for block-signature symmetric pairs"};
    app.require_subcommand(1);

    std::string pair_tag = "builtin:gl4", catalog_path, format = "json";
    std::string matrix_str, a0_str, y_str, z_str, rep_name, alpha_str, cartan, which = "ana";
    std::string route = "rs", target = "origin", case_name = "distinguished";
    std::string u_str, lambda1 = "1", lambda2 = "2";
    double tol = 1e-7, radius = 2.5;
    int truncation = 40, grid = 16, kmax = 8, l_order = 0, n_power = 1;
    std::uint64_t seed = 7;
    bool with_mc = false;

    app.add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--pair", pair_tag, "builtin:gl4 or a pair spec file");
        cmd->add_option("--seed", seed);
        cmd->add_option("--tol", tol);
        cmd->add_option("--truncation", truncation);
        cmd->add_option("--grid", grid);
    };

    auto* c_pair = app.add_subcommand("pair-info", "pair dimensions and rank");
    add_common(c_pair);

    auto* c_jordan = app.add_subcommand("jordan", "Jordan-Chevalley decomposition");
    add_common(c_jordan);
    c_jordan->add_option("--matrix", matrix_str, "rows 'a,b;c,d' of rationals");
    c_jordan->add_option("--y", y_str, "Y block shorthand (gl4)");
    c_jordan->add_option("--z", z_str, "Z block shorthand (gl4)");

    auto* c_triple = app.add_subcommand("triple", "normal sl2-triple completion");
    add_common(c_triple);
    c_triple->add_option("--matrix", matrix_str);
    c_triple->add_option("--rep", rep_name);
    c_triple->add_option("--a0", a0_str, "semisimple part (matrix rows)");

    auto* c_dist = app.add_subcommand("distinguished", "distinguished-nilpotent report");
    add_common(c_dist);
    c_dist->add_option("--matrix", matrix_str);
    c_dist->add_option("--rep", rep_name);
    c_dist->add_option("--a0", a0_str);

    auto* c_delta = app.add_subcommand("delta", "weights and delta_q");
    add_common(c_delta);
    c_delta->add_option("--matrix", matrix_str);
    c_delta->add_option("--rep", rep_name);
    c_delta->add_option("--a0", a0_str);

    auto* c_nice = app.add_subcommand("nice", "nice-pair verdict over a catalog");
    add_common(c_nice);
    c_nice->add_option("--catalog", catalog_path, "catalog JSON; omit for the builtin");

    auto* c_xi = app.add_subcommand("xi", "transverse Jacobian polynomial");
    add_common(c_xi);
    c_xi->add_option("--a0", a0_str);
    c_xi->add_option("--cartan", cartan);
    c_xi->add_option("--u", u_str);

    auto* c_mu = app.add_subcommand("mu", "radial correction term");
    add_common(c_mu);
    c_mu->add_option("--a0", a0_str);
    c_mu->add_option("--cartan", cartan);
    c_mu->add_option("--u", u_str);

    auto* c_lambda = app.add_subcommand("lambda-alpha", "singularity ladder value");
    add_common(c_lambda);
    c_lambda->add_option("--rep", rep_name);
    c_lambda->add_option("--matrix", matrix_str);
    c_lambda->add_option("--a0", a0_str);
    c_lambda->add_option("--alpha", alpha_str)->required();

    auto* c_sing = app.add_subcommand("sing-proof", "degree bookkeeping audit");
    add_common(c_sing);
    c_sing->add_option("--case", case_name)
        ->check(CLI::IsMember({"distinguished", "non-distinguished"}));
    c_sing->add_option("--rep", rep_name);
    c_sing->add_option("--l", l_order);
    c_sing->add_option("--N", n_power);
    c_sing->add_option("--r", grid);

    auto* c_inv = app.add_subcommand("gl4-invariants", "Q, S, S0 and eigenvalue pair");
    add_common(c_inv);
    c_inv->add_option("--cartan", cartan);
    c_inv->add_option("--u", u_str);
    c_inv->add_option("--y", y_str);
    c_inv->add_option("--z", z_str);

    auto* c_eval = app.add_subcommand("gl4-eval", "eigenfunction family evaluation");
    add_common(c_eval);
    c_eval->add_option("--which", which, "ana | sing | plus:{phiphi,phiwr,wrphi,wrwr}");
    c_eval->add_option("--lambda1", lambda1);
    c_eval->add_option("--lambda2", lambda2);
    c_eval->add_option("--cartan", cartan);
    c_eval->add_option("--u", u_str);
    c_eval->add_option("--y", y_str);
    c_eval->add_option("--z", z_str);

    auto* c_orb = app.add_subcommand("gl4-orbital", "orbital integral M(f)");
    add_common(c_orb);
    c_orb->add_option("--cartan", cartan)->required();
    c_orb->add_option("--u", u_str)->required();
    c_orb->add_option("--route", route)->check(CLI::IsMember({"rs", "xieta"}));
    c_orb->add_option("--radius", radius, "bump support radius");

    auto* c_weyl = app.add_subcommand("gl4-weyl", "Weyl-formula pairing");
    add_common(c_weyl);
    c_weyl->add_option("--which", which);
    c_weyl->add_option("--lambda1", lambda1);
    c_weyl->add_option("--lambda2", lambda2);
    c_weyl->add_option("--radius", radius);
    c_weyl->add_flag("--mc", with_mc, "also run the Monte-Carlo oracle");

    auto* c_probe = app.add_subcommand("gl4-probe", "integrability probe");
    add_common(c_probe);
    c_probe->add_option("--which", which);
    c_probe->add_option("--lambda1", lambda1);
    c_probe->add_option("--lambda2", lambda2);
    c_probe->add_option("--target", target)->check(CLI::IsMember({"origin", "coincidence"}));
    c_probe->add_option("--kmax", kmax);
    c_probe->add_option("--radius", radius);

    auto* c_verify = app.add_subcommand("verify-all", "run the full acceptance suite");
    add_common(c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    Emitter em;
    em.format = format;

    auto point_matrix = [&](const SymmetricPair& pr) -> MatQ {
        if (!matrix_str.empty()) return parse_matrix(matrix_str);
        if (!rep_name.empty()) return builtin_rep(rep_name);
        if (!y_str.empty() || !z_str.empty()) {
            MatQ y = y_str.empty() ? MatQ(2, 2) : mat2_from_list(y_str);
            MatQ z = z_str.empty() ? MatQ(2, 2) : mat2_from_list(z_str);
            return gl4::block_q(y, z);
        }
        throw std::invalid_argument("need --matrix, --rep or --y/--z");
        (void)pr;
    };
    auto a0_matrix = [&](const SymmetricPair& pr) -> MatQ {
        if (!a0_str.empty()) return parse_matrix(a0_str);
        if (!cartan.empty()) {
            auto label = gl4::cartan_from_name(cartan);
            if (!label) throw std::invalid_argument("unknown Cartan label " + cartan);
            auto u = parse_rational_list(u_str.empty() ? "1,1" : u_str);
            return gl4::cartan_point(*label, u.at(0), u.at(1)).embed();
        }
        return MatQ(pr.n, pr.n);
    };
    auto gl4_point = [&]() -> gl4::QElement {
        if (!cartan.empty()) {
            auto label = gl4::cartan_from_name(cartan);
            if (!label) throw std::invalid_argument("unknown Cartan label " + cartan);
            auto u = parse_rational_list(u_str);
            return gl4::cartan_point(*label, u.at(0), u.at(1));
        }
        if (!y_str.empty() || !z_str.empty()) {
            gl4::QElement x;
            if (!y_str.empty()) x.Y = mat2_from_list(y_str);
            if (!z_str.empty()) x.Z = mat2_from_list(z_str);
            return x;
        }
        throw std::invalid_argument("need --cartan/--u or --y/--z");
    };
    auto spectral = [&]() {
        gl4::SpectralParams sp;
        auto pc = [](const std::string& s) -> Cx {
            auto comma = s.find('+');
            if (s == "i") return {0, 1};
            if (s == "-i") return {0, -1};
            (void)comma;
            return {std::stod(s), 0};
        };
        sp.lambda1 = pc(lambda1);
        sp.lambda2 = pc(lambda2);
        if (!sp.regular()) throw domain_error("need lambda1 lambda2 (lambda1-lambda2) != 0");
        return sp;
    };

    try {
        if (*c_pair) {
            em.command = "pair-info";
            PairSpec ps = load_pair(pair_tag);
            em.config = {{"pair", pair_tag}};
            em.results["n"] = exact(long(ps.pair.n));
            em.results["dim_h"] = exact(long(ps.pair.h_space.dim()));
            em.results["dim_q"] = exact(long(ps.pair.q_space.dim()));
            em.results["dim_q_s"] = exact(long(ps.pair.q_s_space.dim()));
            em.results["dim_c_q"] = exact(long(ps.pair.c_q_space.dim()));
            em.results["rank"] = exact(long(ps.pair.rank));
        } else if (*c_jordan) {
            em.command = "jordan";
            PairSpec ps = load_pair(pair_tag);
            MatQ x = point_matrix(ps.pair);
            em.config = {{"pair", pair_tag}, {"matrix", matrix_json(x)}};
            auto jp = jordan_chevalley(x);
            const char* kinds[] = {"semisimple", "nilpotent", "mixed"};
            em.results["classify"] = kinds[int(classify(x))];
            em.results["semisimple_part"] = matrix_json(jp.semisimple);
            em.results["nilpotent_part"] = matrix_json(jp.nilpotent);
        } else if (*c_triple) {
            em.command = "triple";
            PairSpec ps = load_pair(pair_tag);
            MatQ x0 = point_matrix(ps.pair);
            MatQ a0 = a0_matrix(ps.pair);
            em.config = {{"pair", pair_tag}, {"x0", matrix_json(x0)}, {"a0", matrix_json(a0)}};
            CentralizerData cd = build_centralizer_data(ps.pair, a0);
            Sl2Triple t = complete_normal_triple(x0, cd);
            em.results["b0"] = matrix_json(t.b0);
            em.results["y0"] = matrix_json(t.y0);
            em.results["transpose_convention"] = t.transpose_convention;
            if (!t.note.empty()) em.warnings.push_back(t.note);
        } else if (*c_dist) {
            em.command = "distinguished";
            PairSpec ps = load_pair(pair_tag);
            MatQ x0 = point_matrix(ps.pair);
            MatQ a0 = a0_matrix(ps.pair);
            em.config = {{"pair", pair_tag},
                         {"x0", matrix_json(x0)},
                         {"a0", matrix_json(a0)},
                         {"seed", seed}};
            CentralizerData cd = build_centralizer_data(ps.pair, a0);
            DistinguishedReport rep = distinguished_report(x0, cd, seed);
            em.results["verdict"] = rep.verdict;
            em.results["no_semisimple_witness"] = rep.no_semisimple_witness;
            em.results["omega_zero_on_centralizer_x0"] = rep.omega_zero_on_cx0;
            em.results["omega_zero_on_centralizer_y0"] = rep.omega_zero_on_cy0;
            em.results["weights_positive"] = rep.weights_positive;
            em.results["zero_intersection"] = rep.zero_intersection;
            em.results["weights"] = weights_json(rep.wd.weights);
            em.results["delta_q"] = exact(long(rep.wd.delta_q()));
            if (rep.witness) em.results["witness"] = matrix_json(*rep.witness);
        } else if (*c_delta) {
            em.command = "delta";
            PairSpec ps = load_pair(pair_tag);
            MatQ x0 = point_matrix(ps.pair);
            MatQ a0 = a0_matrix(ps.pair);
            em.config = {{"pair", pair_tag}, {"x0", matrix_json(x0)}, {"a0", matrix_json(a0)}};
            CentralizerData cd = build_centralizer_data(ps.pair, a0);
            auto wd = weight_decomposition(complete_normal_triple(x0, cd), cd);
            em.results["weights"] = weights_json(wd.weights);
            em.results["dim_zs_minus"] = exact(long(wd.dim_zs_minus));
            em.results["delta_q"] = exact(long(wd.delta_q()));
            em.results["c0_sq"] = exact(wd.c0_sq);
        } else if (*c_nice) {
            em.command = "nice";
            PairSpec ps = load_pair(pair_tag);
            em.config = {{"pair", pair_tag},
                         {"catalog", catalog_path.empty() ? "builtin" : catalog_path},
                         {"seed", seed}};
            NilpotentCatalog cat = load_catalog(catalog_path, ps.pair);
            NiceVerdict v = nice_verdict(ps.pair, cat, seed);
            const char* names[] = {"nice", "not-nice", "nice-relative-to-catalog"};
            em.results["verdict"] = names[int(v.verdict)];
            json rows = json::array();
            for (const auto& r : v.rows) {
                json row;
                row["label"] = r.label;
                row["applicable"] = r.applicable;
                if (r.applicable) {
                    row["distinguished"] = r.distinguished;
                    row["delta_q"] = exact(long(r.delta_q));
                    row["weights"] = weights_json(r.weights);
                }
                rows.push_back(row);
            }
            em.results["entries"] = rows;
            for (const auto& w : v.warnings) em.warnings.push_back(w);
        } else if (*c_xi || *c_mu) {
            PairSpec ps = load_pair(pair_tag);
            MatQ a0 = a0_matrix(ps.pair);
            em.command = *c_xi ? "xi" : "mu";
            em.config = {{"pair", pair_tag}, {"a0", matrix_json(a0)}};
            RadialSemisimple rad = radial_semisimple(ps.pair, a0);
            VarPool pool;
            for (std::size_t i = 0; i < rad.split.z_minus.dim(); ++i)
                pool.add("z" + std::to_string(i + 1));
            em.results["dim_z_minus"] = exact(long(rad.split.z_minus.dim()));
            em.results["dim_v_minus"] = exact(long(rad.split.v_minus.dim()));
            if (*c_xi) {
                em.results["xi"] = rad.xi.str(pool);
                em.results["degree"] = exact(long(rad.xi.degree()));
            } else {
                em.results["mu_numerator"] = rad.mu.num.str(pool);
                em.results["mu_denominator"] = rad.mu.den.str(pool);
            }
        } else if (*c_lambda) {
            em.command = "lambda-alpha";
            PairSpec ps = load_pair(pair_tag);
            MatQ x0 = point_matrix(ps.pair);
            MatQ a0 = a0_matrix(ps.pair);
            em.config = {{"pair", pair_tag}, {"x0", matrix_json(x0)}, {"alpha", alpha_str}};
            CentralizerData cd = build_centralizer_data(ps.pair, a0);
            WeightData wd = weight_decomposition(complete_normal_triple(x0, cd), cd).data();
            std::vector<int> alpha;
            for (const auto& r : parse_rational_list(alpha_str))
                alpha.push_back(int(to_double(r)));
            em.results["lambda_alpha"] = exact(lambda_alpha(wd, alpha));
            em.results["weights"] = weights_json(wd.weights);
        } else if (*c_sing) {
            em.command = "sing-proof";
            bool dist = case_name == "distinguished";
            WeightData wd;
            if (!rep_name.empty()) {
                PairSpec ps = load_pair(pair_tag);
                CentralizerData cd = build_centralizer_data(ps.pair, MatQ(ps.pair.n, ps.pair.n));
                wd = weight_decomposition(
                         complete_normal_triple(builtin_rep(rep_name), cd), cd)
                         .data();
            } else {
                int r = std::max(1, std::min(grid, 6));
                wd.weights.assign(r, dist ? 2 : 0);
                wd.weights[0] = 2;
                int s = 0;
                for (int ni : wd.weights) s += ni + 2;
                wd.dim_zs_minus = dist ? s - 1 : 2 * r;
            }
            em.config = {{"case", case_name}, {"l", l_order}, {"N", n_power}, {"seed", seed}};
            ProofAudit a = proof_degree_check(dist, wd, l_order, n_power, seed);
            em.results["expected_degree"] = exact(long(a.expected_degree));
            em.results["measured_degree"] = exact(long(a.measured_degree));
            em.results["witness_alpha"] = mi_str(a.witness_alpha);
            em.results["witness_coefficient"] = a.witness_coefficient;
            if (dist) em.results["lambda_product"] = exact(a.lambda_product);
            em.results["pass"] = a.pass;
            if (!a.pass) return em.emit(), exit_assertion;
        } else if (*c_inv) {
            em.command = "gl4-invariants";
            gl4::QElement x = gl4_point();
            em.config = {{"y", matrix_json(x.Y)}, {"z", matrix_json(x.Z)}};
            gl4::InvariantData d = gl4::invariants(x);
            em.results["Q"] = exact(d.Q);
            em.results["S"] = exact(d.S);
            em.results["S0"] = exact(d.S0);
            if (d.nu_exact) {
                em.results["nu1"] = exact(d.nu_exact->first);
                em.results["nu2"] = exact(d.nu_exact->second);
            } else {
                em.results["nu1"] = approx(d.nu1);
                em.results["nu2"] = approx(d.nu2);
            }
            em.results["regular"] = d.regular;
        } else if (*c_eval) {
            em.command = "gl4-eval";
            gl4::QElement x = gl4_point();
            gl4::SpectralParams sp = spectral();
            em.config = {{"which", which},
                         {"lambda1", lambda1},
                         {"lambda2", lambda2},
                         {"y", matrix_json(x.Y)},
                         {"z", matrix_json(x.Z)},
                         {"truncation", truncation},
                         {"tol", format_double(tol)}};
            gl4::EigenfunctionRequest req;
            req.sp = sp;
            req.cfg.truncation = truncation;
            req.cfg.tolerance = std::min(tol, 1e-10);
            if (which == "ana")
                req.which = gl4::EigenfunctionRequest::Which::Ana;
            else if (which == "sing")
                req.which = gl4::EigenfunctionRequest::Which::Sing;
            else if (which.rfind("plus:", 0) == 0) {
                req.which = gl4::EigenfunctionRequest::Which::Plus;
                std::string k = which.substr(5);
                if (k == "phiphi") req.plus_kind = gl4::PlusKind::PhiPhi;
                else if (k == "phiwr") req.plus_kind = gl4::PlusKind::PhiWr;
                else if (k == "wrphi") req.plus_kind = gl4::PlusKind::WrPhi;
                else if (k == "wrwr") req.plus_kind = gl4::PlusKind::WrWr;
                else throw std::invalid_argument("unknown plus kind " + k);
            } else
                throw std::invalid_argument("unknown eigenfunction " + which);
            em.results["value"] = approx(eigenfunction_eval(req, x));
        } else if (*c_orb) {
            em.command = "gl4-orbital";
            auto label = gl4::cartan_from_name(cartan);
            if (!label || *label == gl4::CartanLabel::A2)
                throw std::invalid_argument("--cartan must be a split label");
            auto [e1, e2] = gl4::cartan_signs(*label);
            auto u = parse_rational_list(u_str);
            em.config = {{"cartan", cartan},
                         {"u", u_str},
                         {"route", route},
                         {"radius", format_double(radius)},
                         {"tol", format_double(tol)},
                         {"grid", grid}};
            Bump f;
            f.radius = radius;
            f.kinvariant = true;
            gl4::OrbitalCfg cfg;
            cfg.tol = tol;
            cfg.n_outer = cfg.n_inner = grid;
            auto r = gl4::orbital_integral(
                f, e1, e2, to_double(u.at(0)), to_double(u.at(1)),
                route == "rs" ? gl4::OrbitalRoute::RS : gl4::OrbitalRoute::XiEta, cfg);
            em.results["value"] = approx(r.value, r.err_estimate);
            em.results["nodes_per_axis"] = exact(long(r.n_used));
        } else if (*c_weyl) {
            em.command = "gl4-weyl";
            gl4::SpectralParams sp = spectral();
            em.config = {{"which", which},      {"lambda1", lambda1}, {"lambda2", lambda2},
                         {"radius", format_double(radius)}, {"grid", grid},    {"seed", seed}};
            Bump f;
            f.radius = radius;
            f.kinvariant = true;
            gl4::WeylCfg cfg;
            cfg.n_u = std::max(8, grid);
            gl4::WeylPairing wp(f, cfg);
            gl4::PairingFn fn;
            if (which == "ana")
                fn = [&](const gl4::InvariantsD& v) { return f_ana(v.nu1, v.nu2, sp).real(); };
            else if (which == "sing")
                fn = [&](const gl4::InvariantsD& v) {
                    return v.nu1 == v.nu2 ? 0.0 : f_sing(v.nu1, v.nu2, sp).real();
                };
            else if (which.rfind("plus", 0) == 0)
                fn = [&](const gl4::InvariantsD& v) {
                    if (v.S0 <= 0) return 0.0;
                    return f_plus(gl4::PlusKind::PhiPhi, v.S0, v.nu1, v.nu2, sp).real();
                };
            else
                throw std::invalid_argument("unknown eigenfunction " + which);
            auto b = wp.pair(fn);
            em.results["pairing_pp"] = approx(b.pp);
            em.results["pairing_pm"] = approx(b.pm);
            em.results["pairing_mm"] = approx(b.mm);
            em.results["pairing_a2"] = approx(b.a2);
            em.results["pairing_total"] = approx(b.total());
            if (with_mc) {
                auto mc = gl4::mc_integrals({fn}, f, 2000000, seed);
                em.results["mc_value"] = approx(mc[0].value, mc[0].std_error);
                em.results["mc_over_pairing"] = approx(mc[0].value / b.total());
                em.results["calibration_theoretical"] =
                    approx(gl4::weyl_calibration_constant());
            }
        } else if (*c_probe) {
            em.command = "gl4-probe";
            gl4::SpectralParams sp = spectral();
            em.config = {{"which", which},
                         {"target", target},
                         {"kmax", kmax},
                         {"radius", format_double(radius)}};
            Bump f;
            f.radius = radius;
            f.kinvariant = true;
            gl4::PairingFn fn;
            if (which == "ana")
                fn = [&](const gl4::InvariantsD& v) { return f_ana(v.nu1, v.nu2, sp).real(); };
            else if (which == "sing")
                fn = [&](const gl4::InvariantsD& v) {
                    return v.nu1 == v.nu2 ? 0.0 : f_sing(v.nu1, v.nu2, sp).real();
                };
            else if (which == "control")
                fn = [](const gl4::InvariantsD& v) {
                    double d = std::abs(v.nu1 - v.nu2);
                    return d == 0 ? 0.0 : std::pow(d, -1.5);
                };
            else
                fn = [&](const gl4::InvariantsD& v) {
                    if (v.S0 <= 0) return 0.0;
                    return f_plus(gl4::PlusKind::PhiPhi, v.S0, v.nu1, v.nu2, sp).real();
                };
            gl4::ProbeCfg cfg;
            cfg.k_max = kmax;
            auto rep = target == "origin" ? gl4::probe_origin(fn, f, cfg)
                                          : gl4::probe_coincidence(fn, f, cfg);
            json contribs = json::array();
            for (double v : rep.contributions) contribs.push_back(format_double(v));
            em.results["contributions"] = contribs;
            em.results["total"] = approx(rep.total);
            em.results["last_relative"] = approx(rep.last_relative);
            em.results["divergent"] = rep.divergent;
        } else if (*c_verify) {
            em.command = "verify-all";
            bool all = true;
            json rows = json::array();
            for (const auto& r : sympair::acceptance::run_all()) {
                std::fprintf(stderr, "[%s] %2d %-28s (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                             r.id, r.name.c_str(), r.seconds);
                json row;
                row["id"] = r.id;
                row["name"] = r.name;
                row["pass"] = r.pass;
                row["detail"] = r.detail;
                rows.push_back(row);
                all = all && r.pass;
            }
            em.results["criteria"] = rows;
            em.results["all_pass"] = all;
            em.emit();
            return all ? 0 : exit_assertion;
        }
        return em.emit();
    } catch (const Error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_assertion;
    }
}
