#include "spinconf/suites.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "spinconf/algebra.hpp"
#include "spinconf/bhabha.hpp"
#include "spinconf/conformal.hpp"
#include "spinconf/polyreal.hpp"

namespace spinconf::cli {

using algebra::GeneratorLabel;
using algebra::StructureTable;
using bhabha::BhabhaRep;
using exactla::ExactMatrix;
using exactla::ExactScalar;
using exactla::Rational;
using GL = GeneratorLabel;

namespace {

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
    return buf;
}

std::string config_hash(const ManifestConfig& c) {
    std::ostringstream os;
    os << c.spin.get_str() << "|" << c.n << "|" << exactla::rational_str(c.d) << "|" << c.dmax
       << "|" << c.seed << "|" << c.extended << "|" << c.inject_fault;
    // FNV-1a
    unsigned long long h = 1469598103934665603ULL;
    for (char ch : os.str()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

nlohmann::json matrix_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.dim(); ++c) {
            auto [re, im] = exactla::scalar_strings(m.at(r, c));
            row.push_back({re, im});
        }
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json poly_json(const exactla::ExactPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        auto [re, im] = exactla::scalar_strings(p.coeff(k));
        coeffs.push_back({re, im});
    }
    return coeffs;
}

Check entry(const std::string& name, const std::string& claim, bool pass,
            const std::string& detail = "") {
    return Check{name, claim, pass, detail};
}

}  // namespace

VerificationManifest run_verify_all(const ManifestConfig& config) {
    VerificationManifest m;
    m.config = config;
    m.run_id = config_hash(config);
    m.timestamp = iso_timestamp();

    if (config.n != 4) throw std::invalid_argument("the full suite runs at n = 4");
    const Rational s = config.spin;
    if (s != Rational(1, 2) && s != 1 && s != Rational(3, 2) && s != 2)
        throw std::invalid_argument("spin must be one of 1/2, 1, 3/2, 2");
    if (config.dmax < 3) throw std::invalid_argument("dmax must be >= 3");

    // shared immutable inputs
    auto table = std::make_shared<StructureTable>(4);
    auto basis = std::make_shared<polyreal::MonomialBasis>(4, config.dmax);
    auto rep = std::make_shared<BhabhaRep>(bhabha::build_bhabha_rep(s));
    m.eps_sign = rep->eps_sign;
    ExactScalar d{config.d};

    std::vector<Task> tasks;

    tasks.push_back({"table", [table] {
        std::vector<Check> cs;
        cs.push_back(entry("table_antisymmetry", "bracket(a,b) = -bracket(b,a) for all pairs",
                           table->check_antisymmetry()));
        cs.push_back(entry("table_jacobi", "Jacobi identity over all label triples",
                           table->check_jacobi()));
        return cs;
    }});

    tasks.push_back({"swap", [table] {
        algebra::Report r = algebra::verify_automorphism_swap(*table);
        return std::vector<Check>{entry("swap_automorphism",
                                        "(D,P,K,L) -> (-D,K,P,L) preserves every bracket",
                                        r.all_zero())};
    }});

    tasks.push_back({"polyreal", [table, basis, d, config] {
        std::vector<Check> cs;
        polyreal::GXSet gx = polyreal::build_GX(*basis, *table, d);
        if (config.inject_fault)
            gx.generators.realization[GL::p(0)].at(0, 1) += ExactScalar(1);
        algebra::Report r = algebra::verify_realization(gx.generators);
        std::ostringstream bad;
        for (const auto& pr : r.pairs)
            if (!pr.zero) bad << "[" << pr.a.str() << "," << pr.b.str() << "] ";
        cs.push_back(entry("gx_bracket_table",
                           "polynomial realization closes on the interior window",
                           r.all_zero(), bad.str()));
        bool shifts = true;
        for (const auto& [label, mat] : gx.generators.realization) {
            polyreal::GradedOperator go{mat, gx.shifts.at(label).first,
                                        gx.shifts.at(label).second};
            shifts = shifts && go.shifts_consistent(*basis);
        }
        cs.push_back(entry("gx_shift_metadata",
                           "every generator matrix respects its declared degree shifts", shifts));
        polyreal::CasimirX cx = polyreal::casimir_CX(*basis, gx);
        ExactScalar half_d = ExactScalar::of(1, 2) * d;
        ExactScalar want = half_d * (half_d - ExactScalar(4));
        cs.push_back(entry("cx2_scalar", "quadratic spacetime Casimir = (d/2)(d/2 - n)",
                           cx.c2 == want, cx.c2.str()));
        cs.push_back(entry("cx3_zero", "cubic spacetime Casimir vanishes", cx.c3.is_zero()));
        cs.push_back(entry("cx4_zero", "quartic spacetime Casimir vanishes", cx.c4.is_zero()));
        return cs;
    }});

    tasks.push_back({"rep", [rep] { return bhabha::verify_rep_invariants(*rep); }});

    tasks.push_back({"projectors", [rep] {
        bhabha::ProjectorPair pair = bhabha::build_projectors(*rep);
        std::vector<Check> cs = bhabha::verify_projectors(*rep, pair);
        auto sd = bhabha::verify_selfduality(*rep, pair);
        cs.insert(cs.end(), sd.begin(), sd.end());
        cs.push_back(bhabha::verify_orientation_flip(*rep, pair));
        return cs;
    }});

    tasks.push_back({"rigidity", [rep] {
        bhabha::RigidityReport rr = bhabha::eigenvalue_rigidity_scan(*rep);
        std::ostringstream os;
        for (const auto& e : rr.entries)
            os << "lambda=" << e.eigenvalue.get_str() << (e.annihilates_pi ? " pass" : " fail")
               << " rank=" << e.projector_rank << "; ";
        std::vector<Check> cs;
        cs.push_back(entry("rigidity_completeness", "spectral projectors resolve the identity",
                           rr.completeness));
        cs.push_back(entry("rigidity_top_only",
                           "pi_mu Pi_lambda = 0 exactly for lambda = s and no other eigenvalue",
                           rr.only_top_passes, os.str()));
        return cs;
    }});

    tasks.push_back({"gy", [rep, table] { return conformal::verify_GY(*rep, *table); }});
    tasks.push_back({"cy", [rep] { return conformal::verify_casimir_CY(*rep); }});

    const bool combined_ok = s == Rational(1, 2) || s == 1;
    if (combined_ok) {
        tasks.push_back({"combined", [basis, rep, table, d] {
            conformal::CombinedSpace cs = conformal::build_combined(*basis, *rep, d);
            return conformal::verify_combined(cs, *table);
        }});
    }
    if (s == Rational(1, 2)) {
        tasks.push_back({"reduced", [basis, rep, d] {
            conformal::CombinedSpace cs = conformal::build_combined(*basis, *rep, d);
            return conformal::reduced_casimir_identities(cs);
        }});
        if (config.extended) {
            tasks.push_back({"c4fit", [basis, rep, d] {
                conformal::CombinedSpace cs = conformal::build_combined(*basis, *rep, d);
                conformal::C4FitReport fit = conformal::fit_C4_projector_expansion(cs);
                std::vector<Check> out;
                out.push_back(fit.checks.front());  // span membership
                // the family structure is the verified exact statement; the
                // quoted (1, 1/4) member does not exist (see c4_fit_lambda_mu
                // in the acceptance suite for the literal assertion)
                std::ostringstream os;
                os << "rank " << fit.rank << "; lambda=1 member: ";
                if (fit.lambda1_pinnable)
                    for (int k = 0; k < 4; ++k)
                        os << fit.lambda1_member[k].str() << (k < 3 ? ", " : "");
                out.push_back(entry("c4_fit_family",
                                    "quartic fit family is one-dimensional with the beta.P "
                                    "coefficient forced to zero",
                                    fit.rank == 3 && fit.lambda1_pinnable &&
                                        fit.lambda1_member[2].is_zero(),
                                    os.str()));
                return out;
            }});
        }
        tasks.push_back({"ordinary", [basis, rep, table, d] {
            return conformal::verify_ordinary_theory(*basis, *rep, *table, d, ExactScalar(1));
        }});
        tasks.push_back({"plw", [rep, config] {
            std::vector<Check> cs;
            std::mt19937 rng(config.seed + 17);
            std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
            int checked = 0;
            bool prop = true, exact_const = true;
            while (checked < 20) {
                std::array<Rational, 4> p;
                for (auto& x : p) x = Rational(num(rng), den(rng));
                Rational pp = -p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
                if (pp == 0) continue;
                auto r = conformal::pauli_lubanski_checks(*rep, p);
                prop = prop && r.ww_proportional;
                exact_const = exact_const && r.ww_constant == ExactScalar::of(-1, 3);
                ++checked;
            }
            cs.push_back(entry("plw_ww_proportional",
                               "W.W is an exact multiple of (p.p) identity at random momenta",
                               prop));
            cs.push_back(entry("plw_ww_constant",
                               "W.W = -[s/(s+1)](p.p) identity (exact constant -1/3)",
                               exact_const));
            auto r = conformal::pauli_lubanski_checks(*rep, {Rational(1), Rational(1), 0, 0});
            for (const auto& c : r.checks)
                if (c.name == "ssc_implies_w" || c.name == "ww_lightlike")
                    cs.push_back(entry("plw_" + c.name, c.claim, c.pass, c.detail));
            return cs;
        }});
    }

    m.checks = run_tasks(std::move(tasks));
    if (!combined_ok)
        m.checks.push_back({"combined", "combined-space suite", "skipped",
                            "desk budget covers the combined space for s <= 1", 0});
    if (s != Rational(1, 2)) {
        m.checks.push_back({"reduced", "reduced projected-Casimir identities", "skipped",
                            "specified for s = 1/2", 0});
        m.checks.push_back({"plw", "momentum-contraction checks", "skipped",
                            "reported for s = 1/2; higher spins have no scalar W.W", 0});
    }
    return m;
}

std::string export_rep_json(const Rational& spin) {
    BhabhaRep rep = bhabha::build_bhabha_rep(spin);
    bhabha::DiracRep dirac = bhabha::dirac_rep();
    nlohmann::json j;
    j["spin"] = spin.get_str();
    j["dim"] = rep.dim;
    j["eps_sign"] = rep.eps_sign;
    auto [nre, nim] = exactla::scalar_strings(rep.N);
    j["N"] = nre;
    j["min_poly"] = poly_json(rep.min_poly);
    for (int mu = 0; mu < 4; ++mu) {
        j["gamma"][mu] = matrix_json(dirac.gamma[mu]);
        j["beta"][mu] = matrix_json(rep.beta[mu]);
    }
    j["beta5"] = matrix_json(rep.beta5);
    nlohmann::json manifest = nlohmann::json::array();
    for (const auto& c : bhabha::verify_rep_invariants(rep))
        manifest.push_back({{"name", c.name}, {"claim", c.claim}, {"pass", c.pass}});
    j["verification"] = manifest;
    return j.dump(2);
}

std::string export_generators_json(int n, int dmax, const Rational& d, const Rational& spin) {
    static StructureTable table4(4);
    StructureTable table(n);
    polyreal::MonomialBasis basis(n, dmax);
    polyreal::GXSet gx = polyreal::build_GX(basis, n == 4 ? table4 : table, ExactScalar(d));
    nlohmann::json j;
    j["n"] = n;
    j["dmax"] = dmax;
    j["d"] = exactla::rational_str(Rational(d));
    j["valid_window_degree"] = gx.valid_window_degree;
    nlohmann::json mono = nlohmann::json::array();
    for (int k = 0; k < basis.size(); ++k) mono.push_back(basis.exponents(k));
    j["monomials"] = mono;
    for (const auto& [label, mat] : gx.generators.realization) {
        j["spacetime"][label.str()] = matrix_json(mat);
        j["shifts"][label.str()] = {gx.shifts.at(label).first, gx.shifts.at(label).second};
    }
    if (n == 4) {
        BhabhaRep rep = bhabha::build_bhabha_rep(spin);
        conformal::InternalGeneratorSet gy = conformal::build_GY(rep);
        j["internal"]["Delta"] = matrix_json(gy.Delta);
        for (int mu = 0; mu < 4; ++mu) {
            j["internal"]["pi"][mu] = matrix_json(gy.pi[mu]);
            j["internal"]["kappa"][mu] = matrix_json(gy.kappa[mu]);
        }
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu)
                j["internal"]["s"][std::to_string(mu) + std::to_string(nu)] =
                    matrix_json(gy.spin[mu][nu]);
    }
    return j.dump(2);
}

std::string export_projectors_json(const Rational& spin) {
    BhabhaRep rep = bhabha::build_bhabha_rep(spin);
    bhabha::ProjectorPair pair = bhabha::build_projectors(rep);
    nlohmann::json j;
    j["spin"] = spin.get_str();
    j["eps_sign"] = rep.eps_sign;
    j["P"] = matrix_json(pair.P);
    j["P_dual"] = matrix_json(pair.P_dual);
    auto [tre, tim] = exactla::scalar_strings(pair.P.trace());
    j["trace"] = tre;
    j["rank"] = exactla::rank(pair.P);
    return j.dump(2);
}

std::string export_casimirs_json(const Rational& spin, const Rational& d) {
    BhabhaRep rep = bhabha::build_bhabha_rep(spin);
    conformal::CasimirSet cs = conformal::casimir_CY(conformal::build_GY(rep));
    nlohmann::json j;
    j["spin"] = spin.get_str();
    j["internal"] = {{"c2", cs.c2.str()}, {"c3", cs.c3.str()}, {"c4", cs.c4.str()}};
    j["internal_matrices"] = {{"c2", matrix_json(cs.c2m)},
                              {"c3", matrix_json(cs.c3m)},
                              {"c4", matrix_json(cs.c4m)}};
    Rational half_d = d / 2;
    j["spacetime"] = {{"c2", exactla::rational_str(half_d * (half_d - 4))},
                      {"c3", "0/1"},
                      {"c4", "0/1"}};
    return j.dump(2);
}

}  // namespace spinconf::cli
