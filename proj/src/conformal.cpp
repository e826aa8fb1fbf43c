#include "spinconf/conformal.hpp"

#include <sstream>
#include <stdexcept>

namespace spinconf::conformal {

using algebra::GeneratorLabel;
using bhabha::hodge_dual;
using exactla::anticommutator;
using exactla::commutator;
using exactla::kron;
using polyreal::build_GX;
using polyreal::build_position_momentum;
using GL = GeneratorLabel;

namespace {

const ExactScalar kI = ExactScalar::i();
const ExactScalar kHalf = ExactScalar::of(1, 2);

Check make_check(const std::string& name, const std::string& claim, bool pass,
                 const std::string& detail = "") {
    return Check{name, claim, pass, pass ? "" : detail};
}

ExactScalar cy2_scalar(const Rational& s) { return ExactScalar(Rational(3 * s * (s + 2))); }
ExactScalar cy3_scalar(const Rational& s) {
    return ExactScalar(Rational(4 * s * (s + 1) * (s + 2)));
}
ExactScalar cy4_scalar(const Rational& s) {
    return ExactScalar(Rational(3 * s * (s + 1) * (s + 1) * (s + 2)));
}

bool equal_on_columns(const ExactMatrix& a, const ExactMatrix& b, const std::vector<int>& cols) {
    for (int c : cols)
        for (int r = 0; r < a.dim(); ++r)
            if (!(a.at(r, c) == b.at(r, c))) return false;
    return true;
}

algebra::GeneratorSet as_generator_set(const algebra::StructureTable& table, const ExactMatrix& D,
                                       const std::array<ExactMatrix, 4>& P,
                                       const std::array<ExactMatrix, 4>& K,
                                       const std::array<std::array<ExactMatrix, 4>, 4>& L,
                                       std::vector<int> window) {
    algebra::GeneratorSet gs;
    gs.table = &table;
    gs.space_dim = D.dim();
    gs.window_columns = std::move(window);
    gs.realization[GL::d()] = D;
    for (int mu = 0; mu < 4; ++mu) {
        gs.realization[GL::p(mu)] = P[mu];
        gs.realization[GL::k(mu)] = K[mu];
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) gs.realization[GL::l(mu, nu)] = L[mu][nu];
    return gs;
}

std::string failing_pairs(const algebra::Report& rep) {
    std::ostringstream os;
    for (const auto& pr : rep.pairs)
        if (!pr.zero) os << "[" << pr.a.str() << "," << pr.b.str() << "] ";
    return os.str();
}

}  // namespace

InternalGeneratorSet build_GY(const BhabhaRep& rep) {
    InternalGeneratorSet gy;
    gy.dim = rep.dim;
    gy.s = rep.spin;
    gy.eps_sign = rep.eps_sign;
    gy.Delta = kI * rep.beta5;
    auto pi = bhabha::pi_ops(rep);
    auto kappa = bhabha::kappa_ops(rep);
    for (int mu = 0; mu < 4; ++mu) {
        gy.pi[mu] = pi[mu];
        gy.kappa[mu] = kappa[mu];
    }
    gy.spin = rep.spin_tensor;
    return gy;
}

std::vector<Check> verify_GY(const BhabhaRep& rep, const algebra::StructureTable& table) {
    std::vector<Check> out;
    InternalGeneratorSet gy = build_GY(rep);
    std::vector<int> all_cols(rep.dim);
    for (int k = 0; k < rep.dim; ++k) all_cols[k] = k;
    algebra::GeneratorSet gs =
        as_generator_set(table, gy.Delta, gy.pi, gy.kappa, gy.spin, all_cols);
    algebra::Report rep_table = algebra::verify_realization(gs);
    out.push_back(make_check("gy_bracket_table",
                             "(Delta, pi, kappa, s) satisfies the conformal bracket table",
                             rep_table.all_zero(), failing_pairs(rep_table)));

    // duality: rebuilding with beta5 -> -beta5 maps (Delta,pi,kappa,s) to (-Delta,kappa,pi,s)
    BhabhaRep flipped = rep;
    flipped.beta5 = ExactScalar(-1) * rep.beta5;
    InternalGeneratorSet fy = build_GY(flipped);
    bool dual = fy.Delta == ExactScalar(-1) * gy.Delta;
    for (int mu = 0; mu < 4 && dual; ++mu)
        dual = fy.pi[mu] == gy.kappa[mu] && fy.kappa[mu] == gy.pi[mu] &&
               fy.spin[0][mu] == gy.spin[0][mu];
    out.push_back(make_check("gy_duality",
                             "beta5 -> -beta5 realizes (Delta,pi,kappa,s) -> (-Delta,kappa,pi,s)",
                             dual));
    return out;
}

CasimirSet casimir_CY(const InternalGeneratorSet& gy) {
    const int dim = gy.dim;
    const Metric g(4);
    auto up = [&](int mu) { return g.gs(mu); };

    SpinTensor t;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) t[mu][nu] = anticommutator(gy.kappa[mu], gy.pi[nu]);

    CasimirSet cs;
    // quadratic: -Delta^2 + (1/2) s.s + (1/2) tr t
    cs.c2m = ExactScalar(-1) * (gy.Delta * gy.Delta);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            cs.c2m += (kHalf * up(mu) * up(nu)) * (gy.spin[mu][nu] * gy.spin[mu][nu]);
    for (int mu = 0; mu < 4; ++mu) cs.c2m += (kHalf * up(mu)) * t[mu][mu];

    SpinTensor sst = hodge_dual(gy.spin, gy.eps_sign, g);
    // cubic: (Delta s_mn + t_mn) *s^mn
    cs.c3m = ExactMatrix(dim);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            cs.c3m += (up(mu) * up(nu)) * ((gy.Delta * gy.spin[mu][nu] + t[mu][nu]) * sst[mu][nu]);

    // quartic: -(1/16)(s *s)^2 + (1/2) w.w - (1/2){k, p}
    SpinTensor tst = hodge_dual(t, gy.eps_sign, g);
    ExactMatrix s_dot_st(dim);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            s_dot_st += (up(mu) * up(nu)) * (gy.spin[mu][nu] * sst[mu][nu]);
    cs.c4m = ExactScalar::of(-1, 16) * (s_dot_st * s_dot_st);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            ExactMatrix w = gy.Delta * sst[mu][nu] + kHalf * tst[mu][nu];
            cs.c4m += (kHalf * up(mu) * up(nu)) * (w * w);
        }
    for (int mu = 0; mu < 4; ++mu) {
        ExactMatrix kf(dim), pf(dim);
        for (int nu = 0; nu < 4; ++nu) {
            kf += up(nu) * (sst[mu][nu] * gy.kappa[nu]);
            pf += up(nu) * (sst[mu][nu] * gy.pi[nu]);
        }
        cs.c4m += (ExactScalar::of(-1, 2) * up(mu)) * anticommutator(kf, pf);
    }

    cs.c2 = cs.c2m.scalar_value();
    cs.c3 = cs.c3m.scalar_value();
    cs.c4 = cs.c4m.scalar_value();
    return cs;
}

std::vector<Check> verify_casimir_CY(const BhabhaRep& rep) {
    std::vector<Check> out;
    const Rational s = rep.spin;
    InternalGeneratorSet gy = build_GY(rep);
    CasimirSet cs = casimir_CY(gy);

    out.push_back(make_check("cy2_scalar", "C_Y quadratic = 3s(s+2)", cs.c2 == cy2_scalar(s),
                             cs.c2.str()));
    out.push_back(make_check("cy3_scalar", "C_Y cubic = 4s(s+1)(s+2)", cs.c3 == cy3_scalar(s),
                             cs.c3.str()));
    out.push_back(make_check("cy4_scalar", "C_Y quartic = 3s(s+1)^2(s+2)",
                             cs.c4 == cy4_scalar(s), cs.c4.str()));

    ExactScalar n{Rational(2 * (s + 1))};
    ExactScalar twothirds = ExactScalar::of(2, 3);
    out.push_back(make_check("cy_ratio_32", "cubic = (2/3) N quadratic (scalar and matrix)",
                             cs.c3 == twothirds * n * cs.c2 &&
                                 cs.c3m == (twothirds * n) * cs.c2m));
    ExactScalar third = ExactScalar::of(1, 3);
    out.push_back(make_check(
        "cy_ratio_42", "quartic = quadratic + (1/3) quadratic^2 (scalar and matrix)",
        cs.c4 == cs.c2 + third * cs.c2 * cs.c2 &&
            cs.c4m == cs.c2m + third * (cs.c2m * cs.c2m)));

    // orientation-flip invariance: flipped rep gives the same three Casimirs
    BhabhaRep flipped = rep;
    flipped.eps_sign = -rep.eps_sign;
    auto [b5, nn] = bhabha::build_beta5(flipped.beta, flipped.eps_sign);
    flipped.beta5 = b5;
    flipped.N = nn;
    CasimirSet fs = casimir_CY(build_GY(flipped));
    out.push_back(make_check("cy_eps_invariance",
                             "all three Casimirs are invariant under eps -> -eps",
                             fs.c2m == cs.c2m && fs.c3m == cs.c3m && fs.c4m == cs.c4m));
    return out;
}

std::vector<int> CombinedSpace::window_columns(int buffer) const {
    std::vector<int> out;
    for (int q : basis->columns_up_to_degree(basis->max_degree() - buffer))
        for (int a = 0; a < ni; ++a) out.push_back(q * ni + a);
    return out;
}

CombinedSpace build_combined(const polyreal::MonomialBasis& basis, const BhabhaRep& rep,
                             const ExactScalar& d) {
    if (basis.n() != 4) throw std::invalid_argument("combined space needs n = 4");
    if (basis.max_degree() < 3) throw std::invalid_argument("window too small: max_degree < 3");
    static const algebra::StructureTable table4(4);
    polyreal::GXSet gx = build_GX(basis, table4, d);
    InternalGeneratorSet gy = build_GY(rep);

    CombinedSpace cs;
    cs.basis = &basis;
    cs.rep = &rep;
    cs.d = d;
    cs.np = basis.size();
    cs.ni = rep.dim;
    cs.dim = cs.np * cs.ni;

    ExactMatrix ip = ExactMatrix::identity(cs.np);
    ExactMatrix ii = ExactMatrix::identity(cs.ni);
    const auto& R = gx.generators.realization;

    cs.D_space = kron(R.at(GL::d()), ii);
    cs.D = cs.D_space + kron(ip, gy.Delta);
    for (int mu = 0; mu < 4; ++mu) {
        cs.P_space[mu] = kron(R.at(GL::p(mu)), ii);
        cs.P[mu] = cs.P_space[mu] + kron(ip, gy.pi[mu]);
        cs.K[mu] = kron(R.at(GL::k(mu)), ii) + kron(ip, gy.kappa[mu]);
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            ExactMatrix lpoly =
                mu == nu ? ExactMatrix(cs.np)
                         : (mu < nu ? R.at(GL::l(mu, nu))
                                    : ExactScalar(-1) * R.at(GL::l(nu, mu)));
            cs.L[mu][nu] = kron(lpoly, ii) + kron(ip, gy.spin[mu][nu]);
        }
    cs.P_lift = kron(ip, bhabha::build_projectors(rep).P);
    return cs;
}

std::vector<Check> verify_combined(const CombinedSpace& cs, const algebra::StructureTable& table) {
    std::vector<Check> out;
    algebra::GeneratorSet gs =
        as_generator_set(table, cs.D, cs.P, cs.K, cs.L, cs.window_columns(2));
    algebra::Report rep_table = algebra::verify_realization(gs);
    out.push_back(make_check("combined_bracket_table",
                             "combined generators satisfy the conformal bracket table",
                             rep_table.all_zero(), failing_pairs(rep_table)));

    // cross-brackets: every spacetime lift commutes with every internal lift
    static const algebra::StructureTable table4(4);
    polyreal::GXSet gx = build_GX(*cs.basis, table4, cs.d);
    InternalGeneratorSet gy = build_GY(*cs.rep);
    ExactMatrix ip = ExactMatrix::identity(cs.np);
    ExactMatrix ii = ExactMatrix::identity(cs.ni);
    std::vector<ExactMatrix> xs, ys;
    for (const auto& [label, m] : gx.generators.realization) xs.push_back(kron(m, ii));
    ys.push_back(kron(ip, gy.Delta));
    for (int mu = 0; mu < 4; ++mu) {
        ys.push_back(kron(ip, gy.pi[mu]));
        ys.push_back(kron(ip, gy.kappa[mu]));
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) ys.push_back(kron(ip, gy.spin[mu][nu]));

    bool cross = true;
    std::vector<int> wcols = cs.window_columns(2);
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            for (int c : wcols) {
                exactla::ExactVector e(cs.dim);
                e[c] = ExactScalar(1);
                exactla::ExactVector xy = x.apply(y.apply(e));
                exactla::ExactVector yx = y.apply(x.apply(e));
                for (int r = 0; r < cs.dim; ++r)
                    if (!(xy[r] == yx[r])) { cross = false; break; }
                if (!cross) break;
            }
            if (!cross) break;
        }
        if (!cross) break;
    }
    out.push_back(make_check("cross_brackets", "[x o 1, 1 o y] = 0 for all generator pairs",
                             cross));
    return out;
}

namespace {

/// Composite operators entering the reduced identities, built once.
struct CombinedCasimirs {
    ExactMatrix c2r, c3r, c4r;   // identity parts subtracted
    ExactMatrix i_op, j_op;      // (1/2) s.L and (1/2) *s.L
    ExactMatrix beta_p;          // beta_mu P^mu (spacetime momentum)
    ExactMatrix beta_w;          // beta_mu W^mu
    ExactScalar cx2;
};

CombinedCasimirs build_combined_casimirs(const CombinedSpace& cs) {
    const Metric g(4);
    auto up = [&](int mu) { return g.gs(mu); };
    const int dim = cs.dim;
    const Rational s = cs.rep->spin;
    const int eps = cs.rep->eps_sign;

    CombinedCasimirs out;
    ExactScalar half_d = kHalf * cs.d;
    out.cx2 = half_d * (half_d - ExactScalar(4));

    SpinTensor t;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) t[mu][nu] = anticommutator(cs.K[mu], cs.P[nu]);

    ExactMatrix c2 = ExactScalar(-1) * (cs.D * cs.D);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            c2 += (kHalf * up(mu) * up(nu)) * (cs.L[mu][nu] * cs.L[mu][nu]);
        }
    for (int mu = 0; mu < 4; ++mu) c2 += (kHalf * up(mu)) * t[mu][mu];

    SpinTensor lst = hodge_dual(cs.L, eps, g);
    ExactMatrix c3(dim);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            c3 += (up(mu) * up(nu)) * ((cs.D * cs.L[mu][nu] + t[mu][nu]) * lst[mu][nu]);
        }
    // the mu = nu diagonal of t *l vanishes only through the Hodge zero; keep it exact
    for (int mu = 0; mu < 4; ++mu)
        c3 += (up(mu) * up(mu)) * (t[mu][mu] * lst[mu][mu]);

    SpinTensor tst = hodge_dual(t, eps, g);
    ExactMatrix l_dot_lst(dim);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            l_dot_lst += (up(mu) * up(nu)) * (cs.L[mu][nu] * lst[mu][nu]);
        }
    ExactMatrix c4 = ExactScalar::of(-1, 16) * (l_dot_lst * l_dot_lst);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            ExactMatrix w = cs.D * lst[mu][nu] + kHalf * tst[mu][nu];
            c4 += (kHalf * up(mu) * up(nu)) * (w * w);
        }
    for (int mu = 0; mu < 4; ++mu) {
        ExactMatrix wdiag = kHalf * tst[mu][mu];  // *L diagonal is zero
        c4 += (kHalf * up(mu) * up(mu)) * (wdiag * wdiag);
    }
    for (int mu = 0; mu < 4; ++mu) {
        ExactMatrix kf(dim), pf(dim);
        for (int nu = 0; nu < 4; ++nu) {
            kf += up(nu) * (lst[mu][nu] * cs.K[nu]);
            pf += up(nu) * (lst[mu][nu] * cs.P[nu]);
        }
        c4 += (ExactScalar::of(-1, 2) * up(mu)) * anticommutator(kf, pf);
    }

    ExactMatrix id = ExactMatrix::identity(dim);
    out.c2r = c2 - (out.cx2 + cy2_scalar(s)) * id;
    out.c3r = c3 - cy3_scalar(s) * id;   // the spacetime cubic scalar is 0
    out.c4r = c4 - cy4_scalar(s) * id;

    // spin-orbit coupling operators as Kronecker lifts
    static const algebra::StructureTable table4(4);
    polyreal::GXSet gx = build_GX(*cs.basis, table4, cs.d);
    InternalGeneratorSet gy = build_GY(*cs.rep);
    SpinTensor sst = hodge_dual(gy.spin, eps, g);
    auto lpoly = [&](int mu, int nu) -> ExactMatrix {
        if (mu == nu) return ExactMatrix(cs.np);
        if (mu < nu) return gx.generators.realization.at(GL::l(mu, nu));
        return ExactScalar(-1) * gx.generators.realization.at(GL::l(nu, mu));
    };

    out.i_op = ExactMatrix(dim);
    out.j_op = ExactMatrix(dim);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            ExactMatrix lup = (up(mu) * up(nu)) * lpoly(mu, nu);
            out.i_op += kHalf * kron(lup, gy.spin[mu][nu]);
            out.j_op += kHalf * kron(lup, sst[mu][nu]);
        }

    out.beta_p = ExactMatrix(dim);
    for (int mu = 0; mu < 4; ++mu)
        out.beta_p += up(mu) * kron(gx.generators.realization.at(GL::p(mu)), cs.rep->beta[mu]);

    // beta_mu W^mu with W_nu = (1/(s+1)) *s_{nu rho} P^rho
    out.beta_w = ExactMatrix(dim);
    ExactScalar inv_s1 = ExactScalar(1) / ExactScalar(Rational(s + 1));
    for (int mu = 0; mu < 4; ++mu)
        for (int rho = 0; rho < 4; ++rho) {
            if (mu == rho) continue;
            ExactMatrix internal = cs.rep->beta[mu] * sst[mu][rho];
            out.beta_w += (inv_s1 * up(mu) * up(rho)) *
                          kron(gx.generators.realization.at(GL::p(rho)), internal);
        }
    return out;
}

}  // namespace

std::vector<Check> reduced_casimir_identities(const CombinedSpace& cs) {
    std::vector<Check> out;
    CombinedCasimirs cc = build_combined_casimirs(cs);
    std::vector<int> wcols = cs.window_columns(2);
    const Rational s = cs.rep->spin;
    ExactScalar sq{Rational(s)};
    ExactScalar n{Rational(2 * (s + 1))};

    ExactMatrix lhs2 = cc.c2r * cs.P_lift;
    ExactMatrix rhs2 = ExactScalar(2) *
                       (((-kI * sq) * cs.D_space + cc.i_op + cc.beta_p) * cs.P_lift);
    out.push_back(make_check("reduced_c2", "C2P = 2(-isD + I + beta.P)P on the window",
                             equal_on_columns(lhs2, rhs2, wcols)));

    out.push_back(make_check("spin_orbit_ij", "I P = i J P",
                             equal_on_columns(cc.i_op * cs.P_lift, kI * (cc.j_op * cs.P_lift),
                                              wcols)));

    out.push_back(make_check("beta_p_w", "beta.P P = beta.W P",
                             equal_on_columns(cc.beta_p * cs.P_lift, cc.beta_w * cs.P_lift,
                                              wcols)));

    ExactMatrix lhs3 = cc.c3r * cs.P_lift;
    out.push_back(make_check("reduced_c3_ratio", "C3P = N C2P",
                             equal_on_columns(lhs3, n * lhs2, wcols)));

    ExactMatrix rhs3 = (ExactScalar(2) * n) *
                       (((-kI * sq) * cs.D_space + kI * cc.j_op + cc.beta_w) * cs.P_lift);
    out.push_back(make_check("reduced_c3", "C3P = 4(s+1)(-isD + iJ + beta.W)P on the window",
                             equal_on_columns(lhs3, rhs3, wcols)));
    return out;
}

C4FitReport fit_C4_projector_expansion(const CombinedSpace& cs) {
    C4FitReport out;
    if (cs.rep->spin != Rational(1, 2))
        throw std::invalid_argument("the quartic fit is specified for s = 1/2");
    CombinedCasimirs cc = build_combined_casimirs(cs);
    std::vector<int> wcols = cs.window_columns(2);

    ExactMatrix t0 = cc.c4r * cs.P_lift;
    ExactMatrix v1 = cc.c2r * cs.P_lift;
    ExactMatrix v2 = cc.c2r * v1;
    ExactMatrix v3 = cc.beta_p * cs.P_lift;
    ExactMatrix v4 = cc.cx2 * cs.P_lift;

    auto stack = [&](const ExactMatrix& m) {
        exactla::ExactVector v;
        v.reserve(wcols.size() * static_cast<size_t>(cs.dim));
        for (int c : wcols)
            for (int r = 0; r < cs.dim; ++r) v.push_back(m.at(r, c));
        return v;
    };
    std::vector<exactla::ExactVector> cols{stack(v1), stack(v2), stack(v3), stack(v4)};
    exactla::LinearSolve ls = exactla::solve_columns(cols, stack(t0));

    out.consistent = ls.consistent;
    out.rank = 4 - static_cast<int>(ls.nullspace.size());
    out.particular = ls.particular;
    out.nullspace = ls.nullspace;

    out.checks.push_back(make_check("c4_fit_span",
                                    "reduced C4P lies in span{C2P, C2^2P, beta.P P, cX2 P}",
                                    ls.consistent));
    if (!ls.consistent) return out;

    // pin lambda = 1 within the solution family
    exactla::ExactVector member = ls.particular;
    bool pinnable = true;
    if (!ls.nullspace.empty()) {
        if (ls.nullspace.size() == 1 && !ls.nullspace[0][0].is_zero()) {
            ExactScalar tshift = (ExactScalar(1) - member[0]) / ls.nullspace[0][0];
            for (int k = 0; k < 4; ++k) member[k] += tshift * ls.nullspace[0][k];
        } else {
            pinnable = member[0] == ExactScalar(1);
        }
    } else {
        pinnable = member[0] == ExactScalar(1);
    }
    out.lambda1_pinnable = pinnable;
    if (pinnable) out.lambda1_member = member;

    // is (lambda, mu) = (1, 1/4) attainable inside the family?
    bool paper_member = false;
    ExactScalar quarter = ExactScalar::of(1, 4);
    if (ls.nullspace.empty()) {
        paper_member = ls.particular[0] == ExactScalar(1) && ls.particular[1] == quarter;
    } else if (ls.nullspace.size() == 1) {
        const exactla::ExactVector& nv = ls.nullspace[0];
        if (!nv[0].is_zero()) {
            ExactScalar t = (ExactScalar(1) - ls.particular[0]) / nv[0];
            paper_member = ls.particular[1] + t * nv[1] == quarter;
        } else if (!nv[1].is_zero()) {
            ExactScalar t = (quarter - ls.particular[1]) / nv[1];
            paper_member = ls.particular[0] + t * nv[0] == ExactScalar(1);
        } else {
            paper_member = ls.particular[0] == ExactScalar(1) && ls.particular[1] == quarter;
        }
    }
    out.contains_paper_values = paper_member;

    std::ostringstream family;
    family << "particular (";
    for (int k = 0; k < 4; ++k) family << ls.particular[k].str() << (k < 3 ? ", " : ")");
    for (const auto& nv : ls.nullspace) {
        family << " + t (";
        for (int k = 0; k < 4; ++k) family << nv[k].str() << (k < 3 ? ", " : ")");
    }
    if (pinnable && !out.lambda1_member.empty()) {
        family << "; lambda=1 member (";
        for (int k = 0; k < 4; ++k)
            family << out.lambda1_member[k].str() << (k < 3 ? ", " : ")");
    }
    out.checks.push_back(make_check("c4_fit_lambda_mu",
                                    "some member of the fit family has lambda = 1 and mu = 1/4",
                                    paper_member, family.str()));
    return out;
}

std::vector<Check> verify_ordinary_theory(const polyreal::MonomialBasis& basis,
                                          const BhabhaRep& rep,
                                          const algebra::StructureTable& table,
                                          const ExactScalar& d, const ExactScalar& delta) {
    std::vector<Check> out;
    polyreal::GXSet gx = build_GX(basis, table, d);
    auto [Q, Pg] = build_position_momentum(basis);
    const Metric g(4);
    const int np = basis.size(), ni = rep.dim;
    const int dim = np * ni;
    ExactMatrix ip = ExactMatrix::identity(np), ii = ExactMatrix::identity(ni);

    // Delta = delta (central), pi = 0, kappa_mu = 2 (Q_mu Delta + Q^nu s_{nu mu})
    ExactMatrix D = kron(gx.generators.realization.at(GL::d()), ii) +
                    delta * ExactMatrix::identity(dim);
    std::array<ExactMatrix, 4> P, K;
    std::array<std::array<ExactMatrix, 4>, 4> L;
    for (int mu = 0; mu < 4; ++mu) {
        P[mu] = kron(Pg[mu].matrix, ii);
        ExactMatrix kappa = (ExactScalar(2) * delta) * kron(Q[mu].matrix, ii);
        for (int nu = 0; nu < 4; ++nu)
            kappa += (ExactScalar(2) * g.gs(nu)) * kron(Q[nu].matrix, rep.spin_tensor[nu][mu]);
        K[mu] = kron(gx.generators.realization.at(GL::k(mu)), ii) + kappa;
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            ExactMatrix lpoly =
                mu == nu
                    ? ExactMatrix(np)
                    : (mu < nu ? gx.generators.realization.at(GL::l(mu, nu))
                               : ExactScalar(-1) * gx.generators.realization.at(GL::l(nu, mu)));
            L[mu][nu] = kron(lpoly, ii) + kron(ip, rep.spin_tensor[mu][nu]);
        }

    std::vector<int> wcols;
    for (int q : basis.columns_up_to_degree(basis.max_degree() - 2))
        for (int a = 0; a < ni; ++a) wcols.push_back(q * ni + a);
    algebra::GeneratorSet gs = as_generator_set(table, D, P, K, L, wcols);
    algebra::Report rep_table = algebra::verify_realization(gs);
    out.push_back(make_check("ordinary_bracket_table",
                             "central-Delta generators satisfy the conformal bracket table",
                             rep_table.all_zero(), failing_pairs(rep_table)));

    out.push_back(make_check("ordinary_delta_central", "[Delta, g] = 0 for every generator",
                             commutator(delta * ExactMatrix::identity(dim), K[0]).is_zero()));
    return out;
}

PauliLubanskiReport pauli_lubanski_checks(const BhabhaRep& rep,
                                          const std::array<Rational, 4>& p) {
    PauliLubanskiReport out;
    const Metric g(4);
    const int dim = rep.dim;
    const Rational s = rep.spin;
    SpinTensor sst = hodge_dual(rep.spin_tensor, rep.eps_sign, g);

    Rational pp = -p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];

    std::array<ExactMatrix, 4> W;
    ExactScalar inv_s1 = ExactScalar(1) / ExactScalar(Rational(s + 1));
    for (int mu = 0; mu < 4; ++mu) {
        W[mu] = ExactMatrix(dim);
        for (int nu = 0; nu < 4; ++nu)
            W[mu] += (inv_s1 * ExactScalar(p[nu])) * sst[mu][nu];
    }
    ExactMatrix ww(dim);
    for (int mu = 0; mu < 4; ++mu) ww += g.gs(mu) * (W[mu] * W[mu]);

    bool proportional = true;
    if (pp == 0) {
        proportional = ww.is_zero();
        out.checks.push_back(make_check("ww_lightlike", "W.W = 0 at lightlike/zero momentum",
                                        proportional));
    } else {
        ExactScalar c;
        try {
            c = ww.scalar_value() / ExactScalar(pp);
            out.ww_constant = c;
        } catch (const std::domain_error&) {
            proportional = false;
        }
        out.checks.push_back(make_check("ww_proportional", "W.W is a scalar multiple of (p.p) 1",
                                        proportional));
        if (proportional) {
            out.checks.push_back(make_check("ww_paper_constant", "W.W = (3/4)(p.p) 1",
                                            c == ExactScalar::of(3, 4), "constant " + c.str()));
            ExactScalar want = ExactScalar(Rational(-s)) / ExactScalar(Rational(s + 1));
            out.checks.push_back(make_check("ww_exact_constant", "W.W = -[s/(s+1)](p.p) 1",
                                            c == want, "constant " + c.str()));
        }
    }
    out.ww_proportional = proportional;

    // spin supplementary condition: kernel of v -> (s_{mu nu} p^nu v)_mu
    std::vector<exactla::ExactVector> rows;
    for (int mu = 0; mu < 4; ++mu) {
        ExactMatrix smat(dim);
        for (int nu = 0; nu < 4; ++nu) smat += ExactScalar(p[nu]) * rep.spin_tensor[mu][nu];
        for (int r = 0; r < dim; ++r) {
            exactla::ExactVector row(dim);
            for (int cidx = 0; cidx < dim; ++cidx) row[cidx] = smat.at(r, cidx);
            rows.push_back(std::move(row));
        }
    }
    auto ker = exactla::kernel_basis(rows, dim);
    out.ssc_kernel_dim = static_cast<int>(ker.size());

    // restricted to range(P): SSC kernel vectors there must satisfy W v = 0
    bhabha::ProjectorPair pair = bhabha::build_projectors(rep);
    std::vector<exactla::ExactVector> pcols;
    for (int cidx = 0; cidx < dim; ++cidx) {
        exactla::ExactVector col(dim);
        for (int r = 0; r < dim; ++r) col[r] = pair.P.at(r, cidx);
        pcols.push_back(std::move(col));
    }
    exactla::Rref pr = exactla::rref(pcols);
    const auto& range_basis = pr.rows;
    std::vector<exactla::ExactVector> rows_on_p;
    for (int mu = 0; mu < 4; ++mu) {
        ExactMatrix smat(dim);
        for (int nu = 0; nu < 4; ++nu) smat += ExactScalar(p[nu]) * rep.spin_tensor[mu][nu];
        for (int r = 0; r < dim; ++r) {
            exactla::ExactVector row(range_basis.size());
            for (size_t b = 0; b < range_basis.size(); ++b) {
                ExactScalar acc;
                for (int cidx = 0; cidx < dim; ++cidx)
                    acc += smat.at(r, cidx) * range_basis[b][cidx];
                row[b] = acc;
            }
            rows_on_p.push_back(std::move(row));
        }
    }
    auto ker_p = exactla::kernel_basis(rows_on_p, static_cast<int>(range_basis.size()));
    out.ssc_kernel_dim_on_P = static_cast<int>(ker_p.size());

    bool implication = true;
    for (const auto& coeffs : ker_p) {
        exactla::ExactVector v(dim);
        for (size_t b = 0; b < range_basis.size(); ++b)
            for (int r = 0; r < dim; ++r) v[r] += coeffs[b] * range_basis[b][r];
        for (int mu = 0; mu < 4 && implication; ++mu) {
            exactla::ExactVector wv = W[mu].apply(v);
            for (const auto& x : wv)
                if (!x.is_zero()) { implication = false; break; }
        }
    }
    out.checks.push_back(make_check("ssc_implies_w",
                                    "s_{mu nu} p^nu v = 0 on range(P) implies W v = 0",
                                    implication));
    return out;
}

}  // namespace spinconf::conformal
