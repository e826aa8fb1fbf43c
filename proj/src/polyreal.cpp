#include "spinconf/polyreal.hpp"

#include <functional>
#include <stdexcept>

namespace spinconf::polyreal {

using algebra::GeneratorLabel;
using exactla::anticommutator;
using exactla::ExactVector;
using exactla::Rational;

MonomialBasis::MonomialBasis(int n, int max_degree)
    : n_(n), max_degree_(max_degree), metric_(n) {
    if (n < 1 || max_degree < 0) throw std::invalid_argument("bad basis parameters");
    for (int deg = 0; deg <= max_degree; ++deg) {
        std::vector<std::vector<int>> level;
        std::vector<int> cur(n, 0);
        std::function<void(int, int)> rec = [&](int pos, int rem) {
            if (pos == n - 1) {
                cur[pos] = rem;
                level.push_back(cur);
                return;
            }
            for (int e = 0; e <= rem; ++e) {
                cur[pos] = e;
                rec(pos + 1, rem - e);
            }
        };
        rec(0, deg);
        std::sort(level.begin(), level.end());
        for (auto& m : level) {
            index_[m] = static_cast<int>(mons_.size());
            degs_.push_back(deg);
            mons_.push_back(std::move(m));
        }
    }
}

int MonomialBasis::index_of(const std::vector<int>& exps) const {
    auto it = index_.find(exps);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> MonomialBasis::columns_up_to_degree(int d) const {
    std::vector<int> out;
    for (int k = 0; k < size(); ++k)
        if (degs_[k] <= d) out.push_back(k);
    return out;
}

bool GradedOperator::shifts_consistent(const MonomialBasis& basis) const {
    for (int c = 0; c < basis.size(); ++c)
        for (int r = 0; r < basis.size(); ++r) {
            if (matrix.at(r, c).is_zero()) continue;
            int shift = basis.degree(r) - basis.degree(c);
            if (shift < min_shift || shift > max_shift) return false;
        }
    return true;
}

std::pair<std::vector<GradedOperator>, std::vector<GradedOperator>>
build_position_momentum(const MonomialBasis& basis) {
    const int n = basis.n();
    const int nb = basis.size();
    std::vector<GradedOperator> q, p;
    for (int mu = 0; mu < n; ++mu) {
        GradedOperator Q{ExactMatrix(nb), 1, 1};
        GradedOperator P{ExactMatrix(nb), -1, -1};
        for (int c = 0; c < nb; ++c) {
            std::vector<int> e = basis.exponents(c);
            e[mu] += 1;
            if (int r = basis.index_of(e); r >= 0) Q.matrix.at(r, c) = ExactScalar(1);
            e[mu] -= 2;
            if (e[mu] >= 0) {
                int r = basis.index_of(e);
                // -i g_{mu mu} * exponent
                P.matrix.at(r, c) =
                    ExactScalar(Rational(0), Rational(-basis.metric().g(mu))) *
                    ExactScalar(static_cast<long>(basis.exponents(c)[mu]));
            }
        }
        q.push_back(std::move(Q));
        p.push_back(std::move(P));
    }
    return {std::move(q), std::move(p)};
}

GXSet build_GX(const MonomialBasis& basis, const algebra::StructureTable& table,
               const ExactScalar& d) {
    if (table.n() != basis.n()) throw std::invalid_argument("table/basis dimension mismatch");
    auto [Q, P] = build_position_momentum(basis);
    const int n = basis.n();
    const int nb = basis.size();
    const Metric& g = basis.metric();

    ExactMatrix D(nb);
    for (int mu = 0; mu < n; ++mu) D += g.gs(mu) * (Q[mu].matrix * P[mu].matrix);
    ExactScalar half_i_d = ExactScalar(Rational(0), Rational(-1, 2)) * d;  // -(i/2) d
    for (int k = 0; k < nb; ++k) D.at(k, k) += half_i_d;

    ExactMatrix QQ(nb);
    for (int mu = 0; mu < n; ++mu) QQ += g.gs(mu) * (Q[mu].matrix * Q[mu].matrix);

    GXSet out;
    out.d = d;
    out.valid_window_degree = basis.max_degree() - 2;
    out.generators.table = &table;
    out.generators.space_dim = nb;
    out.generators.window_columns = basis.columns_up_to_degree(out.valid_window_degree);

    out.generators.realization[GeneratorLabel::d()] = D;
    out.shifts[GeneratorLabel::d()] = {0, 0};
    for (int mu = 0; mu < n; ++mu) {
        out.generators.realization[GeneratorLabel::p(mu)] = P[mu].matrix;
        out.shifts[GeneratorLabel::p(mu)] = {-1, -1};
        ExactMatrix K = ExactScalar(-1) * (QQ * P[mu].matrix) +
                        ExactScalar(2) * (Q[mu].matrix * D);
        out.generators.realization[GeneratorLabel::k(mu)] = std::move(K);
        out.shifts[GeneratorLabel::k(mu)] = {1, 1};
    }
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) {
            ExactMatrix L = ExactScalar(-1) * (Q[mu].matrix * P[nu].matrix) +
                            Q[nu].matrix * P[mu].matrix;
            out.generators.realization[GeneratorLabel::l(mu, nu)] = std::move(L);
            out.shifts[GeneratorLabel::l(mu, nu)] = {0, 0};
        }
    return out;
}

namespace {

// canonical matrix for L_{mu nu} with any index order
ExactMatrix l_matrix(const GXSet& gx, int mu, int nu, int nb) {
    using GL = GeneratorLabel;
    if (mu == nu) return ExactMatrix::zero(nb);
    if (mu < nu) return gx.generators.realization.at(GL::l(mu, nu));
    return ExactScalar(-1) * gx.generators.realization.at(GL::l(nu, mu));
}

ExactScalar scalar_on_columns(const ExactMatrix& m, const std::vector<int>& cols, int nb,
                              const char* what) {
    ExactScalar c = m.at(cols.front(), cols.front());
    for (int col : cols)
        for (int r = 0; r < nb; ++r)
            if (!(m.at(r, col) == (r == col ? c : ExactScalar(0))))
                throw std::domain_error(std::string(what) +
                                        ": not scalar on the interior window "
                                        "(truncation-window misuse)");
    return c;
}

}  // namespace

CasimirX casimir_CX(const MonomialBasis& basis, const GXSet& gx) {
    using GL = GeneratorLabel;
    const int n = basis.n();
    const int nb = basis.size();
    const Metric& g = basis.metric();
    const ExactMatrix& D = gx.generators.realization.at(GL::d());
    auto P = [&](int mu) -> const ExactMatrix& {
        return gx.generators.realization.at(GL::p(mu));
    };
    auto K = [&](int mu) -> const ExactMatrix& {
        return gx.generators.realization.at(GL::k(mu));
    };

    // C^(2) = -D^2 + (1/2) L_{mu nu} L^{mu nu} + (1/2){K_mu, P^mu}
    ExactMatrix c2m = ExactScalar(-1) * (D * D);
    ExactScalar half = ExactScalar::of(1, 2);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            if (mu == nu) continue;
            ExactMatrix L = l_matrix(gx, mu, nu, nb);
            c2m += (half * g.gs(mu) * g.gs(nu)) * (L * L);
        }
    for (int mu = 0; mu < n; ++mu)
        c2m += (half * g.gs(mu)) * anticommutator(K(mu), P(mu));

    // C^(2) is shift-neutral; buffer 1 suffices (the K.P ordering inside the
    // anticommutator is the only +1 intermediate).
    auto cols1 = basis.columns_up_to_degree(basis.max_degree() - 1);
    CasimirX out;
    out.c2 = scalar_on_columns(c2m, cols1, nb, "C_X^(2)");

    if (n != 4) return out;  // cubic/quartic patterns need the 4-dim Levi-Civita

    auto cols2 = basis.columns_up_to_degree(basis.max_degree() - 2);
    std::vector<std::vector<ExactMatrix>> L(4, std::vector<ExactMatrix>(4, ExactMatrix(nb)));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) L[mu][nu] = l_matrix(gx, mu, nu, nb);
    auto hodge = [&](const std::vector<std::vector<ExactMatrix>>& T) {
        std::vector<std::vector<ExactMatrix>> out4(4, std::vector<ExactMatrix>(4, ExactMatrix(nb)));
        for (const auto& perm : permutations4()) {
            // *T_{mu nu} = (1/2) eps_{mu nu rho sigma} T^{rho sigma}, eps_{0123} = +1
            int mu = perm.p[0], nu = perm.p[1], rho = perm.p[2], sig = perm.p[3];
            out4[mu][nu] += (half * ExactScalar(perm.sign) * g.gs(rho) * g.gs(sig)) * T[rho][sig];
        }
        return out4;
    };
    auto Lst = hodge(L);

    std::vector<std::vector<ExactMatrix>> t(4, std::vector<ExactMatrix>(4, ExactMatrix(nb)));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) t[mu][nu] = anticommutator(K(mu), P(nu));

    ExactMatrix c3m(nb);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            c3m += (g.gs(mu) * g.gs(nu)) * ((D * L[mu][nu] + t[mu][nu]) * Lst[mu][nu]);
    out.c3 = scalar_on_columns(c3m, cols2, nb, "C_X^(3)");

    auto tst = hodge(t);
    ExactMatrix LstL(nb);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            LstL += (g.gs(mu) * g.gs(nu)) * (L[mu][nu] * Lst[mu][nu]);
    ExactMatrix c4m = ExactScalar::of(-1, 16) * (LstL * LstL);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            ExactMatrix w = D * Lst[mu][nu] + half * tst[mu][nu];
            c4m += (half * g.gs(mu) * g.gs(nu)) * (w * w);
        }
    for (int mu = 0; mu < 4; ++mu) {
        ExactMatrix kf(nb), pf(nb);
        for (int nu = 0; nu < 4; ++nu) {
            kf += g.gs(nu) * (Lst[mu][nu] * K(nu));
            pf += g.gs(nu) * (Lst[mu][nu] * P(nu));
        }
        c4m += (ExactScalar::of(-1, 2) * g.gs(mu)) * anticommutator(kf, pf);
    }
    out.c4 = scalar_on_columns(c4m, cols2, nb, "C_X^(4)");
    return out;
}

}  // namespace spinconf::polyreal
