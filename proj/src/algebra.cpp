#include "spinconf/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spinconf::algebra {

using exactla::ExactVector;

namespace {
const ExactScalar kI = ExactScalar::i();
}

std::string GeneratorLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case D: os << "D"; break;
        case P: os << "P" << mu; break;
        case K: os << "K" << mu; break;
        case L: os << "L" << mu << nu; break;
    }
    return os.str();
}

Combination operator+(Combination a, const Combination& b) {
    for (const auto& [l, c] : b) {
        auto it = a.find(l);
        if (it == a.end()) a.emplace(l, c);
        else {
            it->second += c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

Combination operator*(const ExactScalar& s, Combination c) {
    if (s.is_zero()) return {};
    for (auto& [l, v] : c) v = s * v;
    return c;
}

bool is_zero(const Combination& c) {
    for (const auto& [l, v] : c)
        if (!v.is_zero()) return false;
    return true;
}

Combination StructureTable::canonical_l(int mu, int nu, const ExactScalar& coeff) {
    if (mu == nu || coeff.is_zero()) return {};
    if (mu < nu) return {{GeneratorLabel::l(mu, nu), coeff}};
    return {{GeneratorLabel::l(nu, mu), -coeff}};
}

StructureTable::StructureTable(int n) : n_(n), metric_(n) {
    if (n < 1) throw std::invalid_argument("spacetime dimension must be >= 1");
    gens_.push_back(GeneratorLabel::d());
    for (int mu = 0; mu < n; ++mu) gens_.push_back(GeneratorLabel::p(mu));
    for (int mu = 0; mu < n; ++mu) gens_.push_back(GeneratorLabel::k(mu));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) gens_.push_back(GeneratorLabel::l(mu, nu));
}

Combination StructureTable::bracket(const GeneratorLabel& a, const GeneratorLabel& b) const {
    using GL = GeneratorLabel;
    const Metric& g = metric_;
    // [D, v]
    if (a.kind == GL::D) {
        if (b.kind == GL::P) return {{b, kI}};
        if (b.kind == GL::K) return {{b, -kI}};
        return {};  // [D, D] = [D, L] = 0
    }
    if (b.kind == GL::D) return -ExactScalar(1) * bracket(b, a);
    // [v_rho, L_{mu nu}] = i (g_{rho mu} v_nu - g_{rho nu} v_mu)
    if ((a.kind == GL::P || a.kind == GL::K) && b.kind == GL::L) {
        Combination out;
        if (a.mu == b.mu)
            out = out + Combination{{a.kind == GL::P ? GL::p(b.nu) : GL::k(b.nu),
                                     kI * g.gs(b.mu)}};
        if (a.mu == b.nu)
            out = out + Combination{{a.kind == GL::P ? GL::p(b.mu) : GL::k(b.mu),
                                     -(kI * g.gs(b.nu))}};
        return out;
    }
    if (a.kind == GL::L && (b.kind == GL::P || b.kind == GL::K))
        return -ExactScalar(1) * bracket(b, a);
    // [P, P] = [K, K] = 0
    if (a.kind == b.kind && (a.kind == GL::P || a.kind == GL::K)) return {};
    // [K_mu, P_nu] = 2i (g_{mu nu} D - L_{mu nu})
    if (a.kind == GL::K && b.kind == GL::P) {
        Combination out;
        if (a.mu == b.mu) out = out + Combination{{GL::d(), ExactScalar(2) * kI * g.gs(a.mu)}};
        out = out + canonical_l(a.mu, b.mu, -(ExactScalar(2) * kI));
        return out;
    }
    if (a.kind == GL::P && b.kind == GL::K) return -ExactScalar(1) * bracket(b, a);
    // [L_{mu nu}, L_{rho sigma}] =
    //   i (g_{mu sigma} L_{nu rho} + g_{nu rho} L_{mu sigma}
    //      - g_{mu rho} L_{nu sigma} - g_{nu sigma} L_{mu rho})
    if (a.kind == GL::L && b.kind == GL::L) {
        Combination out;
        auto term = [&](int ga, int gb, int lm, int ln, int sign) {
            if (ga != gb) return;
            out = out + canonical_l(lm, ln, ExactScalar(sign) * kI * g.gs(ga));
        };
        term(a.mu, b.nu, a.nu, b.mu, +1);
        term(a.nu, b.mu, a.mu, b.nu, +1);
        term(a.mu, b.mu, a.nu, b.nu, -1);
        term(a.nu, b.nu, a.mu, b.mu, -1);
        return out;
    }
    throw std::logic_error("unhandled bracket pair");
}

Combination StructureTable::bracket(const Combination& a, const Combination& b) const {
    Combination out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) out = out + (ca * cb) * bracket(la, lb);
    return out;
}

bool StructureTable::check_antisymmetry() const {
    for (const auto& a : gens_)
        for (const auto& b : gens_)
            if (!is_zero(bracket(a, b) + bracket(b, a))) return false;
    return true;
}

bool StructureTable::check_jacobi() const {
    const size_t m = gens_.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                Combination a{{gens_[i], ExactScalar(1)}};
                Combination b{{gens_[j], ExactScalar(1)}};
                Combination c{{gens_[k], ExactScalar(1)}};
                Combination r = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                                bracket(c, bracket(a, b));
                if (!is_zero(r)) return false;
            }
    return true;
}

StructureTable build_conformal_table(int n) {
    StructureTable t(n);
    if (!t.check_antisymmetry()) throw std::logic_error("bracket table violates antisymmetry");
    if (!t.check_jacobi()) throw std::logic_error("bracket table violates the Jacobi identity");
    return t;
}

Combination swap_automorphism(const GeneratorLabel& g) {
    using GL = GeneratorLabel;
    switch (g.kind) {
        case GL::D: return {{GL::d(), ExactScalar(-1)}};
        case GL::P: return {{GL::k(g.mu), ExactScalar(1)}};
        case GL::K: return {{GL::p(g.mu), ExactScalar(1)}};
        case GL::L: return {{g, ExactScalar(1)}};
    }
    return {};
}

bool Report::all_zero() const {
    for (const auto& p : pairs)
        if (!p.zero) return false;
    return true;
}

namespace {

Combination apply_swap(const Combination& c) {
    Combination out;
    for (const auto& [l, v] : c) out = out + (v * swap_automorphism(l));
    return out;
}

std::string combo_str(const Combination& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    for (const auto& [l, v] : c) os << "(" << v.str() << ")" << l.str() << " ";
    return os.str();
}

}  // namespace

Report verify_automorphism_swap(const StructureTable& table) {
    Report rep;
    const auto& gens = table.generators();
    for (const auto& gq : gens) {
        // the swap is an involution on labels
        Combination twice = apply_swap(swap_automorphism(gq));
        Combination diff = twice + Combination{{gq, ExactScalar(-1)}};
        if (!is_zero(diff))
            rep.pairs.push_back({gq, gq, false, "swap applied twice is not the identity"});
    }
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            Combination lhs = apply_swap(table.bracket({{gens[i], ExactScalar(1)}},
                                                       {{gens[j], ExactScalar(1)}}));
            Combination rhs = table.bracket(swap_automorphism(gens[i]), swap_automorphism(gens[j]));
            Combination diff = lhs + (-ExactScalar(1) * rhs);
            PairResidual pr{gens[i], gens[j], is_zero(diff), ""};
            if (!pr.zero) pr.detail = combo_str(diff);
            rep.pairs.push_back(std::move(pr));
        }
    return rep;
}

Report verify_realization(const GeneratorSet& gs) {
    Report rep;
    const auto& gens = gs.table->generators();
    const int dim = gs.space_dim;
    std::vector<ExactVector> basis_cols;
    const std::vector<int>& cols = gs.window_columns;
    for (size_t i = 0; i < gens.size(); ++i) {
        const ExactMatrix& A = gs.realization.at(gens[i]);
        if (A.dim() != dim) throw std::invalid_argument("inconsistent space dims");
        for (size_t j = i + 1; j < gens.size(); ++j) {
            const ExactMatrix& B = gs.realization.at(gens[j]);
            Combination target = gs.table->bracket({{gens[i], ExactScalar(1)}},
                                                   {{gens[j], ExactScalar(1)}});
            PairResidual pr{gens[i], gens[j], true, ""};
            for (int c : cols) {
                ExactVector e(dim);
                e[c] = ExactScalar(1);
                ExactVector lhs = A.apply(B.apply(e));
                ExactVector tmp = B.apply(A.apply(e));
                for (int r = 0; r < dim; ++r) lhs[r] -= tmp[r];
                for (const auto& [l, v] : target) {
                    ExactVector t2 = gs.realization.at(l).apply(e);
                    for (int r = 0; r < dim; ++r) lhs[r] -= v * t2[r];
                }
                for (int r = 0; r < dim; ++r)
                    if (!lhs[r].is_zero()) {
                        pr.zero = false;
                        std::ostringstream os;
                        os << "column " << c << " row " << r << ": " << lhs[r].str();
                        pr.detail = os.str();
                        break;
                    }
                if (!pr.zero) break;
            }
            rep.pairs.push_back(std::move(pr));
        }
    }
    return rep;
}

}  // namespace spinconf::algebra

namespace spinconf {

const std::vector<Perm4>& permutations4() {
    static const std::vector<Perm4> perms = [] {
        std::vector<Perm4> out;
        std::array<int, 4> p{0, 1, 2, 3};
        do {
            int sign = 1;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (p[i] > p[j]) sign = -sign;
            out.push_back({p, sign});
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

}  // namespace spinconf
