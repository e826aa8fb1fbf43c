#include "spinconf/bhabha.hpp"

#include <sstream>
#include <stdexcept>

namespace spinconf::bhabha {

using exactla::anticommutator;
using exactla::commutator;
using exactla::ExactVector;
using exactla::factorial;
using exactla::kron;
using exactla::RowSpace;

namespace {

const ExactScalar kI = ExactScalar::i();

ExactScalar scalar_sqrt(const ExactScalar& x) {
    if (!x.is_real() || sgn(x.re) < 0) throw std::domain_error("not a nonnegative rational");
    mpz_class num = x.re.get_num(), den = x.re.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        throw std::domain_error("not a perfect rational square");
    return ExactScalar(Rational(sqrt(num), sqrt(den)));
}

SpinTensor spin_tensor_of(const std::array<ExactMatrix, 4>& beta) {
    SpinTensor s;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) s[mu][nu] = kI * commutator(beta[mu], beta[nu]);
    return s;
}

int two_s_of(const Rational& s) {
    Rational t = 2 * s;
    if (t.get_den() != 1 || t <= 0)
        throw std::invalid_argument("spin must be a positive half-integer");
    return static_cast<int>(t.get_num().get_si());
}

ExactMatrix kron_sum_site(const ExactMatrix& site_op, int k, int sites) {
    ExactMatrix out = ExactMatrix::identity(1);
    for (int j = 0; j < sites; ++j)
        out = kron(out, j == k ? site_op : ExactMatrix::identity(4));
    return out;
}

ExactMatrix kron_sum(const ExactMatrix& site_op, int sites) {
    int dim = 1;
    for (int j = 0; j < sites; ++j) dim *= 4;
    ExactMatrix out(dim);
    for (int k = 0; k < sites; ++k) out += kron_sum_site(site_op, k, sites);
    return out;
}

Check make_check(const std::string& name, const std::string& claim, bool pass,
                 const std::string& detail = "") {
    return Check{name, claim, pass, pass ? "" : detail};
}

/// beta5 and orientation bookkeeping shared by both build paths. Fixes
/// eps_sign empirically: the orientation for which the eigenvalue-(+s)
/// projector satisfies *s P = -i s P.
void finish_rep(BhabhaRep& rep) {
    rep.min_poly = beta_min_poly(rep.spin);
    rep.spin_tensor = spin_tensor_of(rep.beta);
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto [b5, n] = build_beta5(rep.beta, rep.eps_sign);
        rep.beta5 = b5;
        rep.N = n;
        ProjectorPair pair = build_projectors(rep);
        SpinTensor st = hodge_dual(rep.spin_tensor, rep.eps_sign, rep.metric);
        bool ok = true;
        for (int mu = 0; mu < 4 && ok; ++mu)
            for (int nu = 0; nu < 4 && ok; ++nu)
                ok = (st[mu][nu] * pair.P == (-kI) * (rep.spin_tensor[mu][nu] * pair.P));
        if (ok) return;
        rep.eps_sign = -rep.eps_sign;
    }
    throw std::domain_error("no orientation satisfies the self-duality identity");
}

}  // namespace

Rational rep_dimension(const Rational& s) {
    return (s + 1) * (2 * s + 1) * (2 * s + 3) / 3;
}

ExactPolynomial beta_min_poly(const Rational& s) {
    std::vector<ExactScalar> roots;
    for (int k = 0; k <= two_s_of(s); ++k) roots.emplace_back(Rational(s - k));
    return ExactPolynomial::from_roots(roots);
}

DiracRep dirac_rep() {
    DiracRep d{{ExactMatrix(4), ExactMatrix(4), ExactMatrix(4), ExactMatrix(4)}};
    ExactScalar one(1), i = kI;
    auto& g = d.gamma;
    // gamma0 = [[0, I],[-I, 0]]
    g[0].at(0, 2) = one; g[0].at(1, 3) = one; g[0].at(2, 0) = -one; g[0].at(3, 1) = -one;
    // gamma1: sigma1 blocks
    g[1].at(0, 3) = one; g[1].at(1, 2) = one; g[1].at(2, 1) = one; g[1].at(3, 0) = one;
    // gamma2: sigma2 blocks
    g[2].at(0, 3) = -i; g[2].at(1, 2) = i; g[2].at(2, 1) = -i; g[2].at(3, 0) = i;
    // gamma3: sigma3 blocks
    g[3].at(0, 2) = one; g[3].at(1, 3) = -one; g[3].at(2, 0) = one; g[3].at(3, 1) = -one;
    return d;
}

std::pair<ExactMatrix, ExactScalar> build_beta5(const std::array<ExactMatrix, 4>& beta,
                                                int eps_sign) {
    const int dim = beta[0].dim();
    ExactMatrix m(dim);
    for (const auto& perm : permutations4()) {
        // eps^{0123} = -eps_{0123} since det g = -1
        ExactScalar c = ExactScalar(-eps_sign * perm.sign);
        m += c * (beta[perm.p[0]] * (beta[perm.p[1]] * (beta[perm.p[2]] * beta[perm.p[3]])));
    }
    m = (-kI) * m;

    // N^2 from [M, [M, beta_mu]] = N^2 beta_mu
    ExactMatrix t = commutator(m, commutator(m, beta[1]));
    ExactScalar lambda;
    bool found = false;
    for (int r = 0; r < dim && !found; ++r)
        for (int c = 0; c < dim && !found; ++c)
            if (!beta[1].at(r, c).is_zero()) {
                lambda = t.at(r, c) / beta[1].at(r, c);
                found = true;
            }
    if (!found) throw std::logic_error("beta1 vanishes");
    for (int mu = 0; mu < 4; ++mu)
        if (!(commutator(m, commutator(m, beta[mu])) == lambda * beta[mu]))
            throw std::domain_error(
                "no scalar N satisfies [M,[M,beta]] = N^2 beta (orientation or extraction error)");
    ExactScalar n = scalar_sqrt(lambda);
    return {(ExactScalar(1) / n) * m, n};
}

SpinTensor hodge_dual(const SpinTensor& t, int eps_sign, const Metric& g) {
    const int dim = t[0][1].dim();
    SpinTensor out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) out[mu][nu] = ExactMatrix(dim);
    for (const auto& perm : permutations4()) {
        int mu = perm.p[0], nu = perm.p[1], rho = perm.p[2], sig = perm.p[3];
        ExactScalar c = ExactScalar::of(eps_sign * perm.sign, 2) * g.gs(rho) * g.gs(sig);
        out[mu][nu] += c * t[rho][sig];
    }
    return out;
}

BhabhaRep build_spinor_rep() {
    BhabhaRep rep;
    rep.spin = Rational(1, 2);
    rep.dim = 4;
    DiracRep d = dirac_rep();
    for (int mu = 0; mu < 4; ++mu) rep.beta[mu] = ExactScalar::of(1, 2) * d.gamma[mu];
    finish_rep(rep);
    return rep;
}

BhabhaRep build_bhabha_rep(const Rational& s) {
    const int sites = two_s_of(s);
    if (s != Rational(1, 2) && s != 1 && s != Rational(3, 2) && s != 2)
        throw std::invalid_argument("desk scale covers s in {1/2, 1, 3/2, 2}");

    BhabhaRep spinor = build_spinor_rep();
    if (sites == 1) return spinor;  // the power is trivial; keep the documented gamma basis
    SpinTensor ssp = spin_tensor_of(spinor.beta);

    // Kronecker sums over the tensor power; the commutator cross terms
    // vanish, so the spin tensor lifts as a Kronecker sum too
    std::array<ExactMatrix, 4> beta_big;
    for (int mu = 0; mu < 4; ++mu) beta_big[mu] = kron_sum(spinor.beta[mu], sites);
    auto lift = [&](const ExactMatrix& m) { return kron_sum(m, sites); };

    // Cartan pair (i beta0, s23) and the two simple raising operators
    ExactMatrix h1 = kI * spinor.beta[0];
    ExactMatrix h2 = ssp[2][3];
    ExactMatrix x_plus = spinor.beta[1] + ssp[0][1];
    ExactMatrix z_plus = ssp[1][2] - kI * ssp[1][3];

    // highest-weight spinor vector: weight (1/2, 1/2), annihilated by raisings
    std::vector<ExactVector> rows;
    ExactScalar half = ExactScalar::of(1, 2);
    auto add_rows = [&](const ExactMatrix& m, const ExactScalar& shift) {
        for (int r = 0; r < 4; ++r) {
            ExactVector row(4);
            for (int c = 0; c < 4; ++c) row[c] = m.at(r, c) - (r == c ? shift : ExactScalar(0));
            rows.push_back(std::move(row));
        }
    };
    add_rows(h1, half);
    add_rows(h2, half);
    add_rows(x_plus, ExactScalar(0));
    add_rows(z_plus, ExactScalar(0));
    auto hw_space = exactla::kernel_basis(rows, 4);
    if (hw_space.size() != 1)
        throw std::logic_error("highest-weight space of the spinor rep is not one-dimensional");

    int big_dim = 1;
    for (int j = 0; j < sites; ++j) big_dim *= 4;
    // tensor power of the spinor highest-weight vector
    ExactVector hw{ExactScalar(1)};
    for (int j = 0; j < sites; ++j) {
        ExactVector next(hw.size() * 4);
        for (size_t a = 0; a < hw.size(); ++a)
            for (int b = 0; b < 4; ++b) next[a * 4 + b] = hw[a] * hw_space[0][b];
        hw = std::move(next);
    }

    std::vector<ExactMatrix> lowers;
    lowers.push_back(lift(spinor.beta[1] - ssp[0][1]));
    lowers.push_back(lift(ssp[1][2] + kI * ssp[1][3]));
    lowers.push_back(lift(spinor.beta[2] - kI * spinor.beta[3]) -
                     lift(ssp[0][2] - kI * ssp[0][3]));
    lowers.push_back(lift(spinor.beta[2] + kI * spinor.beta[3]) -
                     lift(ssp[0][2] + kI * ssp[0][3]));

    RowSpace space(big_dim);
    space.insert(hw);
    std::vector<ExactVector> frontier{hw};
    while (!frontier.empty()) {
        std::vector<ExactVector> next;
        for (const auto& v : frontier)
            for (const auto& low : lowers) {
                ExactVector w = low.apply(v);
                if (space.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }

    if (Rational(space.dim()) != rep_dimension(s))
        throw std::domain_error("invariant subspace dimension mismatch (extraction bug)");

    // restrict generators to the invariant subspace (basis rows are reduced)
    const int sub = space.dim();
    BhabhaRep rep;
    rep.spin = s;
    rep.dim = sub;
    for (int mu = 0; mu < 4; ++mu) {
        ExactMatrix r(sub);
        for (int j = 0; j < sub; ++j) {
            ExactVector img = beta_big[mu].apply(space.basis()[j]);
            ExactVector coords = space.coordinates(img);  // throws if not invariant
            for (int k = 0; k < sub; ++k) r.at(k, j) = coords[k];
        }
        rep.beta[mu] = std::move(r);
    }
    finish_rep(rep);
    return rep;
}

ProjectorPair build_projectors(const BhabhaRep& rep) {
    const ExactPolynomial& f = rep.min_poly;
    ExactScalar s{Rational(rep.spin)};
    ExactScalar fprime = f.derivative().eval(s);
    if (!(fprime == ExactScalar(factorial(two_s_of(rep.spin)))))
        throw std::logic_error("f'(s) != (2s)! (synthetic-division path inconsistent)");
    ExactPolynomial q = exactla::synthetic_divide(f, s);
    ExactScalar inv = ExactScalar(1) / fprime;
    ProjectorPair out;
    out.P = inv * exactla::eval_poly(q, rep.beta5);
    out.P_dual = inv * exactla::eval_poly(q, ExactScalar(-1) * rep.beta5);
    return out;
}

ExactMatrix spectral_projector(const BhabhaRep& rep, const Rational& lam) {
    ExactMatrix p = ExactMatrix::identity(rep.dim);
    for (int k = 0; k <= two_s_of(rep.spin); ++k) {
        Rational mu = Rational(rep.spin) - k;
        if (mu == lam) continue;
        ExactMatrix shift = rep.beta5;
        for (int d = 0; d < rep.dim; ++d) shift.at(d, d) -= ExactScalar(mu);
        p = (ExactScalar(1) / ExactScalar(Rational(lam - mu))) * (p * shift);
    }
    return p;
}

std::array<ExactMatrix, 4> pi_ops(const BhabhaRep& rep) {
    std::array<ExactMatrix, 4> out;
    for (int mu = 0; mu < 4; ++mu) out[mu] = rep.beta[mu] + commutator(rep.beta5, rep.beta[mu]);
    return out;
}

std::array<ExactMatrix, 4> kappa_ops(const BhabhaRep& rep) {
    std::array<ExactMatrix, 4> out;
    for (int mu = 0; mu < 4; ++mu) out[mu] = rep.beta[mu] - commutator(rep.beta5, rep.beta[mu]);
    return out;
}

std::vector<Check> verify_rep_invariants(const BhabhaRep& rep) {
    std::vector<Check> out;
    const Metric& g = rep.metric;
    Rational s = rep.spin;

    out.push_back(make_check("rep_dimension", "dim = (s+1)(2s+1)(2s+3)/3",
                             Rational(rep.dim) == rep_dimension(s)));

    out.push_back(make_check("minpoly_ibeta0", "min poly of i*beta0 is prod[x-(s-k)]",
                             exactla::minimal_polynomial(kI * rep.beta[0]) == rep.min_poly));
    bool betaj = true;
    for (int j = 1; j < 4; ++j)
        betaj = betaj && exactla::minimal_polynomial(rep.beta[j]) == rep.min_poly;
    out.push_back(make_check("minpoly_betaj", "min poly of beta_j is prod[x-(s-k)]", betaj));
    out.push_back(make_check("minpoly_beta5", "min poly of beta5 is prod[x-(s-k)]",
                             exactla::minimal_polynomial(rep.beta5) == rep.min_poly));

    bool st_def = true;
    for (int mu = 0; mu < 4 && st_def; ++mu)
        for (int nu = 0; nu < 4 && st_def; ++nu)
            st_def = rep.spin_tensor[mu][nu] == kI * commutator(rep.beta[mu], rep.beta[nu]);
    out.push_back(make_check("spin_tensor_def", "s_mn = i[beta_m, beta_n]", st_def));

    bool bs = true;
    for (int mu = 0; mu < 4 && bs; ++mu)
        for (int nu = 0; nu < 4 && bs; ++nu)
            for (int rho = 0; rho < 4 && bs; ++rho) {
                ExactMatrix want(rep.dim);
                if (mu == nu) want += g.gs(mu) * rep.beta[rho];
                if (mu == rho) want -= g.gs(mu) * rep.beta[nu];
                bs = commutator(rep.beta[mu], rep.spin_tensor[nu][rho]) == kI * want;
            }
    out.push_back(
        make_check("beta_spin_bracket", "[beta_m, s_nr] = i(g_mn beta_r - g_mr beta_n)", bs));

    bool b5s = true;
    for (int mu = 0; mu < 4 && b5s; ++mu)
        for (int nu = 0; nu < 4 && b5s; ++nu)
            b5s = commutator(rep.beta5, rep.spin_tensor[mu][nu]).is_zero();
    out.push_back(make_check("beta5_commutes_spin", "[beta5, s_mn] = 0", b5s));

    bool dbl1 = true;
    for (int mu = 0; mu < 4 && dbl1; ++mu)
        for (int nu = 0; nu < 4 && dbl1; ++nu) {
            ExactMatrix want = (mu == nu) ? g.gs(mu) * rep.beta5 : ExactMatrix(rep.dim);
            dbl1 = commutator(rep.beta[mu], commutator(rep.beta[nu], rep.beta5)) == want;
        }
    out.push_back(make_check("beta_beta_beta5", "[beta_m, [beta_n, beta5]] = g_mn beta5", dbl1));

    bool dbl2 = true;
    for (int mu = 0; mu < 4 && dbl2; ++mu)
        dbl2 = commutator(rep.beta5, commutator(rep.beta5, rep.beta[mu])) == rep.beta[mu];
    out.push_back(make_check("beta5_double_bracket", "[beta5, [beta5, beta_m]] = beta_m", dbl2));

    out.push_back(
        make_check("normalization", "N = 2(s+1)", rep.N == ExactScalar(Rational(2 * (s + 1)))));

    // quadratic Casimir cross-check on the extracted subspace
    ExactMatrix c2(rep.dim);
    for (int mu = 0; mu < 4; ++mu) c2 += g.gs(mu) * (rep.beta[mu] * rep.beta[mu]);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            c2 += (ExactScalar::of(1, 2) * g.gs(mu) * g.gs(nu)) *
                  (rep.spin_tensor[mu][nu] * rep.spin_tensor[mu][nu]);
    ExactScalar want_c2{Rational(2 * s * (s + 2))};
    out.push_back(make_check("quadratic_casimir", "beta.beta + (1/2) s.s = 2s(s+2)",
                             c2 == want_c2 * ExactMatrix::identity(rep.dim)));
    return out;
}

std::vector<Check> verify_projectors(const BhabhaRep& rep, const ProjectorPair& pair) {
    std::vector<Check> out;
    ExactScalar s{Rational(rep.spin)};
    const ExactMatrix& P = pair.P;
    const ExactMatrix& Pd = pair.P_dual;

    out.push_back(make_check("projector_idempotent", "P^2 = P and Pdual^2 = Pdual",
                             P * P == P && Pd * Pd == Pd));
    ExactScalar want_tr{Rational(2 * rep.spin + 1)};
    out.push_back(make_check("projector_trace", "tr P = tr Pdual = 2s+1",
                             P.trace() == want_tr && Pd.trace() == want_tr));
    out.push_back(make_check("projector_rank", "rank P = 2s+1",
                             Rational(exactla::rank(P)) == Rational(2 * rep.spin + 1)));
    out.push_back(make_check("beta5_eigen", "beta5 P = s P and beta5 Pdual = -s Pdual",
                             rep.beta5 * P == s * P && rep.beta5 * Pd == (-s) * Pd));

    ExactMatrix s2(rep.dim);
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j)
            s2 += ExactScalar::of(1, 2) * (rep.spin_tensor[i][j] * rep.spin_tensor[i][j]);
    ExactScalar want_s2{Rational(rep.spin * (rep.spin + 1))};
    out.push_back(make_check("spin_squared", "<s^2> P = s(s+1) P", s2 * P == want_s2 * P));

    auto pi = pi_ops(rep);
    bool piP = true;
    for (int mu = 0; mu < 4; ++mu) piP = piP && (pi[mu] * P).is_zero();
    out.push_back(make_check("pi_annihilates", "pi_mu P = 0", piP));

    out.push_back(make_check("projector_sum", "P + Pdual = 1 exactly when s = 1/2",
                             (P + Pd == ExactMatrix::identity(rep.dim)) ==
                                 (rep.spin == Rational(1, 2))));
    return out;
}

std::vector<Check> verify_selfduality(const BhabhaRep& rep, const ProjectorPair& pair) {
    std::vector<Check> out;
    const Metric& g = rep.metric;
    SpinTensor st = hodge_dual(rep.spin_tensor, rep.eps_sign, g);

    bool sd = true, sdd = true;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            sd = sd && st[mu][nu] * pair.P == (-kI) * (rep.spin_tensor[mu][nu] * pair.P);
            sdd = sdd && st[mu][nu] * pair.P_dual == kI * (rep.spin_tensor[mu][nu] * pair.P_dual);
        }
    out.push_back(make_check("selfduality", "*s_mn P = -i s_mn P", sd));
    out.push_back(make_check("antiselfduality", "*s_mn Pdual = +i s_mn Pdual", sdd));

    ExactMatrix bb(rep.dim);
    for (int mu = 0; mu < 4; ++mu) bb += g.gs(mu) * (rep.beta[mu] * rep.beta[mu]);
    ExactMatrix want = ExactScalar(Rational(rep.spin * (rep.spin + 2))) *
                           ExactMatrix::identity(rep.dim) -
                       rep.beta5 * rep.beta5;
    out.push_back(make_check("beta_square", "beta.beta = s(s+2) - beta5^2", bb == want));

    ExactMatrix ss(rep.dim);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            ss += (ExactScalar::of(1, 2) * g.gs(mu) * g.gs(nu)) *
                  (rep.spin_tensor[mu][nu] * rep.spin_tensor[mu][nu]);
    ExactMatrix want2 =
        ExactScalar(Rational(2 * rep.spin * (rep.spin + 1) - rep.spin * rep.spin)) *
            ExactMatrix::identity(rep.dim) +
        rep.beta5 * rep.beta5;
    out.push_back(make_check("spin_square", "(1/2) s.s = 2s(s+1) - (s^2 - beta5^2)", ss == want2));
    return out;
}

RigidityReport eigenvalue_rigidity_scan(const BhabhaRep& rep) {
    RigidityReport out;
    auto pi = pi_ops(rep);
    ExactMatrix sum(rep.dim);
    int passes = 0;
    bool top_passes = false;
    for (int k = 0; k <= two_s_of(rep.spin); ++k) {
        Rational lam = Rational(rep.spin) - k;
        ExactMatrix proj = spectral_projector(rep, lam);
        sum += proj;
        bool ann = true;
        for (int mu = 0; mu < 4; ++mu) ann = ann && (pi[mu] * proj).is_zero();
        if (ann) {
            ++passes;
            if (lam == Rational(rep.spin)) top_passes = true;
        }
        out.entries.push_back({lam, ann, exactla::rank(proj)});
    }
    out.completeness = sum.is_identity();
    out.only_top_passes = top_passes && passes == 1;
    return out;
}

Check verify_orientation_flip(const BhabhaRep& rep, const ProjectorPair& pair) {
    BhabhaRep flipped = rep;
    flipped.eps_sign = -rep.eps_sign;
    auto [b5, n] = build_beta5(flipped.beta, flipped.eps_sign);
    flipped.beta5 = b5;
    flipped.N = n;
    ProjectorPair fp = build_projectors(flipped);
    bool ok = fp.P == pair.P_dual && fp.P_dual == pair.P;
    return Check{"orientation_flip", "eps -> -eps swaps P and Pdual", ok, ok ? "" : "mismatch"};
}

}  // namespace spinconf::bhabha
