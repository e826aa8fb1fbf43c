#include <doctest.h>

#include "spinconf/bhabha.hpp"
#include "test_oracles.hpp"

using namespace spinconf::bhabha;
using spinconf::all_pass;
using spinconf::Check;
using spinconf::exactla::ExactMatrix;
using spinconf::exactla::ExactScalar;
using spinconf::exactla::minimal_polynomial;
using spinconf::exactla::Rational;

namespace {
const ExactScalar kI = ExactScalar::i();

void require_all(const std::vector<Check>& checks) {
    for (const auto& c : checks) {
        INFO(c.name, ": ", c.claim, " ", c.detail);
        CHECK(c.pass);
    }
}
}  // namespace

TEST_CASE("dimension formula matches the Weyl product oracle") {
    for (Rational s : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)})
        CHECK(rep_dimension(s) == test_oracles::weyl_dim_ss(s));
    CHECK(rep_dimension(Rational(1, 2)) == 4);
    CHECK(rep_dimension(Rational(1)) == 10);
    CHECK(rep_dimension(Rational(3, 2)) == 20);
    CHECK(rep_dimension(Rational(2)) == 35);
}

TEST_CASE("spinor rep: structure and identities") {
    BhabhaRep rep = build_spinor_rep();
    CHECK(rep.dim == 4);
    CHECK(rep.N == ExactScalar(3));

    // min poly of beta1 is x^2 - 1/4
    ExactPolynomial mp = minimal_polynomial(rep.beta[1]);
    CHECK(mp.degree() == 2);
    CHECK(mp.coeff(0) == ExactScalar::of(-1, 4));
    CHECK(mp.coeff(1) == ExactScalar(0));

    // 2 s_{01} = i gamma0 gamma1
    DiracRep d = dirac_rep();
    CHECK(ExactScalar(2) * rep.spin_tensor[0][1] == kI * (d.gamma[0] * d.gamma[1]));

    require_all(verify_rep_invariants(rep));

    ProjectorPair pair = build_projectors(rep);
    require_all(verify_projectors(rep, pair));
    require_all(verify_selfduality(rep, pair));

    // P = (1 + 2 beta5)/2 for s = 1/2
    ExactMatrix want = ExactScalar::of(1, 2) *
                       (ExactMatrix::identity(4) + ExactScalar(2) * rep.beta5);
    CHECK(pair.P == want);
    CHECK(pair.P + pair.P_dual == ExactMatrix::identity(4));
}

TEST_CASE("build_bhabha_rep(1/2) agrees with the direct spinor construction") {
    BhabhaRep a = build_spinor_rep();
    BhabhaRep b = build_bhabha_rep(Rational(1, 2));
    CHECK(a.dim == b.dim);
    for (int mu = 0; mu < 4; ++mu) CHECK(a.beta[mu] == b.beta[mu]);
    CHECK(a.beta5 == b.beta5);
    CHECK(a.N == b.N);
}

TEST_CASE("s = 1 rep (Kemmer): dim 10, N = 4, min polys") {
    BhabhaRep rep = build_bhabha_rep(Rational(1));
    CHECK(rep.dim == 10);
    CHECK(rep.N == ExactScalar(4));

    // min poly of i beta0 is (x-1) x (x+1) = x^3 - x
    ExactPolynomial mp = minimal_polynomial(kI * rep.beta[0]);
    CHECK(mp.degree() == 3);
    CHECK(mp.coeff(1) == ExactScalar(-1));
    CHECK(mp.coeff(2) == ExactScalar(0));
    CHECK(mp == beta_min_poly(Rational(1)));

    require_all(verify_rep_invariants(rep));
    ProjectorPair pair = build_projectors(rep);
    CHECK(pair.P.trace() == ExactScalar(3));
    require_all(verify_projectors(rep, pair));
    require_all(verify_selfduality(rep, pair));
}

TEST_CASE("s = 3/2 rep: dim 20, N = 5, full suite") {
    BhabhaRep rep = build_bhabha_rep(Rational(3, 2));
    CHECK(rep.dim == 20);
    CHECK(rep.N == ExactScalar(5));
    require_all(verify_rep_invariants(rep));
    ProjectorPair pair = build_projectors(rep);
    CHECK(pair.P.trace() == ExactScalar(4));

    // <s^2> P = (3/2)(5/2) P = 15/4 P, checked inside verify_projectors
    require_all(verify_projectors(rep, pair));
    require_all(verify_selfduality(rep, pair));
    CHECK(verify_orientation_flip(rep, pair).pass);
}

TEST_CASE("rigidity scan: only lambda = s annihilates pi") {
    for (Rational s : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
        BhabhaRep rep = build_bhabha_rep(s);
        RigidityReport rr = eigenvalue_rigidity_scan(rep);
        CHECK(rr.completeness);
        CHECK(rr.only_top_passes);
        CHECK(rr.entries.size() == static_cast<size_t>(2 * Rational(s).get_num().get_si() /
                                                           Rational(s).get_den().get_si() +
                                                       1));
        int total_rank = 0;
        for (const auto& e : rr.entries) {
            CHECK(e.projector_rank > 0);  // every eigenvalue present in the spectrum
            total_rank += e.projector_rank;
            CHECK(e.annihilates_pi == (e.eigenvalue == Rational(s)));
        }
        CHECK(total_rank == rep.dim);
    }
}

TEST_CASE("orientation flip swaps the projector pair (s = 1/2, 1)") {
    for (Rational s : {Rational(1, 2), Rational(1)}) {
        BhabhaRep rep = build_bhabha_rep(s);
        ProjectorPair pair = build_projectors(rep);
        CHECK(verify_orientation_flip(rep, pair).pass);
    }
}

TEST_CASE("build_beta5 rejects a broken generator set") {
    BhabhaRep rep = build_spinor_rep();
    auto bad = rep.beta;
    bad[2].at(0, 0) += ExactScalar(1);
    CHECK_THROWS(build_beta5(bad, 1));
}

TEST_CASE("quadratic Casimir matches the weight oracle") {
    for (Rational s : {Rational(1, 2), Rational(1)}) {
        CHECK(Rational(2 * s * (s + 2)) == test_oracles::casimir2_ss(s));
    }
}
