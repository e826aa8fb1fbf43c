#include <doctest.h>

#include <random>

#include "spinconf/conformal.hpp"

using namespace spinconf::conformal;
namespace polyreal = spinconf::polyreal;
using spinconf::Check;
using spinconf::algebra::build_conformal_table;
using spinconf::algebra::StructureTable;
using spinconf::bhabha::build_bhabha_rep;
using spinconf::bhabha::build_spinor_rep;
using spinconf::bhabha::dirac_rep;
using spinconf::exactla::commutator;
using spinconf::exactla::ExactMatrix;

namespace {
const ExactScalar kI = ExactScalar::i();

void require_all(const std::vector<Check>& checks) {
    for (const auto& c : checks) {
        INFO(c.name, ": ", c.claim, " ", c.detail);
        CHECK(c.pass);
    }
}
}  // namespace

TEST_CASE("G_Y bracket table and duality for s = 1/2, 1, 3/2") {
    StructureTable t = build_conformal_table(4);
    for (Rational s : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
        BhabhaRep rep = build_bhabha_rep(s);
        require_all(verify_GY(rep, t));
    }
}

TEST_CASE("s = 1/2 internal generators match the gamma dictionary") {
    BhabhaRep rep = build_spinor_rep();
    InternalGeneratorSet gy = build_GY(rep);
    auto gam = dirac_rep().gamma;
    ExactMatrix gamma5 = ExactScalar(2) * rep.beta5;

    for (int mu = 0; mu < 4; ++mu) {
        CHECK(gy.pi[mu] + gy.kappa[mu] == gam[mu]);
        CHECK(gy.pi[mu] - gy.kappa[mu] == gamma5 * gam[mu]);
    }
    CHECK(ExactScalar(2) * gy.Delta == kI * gamma5);

    // [kappa0, pi1] = -2i s01 (vanishing metric cross term)
    CHECK(commutator(gy.kappa[0], gy.pi[1]) ==
          (ExactScalar(-2) * kI) * rep.spin_tensor[0][1]);
    // [Delta, pi] = i pi
    for (int mu = 0; mu < 4; ++mu)
        CHECK(commutator(gy.Delta, gy.pi[mu]) == kI * gy.pi[mu]);
}

TEST_CASE("internal Casimir scalars and relations") {
    for (Rational s : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
        BhabhaRep rep = build_bhabha_rep(s);
        require_all(verify_casimir_CY(rep));
    }
    // frozen values
    CasimirSet c_half = casimir_CY(build_GY(build_spinor_rep()));
    CHECK(c_half.c2 == ExactScalar::of(15, 4));
    CHECK(c_half.c3 == ExactScalar::of(15, 2));
    CHECK(c_half.c4 == ExactScalar::of(135, 16));

    CasimirSet c_one = casimir_CY(build_GY(build_bhabha_rep(Rational(1))));
    CHECK(c_one.c2 == ExactScalar(9));
    CHECK(c_one.c3 == ExactScalar(24));
    CHECK(c_one.c4 == ExactScalar(36));
}

TEST_CASE("inter-Casimir scalar identity holds for all half-integer s") {
    for (int two_s = 1; two_s <= 8; ++two_s) {
        Rational s(two_s, 2);
        Rational n = 2 * (s + 1);
        CHECK(4 * s * (s + 1) * (s + 2) == Rational(2, 3) * n * (3 * s * (s + 2)));
        Rational c2 = 3 * s * (s + 2);
        CHECK(3 * s * (s + 1) * (s + 1) * (s + 2) == c2 + c2 * c2 / 3);
    }
}

TEST_CASE("combined space: bracket table, cross brackets, reduced identities") {
    StructureTable t = build_conformal_table(4);
    polyreal::MonomialBasis basis(4, 3);
    BhabhaRep rep = build_spinor_rep();
    CombinedSpace cs = build_combined(basis, rep, ExactScalar(4));
    CHECK(cs.dim == 140);

    require_all(verify_combined(cs, t));
    require_all(reduced_casimir_identities(cs));
}

TEST_CASE("quartic fit: exact family, degeneracy, and the pinned member") {
    polyreal::MonomialBasis basis(4, 3);
    BhabhaRep rep = build_spinor_rep();
    CombinedSpace cs = build_combined(basis, rep, ExactScalar(4));
    C4FitReport fit = fit_C4_projector_expansion(cs);

    CHECK(fit.consistent);
    CHECK(fit.rank == 3);
    REQUIRE(fit.nullspace.size() == 1);

    // the exact dependency: 4 C2P + C2^2P - cX2 P = 0 (null direction (4,1,0,-1))
    const auto& nv = fit.nullspace[0];
    ExactScalar scale = nv[0] / ExactScalar(4);
    CHECK(nv[1] == scale * ExactScalar(1));
    CHECK(nv[2].is_zero());
    CHECK(nv[3] == scale * ExactScalar(-1));

    // unique representation over the independent columns: (15/2, 3/2, 0, 0)
    CHECK(fit.particular[0] == ExactScalar::of(15, 2));
    CHECK(fit.particular[1] == ExactScalar::of(3, 2));
    CHECK(fit.particular[2].is_zero());
    CHECK(fit.particular[3].is_zero());

    // the lambda = 1 member has mu = -1/8, a = 0, b = 13/8
    REQUIRE(fit.lambda1_pinnable);
    CHECK(fit.lambda1_member[0] == ExactScalar(1));
    CHECK(fit.lambda1_member[1] == ExactScalar::of(-1, 8));
    CHECK(fit.lambda1_member[2].is_zero());
    CHECK(fit.lambda1_member[3] == ExactScalar::of(13, 8));

    // no member attains (lambda, mu) = (1, 1/4)
    CHECK_FALSE(fit.contains_paper_values);
}

TEST_CASE("ordinary theory closes for several central values") {
    StructureTable t = build_conformal_table(4);
    polyreal::MonomialBasis basis(4, 3);
    BhabhaRep rep = build_spinor_rep();
    for (ExactScalar delta : {ExactScalar(0), ExactScalar(1), ExactScalar::of(1, 2)})
        require_all(verify_ordinary_theory(basis, rep, t, ExactScalar(4), delta));
}

TEST_CASE("Pauli-Lubanski: proportionality constant and SSC kernels") {
    BhabhaRep rep = build_spinor_rep();

    PauliLubanskiReport r1 = pauli_lubanski_checks(rep, {Rational(1), 0, 0, 0});
    CHECK(r1.ww_proportional);
    CHECK(r1.ww_constant == ExactScalar::of(-1, 3));
    // timelike momentum: supplementary condition has no solutions on range(P)
    CHECK(r1.ssc_kernel_dim == 0);
    CHECK(r1.ssc_kernel_dim_on_P == 0);
    for (const auto& c : r1.checks) {
        if (c.name == "ww_exact_constant") CHECK(c.pass);
        if (c.name == "ww_paper_constant") CHECK_FALSE(c.pass);  // constant is -1/3, not 3/4
        if (c.name == "ssc_implies_w") CHECK(c.pass);
    }

    // zero momentum degenerates cleanly
    PauliLubanskiReport r0 = pauli_lubanski_checks(rep, {0, 0, 0, 0});
    for (const auto& c : r0.checks) CHECK(c.pass);

    // lightlike momentum: the pointwise supplementary condition is still
    // maximal rank (s01 is invertible on the spinor rep, so s_{mu nu} p^nu v = 0
    // forces v = 0 for every nonzero p); the kernel-inclusion implication
    // holds vacuously and W.W vanishes with p.p
    PauliLubanskiReport rl = pauli_lubanski_checks(rep, {Rational(1), Rational(1), 0, 0});
    CHECK(rl.ssc_kernel_dim == 0);
    CHECK(rl.ssc_kernel_dim_on_P == 0);
    for (const auto& c : rl.checks) {
        if (c.name == "ssc_implies_w") CHECK(c.pass);
        if (c.name == "ww_lightlike") CHECK(c.pass);
    }
}

TEST_CASE("W.W = -[s/(s+1)](p.p) for 100 random rational momenta") {
    BhabhaRep rep = build_spinor_rep();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    int checked = 0;
    while (checked < 100) {
        std::array<Rational, 4> p;
        for (auto& x : p) x = Rational(num(rng), den(rng));
        PauliLubanskiReport r = pauli_lubanski_checks(rep, p);
        Rational pp = -p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
        if (pp == 0) continue;
        CHECK(r.ww_proportional);
        CHECK(r.ww_constant == ExactScalar::of(-1, 3));
        ++checked;
    }
}
