#ifndef SPINCONF_CONFORMAL_HPP
#define SPINCONF_CONFORMAL_HPP

#include <array>
#include <vector>

#include "spinconf/algebra.hpp"
#include "spinconf/bhabha.hpp"
#include "spinconf/checks.hpp"
#include "spinconf/polyreal.hpp"

namespace spinconf::conformal {

using bhabha::BhabhaRep;
using bhabha::SpinTensor;
using exactla::ExactMatrix;
using exactla::ExactScalar;
using exactla::ExactVector;
using exactla::Rational;

/// G_Y: the internal conformal generators Delta = i beta5,
/// pi_mu = (1 + [beta5, .]) beta_mu, kappa_mu = (1 - [beta5, .]) beta_mu.
struct InternalGeneratorSet {
    ExactMatrix Delta;
    std::array<ExactMatrix, 4> pi, kappa;
    SpinTensor spin;
    int eps_sign = 1;
    int dim = 0;
    Rational s;
};

InternalGeneratorSet build_GY(const BhabhaRep& rep);

/// Bracket table in the roles (D,P,K,L) -> (Delta,pi,kappa,s), plus the
/// duality beta5 -> -beta5 realizing (Delta,pi,kappa,s) -> (-Delta,kappa,pi,s).
std::vector<Check> verify_GY(const BhabhaRep& rep, const algebra::StructureTable& table);

struct CasimirSet {
    ExactScalar c2, c3, c4;
    ExactMatrix c2m, c3m, c4m;
};

/// The three internal Casimirs from the displayed quadratic/cubic/quartic
/// patterns; asserts each is an exact scalar on the irreducible rep.
CasimirSet casimir_CY(const InternalGeneratorSet& gy);

/// Scalar values, the two inter-Casimir relations (as scalars and as matrix
/// identities), and invariance under the orientation flip.
std::vector<Check> verify_casimir_CY(const BhabhaRep& rep);

/// Combined representation on (polynomials of degree <= dmax) x (internal).
/// Basis ordering: index = poly_index * internal_dim + internal_index.
struct CombinedSpace {
    const polyreal::MonomialBasis* basis = nullptr;
    const BhabhaRep* rep = nullptr;
    ExactScalar d;
    int np = 0, ni = 0, dim = 0;

    ExactMatrix D;                          // D' = D x 1 + 1 x Delta
    std::array<ExactMatrix, 4> P, K;        // P', K'
    std::array<std::array<ExactMatrix, 4>, 4> L;  // L' (full antisymmetric array)
    ExactMatrix D_space;                    // D x 1 (spacetime part alone)
    std::array<ExactMatrix, 4> P_space;     // P x 1
    ExactMatrix P_lift;                     // 1 x P (projector lift)

    std::vector<int> window_columns(int buffer) const;
};

CombinedSpace build_combined(const polyreal::MonomialBasis& basis, const BhabhaRep& rep,
                             const ExactScalar& d);

/// Eq-table closure of the combined generators on the interior window and
/// vanishing of every cross-bracket [x o 1, 1 o y].
std::vector<Check> verify_combined(const CombinedSpace& cs, const algebra::StructureTable& table);

/// The reduced projected-Casimir identities: quadratic expansion, I P = i J P,
/// beta.P P = beta.W P, and the cubic/quadratic ratio N. Exact on the
/// buffer-2 window.
std::vector<Check> reduced_casimir_identities(const CombinedSpace& cs);

/// Exact linear solve of reduced C4 P against
/// {reduced C2 P, (reduced C2)^2 P, beta.P P, cX2 P}. The system is
/// rank-deficient; the report carries the full solution family.
struct C4FitReport {
    bool consistent = false;
    int rank = 0;
    ExactVector particular;                // coefficients on the four basis columns
    std::vector<ExactVector> nullspace;
    bool lambda1_pinnable = false;
    ExactVector lambda1_member;            // the member with lambda = 1, when pinnable
    bool contains_paper_values = false;    // does any member have (lambda, mu) = (1, 1/4)
    std::vector<Check> checks;
};

C4FitReport fit_C4_projector_expansion(const CombinedSpace& cs);

/// Ordinary-theory generators: Delta = delta (central), pi = 0,
/// kappa_mu = 2 (Q_mu Delta + Q^nu s_{nu mu}); verifies closure on the window.
std::vector<Check> verify_ordinary_theory(const polyreal::MonomialBasis& basis,
                                          const BhabhaRep& rep,
                                          const algebra::StructureTable& table,
                                          const ExactScalar& d, const ExactScalar& delta);

/// Pauli-Lubanski contraction at numeric momentum p (upper-index components):
/// W_mu = (1/(s+1)) *s_{mu nu} p^nu.
struct PauliLubanskiReport {
    std::vector<Check> checks;
    bool ww_proportional = false;   // W.W is an exact multiple of (p.p) identity
    ExactScalar ww_constant;        // W.W / (p.p), when defined
    int ssc_kernel_dim = 0;         // kernel of v -> (s_{mu nu} p^nu v)_mu
    int ssc_kernel_dim_on_P = 0;    // same, restricted to range(P)
};

PauliLubanskiReport pauli_lubanski_checks(const BhabhaRep& rep,
                                          const std::array<Rational, 4>& p);

}  // namespace spinconf::conformal

#endif
