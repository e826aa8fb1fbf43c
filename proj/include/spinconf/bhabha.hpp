#ifndef SPINCONF_BHABHA_HPP
#define SPINCONF_BHABHA_HPP

#include <array>
#include <vector>

#include "spinconf/checks.hpp"
#include "spinconf/exactla.hpp"
#include "spinconf/minkowski.hpp"

namespace spinconf::bhabha {

using exactla::ExactMatrix;
using exactla::ExactPolynomial;
using exactla::ExactScalar;
using exactla::Rational;

using SpinTensor = std::array<std::array<ExactMatrix, 4>, 4>;

/// Fixed exact gamma basis for diag(-1,1,1,1):
///   gamma0 = [[0, 1],[-1, 0]],  gammaj = [[0, sigma_j],[sigma_j, 0]]
/// in 2x2 blocks, so gamma0^2 = -1, gammaj^2 = +1. Exported with every rep
/// since the higher-spin matrices inherit it.
struct DiracRep {
    std::array<ExactMatrix, 4> gamma;
};
DiracRep dirac_rep();

/// Beta-matrix representation of spin s with equal secondary label,
/// realized inside the 2s-fold tensor power of the spinor representation.
struct BhabhaRep {
    Rational spin;
    int dim = 0;
    std::array<ExactMatrix, 4> beta;
    SpinTensor spin_tensor;   // s_{mu nu} = i [beta_mu, beta_nu]
    ExactMatrix beta5;
    ExactScalar N;
    int eps_sign = 1;         // epsilon_{0123}; fixed empirically, see build
    ExactPolynomial min_poly; // prod_k [x - (s-k)]

    Metric metric{4};
};

struct ProjectorPair {
    ExactMatrix P;       // eigenvalue-(+s) projector of beta5
    ExactMatrix P_dual;  // beta5 -> -beta5 image
};

/// Expected irreducible dimension (s+1)(2s+1)(2s+3)/3.
Rational rep_dimension(const Rational& s);

/// The annihilating polynomial prod_{k=0}^{2s} [x - (s-k)].
ExactPolynomial beta_min_poly(const Rational& s);

/// s = 1/2 directly from the gamma basis (beta_mu = gamma_mu / 2).
BhabhaRep build_spinor_rep();

/// General desk-scale construction: Kronecker-sum generators on the 2s-fold
/// spinor power, highest-weight vector located by exact kernel computation,
/// invariant subspace generated by the four lowering operators, then all
/// generators restricted. Throws if the extracted dimension is wrong.
BhabhaRep build_bhabha_rep(const Rational& s);

/// Levi-Civita contraction and normalization search: returns (beta5, N) with
/// beta5 = -(i/N) eps^{mnrs} beta_m beta_n beta_r beta_s. N is determined as
/// the exact positive scalar with [M, [M, beta_mu]] = N^2 beta_mu; throws if
/// no such scalar exists.
std::pair<ExactMatrix, ExactScalar> build_beta5(const std::array<ExactMatrix, 4>& beta,
                                                int eps_sign);

/// *T_{mu nu} = (1/2) eps_{mu nu rho sigma} T^{rho sigma}.
SpinTensor hodge_dual(const SpinTensor& t, int eps_sign, const Metric& g);

ProjectorPair build_projectors(const BhabhaRep& rep);

/// Spectral projector onto the beta5 eigenvalue lam (product formula).
ExactMatrix spectral_projector(const BhabhaRep& rep, const Rational& lam);

/// pi_mu = beta_mu + [beta5, beta_mu] (the raising half of Lambda+-).
std::array<ExactMatrix, 4> pi_ops(const BhabhaRep& rep);
/// kappa_mu = beta_mu - [beta5, beta_mu].
std::array<ExactMatrix, 4> kappa_ops(const BhabhaRep& rep);

// --- verification suites (exact; every entry names its claim) ---

std::vector<Check> verify_rep_invariants(const BhabhaRep& rep);
std::vector<Check> verify_projectors(const BhabhaRep& rep, const ProjectorPair& pair);
std::vector<Check> verify_selfduality(const BhabhaRep& rep, const ProjectorPair& pair);

struct RigidityEntry {
    Rational eigenvalue;
    bool annihilates_pi;   // pi_mu Pi_lam = 0 for all mu
    int projector_rank;
};
struct RigidityReport {
    std::vector<RigidityEntry> entries;
    bool completeness;     // sum of spectral projectors is the identity
    bool only_top_passes;  // exactly lambda = s annihilates pi
};
RigidityReport eigenvalue_rigidity_scan(const BhabhaRep& rep);

/// Rebuilds with flipped orientation and confirms the eigenvalue-s projector
/// becomes the dual projector.
Check verify_orientation_flip(const BhabhaRep& rep, const ProjectorPair& pair);

}  // namespace spinconf::bhabha

#endif
