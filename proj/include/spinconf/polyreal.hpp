#ifndef SPINCONF_POLYREAL_HPP
#define SPINCONF_POLYREAL_HPP

#include <map>
#include <vector>

#include "spinconf/algebra.hpp"
#include "spinconf/exactla.hpp"
#include "spinconf/minkowski.hpp"

namespace spinconf::polyreal {

using exactla::ExactMatrix;
using exactla::ExactScalar;

/// All monomials of total degree <= max_degree in n variables, in graded
/// lexicographic order (degree first, then lexicographic on the exponent
/// tuple). The ordering is the reproducibility contract for every exported
/// matrix.
class MonomialBasis {
  public:
    MonomialBasis(int n, int max_degree);

    int n() const { return n_; }
    int max_degree() const { return max_degree_; }
    int size() const { return static_cast<int>(mons_.size()); }
    const std::vector<int>& exponents(int idx) const { return mons_[idx]; }
    int degree(int idx) const { return degs_[idx]; }
    /// -1 when the monomial falls outside the truncated basis.
    int index_of(const std::vector<int>& exps) const;
    std::vector<int> columns_up_to_degree(int d) const;
    const Metric& metric() const { return metric_; }

  private:
    int n_, max_degree_;
    Metric metric_;
    std::vector<std::vector<int>> mons_;
    std::vector<int> degs_;
    std::map<std::vector<int>, int> index_;
};

/// Matrix on the monomial basis plus the degree-shift window it respects.
/// Entries connecting monomials outside [min_shift, max_shift] are zero;
/// operators that would push past max_degree map those monomials to zero.
struct GradedOperator {
    ExactMatrix matrix;
    int min_shift = 0, max_shift = 0;

    bool shifts_consistent(const MonomialBasis& basis) const;
};

/// Q_mu = multiplication by the mu-th coordinate (lower index);
/// P_mu = -i g_{mu mu} d/du_mu, so [Q_mu, P_nu] = i g_{mu nu} on all
/// monomials of degree <= max_degree - 1.
std::pair<std::vector<GradedOperator>, std::vector<GradedOperator>>
build_position_momentum(const MonomialBasis& basis);

/// The polynomial conformal realization: D = Q.P - (i/2) d,
/// K_mu = -(Q.Q) P_mu + 2 Q_mu D, L_{mu nu} = -Q_mu P_nu + Q_nu P_mu.
/// Bracket checks are exact on interior degrees (buffer 2).
struct GXSet {
    algebra::GeneratorSet generators;                 // label -> matrix
    std::map<algebra::GeneratorLabel, std::pair<int, int>> shifts;
    int valid_window_degree = 0;                      // max_degree - 2
    ExactScalar d;
};

/// The table must outlive the returned set (the GeneratorSet keeps a pointer).
GXSet build_GX(const MonomialBasis& basis, const algebra::StructureTable& table,
               const ExactScalar& d);

struct CasimirX {
    ExactScalar c2, c3, c4;
};

/// Evaluates the quadratic pattern -D^2 + (1/2) L.L + (1/2){K_mu, P^mu} on
/// the interior subspace, asserts scalarity, and returns the scalar;
/// for n = 4 also evaluates the cubic and quartic patterns (0 for G_X).
CasimirX casimir_CX(const MonomialBasis& basis, const GXSet& gx);

}  // namespace spinconf::polyreal

#endif
