#ifndef SPINCONF_ALGEBRA_HPP
#define SPINCONF_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinconf/exactla.hpp"
#include "spinconf/minkowski.hpp"

namespace spinconf::algebra {

using exactla::ExactMatrix;
using exactla::ExactScalar;

/// Conformal generator label: D, P_mu, K_mu, or L_{mu nu} with mu < nu.
/// L with swapped indices is the same label with a sign, handled by Term.
struct GeneratorLabel {
    enum Kind { D, P, K, L } kind;
    int mu = 0, nu = 0;

    static GeneratorLabel d() { return {D, 0, 0}; }
    static GeneratorLabel p(int mu) { return {P, mu, 0}; }
    static GeneratorLabel k(int mu) { return {K, mu, 0}; }
    static GeneratorLabel l(int mu, int nu) { return {L, mu, nu}; }

    friend bool operator<(const GeneratorLabel& a, const GeneratorLabel& b) {
        return std::tie(a.kind, a.mu, a.nu) < std::tie(b.kind, b.mu, b.nu);
    }
    friend bool operator==(const GeneratorLabel& a, const GeneratorLabel& b) {
        return a.kind == b.kind && a.mu == b.mu && a.nu == b.nu;
    }
    std::string str() const;
};

/// Linear combination of labels with exact coefficients.
using Combination = std::map<GeneratorLabel, ExactScalar>;

Combination operator+(Combination a, const Combination& b);
Combination operator*(const ExactScalar& s, Combination c);
bool is_zero(const Combination& c);

/// The conformal bracket table over n spacetime dimensions, with the
/// explicit i of the physics convention kept in the structure constants.
class StructureTable {
  public:
    explicit StructureTable(int n);

    int n() const { return n_; }
    const std::vector<GeneratorLabel>& generators() const { return gens_; }

    /// Bracket of canonical labels, by the table rules.
    Combination bracket(const GeneratorLabel& a, const GeneratorLabel& b) const;
    Combination bracket(const Combination& a, const Combination& b) const;

    /// Canonicalize L(nu,mu) -> -L(mu,nu); L(mu,mu) -> 0.
    static Combination canonical_l(int mu, int nu, const ExactScalar& coeff);

    bool check_antisymmetry() const;
    bool check_jacobi() const;

  private:
    int n_;
    Metric metric_;
    std::vector<GeneratorLabel> gens_;
};

StructureTable build_conformal_table(int n);

/// (D, P, K, L) -> (-D, K, P, L) on labels, extended linearly.
Combination swap_automorphism(const GeneratorLabel& g);

struct PairResidual {
    GeneratorLabel a, b;
    bool zero;
    std::string detail;   // first nonzero entry, empty when zero
};

struct Report {
    std::vector<PairResidual> pairs;
    bool all_zero() const;
};

/// Checks that the swap is an involution and preserves every bracket.
Report verify_automorphism_swap(const StructureTable& table);

/// A concrete realization of the table: label -> matrix on a common space.
/// window_dim: when the realization lives on a truncated polynomial space,
/// residuals are only meaningful on the first window_dim basis columns of
/// each tensor slot (see polyreal); pass nullopt for exact reps.
struct GeneratorSet {
    const StructureTable* table;
    std::map<GeneratorLabel, ExactMatrix> realization;
    int space_dim = 0;
    std::vector<int> window_columns;  // columns on which brackets must be exact
};

/// For every label pair: matrix commutator minus the structure-constant
/// combination, restricted to the valid columns. Exact residuals.
Report verify_realization(const GeneratorSet& gs);

}  // namespace spinconf::algebra

#endif
