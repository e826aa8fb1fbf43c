// Test-only oracles, kept independent of the library paths they check.
#ifndef SPINCONF_TEST_ORACLES_HPP
#define SPINCONF_TEST_ORACLES_HPP

#include <array>
#include <vector>

#include "spinconf/exactla.hpp"

namespace test_oracles {

using spinconf::exactla::ExactMatrix;
using spinconf::exactla::ExactPolynomial;
using spinconf::exactla::ExactScalar;
using spinconf::exactla::Rational;

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence
/// (trace-based, no elimination; independent of the Krylov minimal-poly path).
inline ExactPolynomial characteristic_polynomial(const ExactMatrix& m) {
    const int n = m.dim();
    std::vector<ExactScalar> c(n + 1);
    c[n] = ExactScalar(1);
    ExactMatrix mk(n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        for (int d = 0; d < n; ++d) mk.at(d, d) += c[n - k + 1];
        mk = m * mk;
        c[n - k] = ExactScalar(Rational(-1, k)) * mk.trace();
    }
    return ExactPolynomial(std::move(c));
}

/// Exact polynomial divisibility via long division.
inline bool divides(const ExactPolynomial& d, const ExactPolynomial& p) {
    if (d.degree() < 0) return p.degree() < 0;
    std::vector<ExactScalar> r(p.coeffs());
    int rdeg = p.degree();
    while (rdeg >= d.degree()) {
        ExactScalar f = r[rdeg] / d.coeff(d.degree());
        for (int k = 0; k <= d.degree(); ++k)
            r[rdeg - d.degree() + k] -= f * d.coeff(k);
        while (rdeg >= 0 && r[rdeg].is_zero()) --rdeg;
    }
    return rdeg < 0;
}

/// Fixed exact gamma basis for metric diag(-1,1,1,1):
/// g0 = [[0, 1], [-1, 0]] and gj = [[0, sj], [sj, 0]] in 2x2 blocks.
inline std::array<ExactMatrix, 4> gamma_basis() {
    auto E = [](int r, int c, ExactScalar v, ExactMatrix& m) { m.at(r, c) = v; };
    std::array<ExactMatrix, 4> g{ExactMatrix(4), ExactMatrix(4), ExactMatrix(4), ExactMatrix(4)};
    ExactScalar one(1), i = ExactScalar::i();
    // gamma0
    E(0, 2, one, g[0]); E(1, 3, one, g[0]); E(2, 0, -one, g[0]); E(3, 1, -one, g[0]);
    // gamma1 (sigma1)
    E(0, 3, one, g[1]); E(1, 2, one, g[1]); E(2, 1, one, g[1]); E(3, 0, one, g[1]);
    // gamma2 (sigma2)
    E(0, 3, -i, g[2]); E(1, 2, i, g[2]); E(2, 1, -i, g[2]); E(3, 0, i, g[2]);
    // gamma3 (sigma3)
    E(0, 2, one, g[3]); E(1, 3, -one, g[3]); E(2, 0, one, g[3]); E(3, 1, -one, g[3]);
    return g;
}

/// Weyl dimension formula for the rank-2 orthogonal algebra, highest weight
/// (s, s) in orthogonal coordinates: prod over positive roots of
/// <lambda+rho, alpha>/<rho, alpha> with rho = (3/2, 1/2).
inline Rational weyl_dim_ss(const Rational& s) {
    Rational l1 = s + Rational(3, 2), l2 = s + Rational(1, 2);
    // roots e1-e2, e2, e1, e1+e2 give factors:
    Rational f1 = (l1 - l2) / Rational(1);
    Rational f2 = l2 / Rational(1, 2);
    Rational f3 = l1 / Rational(3, 2);
    Rational f4 = (l1 + l2) / Rational(2);
    return f1 * f2 * f3 * f4;
}

/// <lambda, lambda + 2 rho> for highest weight (s, s), rho = (3/2, 1/2).
inline Rational casimir2_ss(const Rational& s) {
    return s * (s + 3) + s * (s + 1);  // = 2s(s+2)
}

}  // namespace test_oracles

#endif
