#ifndef SPINCONF_RIESZ_HPP
#define SPINCONF_RIESZ_HPP

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "spinconf/checks.hpp"

namespace spinconf::riesz {

using Complex = std::complex<double>;

inline constexpr double kEuler = 0.57721566490153286061;

struct SpacetimePoint {
    std::vector<double> coords;  // metric diag(-1, 1, ..., 1)
};

double minkowski_dot(const SpacetimePoint& a, const SpacetimePoint& b);

enum class Prescription { principal_value, i_epsilon };

struct RegParams {
    double epsilon = 1e-3;
    Prescription prescription = Prescription::i_epsilon;
};

/// H(x, y) = c [(x-y).(x-y) - i eps]^(-n/2), principal branch. For n = 1 with
/// the principal-value prescription this is the real Hilbert kernel 1/(x-y).
Complex riesz_kernel(const SpacetimePoint& x, const SpacetimePoint& y, int n, Complex c,
                     const RegParams& reg);

/// Kernel identities at n = 4: w.w = z.z/((x.x)(y.y)), the weight scaling
/// W(lx, ly) = l^(-2n) W(x, y), the d = n consistency, and kernel scaling
/// H(lx, ly) = l^(-n) H(x, y). Relative tolerance 1e-10 per sample.
struct InversionReport {
    int samples = 0;
    double max_rel_err_ww = 0, max_rel_err_wscale = 0;
    double max_rel_err_consistency = 0, max_rel_err_hscale = 0;
    bool pass = false;
};
InversionReport verify_inversion_identity(int samples, unsigned seed, double tol = 1e-10);

enum class FourierKind { f0, f1, sigma, tau };
std::string kind_name(FourierKind k);

struct RegularizedFourierResult {
    Complex value;
    double est_error = 0;
    long evaluations = 0;
    double truncation_radius = 0;
};

/// Regularized iterated Fourier transform of 1/(-xi^2 + eta^2 - i eps):
/// the inner integral is evaluated in closed form by residues; the outer
/// integral splits into a convergent sine part (computed as is) and a
/// log-divergent cosine part regularized as t/(t^2 + e_r^2), with e_r = eps
/// for the light-cone orders (sigma, tau) and eps/2 for (f0, f1) - the
/// (s, t) = (xi +- eta) change of variables halves the outer frequencies, and
/// matching the two conventions is what makes Y0 = Ysigma + Ytau hold.
RegularizedFourierResult fourier_f(FourierKind which, double x, double y, double eps);

/// Closed forms the regularized evaluation reproduces.
double closed_X(FourierKind which, double x, double y);
double closed_Y(FourierKind which, double x, double y, double eps);

/// Honest iterated integral for f0/f1 (single regulator throughout): outer
/// quadrature of the residue integrand. Diagnostic: keeps the documented
/// offsets from the regularized value (pi^2/2 in X, pi log eps in Y).
RegularizedFourierResult fourier_raw(FourierKind which, double x, double y, double eps);

/// Inner xi-integral at fixed eta: residue closed form and brute quadrature.
Complex inner_residue(double x, double eta, double eps);
RegularizedFourierResult inner_brute(double x, double eta, double eps);

/// The five structural relations plus the closed-form comparisons, on a
/// point grid. Tolerances: 1e-4 absolute on X parts, 1e-2 relative on Y.
struct RelationsReport {
    std::vector<Check> checks;
    std::vector<std::array<double, 2>> grid;
};
RelationsReport verify_f_relations(const std::vector<std::array<double, 2>>& grid, double eps,
                                   double tol_x = 1e-4, double tol_y = 1e-2);

/// Deterministic sample grid avoiding |x| = |y|, x + y = 0, x - y = 0 by the
/// stated margin.
std::vector<std::array<double, 2>> default_grid(int count, unsigned seed, double margin = 0.1);

/// Smooth test function with an analytic mixed light-cone derivative.
struct TestFunction {
    std::function<double(double, double)> value_xy;     // phi(x, y)
    std::function<double(double, double)> dudv;         // d^2 phi / du dv at (u, v)
    double value_at_origin = 0;
    double support_radius = 8.0;
};
TestFunction gaussian_bump(double sigma = 1.0);
TestFunction x_weighted_bump(double sigma = 1.0);       // vanishes at the origin

/// Integrates the closed form against (d_x^2 - d_y^2) phi and compares with
/// (2 pi)^2 phi(0, 0). The eps-dependent constant integrates to zero.
struct GreensReport {
    Complex integral;
    double expected = 0;
    double abs_err = 0;
    bool pass = false;
};
GreensReport weak_greens_check(FourierKind which, const TestFunction& phi, double eps,
                               double rel_tol = 0.05);

/// Discrete principal-value convolution with 1/(t - tau) on a uniform grid
/// (odd-symmetric stencil, diagonal skipped), normalized by 1/pi.
std::vector<double> hilbert_transform_1d(const std::vector<double>& t,
                                         const std::vector<double>& signal);

// two-column CSV (t, value)
std::pair<std::vector<double>, std::vector<double>> read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const std::vector<double>& t,
                      const std::vector<double>& v);

}  // namespace spinconf::riesz

#endif
