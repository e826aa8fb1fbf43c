#include <doctest.h>

#include <cmath>

#include "spinconf/riesz.hpp"

using namespace spinconf::riesz;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("kernel evaluation basics") {
    RegParams reg{1e-8, Prescription::i_epsilon};
    // n=2, x=(1,0), y=(0,0): z.z = -1, kernel -> c/(-1 - i 0+) = -c in the limit
    Complex v = riesz_kernel({{1.0, 0.0}}, {{0.0, 0.0}}, 2, 1.0, reg);
    CHECK(std::abs(v - Complex(-1.0, 0.0)) < 1e-6);

    // lightlike separation: magnitude eps^(-n/2)
    RegParams reg6{1e-6, Prescription::i_epsilon};
    Complex lv = riesz_kernel({{1.0, 1.0}}, {{0.0, 0.0}}, 2, 1.0, reg6);
    CHECK(std::abs(lv) == doctest::Approx(1e6).epsilon(1e-9));

    // n=1 principal-value kernel is the odd 1/(x-y)
    RegParams pv{0.0, Prescription::principal_value};
    CHECK(riesz_kernel({{3.0}}, {{1.0}}, 1, 1.0, pv) == Complex(0.5, 0.0));

    CHECK_THROWS(riesz_kernel({{1.0, 0.0}}, {{0.0}}, 2, 1.0, reg));
}

TEST_CASE("inversion and scaling identities at n = 4") {
    InversionReport rep = verify_inversion_identity(1000, 42);
    CHECK(rep.samples == 1000);
    CHECK(rep.pass);
    CHECK(rep.max_rel_err_ww < 1e-10);
    CHECK(rep.max_rel_err_wscale < 1e-10);
    CHECK(rep.max_rel_err_consistency < 1e-10);
    CHECK(rep.max_rel_err_hscale < 1e-10);
}

TEST_CASE("inner residue formula matches brute quadrature") {
    for (double eta : {0.3, 1.0, 2.5}) {
        Complex res = inner_residue(2.0, eta, 1e-3);
        RegularizedFourierResult brute = inner_brute(2.0, eta, 1e-3);
        CHECK(std::abs(res - brute.value) < 1e-5 + 10 * brute.est_error);
    }
}

TEST_CASE("fourier_f reproduces the closed forms at (2, 0.5), eps = 1e-3") {
    double x = 2.0, y = 0.5, eps = 1e-3;
    for (FourierKind k :
         {FourierKind::f0, FourierKind::f1, FourierKind::sigma, FourierKind::tau}) {
        RegularizedFourierResult r = fourier_f(k, x, y, eps);
        INFO("kind ", kind_name(k));
        CHECK(std::abs(r.value.real() - closed_X(k, x, y)) < 1e-3);
        double cy = closed_Y(k, x, y, eps);
        CHECK(std::abs(r.value.imag() - cy) / std::abs(cy) < 0.01);
        CHECK(r.est_error < 1e-6);
    }

    // the spec's worked examples
    RegularizedFourierResult fs = fourier_f(FourierKind::sigma, x, y, eps);
    CHECK(std::abs(fs.value.real() - 0.5 * kPi * kPi) < 1e-3);
    double want_ys = -kPi * (kEuler + std::log(2.5) + std::log(5e-4));
    CHECK(std::abs(fs.value.imag() - want_ys) / std::abs(want_ys) < 0.01);

    RegularizedFourierResult f0r = fourier_f(FourierKind::f0, x, y, eps);
    double want_y0 = -kPi * (2 * kEuler + std::log(3.75) + 2 * std::log(5e-4));
    CHECK(std::abs(f0r.value.imag() - want_y0) / std::abs(want_y0) < 0.01);
}

TEST_CASE("sign structure of X_sigma across |x| = |y|") {
    double eps = 1e-3;
    CHECK(fourier_f(FourierKind::sigma, 1.5, 0.7, eps).value.real() > 0);
    CHECK(fourier_f(FourierKind::sigma, 0.7, 1.5, eps).value.real() < 0);
    CHECK(fourier_f(FourierKind::sigma, -1.5, 0.7, eps).value.real() > 0);
    // X0 vanishes when |x| < |y|
    CHECK(std::abs(fourier_f(FourierKind::f0, 0.3, 1.5, eps).value.real()) < 1e-3);
}

TEST_CASE("structural relations hold on the default grid") {
    auto grid = default_grid(12, 7);
    RelationsReport rep = verify_f_relations(grid, 1e-3);
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("raw iterated integral keeps the documented offsets") {
    // the honest object differs from the regularized evaluation by pi^2/2 in
    // the real part and by roughly pi log(eps) (slowly varying) in the
    // imaginary part; check the real offset quantitatively
    double x = 2.0, y = 0.5, eps = 1e-4;
    RegularizedFourierResult raw = fourier_raw(FourierKind::f0, x, y, eps);
    RegularizedFourierResult reg = fourier_f(FourierKind::f0, x, y, eps);
    double sqrt_eps = std::sqrt(eps);
    CHECK(std::abs((reg.value.real() - raw.value.real()) - 0.5 * kPi * kPi) <
          5.0 * sqrt_eps + 1e-3);
    // imaginary offset: reg - raw = -pi log eps + O(1) corrections bounded here
    double dy = reg.value.imag() - raw.value.imag();
    CHECK(dy == doctest::Approx(-kPi * std::log(eps)).epsilon(0.08));

    // conjugation symmetry of the raw pair
    RegularizedFourierResult raw1 = fourier_raw(FourierKind::f1, y, x, eps);
    Complex want = -std::conj(fourier_raw(FourierKind::f0, x, y, eps).value);
    CHECK(std::abs(raw1.value - want) < 1e-8);
}

TEST_CASE("weak distributional identity against test functions") {
    double eps = 1e-4;
    TestFunction phi = gaussian_bump(1.0);
    for (FourierKind k : {FourierKind::f0, FourierKind::sigma}) {
        GreensReport rep = weak_greens_check(k, phi, eps);
        INFO("kind ", kind_name(k), " integral ", rep.integral.real(), " expected ",
             rep.expected);
        CHECK(rep.pass);
        CHECK(std::abs(rep.integral.real() - rep.expected) < 0.05 * rep.expected);
        CHECK(std::abs(rep.integral.imag()) < 0.05 * rep.expected);
    }

    // phi(0,0) = 0 gives ~0
    TestFunction xphi = x_weighted_bump(1.0);
    GreensReport zero = weak_greens_check(FourierKind::f0, xphi, eps);
    CHECK(std::abs(zero.integral) < 0.05 * 4 * kPi * kPi);

    // adding a constant to f leaves the integral unchanged (the eps constant
    // already integrates to zero); emulate by comparing two eps values
    GreensReport e1 = weak_greens_check(FourierKind::f0, phi, 1e-3);
    GreensReport e2 = weak_greens_check(FourierKind::f0, phi, 1e-5);
    CHECK(std::abs(e1.integral - e2.integral) < 1e-6);
}

TEST_CASE("hilbert transform: classical pair 1/(1+t^2) -> t/(1+t^2)") {
    const int n = 4096;
    const double L = 40.0;
    std::vector<double> t(n), f(n);
    for (int k = 0; k < n; ++k) {
        t[k] = -L + 2.0 * L * k / n;
        f[k] = 1.0 / (1.0 + t[k] * t[k]);
    }
    std::vector<double> h = hilbert_transform_1d(t, f);
    double max_err = 0;
    for (int k = 0; k < n; ++k)
        max_err = std::max(max_err, std::abs(h[k] - t[k] / (1.0 + t[k] * t[k])));
    CHECK(max_err < 1e-2);
}

TEST_CASE("hilbert transform: windowed cosine maps to windowed sine") {
    const int n = 4096;
    const double L = 60.0;
    std::vector<double> t(n), f(n);
    auto window = [&](double v) { return std::exp(-v * v / 800.0); };
    for (int k = 0; k < n; ++k) {
        t[k] = -L + 2.0 * L * k / n;
        f[k] = std::cos(t[k]) * window(t[k]);
    }
    std::vector<double> h = hilbert_transform_1d(t, f);
    double max_err = 0;
    for (int k = 0; k < n; ++k)
        if (std::abs(t[k]) < 15.0)
            max_err = std::max(max_err, std::abs(h[k] - std::sin(t[k]) * window(t[k])));
    CHECK(max_err < 2e-2);
}

TEST_CASE("hilbert transform edge behavior") {
    std::vector<double> t{0.0, 0.5, 1.0, 1.5}, z(4, 0.0);
    auto h = hilbert_transform_1d(t, z);
    for (double v : h) CHECK(v == 0.0);

    // translation equivariance is structural on a uniform grid
    std::vector<double> f{1.0, 2.0, 0.5, -1.0};
    std::vector<double> t2{10.0, 10.5, 11.0, 11.5};
    CHECK(hilbert_transform_1d(t, f) == hilbert_transform_1d(t2, f));

    std::vector<double> bad{0.0, 0.5, 1.1, 1.5};
    CHECK_THROWS(hilbert_transform_1d(bad, f));
}

TEST_CASE("fourier_f input validation") {
    CHECK_THROWS(fourier_f(FourierKind::sigma, 1.0, 1.0, 1e-3));   // |x| = |y|
    CHECK_THROWS(fourier_f(FourierKind::f0, 2.0, 0.5, 1.0));       // eps out of range
}
