#include "spinconf/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace spinconf::riesz {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct QuadResult {
    Complex value{0.0, 0.0};
    double err = 0;
    long evals = 0;
    double truncation = 0;
};

// 15-point Gauss-Legendre nodes/weights on [-1, 1]
const double kGlx[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
const double kGlw[15] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719, 0.1395706779261543,
    0.1662692058169939, 0.1861610000155622, 0.1984314853271116, 0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

template <class F>
Complex gl15(const F& f, double a, double b, long& evals) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex acc{0.0, 0.0};
    for (int k = 0; k < 15; ++k) {
        acc += kGlw[k] * f(mid + half * kGlx[k]);
        ++evals;
    }
    return half * acc;
}

template <class F>
void adaptive_rec(const F& f, double a, double b, double tol, int depth, QuadResult& out) {
    Complex whole = gl15(f, a, b, out.evals);
    double m = 0.5 * (a + b);
    Complex left = gl15(f, a, m, out.evals);
    Complex right = gl15(f, m, b, out.evals);
    double disc = std::abs(left + right - whole);
    if (depth >= 28 || disc <= tol * (1.0 + std::abs(left + right))) {
        out.value += left + right;
        out.err += disc;
        return;
    }
    adaptive_rec(f, a, m, tol * 0.7, depth + 1, out);
    adaptive_rec(f, m, b, tol * 0.7, depth + 1, out);
}

template <class F>
QuadResult adaptive(const F& f, double a, double b, double tol = 1e-12) {
    QuadResult out;
    adaptive_rec(f, a, b, tol, 0, out);
    return out;
}

/// Oscillatory tail int_{t0}^inf g(t) e^{i omega t} dt for smooth g decaying
/// like 1/t: integrate half-period panels, then accelerate the partial-sum
/// sequence by repeated averaging. The last averaging correction is the
/// error estimate.
template <class G>
QuadResult osc_tail(const G& g, double omega, double t0, int n_panels = 56) {
    QuadResult out;
    if (omega == 0.0) throw std::invalid_argument("oscillatory tail needs omega != 0");
    const double h = kPi / std::abs(omega);
    std::vector<Complex> partial;
    partial.reserve(n_panels);
    Complex acc{0.0, 0.0};
    double a = t0;
    for (int k = 0; k < n_panels; ++k) {
        Complex panel = gl15([&](double t) { return g(t) * std::exp(Complex(0.0, omega * t)); },
                             a, a + h, out.evals);
        acc += panel;
        partial.push_back(acc);
        a += h;
    }
    double last_correction = std::abs(partial.back());
    while (partial.size() >= 2) {
        for (size_t k = 0; k + 1 < partial.size(); ++k)
            partial[k] = 0.5 * (partial[k] + partial[k + 1]);
        partial.pop_back();
        if (partial.size() >= 2)
            last_correction = std::abs(partial[partial.size() - 1] - partial[partial.size() - 2]);
    }
    out.value = partial[0];
    out.err += last_correction * 0.5;
    out.truncation = t0 + n_panels * h;
    return out;
}

}  // namespace

double minkowski_dot(const SpacetimePoint& a, const SpacetimePoint& b) {
    if (a.coords.size() != b.coords.size() || a.coords.empty())
        throw std::invalid_argument("dimension mismatch");
    double acc = -a.coords[0] * b.coords[0];
    for (size_t k = 1; k < a.coords.size(); ++k) acc += a.coords[k] * b.coords[k];
    return acc;
}

Complex riesz_kernel(const SpacetimePoint& x, const SpacetimePoint& y, int n, Complex c,
                     const RegParams& reg) {
    if (n < 1) throw std::invalid_argument("n >= 1");
    if (x.coords.size() != static_cast<size_t>(n) || y.coords.size() != static_cast<size_t>(n))
        throw std::invalid_argument("point dimension != n");
    for (double v : x.coords)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite input");
    for (double v : y.coords)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite input");

    if (n == 1 && reg.prescription == Prescription::principal_value) {
        double d = x.coords[0] - y.coords[0];
        return c / d;  // odd Hilbert kernel; the diagonal is the caller's PV job
    }
    SpacetimePoint z{std::vector<double>(n)};
    for (int k = 0; k < n; ++k) z.coords[k] = x.coords[k] - y.coords[k];
    double q = minkowski_dot(z, z);
    double eps = reg.prescription == Prescription::i_epsilon ? reg.epsilon : 0.0;
    return c * std::pow(Complex(q, -eps), -0.5 * n);
}

InversionReport verify_inversion_identity(int samples, unsigned seed, double tol) {
    const int n = 4;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(0.5, 3.0);
    InversionReport rep;
    auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double acc = -a[0] * b[0];
        for (int k = 1; k < n; ++k) acc += a[k] * b[k];
        return acc;
    };
    while (rep.samples < samples) {
        std::vector<double> x(n), y(n);
        for (auto& v : x) v = coord(rng);
        for (auto& v : y) v = coord(rng);
        double xx = dot(x, x), yy = dot(y, y);
        if (std::abs(xx) < 0.05 || std::abs(yy) < 0.05) continue;
        std::vector<double> z(n), w(n);
        for (int k = 0; k < n; ++k) {
            z[k] = x[k] - y[k];
            w[k] = -x[k] / xx + y[k] / yy;  // xtilde - ytilde
        }
        double zz = dot(z, z);
        if (std::abs(zz) < 1e-3) continue;
        ++rep.samples;

        double ww = dot(w, w);
        double want = zz / (xx * yy);
        rep.max_rel_err_ww = std::max(rep.max_rel_err_ww, std::abs(ww - want) / std::abs(want));

        // W(x,y) at d = n and its scaling
        auto weight = [&](const std::vector<double>& a, const std::vector<double>& b) {
            return std::pow(dot(a, a), -2.0) * std::pow(dot(b, b), 2.0 - n);
        };
        double lam = scale(rng);
        std::vector<double> lx(n), ly(n);
        for (int k = 0; k < n; ++k) {
            lx[k] = lam * x[k];
            ly[k] = lam * y[k];
        }
        double ws = weight(lx, ly), w0 = weight(x, y);
        double want_ws = std::pow(lam, -2.0 * n) * w0;
        rep.max_rel_err_wscale =
            std::max(rep.max_rel_err_wscale, std::abs(ws - want_ws) / std::abs(want_ws));

        // (z.z)^(-n/2) = W (w.w)^(-n/2) for d = n (integer powers at n = 4)
        double lhs = std::pow(zz, -2.0);
        double rhs = w0 * std::pow(ww, -2.0);
        rep.max_rel_err_consistency =
            std::max(rep.max_rel_err_consistency, std::abs(lhs - rhs) / std::abs(lhs));

        // kernel scaling at eps = 0
        RegParams reg{0.0, Prescription::i_epsilon};
        Complex h0 = riesz_kernel({x}, {y}, n, 1.0, reg);
        Complex hs = riesz_kernel({lx}, {ly}, n, 1.0, reg);
        Complex want_h = std::pow(lam, -static_cast<double>(n)) * h0;
        rep.max_rel_err_hscale =
            std::max(rep.max_rel_err_hscale, std::abs(hs - want_h) / std::abs(want_h));
    }
    rep.pass = rep.max_rel_err_ww < tol && rep.max_rel_err_wscale < tol &&
               rep.max_rel_err_consistency < tol && rep.max_rel_err_hscale < tol;
    return rep;
}

std::string kind_name(FourierKind k) {
    switch (k) {
        case FourierKind::f0: return "0";
        case FourierKind::f1: return "1";
        case FourierKind::sigma: return "sigma";
        case FourierKind::tau: return "tau";
    }
    return "?";
}

namespace {

/// int_0^inf sin(w t)/t dt by quadrature (odd in w).
QuadResult sine_part(double w) {
    QuadResult out;
    if (w == 0.0) return out;
    double aw = std::abs(w), sign = w > 0 ? 1.0 : -1.0;
    double t0 = std::max(1.0, 3.0 / aw);
    QuadResult head = adaptive(
        [&](double t) { return Complex(t == 0.0 ? aw : std::sin(aw * t) / t, 0.0); }, 0.0, t0);
    QuadResult tail = osc_tail([&](double t) { return Complex(1.0 / t, 0.0); }, aw, t0);
    out.value = sign * (head.value.real() + tail.value.imag());
    out.err = head.err + tail.err;
    out.evals = head.evals + tail.evals;
    out.truncation = tail.truncation;
    return out;
}

/// int_0^inf cos(w t) t/(t^2 + er^2) dt by quadrature (even in w).
QuadResult cosine_part(double w, double er) {
    double aw = std::abs(w);
    if (aw == 0.0) throw std::invalid_argument("cosine part diverges at zero frequency");
    QuadResult out;
    auto g = [&](double t) { return t / (t * t + er * er); };
    double t0 = std::max(1.0, 3.0 / aw);
    QuadResult head1 = adaptive([&](double t) { return Complex(std::cos(aw * t) * g(t), 0.0); },
                                0.0, std::min(8.0 * er, t0));
    QuadResult head2;
    if (8.0 * er < t0)
        head2 = adaptive([&](double t) { return Complex(std::cos(aw * t) * g(t), 0.0); },
                         8.0 * er, t0);
    QuadResult tail = osc_tail([&](double t) { return Complex(g(t), 0.0); }, aw, t0);
    out.value = head1.value.real() + head2.value.real() + tail.value.real();
    out.err = head1.err + head2.err + tail.err;
    out.evals = head1.evals + head2.evals + tail.evals;
    out.truncation = tail.truncation;
    return out;
}

void guard_margins(double x, double y) {
    if (std::abs(std::abs(x) - std::abs(y)) < 1e-9 || std::abs(x + y) < 1e-9 ||
        std::abs(x - y) < 1e-9)
        throw std::invalid_argument("point too close to |x| = |y|");
}

}  // namespace

RegularizedFourierResult fourier_f(FourierKind which, double x, double y, double eps) {
    if (!(eps >= 1e-6 && eps <= 1e-1)) throw std::invalid_argument("eps outside [1e-6, 1e-1]");
    guard_margins(x, y);
    RegularizedFourierResult out;
    if (which == FourierKind::sigma || which == FourierKind::tau) {
        double a = which == FourierKind::sigma ? 0.5 * (x - y) : 0.5 * (x + y);
        double b = which == FourierKind::sigma ? 0.5 * (x + y) : 0.5 * (x - y);
        double bp = b * (a > 0 ? 1.0 : -1.0);
        QuadResult s = sine_part(bp), c = cosine_part(bp, eps);
        out.value = Complex(kPi * s.value.real(), kPi * c.value.real());
        out.est_error = kPi * (s.err + c.err);
        out.evaluations = s.evals + c.evals;
        out.truncation_radius = std::max(s.truncation, c.truncation);
        return out;
    }
    double w1 = which == FourierKind::f0 ? y - std::abs(x) : std::abs(y) - x;
    double w2 = which == FourierKind::f0 ? -y - std::abs(x) : std::abs(y) + x;
    QuadResult s1 = sine_part(w1), s2 = sine_part(w2);
    QuadResult c1 = cosine_part(w1, 0.5 * eps), c2 = cosine_part(w2, 0.5 * eps);
    out.value = Complex(-kPi * (s1.value.real() + s2.value.real()),
                        kPi * (c1.value.real() + c2.value.real()));
    out.est_error = kPi * (s1.err + s2.err + c1.err + c2.err);
    out.evaluations = s1.evals + s2.evals + c1.evals + c2.evals;
    out.truncation_radius =
        std::max({s1.truncation, s2.truncation, c1.truncation, c2.truncation});
    return out;
}

double closed_X(FourierKind which, double x, double y) {
    auto sgn = [](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); };
    switch (which) {
        case FourierKind::f0:
            return 0.5 * kPi * kPi * (sgn(std::abs(x) + std::abs(y)) + sgn(std::abs(x) - std::abs(y)));
        case FourierKind::f1:
            return -closed_X(FourierKind::f0, y, x);
        default:
            return 0.5 * kPi * kPi * sgn(std::abs(x) - std::abs(y));
    }
}

double closed_Y(FourierKind which, double x, double y, double eps) {
    switch (which) {
        case FourierKind::f0:
        case FourierKind::f1:
            return -kPi * (2.0 * kEuler + std::log(std::abs(x * x - y * y)) +
                           2.0 * std::log(0.5 * eps));
        case FourierKind::sigma:
            return -kPi * (kEuler + std::log(std::abs(x + y)) + std::log(0.5 * eps));
        case FourierKind::tau:
            return -kPi * (kEuler + std::log(std::abs(x - y)) + std::log(0.5 * eps));
    }
    return 0;
}

Complex inner_residue(double x, double eta, double eps) {
    Complex r = std::sqrt(Complex(eta * eta, -eps));  // principal branch, Im < 0
    return Complex(0.0, kPi) * std::exp(Complex(0.0, -std::abs(x)) * r) / r;
}

RegularizedFourierResult inner_brute(double x, double eta, double eps) {
    // absolutely convergent, but the integrand has width-(eps/2|eta|)
    // Lorentzian peaks at xi = +-|eta| that blind adaptive refinement;
    // integrate pole-centred panels explicitly, then oscillatory tails
    double ae = std::abs(eta);
    double w = std::max(0.05, 2000.0 * eps / std::max(2.0 * ae, 1e-3));
    double t0 = std::max(4.0 * ae + 4.0, 8.0);
    auto f = [&](double xi) {
        return std::exp(Complex(0.0, -x * xi)) / Complex(eta * eta - xi * xi, -eps);
    };
    std::vector<double> edges{-t0, -ae - w, -ae + w, -w / 4, w / 4, ae - w, ae + w, t0};
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                edges.end());
    RegularizedFourierResult out;
    for (size_t k = 0; k + 1 < edges.size(); ++k) {
        if (edges[k + 1] <= -t0 || edges[k] >= t0) continue;
        QuadResult q = adaptive(f, std::max(edges[k], -t0), std::min(edges[k + 1], t0), 1e-13);
        out.value += q.value;
        out.est_error += q.err;
        out.evaluations += q.evals;
    }
    // tails: int_{|xi| > t0} = int_{t0}^inf [g(xi) e^{-i x xi} + g(xi) e^{+i x xi}] dxi
    // with even g(xi) = 1/(eta^2 - xi^2 - i eps); needs x != 0 for the panels
    if (std::abs(x) < 1e-3) throw std::invalid_argument("inner_brute needs |x| >= 1e-3");
    auto geven = [&](double xi) { return 1.0 / Complex(eta * eta - xi * xi, -eps); };
    QuadResult tp = osc_tail(geven, -x, t0);
    QuadResult tm = osc_tail(geven, x, t0);
    out.value += tp.value + tm.value;
    out.est_error += tp.err + tm.err;
    out.evaluations += tp.evals + tm.evals;
    out.truncation_radius = std::max(tp.truncation, tm.truncation);
    return out;
}

RegularizedFourierResult fourier_raw(FourierKind which, double x, double y, double eps) {
    if (which != FourierKind::f0 && which != FourierKind::f1)
        throw std::invalid_argument("raw path covers the xi/eta orders only");
    guard_margins(x, y);
    // f1(x, y) = -conj(f0(y, x)) exactly for the honest objects
    if (which == FourierKind::f1) {
        RegularizedFourierResult r = fourier_raw(FourierKind::f0, y, x, eps);
        r.value = -std::conj(r.value);
        return r;
    }
    auto integrand = [&](double eta) {
        return std::exp(Complex(0.0, y * eta)) * inner_residue(x, eta, eps);
    };
    double wplus = y - std::abs(x), wminus = -y - std::abs(x);
    double t0 = std::max({4.0, 3.0 / std::abs(wplus), 3.0 / std::abs(wminus)});
    RegularizedFourierResult out;
    QuadResult head = adaptive(integrand, -t0, t0, 1e-12);
    // tails: integrand ~ pi i e^{i(y -+ |x|) eta}/eta
    QuadResult tailp = osc_tail(
        [&](double eta) {
            return integrand(eta) * std::exp(Complex(0.0, -wplus * eta));
        },
        wplus, t0);
    QuadResult tailm = osc_tail(
        [&](double eta) {
            return integrand(-eta) * std::exp(Complex(0.0, -wminus * eta));
        },
        wminus, t0);
    out.value = head.value + tailp.value + tailm.value;
    out.est_error = head.err + tailp.err + tailm.err;
    out.evaluations = head.evals + tailp.evals + tailm.evals;
    out.truncation_radius = std::max(tailp.truncation, tailm.truncation);
    return out;
}

std::vector<std::array<double, 2>> default_grid(int count, unsigned seed, double margin) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::vector<std::array<double, 2>> out;
    while (static_cast<int>(out.size()) < count) {
        double x = coord(rng), y = coord(rng);
        if (std::abs(std::abs(x) - std::abs(y)) < margin) continue;
        if (std::abs(x + y) < margin || std::abs(x - y) < margin) continue;
        if (std::abs(x) < margin || std::abs(y) < margin) continue;
        out.push_back({x, y});
    }
    return out;
}

RelationsReport verify_f_relations(const std::vector<std::array<double, 2>>& grid, double eps,
                                   double tol_x, double tol_y) {
    RelationsReport rep;
    rep.grid = grid;
    double worst[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (const auto& [x, y] : grid) {
        Complex f0 = fourier_f(FourierKind::f0, x, y, eps).value;
        Complex f1 = fourier_f(FourierKind::f1, x, y, eps).value;
        Complex fs = fourier_f(FourierKind::sigma, x, y, eps).value;
        Complex ft = fourier_f(FourierKind::tau, x, y, eps).value;
        Complex f0_swap = fourier_f(FourierKind::f0, y, x, eps).value;
        Complex fs_neg = fourier_f(FourierKind::sigma, x, -y, eps).value;

        Complex r1 = f1 + std::conj(f0_swap);
        worst[0] = std::max(worst[0], std::abs(r1.real()));
        worst[1] = std::max(worst[1], std::abs(r1.imag()) / std::abs(f1.imag()));
        Complex r2 = ft - fs_neg;
        worst[2] = std::max(worst[2], std::abs(r2.real()));
        worst[3] = std::max(worst[3], std::abs(r2.imag()) / std::abs(ft.imag()));
        worst[4] = std::max(worst[4], std::abs(fs.real() - ft.real()));
        worst[4] = std::max(worst[4], std::abs(fs.real() - 0.5 * (f0.real() + f1.real())));
        worst[5] = std::max(worst[5], std::abs(f0.imag() - f1.imag()) / std::abs(f0.imag()));
        worst[5] = std::max(worst[5],
                            std::abs(f0.imag() - fs.imag() - ft.imag()) / std::abs(f0.imag()));
        worst[6] = std::max(worst[6], std::abs(f0.real() - closed_X(FourierKind::f0, x, y)));
        worst[7] = std::max(worst[7], std::abs(f1.real() + closed_X(FourierKind::f0, y, x)));
    }
    auto push = [&](const std::string& name, const std::string& claim, double v, double tol) {
        std::ostringstream os;
        os << "worst deviation " << v << " (tolerance " << tol << ")";
        rep.checks.push_back({name, claim, v < tol, os.str()});
    };
    push("rel_conjugate_x", "Re f1(x,y) = -Re f0(y,x)", worst[0], tol_x);
    push("rel_conjugate_y", "Im f1(x,y) = Im f0(y,x)", worst[1], tol_y);
    push("rel_reflect_x", "Re f_tau(x,y) = Re f_sigma(x,-y)", worst[2], tol_x);
    push("rel_reflect_y", "Im f_tau(x,y) = Im f_sigma(x,-y)", worst[3], tol_y);
    push("rel_x_mean", "X_sigma = X_tau = (X0 + X1)/2", worst[4], tol_x);
    push("rel_y_sum", "Y0 = Y1 = Y_sigma + Y_tau", worst[5], tol_y);
    push("x0_closed_form", "X0 matches its sign closed form", worst[6], tol_x);
    push("x1_closed_form", "X1(x,y) = -X0(y,x) closed form", worst[7], tol_x);
    return rep;
}

TestFunction gaussian_bump(double sigma) {
    TestFunction f;
    f.value_xy = [sigma](double x, double y) {
        return std::exp(-(x * x + y * y) / (2 * sigma * sigma));
    };
    // in light-cone coordinates phi = exp(-(u^2+v^2)/(4 sigma^2))
    f.dudv = [sigma](double u, double v) {
        double s2 = sigma * sigma;
        return (u * v / (4.0 * s2 * s2)) * std::exp(-(u * u + v * v) / (4 * s2));
    };
    f.value_at_origin = 1.0;
    f.support_radius = 8.0 * sigma;
    return f;
}

TestFunction x_weighted_bump(double sigma) {
    TestFunction f;
    f.value_xy = [sigma](double x, double y) {
        return x * std::exp(-(x * x + y * y) / (2 * sigma * sigma));
    };
    f.dudv = [sigma](double u, double v) {
        double s2 = sigma * sigma;
        auto G = [&](double t) { return std::exp(-t * t / (4 * s2)); };
        auto Gp = [&](double t) { return -t / (2 * s2) * std::exp(-t * t / (4 * s2)); };
        return 0.5 * Gp(u) * G(v) + 0.5 * G(u) * Gp(v) + 0.5 * (u + v) * Gp(u) * Gp(v);
    };
    f.value_at_origin = 0.0;
    f.support_radius = 9.0 * sigma;
    return f;
}

GreensReport weak_greens_check(FourierKind which, const TestFunction& phi, double eps,
                               double rel_tol) {
    // light-cone coordinates u = x + y, v = x - y:
    // int f (dxx - dyy) phi dx dy = 2 int f(u,v) du dv phi(u,v)
    auto f_uv = [&](double u, double v) -> Complex {
        double x = 0.5 * (u + v), y = 0.5 * (u - v);
        return Complex(closed_X(which, x, y), closed_Y(which, x, y, eps));
    };
    const double L = phi.support_radius;
    const int panels = 24;
    const double h = 2.0 * L / panels;
    Complex acc{0.0, 0.0};
    long evals = 0;
    for (int iu = 0; iu < panels; ++iu)
        for (int iv = 0; iv < panels; ++iv) {
            double ua = -L + iu * h, va = -L + iv * h;
            for (int a = 0; a < 15; ++a)
                for (int b = 0; b < 15; ++b) {
                    double u = ua + 0.5 * h * (1.0 + kGlx[a]);
                    double v = va + 0.5 * h * (1.0 + kGlx[b]);
                    acc += (0.25 * h * h * kGlw[a] * kGlw[b]) * f_uv(u, v) * phi.dudv(u, v);
                    ++evals;
                }
        }
    GreensReport rep;
    rep.integral = 2.0 * acc;
    rep.expected = 4.0 * kPi * kPi * phi.value_at_origin;
    rep.abs_err = std::abs(rep.integral - Complex(rep.expected, 0.0));
    double scale = std::max(std::abs(rep.expected), 4.0 * kPi * kPi * 0.05);
    rep.pass = rep.abs_err < rel_tol * scale;
    return rep;
}

std::vector<double> hilbert_transform_1d(const std::vector<double>& t,
                                         const std::vector<double>& signal) {
    const size_t n = t.size();
    if (n < 2 || signal.size() != n) throw std::invalid_argument("bad signal");
    const double h = t[1] - t[0];
    for (size_t k = 1; k < n; ++k)
        if (std::abs(t[k] - t[k - 1] - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("non-uniform grid");
    std::vector<double> out(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            acc += signal[j] / (t[i] - t[j]);
        }
        out[i] = acc * h / kPi;
    }
    return out;
}

std::pair<std::vector<double>, std::vector<double>> read_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<double> t, v;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream is(line);
        double a, b;
        if (is >> a >> b) {
            t.push_back(a);
            v.push_back(b);
        }
    }
    return {t, v};
}

void write_signal_csv(const std::string& path, const std::vector<double>& t,
                      const std::vector<double>& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.precision(17);
    out << "t,value\n";
    for (size_t k = 0; k < t.size(); ++k) out << t[k] << "," << v[k] << "\n";
}

}  // namespace spinconf::riesz
