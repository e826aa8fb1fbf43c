// spinconf: exact verification workbench for spin-dependent conformal
// generators, beta-matrix representations, and the regularized kernel
// Fourier numerics. See README.md for the command survey.
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinconf/conformal.hpp"
#include "spinconf/manifest.hpp"
#include "spinconf/riesz.hpp"
#include "spinconf/suites.hpp"

namespace {

using spinconf::exactla::Rational;

Rational parse_spin(const std::string& s) {
    Rational r = spinconf::exactla::parse_rational(s);
    if (r != Rational(1, 2) && r != 1 && r != Rational(3, 2) && r != 2)
        throw CLI::ValidationError("--spin", "spin must be one of 1/2, 1, 3/2, 2");
    return r;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text << "\n";
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact conformal-algebra and regularized-kernel verification workbench"};
    app.require_subcommand(1);

    std::string spin_str = "1/2", d_str = "4", out_path, format = "json";
    int n = 4, dmax = 3;
    unsigned seed = 0;
    double eps = 1e-3, xval = 2.0, yval = 0.5;

    // ---- verify all ----
    auto* verify = app.add_subcommand("verify", "run verification suites");
    auto* verify_all = verify->add_subcommand("all", "full suite for one configuration");
    bool extended = false, inject_fault = false;
    verify_all->add_option("--spin", spin_str, "spin: 1/2, 1, 3/2, 2")->capture_default_str();
    verify_all->add_option("--n", n, "spacetime dimension (suite runs at 4)")
        ->capture_default_str();
    verify_all->add_option("--d", d_str, "conformal-degree parameter (rational)")
        ->capture_default_str();
    verify_all->add_option("--dmax", dmax, "polynomial truncation degree")->capture_default_str();
    verify_all->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
    verify_all->add_option("--out", out_path, "write the manifest to a file");
    verify_all->add_flag("--all", extended, "include the quartic-fit block");
    verify_all->add_flag("--inject-fault", inject_fault,
                         "testing hook: corrupt one generator entry");

    // ---- bhabha build ----
    auto* bh = app.add_subcommand("bhabha", "beta-matrix representations");
    auto* bh_build = bh->add_subcommand("build", "construct and verify a representation");
    std::string bh_export;
    bh_build->add_option("--spin", spin_str, "spin: 1/2, 1, 3/2, 2")->capture_default_str();
    bh_build->add_option("--export", bh_export, "write the JSON export to a file");

    // ---- polyreal build ----
    auto* pr = app.add_subcommand("polyreal", "polynomial conformal realization");
    auto* pr_build = pr->add_subcommand("build", "emit generator matrices and window");
    pr_build->add_option("--n", n, "spacetime dimension")->capture_default_str();
    pr_build->add_option("--dmax", dmax, "truncation degree")->capture_default_str();
    pr_build->add_option("--d", d_str, "conformal-degree parameter")->capture_default_str();
    pr_build->add_option("--out", out_path, "output file");

    // ---- conformal verify ----
    auto* cf = app.add_subcommand("conformal", "internal/combined conformal checks");
    auto* cf_verify = cf->add_subcommand("verify", "manifest for one configuration");
    cf_verify->add_option("--spin", spin_str)->capture_default_str();
    cf_verify->add_option("--n", n)->capture_default_str();
    cf_verify->add_option("--d", d_str)->capture_default_str();
    cf_verify->add_option("--dmax", dmax)->capture_default_str();
    cf_verify->add_flag("--all", extended, "include the quartic-fit block");
    cf_verify->add_option("--out", out_path, "output file");

    // ---- export ----
    auto* ex = app.add_subcommand("export", "deterministic JSON exports");
    std::string what = "rep";
    ex->add_option("--what", what, "rep | generators | projectors | casimirs")
        ->check(CLI::IsMember({"rep", "generators", "projectors", "casimirs"}))
        ->capture_default_str();
    ex->add_option("--spin", spin_str)->capture_default_str();
    ex->add_option("--n", n)->capture_default_str();
    ex->add_option("--dmax", dmax)->capture_default_str();
    ex->add_option("--d", d_str)->capture_default_str();
    ex->add_option("--out", out_path, "output file");

    // ---- riesz ----
    auto* rz = app.add_subcommand("riesz", "kernel numerics");
    auto* rz_fourier = rz->add_subcommand("fourier", "regularized iterated Fourier transform");
    std::string which = "sigma";
    bool check_closed = false;
    rz_fourier->add_option("--which", which, "0 | 1 | sigma | tau")
        ->check(CLI::IsMember({"0", "1", "sigma", "tau"}))
        ->capture_default_str();
    rz_fourier->add_option("--x", xval)->required();
    rz_fourier->add_option("--y", yval)->required();
    rz_fourier->add_option("--eps", eps, "regularization parameter")->required();
    rz_fourier->add_flag("--check-closed-form", check_closed,
                         "compare against the analytic closed form");
    rz_fourier->add_option("--out", out_path, "output file");

    auto* rz_rel = rz->add_subcommand("relations", "structural relations on a sample grid");
    int grid_count = 12;
    std::string grid_kind = "default";
    rz_rel->add_option("--grid", grid_kind, "grid kind (default)")->capture_default_str();
    rz_rel->add_option("--count", grid_count)->capture_default_str();
    rz_rel->add_option("--seed", seed)->capture_default_str();
    rz_rel->add_option("--eps", eps)->capture_default_str();
    rz_rel->add_option("--out", out_path, "output file");

    auto* rz_hilbert = rz->add_subcommand("hilbert", "discrete principal-value transform");
    std::string input_csv;
    rz_hilbert->add_option("--input", input_csv, "two-column CSV (t,value)")->required();
    rz_hilbert->add_option("--out", out_path, "output CSV (default stdout)");
    rz_hilbert->add_option("--format", format, "json|csv")->capture_default_str();

    auto* rz_kernel = rz->add_subcommand("kernel", "evaluate the kernel at a point pair");
    std::string xs = "1,0,0,0", ys = "0,0,0,0";
    double c_re = 1.0, c_im = 0.0;
    bool pv = false;
    rz_kernel->add_option("--x", xs, "comma-separated coordinates")->capture_default_str();
    rz_kernel->add_option("--y", ys, "comma-separated coordinates")->capture_default_str();
    rz_kernel->add_option("--n", n)->capture_default_str();
    rz_kernel->add_option("--eps", eps)->capture_default_str();
    rz_kernel->add_option("--c-re", c_re)->capture_default_str();
    rz_kernel->add_option("--c-im", c_im)->capture_default_str();
    rz_kernel->add_flag("--pv", pv, "principal-value prescription (n = 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify_all->parsed()) {
            spinconf::cli::ManifestConfig cfg;
            cfg.spin = parse_spin(spin_str);
            cfg.n = n;
            cfg.d = spinconf::exactla::parse_rational(d_str);
            cfg.dmax = dmax;
            cfg.seed = seed;
            cfg.extended = extended;
            cfg.inject_fault = inject_fault;
            spinconf::cli::VerificationManifest m = spinconf::cli::run_verify_all(cfg);
            emit(m.to_json(), out_path);
            return m.all_pass() ? 0 : 1;
        }
        if (bh_build->parsed()) {
            std::string j = spinconf::cli::export_rep_json(parse_spin(spin_str));
            emit(j, bh_export);
            return 0;
        }
        if (pr_build->parsed()) {
            std::string j = spinconf::cli::export_generators_json(
                n, dmax, spinconf::exactla::parse_rational(d_str), Rational(1, 2));
            emit(j, out_path);
            return 0;
        }
        if (cf_verify->parsed()) {
            spinconf::cli::ManifestConfig cfg;
            cfg.spin = parse_spin(spin_str);
            cfg.n = n;
            cfg.d = spinconf::exactla::parse_rational(d_str);
            cfg.dmax = dmax;
            cfg.extended = extended;
            spinconf::cli::VerificationManifest m = spinconf::cli::run_verify_all(cfg);
            emit(m.to_json(), out_path);
            return m.all_pass() ? 0 : 1;
        }
        if (ex->parsed()) {
            Rational spin = parse_spin(spin_str);
            Rational d = spinconf::exactla::parse_rational(d_str);
            std::string j;
            if (what == "rep") j = spinconf::cli::export_rep_json(spin);
            else if (what == "generators") j = spinconf::cli::export_generators_json(n, dmax, d, spin);
            else if (what == "projectors") j = spinconf::cli::export_projectors_json(spin);
            else j = spinconf::cli::export_casimirs_json(spin, d);
            emit(j, out_path);
            return 0;
        }
        if (rz_fourier->parsed()) {
            using namespace spinconf::riesz;
            FourierKind k = which == "0"   ? FourierKind::f0
                            : which == "1" ? FourierKind::f1
                            : which == "sigma" ? FourierKind::sigma
                                               : FourierKind::tau;
            RegularizedFourierResult r = fourier_f(k, xval, yval, eps);
            std::ostringstream os;
            os << "{\n  \"which\": \"" << which << "\",\n"
               << "  \"x\": \"" << fmt(xval) << "\", \"y\": \"" << fmt(yval) << "\", \"eps\": \""
               << fmt(eps) << "\",\n"
               << "  \"value\": {\"re\": \"" << fmt(r.value.real()) << "\", \"im\": \""
               << fmt(r.value.imag()) << "\"},\n"
               << "  \"est_error\": \"" << fmt(r.est_error) << "\",\n"
               << "  \"quadrature\": {\"evaluations\": " << r.evaluations
               << ", \"truncation_radius\": \"" << fmt(r.truncation_radius) << "\"}";
            if (check_closed) {
                double cx = closed_X(k, xval, yval), cy = closed_Y(k, xval, yval, eps);
                os << ",\n  \"closed_form\": {\"re\": \"" << fmt(cx) << "\", \"im\": \""
                   << fmt(cy) << "\"},\n  \"deviation\": {\"re\": \""
                   << fmt(std::abs(r.value.real() - cx)) << "\", \"im_rel\": \""
                   << fmt(std::abs(r.value.imag() - cy) / std::abs(cy)) << "\"}";
            }
            os << "\n}";
            emit(os.str(), out_path);
            return 0;
        }
        if (rz_rel->parsed()) {
            using namespace spinconf::riesz;
            if (grid_kind != "default")
                throw CLI::ValidationError("--grid", "only the default grid is available");
            auto grid = default_grid(grid_count, seed);
            RelationsReport rep = verify_f_relations(grid, eps);
            std::ostringstream os;
            bool all = true;
            os << "{\n  \"eps\": \"" << fmt(eps) << "\", \"points\": " << grid.size()
               << ",\n  \"checks\": [\n";
            for (size_t k = 0; k < rep.checks.size(); ++k) {
                const auto& c = rep.checks[k];
                all = all && c.pass;
                os << "    {\"name\": \"" << c.name << "\", \"claim\": \"" << c.claim
                   << "\", \"status\": \"" << (c.pass ? "pass" : "fail") << "\", \"info\": \""
                   << c.detail << "\"}" << (k + 1 < rep.checks.size() ? "," : "") << "\n";
            }
            os << "  ],\n  \"overall\": \"" << (all ? "pass" : "fail") << "\"\n}";
            emit(os.str(), out_path);
            return all ? 0 : 1;
        }
        if (rz_hilbert->parsed()) {
            using namespace spinconf::riesz;
            auto [t, v] = read_signal_csv(input_csv);
            std::vector<double> h = hilbert_transform_1d(t, v);
            if (out_path.empty()) {
                std::cout << "t,value\n";
                std::cout.precision(17);
                for (size_t k = 0; k < t.size(); ++k) std::cout << t[k] << "," << h[k] << "\n";
            } else {
                write_signal_csv(out_path, t, h);
            }
            return 0;
        }
        if (rz_kernel->parsed()) {
            using namespace spinconf::riesz;
            auto parse_point = [](const std::string& str) {
                SpacetimePoint p;
                std::istringstream is(str);
                std::string tok;
                while (std::getline(is, tok, ',')) p.coords.push_back(std::stod(tok));
                return p;
            };
            RegParams reg{eps, pv ? Prescription::principal_value : Prescription::i_epsilon};
            Complex val = riesz_kernel(parse_point(xs), parse_point(ys), n,
                                       Complex(c_re, c_im), reg);
            std::ostringstream os;
            os << "{\"re\": \"" << fmt(val.real()) << "\", \"im\": \"" << fmt(val.imag())
               << "\"}";
            emit(os.str(), out_path);
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
