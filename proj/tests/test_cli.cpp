#include <doctest.h>

#include <regex>

#include "spinconf/manifest.hpp"
#include "spinconf/suites.hpp"

using namespace spinconf::cli;
using spinconf::exactla::Rational;

namespace {

std::string scrub_volatile(std::string j) {
    j = std::regex_replace(j, std::regex("\"timestamp\": \"[^\"]*\""), "\"timestamp\": \"\"");
    j = std::regex_replace(j, std::regex("\"runtime_ms\": [0-9]+"), "\"runtime_ms\": 0");
    return j;
}

}  // namespace

TEST_CASE("manifest: all checks pass for the standard configuration") {
    ManifestConfig cfg;
    cfg.spin = Rational(1, 2);
    VerificationManifest m = run_verify_all(cfg);
    CHECK(m.all_pass());
    CHECK(m.eps_sign != 0);
    CHECK(m.checks.size() >= 40);

    // names are unique and claims nonempty
    std::set<std::string> names;
    for (const auto& e : m.checks) {
        CHECK(names.insert(e.name).second);
        CHECK(!e.claim.empty());
    }
}

TEST_CASE("manifest: determinism modulo timestamp and runtimes") {
    ManifestConfig cfg;
    cfg.spin = Rational(1, 2);
    cfg.seed = 11;
    VerificationManifest a = run_verify_all(cfg);
    VerificationManifest b = run_verify_all(cfg);
    CHECK(a.run_id == b.run_id);
    CHECK(scrub_volatile(a.to_json()) == scrub_volatile(b.to_json()));
}

TEST_CASE("manifest: fault injection fails with the offending suite named") {
    ManifestConfig cfg;
    cfg.spin = Rational(1, 2);
    cfg.inject_fault = true;
    VerificationManifest m = run_verify_all(cfg);
    CHECK_FALSE(m.all_pass());
    bool named = false;
    for (const auto& e : m.checks)
        if (e.status == "fail" && e.name == "gx_bracket_table") named = true;
    CHECK(named);
}

TEST_CASE("manifest: invalid configurations are rejected") {
    ManifestConfig cfg;
    cfg.spin = Rational(5, 2);
    CHECK_THROWS(run_verify_all(cfg));
    cfg.spin = Rational(1, 2);
    cfg.dmax = 2;
    CHECK_THROWS(run_verify_all(cfg));
    cfg.dmax = 3;
    cfg.n = 3;
    CHECK_THROWS(run_verify_all(cfg));
}

TEST_CASE("manifest: higher spins mark the s=1/2-only blocks as skipped") {
    ManifestConfig cfg;
    cfg.spin = Rational(3, 2);
    VerificationManifest m = run_verify_all(cfg);
    CHECK(m.all_pass());  // skipped entries do not fail the run
    int skipped = 0;
    for (const auto& e : m.checks)
        if (e.status == "skipped") ++skipped;
    CHECK(skipped >= 2);
}

TEST_CASE("exports are byte-deterministic") {
    std::string a = export_rep_json(Rational(1));
    std::string b = export_rep_json(Rational(1));
    CHECK(a == b);
    CHECK(a.find("\"N\": \"4/1\"") != std::string::npos);
    CHECK(a.find("\"dim\": 10") != std::string::npos);

    std::string p1 = export_projectors_json(Rational(3, 2));
    CHECK(p1.find("\"trace\": \"4/1\"") != std::string::npos);
    CHECK(p1.find("\"rank\": 4") != std::string::npos);

    std::string g = export_generators_json(4, 4, Rational(4), Rational(1, 2));
    CHECK(g.find("\"valid_window_degree\": 2") != std::string::npos);

    std::string c = export_casimirs_json(Rational(1, 2), Rational(4));
    CHECK(c.find("\"c2\": \"15/4\"") != std::string::npos);
    CHECK(c.find("\"c3\": \"15/2\"") != std::string::npos);
    CHECK(c.find("\"c4\": \"135/16\"") != std::string::npos);
}
