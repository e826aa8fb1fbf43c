#ifndef SPINCONF_MANIFEST_HPP
#define SPINCONF_MANIFEST_HPP

#include <functional>
#include <string>
#include <vector>

#include "spinconf/checks.hpp"
#include "spinconf/exactla.hpp"

namespace spinconf::cli {

struct ManifestConfig {
    exactla::Rational spin{1, 2};
    int n = 4;
    exactla::Rational d{4};
    int dmax = 3;
    unsigned seed = 0;
    bool extended = false;      // include the expensive quartic-fit block
    bool inject_fault = false;  // negative-control hook: corrupts one generator
};

struct ManifestEntry {
    std::string name;
    std::string claim;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string residual_info;
    long runtime_ms = 0;
};

struct VerificationManifest {
    std::string run_id;
    std::string timestamp;
    ManifestConfig config;
    int eps_sign = 0;
    std::vector<ManifestEntry> checks;

    bool all_pass() const;
    /// JSON with exact values in p/q form and floats as decimal strings.
    std::string to_json(int indent = 2) const;
};

/// A named unit of verification work; tasks are independent and pure, so the
/// runner may execute them on a pool (worker count from SPINCONF_THREADS,
/// default hardware concurrency).
struct Task {
    std::string name;
    std::function<std::vector<Check>()> run;
};

std::vector<ManifestEntry> run_tasks(std::vector<Task> tasks);

}  // namespace spinconf::cli

#endif
