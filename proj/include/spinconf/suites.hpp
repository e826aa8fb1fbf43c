#ifndef SPINCONF_SUITES_HPP
#define SPINCONF_SUITES_HPP

#include <string>

#include "spinconf/manifest.hpp"

namespace spinconf::cli {

/// Assembles and runs the full verification suite for one configuration:
/// abstract bracket table, polynomial realization, beta-matrix construction,
/// internal generators and Casimirs, combined-space identities, the ordinary
/// central-Delta theory, and the momentum-contraction checks. Combined-space
/// blocks that only make sense (or only fit a desk budget) for low spin are
/// reported as skipped otherwise.
VerificationManifest run_verify_all(const ManifestConfig& config);

/// JSON exports, deterministic bytes for a fixed config.
std::string export_rep_json(const exactla::Rational& spin);
std::string export_generators_json(int n, int dmax, const exactla::Rational& d,
                                   const exactla::Rational& spin);
std::string export_projectors_json(const exactla::Rational& spin);
std::string export_casimirs_json(const exactla::Rational& spin, const exactla::Rational& d);

}  // namespace spinconf::cli

#endif
