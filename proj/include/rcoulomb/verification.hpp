#pragma once

// Executable checks of the inequalities, identities and structural facts
// about V_m and the effective models, grouped into suites.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rcoulomb {

std::string_view library_version();

struct CheckResult {
  std::string id;
  std::string grid;
  /// Largest amount by which the property failed (relative unless the id
  /// says otherwise). Non-positive means it held everywhere.
  double worst_violation = 0.0;
  std::string witness;  ///< grid point attaining worst_violation
  double tolerance = 0.0;
  bool pass = false;
};

/// A claim that is reported but never asserted.
struct ExploratoryItem {
  std::string id;
  std::string description;
  double value = 0.0;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<ExploratoryItem> exploratory;
  std::string version;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  /// Added to the upper bracket 1/sqrt(x^2+m). Nonzero values exist only to
  /// exercise the harness.
  double upper_bound_shift = 0.0;
};

/// "all", "bounds", "ode", "recursion", "convexity", "ratio", "fourier",
/// "avg", "pairs", "delta".
const std::vector<std::string>& suite_names();

/// Runs one suite (or all of them). Throws DomainError for an unknown name
/// and lets ConvergenceError from the numerics propagate.
VerificationReport run_verification(std::string_view suite, const VerifyOptions& options = {});

}  // namespace rcoulomb
