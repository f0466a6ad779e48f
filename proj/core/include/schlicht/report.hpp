// Verification runs over named functions / coefficient lists, certificate
// serialization, and the one-shot reproduction report (text, JSON, CSV).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "schlicht/grunsky.hpp"
#include "schlicht/optimize.hpp"

namespace schlicht {

enum class Mode { Exact, Floating };
enum class ReportFormat { Text, Json, Csv };

// Table entry override, applied symmetrically after the series pipeline.
// `value` is textual so exact mode keeps exact arithmetic ("3/2", "1.5").
struct OmegaOverride {
  int p = 0;
  int q = 0;
  std::string value;
};

struct VerifyOptions {
  std::string function;             // builtin name; ignored when coeffs set
  std::vector<std::string> coeffs;  // textual a2, a3, ... (optional)
  int order = 9;
  Mode mode = Mode::Exact;
  std::vector<OmegaOverride> overrides;
};

// Identity / inequality verification for one function: the six coefficient
// identity residuals against the input series, the minimum quadratic-form
// slack over the deterministic test-vector sample, and the cascade margins.
// Pass/fail is decided exactly in exact mode; floating mode allows 1e-10 on
// residuals and -1e-12 on slack.
struct VerificationResult {
  std::string function;
  int order = 0;
  Mode mode = Mode::Exact;
  std::array<double, 6> residuals{};
  double slack_min = 0.0;
  std::array<std::optional<double>, 4> cascade_margins{};
  bool residuals_pass = false;
  bool slack_pass = false;
  bool cascade_pass = false;
  bool passed() const { return residuals_pass && slack_pass && cascade_pass; }
};

VerificationResult verify_function(const VerifyOptions& opts);

// { "function", "order", "residuals", "slack_min", "cascade_margins" };
// margins of non-evaluable cascade rungs serialize as null.
std::string verification_json(const VerificationResult& r);

// { "objective", "upper", "lower", "witness", "tol", "boxes",
//   "improves_over": {"old_bound"} }
std::string certificate_json(Objective obj, const CertifiedBound& bound);

// Root listing for the roots command: isolating intervals as exact rational
// strings plus (when `annotated`) the stationarity verdict.
std::string roots_json(const std::string& description,
                       const std::vector<FilteredRoot>& roots,
                       bool annotated = true);

struct ReportOptions {
  ReportFormat format = ReportFormat::Text;
  // Empty runs every section; otherwise one of: identities, bounds,
  // critical, boundary, roots, improvement.
  std::string section;
  std::optional<Objective> objective;  // restricts objective-bound sections
  double tol = 1e-6;
};

// The full reproduction document. Deterministic (byte-identical across
// runs) in single-worker mode.
std::string build_report(const ReportOptions& opts);

std::string rational_to_string(const Rational& r);

}  // namespace schlicht
