#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadcrit/image.hpp"
#include "quadcrit/report.hpp"

namespace quadcrit {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_num, 1 <= q <= max_den.
Scalar random_rational(Rng& rng, int max_num = 9, int max_den = 4);
/// Random non-affine map with rational coefficients.
QuadMap random_map(Rng& rng);
/// Random invertible affine transform with rational entries.
ExactAffine random_affine(Rng& rng);
/// k o F o h^-1, exactly.
QuadMap conjugate_exact(const ExactAffine& k, const QuadMap& map, const ExactAffine& h);

/// Reason the (case, J1 kinds) pair is outside the classification table, if
/// it is.
std::optional<std::string> conformance_violation(const CriticalReport& report);
/// Largest distance from a closed-form cusp parameter to the nearest generic
/// one (circular for case 3); infinity when the counts differ.
double cusp_parameter_gap(const CriticalReport& report);
/// Reason closed-form and generic cusp parameters disagree (beyond 1e-8),
/// if they do. Only meaningful for cases 3, 4 and 6.
std::optional<std::string> cusp_disagreement(const CriticalReport& report);

struct CheckTally {
  std::string name;
  long passed = 0;
  long failed = 0;
  /// First few failures: coefficients and detail.
  std::vector<Json> failures;
};

struct VerifyOptions {
  long random = 0;
  std::uint64_t seed = 42;
  /// Tamper with X13 before the identity check (harness self-test).
  bool negate_x13 = false;
};

struct VerifySummary {
  std::uint64_t seed = 0;
  long random = 0;
  std::vector<CheckTally> checks;

  bool ok() const;
  Json to_json() const;
};

/// Seeded property suite: identities, classification conformance, cusp
/// agreement and realizability on `random` random maps plus as many random
/// conjugates of the reference examples.
VerifySummary verify_random(const VerifyOptions& options);

/// The same checks on one map; the JSON lists every identity residual.
VerifySummary verify_map(const QuadMap& map, const VerifyOptions& options, Json* residuals);

}  // namespace quadcrit
