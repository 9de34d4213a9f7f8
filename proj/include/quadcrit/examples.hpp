#pragma once

#include <string>
#include <vector>

#include "quadcrit/conic.hpp"
#include "quadcrit/image.hpp"

namespace quadcrit {

/// A reference map with its expected classification.
struct ReferenceExample {
  std::string id;       // "1", "5a", "9c", ...
  std::string formula;  // human-readable map
  std::string coefficients;  // a0..a5,b0..b5 as accepted by parse_quad_map
  std::array<std::string, 6> conic;  // expected A..F
  ConicKind j0;
  std::string case_label;
  std::vector<J1Kind> j1;  // sorted multiset
  /// Disk whose boundary image is drawn in figures: radius, center (x0, 0).
  double disk_radius = 1;
  double disk_x0 = 0;

  QuadMap map() const { return parse_quad_map(coefficients); }
};

const std::vector<ReferenceExample>& reference_examples();
/// Throws std::out_of_range for unknown ids.
const ReferenceExample& reference_example(const std::string& id);

/// Sorted J1 kinds of a report.
std::vector<J1Kind> j1_kinds(const CriticalReport& report);

}  // namespace quadcrit
