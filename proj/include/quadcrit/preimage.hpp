#pragma once

#include <vector>

#include "quadcrit/image.hpp"

namespace quadcrit {

/// Count value used for infinite preimage sets and flagged census cells.
inline constexpr int kInfiniteCount = -1;

struct PreimageResult {
  bool infinite = false;
  int count = 0;
  std::vector<Point> points;
  /// Per point: the intersection is tangential (multiple root).
  std::vector<bool> tangential;
  /// Some real solution is tangential (set even when points are skipped).
  bool has_tangential = false;
  /// True when `count` comes from an exact Sturm count.
  bool exact = false;
};

struct PreimageOptions {
  bool compute_points = true;
};

/// Solutions of F(p) = target. The target is converted exactly to a
/// rational, the system is eliminated in a sheared coordinate by a
/// resultant, and distinct real roots are counted with Sturm sequences.
/// Positive-dimensional solution sets (a shared factor of F - target) are
/// reported as infinite. Throws Error(DegenerateSystemUnresolved) if no
/// shear puts the system in generic position.
PreimageResult preimages(const QuadMap& map, const ExactPoint& target,
                         const PreimageOptions& options = {});
PreimageResult preimages(const QuadMap& map, const Point& target,
                         const PreimageOptions& options = {});

/// Floating-point elimination with companion-matrix roots; finite systems
/// only. Used as an independent check of the exact path.
PreimageResult preimages_numeric(const QuadMap& map, const Point& target);

struct Box {
  Point lo;
  Point hi;
};

/// Grid of preimage counts at cell centers. Cell (i, j) has center
/// (lo.x + (i + 1/2) w, lo.y + (j + 1/2) h); storage is row-major in i.
/// Cells within 1e-6 of J1, tangential or infinite are kInfiniteCount.
struct RegionCensus {
  Box box;
  int n = 0;
  std::vector<int> counts;

  Point center(int i, int j) const;
  int at(int i, int j) const { return counts[static_cast<std::size_t>(i * n + j)]; }
};

RegionCensus region_census(const QuadMap& map, const Box& box, int grid_n);
RegionCensus region_census(const QuadMap& map, const Box& box, int grid_n,
                           const CriticalReport& report);

struct FoldProbe {
  Point point;
  double epsilon = 0;
  int before = 0;  // count on the -normal side (or at a point image)
  int after = 0;   // count on the +normal side (or next to a point image)
};

/// Preimage counts on both sides of a J1 component at n_probes points.
/// Curves are probed along their normals at min(1e-4, d/4), d being the
/// distance to the nearest other component, and retried at 1/100 of that
/// when both sides agree. Parameters within 1e-3 of a cusp are shifted by
/// 2e-3. Point images
/// compare the count at the point with a count 1e-4 away.
std::vector<FoldProbe> fold_crossing_check(const QuadMap& map, const CriticalReport& report,
                                           const J1Component& component, int n_probes);

}  // namespace quadcrit
