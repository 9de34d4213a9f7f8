#pragma once

#include <optional>

#include "quadcrit/conic.hpp"

namespace quadcrit {

/// Domain change h with conic(h^-1(q)) = multiplier * standard(q).
struct NormalizingTransform {
  ConicKind kind;
  AffineTransform h;
  std::optional<BasicAffine<Surd>> exact_h;
  double multiplier = 1;
  std::optional<Surd> exact_multiplier;
};

/// Throws Error(NotNormalizable) for Empty, SinglePoint, WholePlane and the
/// imaginary classes.
NormalizingTransform normalizing_transform(const ConicClass& cls);

/// G = k o F o h^-1 whose Jacobian conic is the standard form of the class.
/// k scales the first range coordinate by 1 / (multiplier * det(h^-1)).
struct NormalizedMap {
  ConicClass j0;
  RealQuadMap map;
  /// Present when h is exact (parabola and line classes).
  std::optional<BasicQuadMap<Surd>> exact_map;
  AffineTransform h;
  AffineTransform h_inverse;
  AffineTransform k;
  AffineTransform k_inverse;
  double multiplier = 1;
};

NormalizedMap normalized_map(const QuadMap& map);
NormalizedMap normalized_map(const QuadMap& map, const ConicClass& j0);

/// Applies an affine transform to a point (e.g. h^-1 or k^-1 to carry
/// normalized results back to original coordinates).
Point transport_point(const AffineTransform& transform, const Point& p);

}  // namespace quadcrit
