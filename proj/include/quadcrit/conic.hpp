#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "quadcrit/core.hpp"
#include "quadcrit/jacobian.hpp"

namespace quadcrit {

enum class ConicKind {
  Empty,
  SinglePoint,
  RealEllipse,
  ImaginaryEllipse,
  Hyperbola,
  Parabola,
  IntersectingLines,
  DistinctParallelLines,
  CoincidentLines,
  ImaginaryParallelLines,
  SingleLine,
  WholePlane,
};

const char* conic_kind_name(ConicKind kind);

/// Line {p : normal . p = offset} with coordinates in Q(sqrt(r)).
struct ExactLine {
  Vec2<Surd> normal;
  Surd offset;

  Vec2<Surd> direction() const { return {-normal.y, normal.x}; }
  /// Foot of the perpendicular from the origin.
  Vec2<Surd> base_point() const;
  Point unit_normal() const;
  /// Offset along the unit normal.
  double unit_offset() const;
};

struct PointPayload {
  ExactPoint center;
};

/// Real ellipse: center + R(angle) diag(semi_u, semi_v) (cos t, sin t).
/// `level` is the constant c with conic(center + q) = quadratic(q) - c.
struct EllipsePayload {
  ExactPoint center;
  double semi_u = 0;
  double semi_v = 0;
  double angle = 0;  // in (-pi/4, pi/4]
  Scalar level;
};

/// Hyperbola with transverse semi-axis along (cos angle, sin angle).
struct HyperbolaPayload {
  ExactPoint center;
  double transverse = 0;
  double conjugate = 0;
  double angle = 0;
  Scalar level;
};

/// Parabola traced exactly by p(t) = p0 + t p1 + t^2 p2.
struct ParabolaPayload {
  ExactPoint vertex;
  Vec2<Scalar> opening;  // axis direction toward the inside, unnormalized
  double focal_length = 0;
  ExactPoint p0, p1, p2;
  Scalar multiplier;  // conic(p0 + q1 p1 + q2 p2) = multiplier (q1^2 - q2)
};

/// Real line factors. For intersecting lines `center` is the crossing point.
struct LinesPayload {
  std::vector<ExactLine> lines;
  std::optional<ExactPoint> center;
};

using ConicPayload = std::variant<std::monostate, PointPayload, EllipsePayload, HyperbolaPayload,
                                  ParabolaPayload, LinesPayload>;

struct ConicClass {
  ConicKind kind = ConicKind::WholePlane;
  ConicSection<Scalar> conic;
  ConicPayload payload;

  /// True for the one-dimensional real zero sets.
  bool is_curve() const;
};

/// Exact classification of a conic by sign tests on its coefficients,
/// discriminant and 3x3 determinant.
ConicClass classify_conic(const ConicSection<Scalar>& conic);

/// Line factors of a degenerate conic whose zero set is one or two lines.
/// Throws Error(NotDegenerate) for every other class.
std::vector<ExactLine> line_factors(const ConicSection<Scalar>& conic);

/// Affine frame carrying the standard form of a conic class onto the conic:
///   conic(frame(q)) = multiplier * standard(q)
/// with standard(q) one of x^2+y^2-1, xy-1, x^2-y, xy, x^2-1, x^2, x.
/// `exact` is present whenever no square roots beyond the line-factor
/// radicand are involved (parabola and line classes).
struct StandardFrame {
  ConicKind kind;
  AffineTransform frame;
  std::optional<BasicAffine<Surd>> exact;
  double multiplier = 1;
  std::optional<Surd> exact_multiplier;
};

/// Throws Error(NotNormalizable) for Empty, SinglePoint, WholePlane and the
/// imaginary classes.
StandardFrame standard_frame(const ConicClass& cls);

/// Value of the standard polynomial of a class at q.
double standard_polynomial(ConicKind kind, const Point& q);
ConicSection<Scalar> standard_conic(ConicKind kind);

enum class BranchShape { Ellipse, Hyperbola, Parabola, Line };

const char* branch_shape_name(BranchShape shape);

/// Exactly parametrized quadratic curve p0 + t p1 + t^2 p2.
struct ExactCurve {
  Vec2<Surd> p0, p1, p2;
};

/// One smooth piece of a conic, p(t) = frame(standard(t)) where standard(t)
/// is (cos t, sin t), (t, 1/t), (t, t^2) or (t, 0).
struct ConicBranch {
  BranchShape shape = BranchShape::Line;
  int label = 0;  // +1/-1 for hyperbola branches, line index for lines
  AffineTransform frame;
  double t_min = 0;
  double t_max = 0;
  std::optional<ExactCurve> exact;

  Point standard_point(double t) const;
  /// d^order/dt^order of the standard curve, order in 0..3.
  Point standard_derivative(double t, int order) const;
  Point point(double t) const { return frame(standard_point(t)); }
  Point derivative(double t, int order) const;
};

/// Smooth parametrizations covering the zero set of a one-dimensional
/// class. Throws Error(NotACurve) otherwise.
std::vector<ConicBranch> parametrize_conic(const ConicClass& cls);

}  // namespace quadcrit
