#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadcrit/conic.hpp"
#include "quadcrit/normalize.hpp"
#include "quadcrit/polynomial.hpp"

namespace quadcrit {

enum class J1Kind {
  PointImage,
  LineImage,
  RayImage,
  ParabolaImage,
  SmoothClosedCurve,
  SmoothArc,
  CuspedCurve,
};

const char* j1_kind_name(J1Kind kind);

// --- images of quadratic curves ----------------------------------------------

/// Shape of t -> (alpha t^2 + beta t, gamma t^2 + delta t).
///   PointImage:    all four coefficients zero
///   LineImage:     alpha = gamma = 0; direction (beta, delta)
///   RayImage:      Gamma = alpha delta - beta gamma = 0; vertex at the
///                  minimizing t, direction (alpha, gamma) into the ray
///   ParabolaImage: Gamma != 0; vertex where the velocity is orthogonal to
///                  the axis (alpha, gamma), which points into the parabola
template <class T>
struct QuadraticImage {
  J1Kind kind = J1Kind::PointImage;
  Vec2<T> vertex{};     // relative to the image of t = 0
  Vec2<T> direction{};  // zero for PointImage
  T vertex_t{0};        // curve parameter at the vertex (ray, parabola)
};

template <class T>
QuadraticImage<T> classify_quadratic_parametrization(const T& alpha, const T& beta, const T& gamma,
                                                     const T& delta) {
  QuadraticImage<T> out;
  const bool quad_zero = is_zero(alpha) && is_zero(gamma);
  if (quad_zero) {
    out.kind = (is_zero(beta) && is_zero(delta)) ? J1Kind::PointImage : J1Kind::LineImage;
    if (out.kind == J1Kind::LineImage) out.direction = {beta, delta};
    return out;
  }
  const T Gamma = T(alpha * delta - beta * gamma);
  out.direction = {alpha, gamma};
  if (is_zero(Gamma)) {
    out.kind = J1Kind::RayImage;
    // (beta, delta) = mu (alpha, gamma): image is (t^2 + mu t)(alpha, gamma).
    const T mu = is_zero(alpha) ? T(delta / gamma) : T(beta / alpha);
    out.vertex_t = T(-mu / T(2));
    const T s = T(-(mu * mu) / T(4));
    out.vertex = {T(s * alpha), T(s * gamma)};
    return out;
  }
  out.kind = J1Kind::ParabolaImage;
  out.vertex_t = T(-(alpha * beta + gamma * delta) / (T(2) * (alpha * alpha + gamma * gamma)));
  const T& t = out.vertex_t;
  out.vertex = {T(alpha * t * t + beta * t), T(gamma * t * t + delta * t)};
  return out;
}

// --- report types ------------------------------------------------------------

struct Cusp {
  int branch = 0;  // index into CriticalReport::j0_branches
  double t = 0;
  Point location;
  Point tangent_direction;
  double nondegeneracy = 0;  // gamma(t) in normalized coordinates
};

/// Geometric payload of a component. For curves traced from a J0 branch
/// `source_branch` is set; quadratic images additionally carry `curve`,
/// the exact image parametrization P0 + s P1 + s^2 P2.
struct J1Component {
  J1Kind kind = J1Kind::PointImage;
  std::optional<int> source_branch;
  std::optional<ExactCurve> curve;
  Point point;      // point / vertex / a point on the line
  Point direction;  // unit; zero for points and cusped curves
  double focal_length = 0;
  std::optional<Vec2<Surd>> exact_point;
  std::optional<Vec2<Surd>> exact_direction;
  std::vector<Cusp> cusps;
};

struct CriticalReport {
  ConicClass j0;
  std::vector<ConicBranch> j0_branches;
  std::vector<J1Component> j1;
  int case_number = 0;
  char sub_case = 0;  // 'a'..'c' or 0
  /// (J0 branch index, J1 component index) for every traced branch.
  std::vector<std::pair<int, int>> branch_map;
  CrossTable<Scalar> table;
  std::optional<double> phi;  // ellipse case
  std::optional<double> T;    // hyperbola and parabola cases
  /// Sign of X13 in normalized coordinates (distinct parallel lines).
  std::optional<int> x13_sign;
  /// X03 * X24 in normalized coordinates (intersecting lines), exact.
  std::optional<Surd> x03_x24;
  /// Cusp parameters from the normalization-free finder, sorted.
  std::vector<double> generic_cusp_parameters;
  std::optional<NormalizedMap> normalized;
  std::vector<std::string> warnings;

  std::string case_label() const;
};

CriticalReport classify_critical(const QuadMap& map);

/// J1 of a map whose Jacobian determinant vanishes identically.
/// Throws Error(PreconditionViolated) otherwise.
J1Component whole_plane_image(const QuadMap& map);

// --- cusps --------------------------------------------------------------------

/// Parameters of the cusps from the closed forms on a normalized map:
///   ellipse (3):   t_k = (-phi + 2 pi k) / 3, phi = atan2(X14, -X13)
///   hyperbola (4): T = cbrt(-1 / (2 X30)) on (t, 1/t)
///   parabola (6):  T = X13 / 3 on (t, t^2)
/// Throws Error(PreconditionViolated) when the Jacobian conic of `normalized`
/// is not the standard form of the case within 1e-10 * s^2, s being the
/// largest coefficient magnitude (at least 1).
std::vector<double> find_cusps_closed_form(const RealQuadMap& normalized, int case_number);
/// Same, for an exactly normalized map; the standard form is checked exactly.
std::vector<double> find_cusps_closed_form(const BasicQuadMap<Surd>& normalized, int case_number);

/// Closed-form nondegeneracy quantity at a cusp parameter:
///   3: 2 X01 (7 + 2 cos(3t + phi)),  4: -18 T,  6: 12 (X01 + X41).
double nondegeneracy_value(const RealQuadMap& normalized, int case_number, double t);

/// Derivatives of alpha = map o branch at t.
struct CurveJet {
  Point value, d1, d2, d3;
  /// alpha1'' alpha2''' - alpha1''' alpha2''
  double gamma() const { return d2.x * d3.y - d3.x * d2.y; }
};

CurveJet curve_jet(const ConicBranch& branch, const RealQuadMap& map, double t);

/// Certified zeros of alpha' on the branch, sorted by t. Rational and
/// hyperbolic branches reduce to polynomial roots; the ellipse uses the
/// half-angle substitution plus a direct check at t = pi. A root is kept
/// when the Newton distance |alpha'| / |alpha''| is at most 1e-8 max(1, |t|)
/// and |gamma| > 1e-12 |alpha''| |alpha'''| (well above rounding in gamma);
/// both tests are invariant under rescaling the map.
std::vector<Cusp> find_cusps_generic(const ConicBranch& branch, const RealQuadMap& map);
/// Exact variant: exactly parametrized branches with rational coordinates
/// solve gcd(alpha1', alpha2') over Q; other branches fall back to floats.
std::vector<Cusp> find_cusps_generic(const ConicBranch& branch, const QuadMap& map);

/// Image of a branch as alpha(u) = (nx(u), ny(u)) / w(u)^2 with the branch
/// parameter t = to_branch(u) (ellipse: t = 2 atan u).
struct RationalImage {
  BranchShape shape = BranchShape::Line;
  RealPolynomial nx, ny, w;

  double to_branch(double u) const;
  double from_branch(double t) const;
  Point operator()(double u) const;
};

RationalImage rational_image(const ConicBranch& branch, const RealQuadMap& map);

// --- geometry helpers ---------------------------------------------------------

/// Euclidean distance from q to a J1 component.
double distance_to_component(const CriticalReport& report, const RealQuadMap& map,
                             const J1Component& component, const Point& q);

struct CurveSample {
  double t = 0;
  Point p;
};

/// n samples of a component along its parametrization (one for a point;
/// closed curves over [0, 2 pi)). Unbounded pieces use a parameter window
/// whose ends leave the disk circumscribing the box [lo, hi].
std::vector<CurveSample> sample_component(const CriticalReport& report, const RealQuadMap& map,
                                          const J1Component& component, int n, const Point& lo,
                                          const Point& hi);

/// n samples of a J0 branch, unbounded branches clipped as above.
std::vector<CurveSample> sample_branch(const ConicBranch& branch, int n, const Point& lo,
                                       const Point& hi);

}  // namespace quadcrit
