#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadcrit/image.hpp"

namespace quadcrit {

namespace {

// Angle in [0, 2 pi); tiny negative inputs would otherwise round to 2 pi.
double wrap_angle(double t) {
  constexpr double two_pi = 2 * std::numbers::pi;
  t = std::fmod(t, two_pi);
  if (t < 0) t += two_pi;
  return t < two_pi ? t : 0.0;
}

}  // namespace

CurveJet curve_jet(const ConicBranch& branch, const RealQuadMap& map, double t) {
  const Point p = branch.point(t);
  const Point p1 = branch.derivative(t, 1);
  const Point p2 = branch.derivative(t, 2);
  const Point p3 = branch.derivative(t, 3);
  const Mat2<double> J = jacobian_matrix(map, p);
  CurveJet jet;
  jet.value = eval(map, p);
  jet.d1 = J * p1;
  jet.d2 = second_derivative(map, p1, p1) + J * p2;
  jet.d3 = 3.0 * second_derivative(map, p1, p2) + J * p3;
  return jet;
}

double RationalImage::to_branch(double u) const {
  if (shape != BranchShape::Ellipse) return u;
  return wrap_angle(2 * std::atan(u));
}

double RationalImage::from_branch(double t) const {
  return shape == BranchShape::Ellipse ? std::tan(t / 2) : t;
}

Point RationalImage::operator()(double u) const {
  const double ww = w(u) * w(u);
  return {nx(u) / ww, ny(u) / ww};
}

namespace {

// Standard curve as homogeneous polynomials (X, Y, W) in the parameter.
template <class T>
std::array<Polynomial<T>, 3> standard_polynomials(BranchShape shape) {
  using P = Polynomial<T>;
  switch (shape) {
    case BranchShape::Ellipse: return {P{T(1), T(0), T(-1)}, P{T(0), T(2)}, P{T(1), T(0), T(1)}};
    case BranchShape::Hyperbola: return {P{T(0), T(0), T(1)}, P{T(1)}, P{T(0), T(1)}};
    case BranchShape::Parabola: return {P{T(0), T(1)}, P{T(0), T(0), T(1)}, P{T(1)}};
    case BranchShape::Line: return {P{T(0), T(1)}, P{}, P{T(1)}};
  }
  return {};
}

// Numerators f(p) W^2 for both components, with p = frame(X/W, Y/W).
template <class T>
std::array<Polynomial<T>, 2> image_numerators(const std::array<Polynomial<T>, 3>& xyw,
                                              const BasicAffine<T>& frame,
                                              const BasicQuadMap<T>& map) {
  const auto& [X, Y, W] = xyw;
  const auto& L = frame.linear.m;
  const Polynomial<T> px = X * L[0][0] + Y * L[0][1] + W * frame.translation.x;
  const Polynomial<T> py = X * L[1][0] + Y * L[1][1] + W * frame.translation.y;
  auto component = [&](const std::array<T, 6>& c) {
    return px * px * c[0] + px * py * c[1] + py * py * c[2] + px * W * c[3] + py * W * c[4] +
           W * W * c[5];
  };
  return {component(map.a()), component(map.b())};
}

// Numerator of d/du (N / W^2), up to the factor W^-3.
template <class T>
Polynomial<T> derivative_numerator(const Polynomial<T>& N, const Polynomial<T>& W) {
  return N.derivative() * W - N * W.derivative() * T(2);
}

// Gauss-Newton on alpha'(t) = 0.
double polish_cusp(const ConicBranch& branch, const RealQuadMap& map, double t) {
  double best_t = t;
  double best = norm(curve_jet(branch, map, t).d1);
  for (int it = 0; it < 30 && best > 0; ++it) {
    const CurveJet jet = curve_jet(branch, map, best_t);
    const double dd = dot(jet.d2, jet.d2);
    if (dd == 0) break;
    const double next_t = best_t - dot(jet.d2, jet.d1) / dd;
    const double r = norm(curve_jet(branch, map, next_t).d1);
    if (!(r < best)) break;
    best = r;
    best_t = next_t;
  }
  return best_t;
}

bool in_domain(const ConicBranch& branch, double t) {
  if (!std::isfinite(t)) return false;
  if (branch.shape == BranchShape::Hyperbola) return branch.label > 0 ? t > 0 : t < 0;
  return true;
}

std::vector<Cusp> certify(const ConicBranch& branch, const RealQuadMap& map,
                          const std::vector<double>& candidates) {
  std::vector<Cusp> out;
  for (double t0 : candidates) {
    double t = polish_cusp(branch, map, t0);
    if (branch.shape == BranchShape::Ellipse) t = wrap_angle(t);
    if (!in_domain(branch, t)) continue;
    const CurveJet jet = curve_jet(branch, map, t);
    const double d2 = norm(jet.d2);
    if (!(norm(jet.d1) <= 1e-8 * d2 * std::max(1.0, std::abs(t)))) continue;
    if (!(std::abs(jet.gamma()) > 1e-12 * d2 * norm(jet.d3))) continue;
    bool duplicate = false;
    for (const auto& c : out) {
      double gap = std::abs(c.t - t);
      if (branch.shape == BranchShape::Ellipse) gap = std::min(gap, 2 * std::numbers::pi - gap);
      duplicate = duplicate || gap < 1e-9;
    }
    if (duplicate) continue;
    Cusp cusp;
    cusp.branch = branch.label;
    cusp.t = t;
    cusp.location = jet.value;
    cusp.tangent_direction = d2 > 0 ? Point{jet.d2.x / d2, jet.d2.y / d2} : Point{};
    cusp.nondegeneracy = jet.gamma();
    out.push_back(cusp);
  }
  std::sort(out.begin(), out.end(), [](const Cusp& a, const Cusp& b) { return a.t < b.t; });
  return out;
}

}  // namespace

RationalImage rational_image(const ConicBranch& branch, const RealQuadMap& map) {
  const auto xyw = standard_polynomials<double>(branch.shape);
  const auto [nx, ny] = image_numerators(xyw, branch.frame, map);
  RationalImage out;
  out.shape = branch.shape;
  out.nx = nx;
  out.ny = ny;
  out.w = xyw[2];
  return out;
}

std::vector<Cusp> find_cusps_generic(const ConicBranch& branch, const RealQuadMap& map) {
  const RationalImage img = rational_image(branch, map);
  const RealPolynomial px = derivative_numerator(img.nx, img.w);
  const RealPolynomial py = derivative_numerator(img.ny, img.w);
  // A fixed irrational weight keeps common roots while avoiding accidental
  // cancellation of the combination.
  const RealPolynomial combo = px + py * (std::numbers::sqrt2 - 1);
  std::vector<double> candidates;
  if (!combo.is_zero()) {
    for (double u : real_roots(combo)) candidates.push_back(img.to_branch(u));
  }
  if (branch.shape == BranchShape::Ellipse) candidates.push_back(std::numbers::pi);
  return certify(branch, map, candidates);
}

std::vector<Cusp> find_cusps_generic(const ConicBranch& branch, const QuadMap& map) {
  const RealQuadMap fmap = to_double(map);
  if (!branch.exact) return find_cusps_generic(branch, fmap);
  const ExactCurve& c = *branch.exact;
  for (const Surd* s : {&c.p0.x, &c.p0.y, &c.p1.x, &c.p1.y, &c.p2.x, &c.p2.y}) {
    if (!s->is_rational()) return find_cusps_generic(branch, fmap);
  }
  // alpha(t) = F(p0 + t p1 + t^2 p2) as exact polynomials in the branch
  // parameter; the exact curve and the branch share that parameter.
  using P = RationalPolynomial;
  const std::array<P, 3> xyw{P{c.p0.x.rational_part(), c.p1.x.rational_part(),
                               c.p2.x.rational_part()},
                             P{c.p0.y.rational_part(), c.p1.y.rational_part(),
                               c.p2.y.rational_part()},
                             P{Scalar(1)}};
  const auto [nx, ny] = image_numerators(xyw, ExactAffine::identity(), map);
  const P g = gcd(nx.derivative(), ny.derivative());
  std::vector<double> candidates;
  if (!g.is_zero()) candidates = real_roots(g);
  return certify(branch, fmap, candidates);
}

namespace {

ConicKind closed_form_kind(int case_number) {
  switch (case_number) {
    case 3: return ConicKind::RealEllipse;
    case 4: return ConicKind::Hyperbola;
    case 6: return ConicKind::Parabola;
    default:
      throw Error(ErrorKind::PreconditionViolated,
                  "closed-form cusps exist for cases 3, 4 and 6 only");
  }
}

[[noreturn]] void not_normalized() {
  throw Error(ErrorKind::PreconditionViolated,
              "map is not normalized: Jacobian conic differs from the standard form");
}

std::vector<double> closed_form_parameters(const CrossTable<double>& X, int case_number) {
  switch (case_number) {
    case 3: {
      const double phi = std::atan2(X(1, 4), -X(1, 3));
      std::vector<double> ts;
      for (int k = 0; k < 3; ++k) ts.push_back(wrap_angle((-phi + 2 * std::numbers::pi * k) / 3));
      std::sort(ts.begin(), ts.end());
      return ts;
    }
    case 4: return {std::cbrt(-1 / (2 * X(3, 0)))};
    default: return {X(1, 3) / 3};
  }
}

}  // namespace

std::vector<double> find_cusps_closed_form(const RealQuadMap& normalized, int case_number) {
  const ConicKind kind = closed_form_kind(case_number);
  const auto conic = jacobian_conic(normalized).coefficients();
  const auto standard = to_double(standard_conic(kind)).coefficients();
  // Rounding in the coefficients enters the conic quadratically.
  double scale = 1;
  for (std::size_t i = 0; i < 6; ++i) {
    scale = std::max({scale, std::abs(normalized.a()[i]), std::abs(normalized.b()[i])});
  }
  for (std::size_t i = 0; i < 6; ++i) {
    if (std::abs(conic[i] - standard[i]) > 1e-10 * scale * scale) not_normalized();
  }
  return closed_form_parameters(cross_table(normalized), case_number);
}

std::vector<double> find_cusps_closed_form(const BasicQuadMap<Surd>& normalized, int case_number) {
  const ConicKind kind = closed_form_kind(case_number);
  const auto conic = jacobian_conic(normalized).coefficients();
  const auto standard = standard_conic(kind).coefficients();
  for (std::size_t i = 0; i < 6; ++i) {
    if (!(conic[i] == Surd(standard[i]))) not_normalized();
  }
  const auto exact = cross_table(normalized);
  CrossTable<double> X;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) X.X[i][j] = to_double(exact.X[i][j]);
  }
  return closed_form_parameters(X, case_number);
}

double nondegeneracy_value(const RealQuadMap& normalized, int case_number, double t) {
  const auto X = cross_table(normalized);
  switch (case_number) {
    case 3: {
      const double phi = std::atan2(X(1, 4), -X(1, 3));
      return 2 * X(0, 1) * (7 + 2 * std::cos(3 * t + phi));
    }
    case 4: return -18 * t;
    case 6: return 12 * (X(0, 1) + X(4, 1));
    default:
      throw Error(ErrorKind::PreconditionViolated,
                  "closed-form nondegeneracy exists for cases 3, 4 and 6 only");
  }
}

}  // namespace quadcrit
