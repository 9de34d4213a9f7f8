#include "quadcrit/preimage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace quadcrit {

namespace {

template <class T>
using Quadric = std::array<T, 6>;

template <class T>
bool has_quadratic(const Quadric<T>& q) {
  return !is_zero(q[0]) || !is_zero(q[1]) || !is_zero(q[2]);
}

template <class T>
bool is_zero_quadric(const Quadric<T>& q) {
  return std::all_of(q.begin(), q.end(), [](const T& v) { return is_zero(v); });
}

// f = coefficient[2] Y^2 + coefficient[1] Y + coefficient[0] after the
// shear x = X - s Y.
template <class T>
std::array<Polynomial<T>, 3> y_coefficients(const Quadric<T>& f, const T& s) {
  BasicAffine<T> shear = BasicAffine<T>::identity();
  shear.linear.m[0][1] = T(-s);
  const Quadric<T> c = pullback_component(f, shear);
  return {Polynomial<T>{c[5], c[3], c[0]}, Polynomial<T>{c[4], c[1]}, Polynomial<T>{c[2]}};
}

template <class T>
struct Eliminated {
  Polynomial<T> resultant;
  // Y = -r0(X) / r1(X) at every root X of the resultant.
  Polynomial<T> r1, r0;
  T shear;
};

// Resultant in Y once the leading Y coefficients of both equations are
// nonzero constants; nullopt when this shear does not achieve that.
template <class T>
std::optional<Eliminated<T>> eliminate(const Quadric<T>& f, const Quadric<T>& g, const T& s) {
  const auto p = y_coefficients(f, s);
  const auto q = y_coefficients(g, s);
  const bool f2 = has_quadratic(f), g2 = has_quadratic(g);
  const bool f_ok = f2 ? !p[2].is_zero() : (p[1].degree() == 0);
  const bool g_ok = g2 ? !q[2].is_zero() : (q[1].degree() == 0);
  if (!f_ok || !g_ok) return std::nullopt;
  Eliminated<T> e{{}, {}, {}, s};
  if (f2 && g2) {
    const auto a = p[2] * q[0] - p[0] * q[2];
    e.resultant = a * a - (p[2] * q[1] - p[1] * q[2]) * (p[1] * q[0] - p[0] * q[1]);
    e.r1 = q[2] * p[1] - p[2] * q[1];
    e.r0 = q[2] * p[0] - p[2] * q[0];
  } else if (f2) {
    e.resultant = p[2] * q[0] * q[0] - p[1] * q[0] * q[1] + p[0] * q[1] * q[1];
    e.r1 = q[1];
    e.r0 = q[0];
  } else if (g2) {
    e.resultant = q[2] * p[0] * p[0] - q[1] * p[0] * p[1] + q[0] * p[1] * p[1];
    e.r1 = p[1];
    e.r0 = p[0];
  } else {
    e.resultant = p[1] * q[0] - p[0] * q[1];
    e.r1 = p[1];
    e.r0 = p[0];
  }
  return e;
}

std::vector<Scalar> shear_candidates() {
  std::vector<Scalar> out{Scalar(0)};
  for (int k = 1; k <= 12; ++k) {
    out.emplace_back(k);
    out.emplace_back(-k);
    out.emplace_back(1, k + 1);
    out.emplace_back(-1, k + 1);
  }
  return out;
}

Point newton_polish(const RealQuadMap& map, const Point& target, Point p) {
  double best = norm(eval(map, p) - target);
  for (int it = 0; it < 30 && best > 0; ++it) {
    const Mat2<double> J = jacobian_matrix(map, p);
    const double det = J.det();
    if (det == 0 || !std::isfinite(det)) break;
    const Point r = target - eval(map, p);
    const Point step{(J.m[1][1] * r.x - J.m[0][1] * r.y) / det,
                     (-J.m[1][0] * r.x + J.m[0][0] * r.y) / det};
    const Point next = p + step;
    const double res = norm(eval(map, next) - target);
    if (!(res < best)) break;
    best = res;
    p = next;
  }
  return p;
}

// Residual tolerance grows with |p|^2, the scale of the map's values.
bool accept_point(const RealQuadMap& map, const Point& target, const Point& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  const double scale = std::max({1.0, dot(p, p), norm(target)});
  return norm(eval(map, p) - target) <= 1e-8 * scale;
}

// Solution set of the single equation q = 0 (the other one vanishing).
PreimageResult single_equation(const Quadric<Scalar>& q) {
  PreimageResult out;
  out.exact = true;
  const ConicClass cls = classify_conic({q[0], q[1], q[2], q[3], q[4], q[5]});
  if (cls.is_curve() || cls.kind == ConicKind::WholePlane) {
    out.infinite = true;
  } else if (cls.kind == ConicKind::SinglePoint) {
    out.count = 1;
    out.points.push_back(to_double(std::get<PointPayload>(cls.payload).center));
    out.tangential.push_back(true);
    out.has_tangential = true;
  }
  return out;
}

std::optional<Scalar> proportionality(const Quadric<Scalar>& f, const Quadric<Scalar>& g) {
  std::size_t i = 0;
  while (is_zero(g[i])) ++i;
  const Scalar lambda = f[i] / g[i];
  for (std::size_t j = 0; j < 6; ++j) {
    if (f[j] != lambda * g[j]) return std::nullopt;
  }
  return lambda;
}

// True when g vanishes identically on a real line factor of f.
bool shares_line(const Quadric<Scalar>& f, const Quadric<Scalar>& g) {
  const ConicClass cls = classify_conic({f[0], f[1], f[2], f[3], f[4], f[5]});
  if (!std::holds_alternative<LinesPayload>(cls.payload)) return false;
  Quadric<Surd> gs;
  for (std::size_t i = 0; i < 6; ++i) gs[i] = Surd(g[i]);
  for (const auto& line : std::get<LinesPayload>(cls.payload).lines) {
    const Vec2<Surd> p0 = line.base_point();
    const Vec2<Surd> d = line.direction();
    const Surd c0 = eval_component(gs, p0);
    const Surd c1 = Surd(Surd(2) * gs[0] * p0.x + gs[1] * p0.y + gs[3]) * d.x +
                    Surd(gs[1] * p0.x + Surd(2) * gs[2] * p0.y + gs[4]) * d.y;
    const Surd c2 = gs[0] * d.x * d.x + gs[1] * d.x * d.y + gs[2] * d.y * d.y;
    if (is_zero(c0) && is_zero(c1) && is_zero(c2)) return true;
  }
  return false;
}

}  // namespace

PreimageResult preimages(const QuadMap& map, const ExactPoint& target,
                         const PreimageOptions& options) {
  Quadric<Scalar> f = map.a(), g = map.b();
  f[5] -= target.x;
  g[5] -= target.y;

  const bool fz = is_zero_quadric(f), gz = is_zero_quadric(g);
  if (fz && gz) return {true, 0, {}, {}, false, true};
  auto constant_only = [](const Quadric<Scalar>& q) {
    return !is_zero(q[5]) &&
           std::all_of(q.begin(), q.end() - 1, [](const Scalar& v) { return is_zero(v); });
  };
  if (constant_only(f) || constant_only(g)) return {false, 0, {}, {}, false, true};
  if (fz) return single_equation(g);
  if (gz) return single_equation(f);
  if (proportionality(f, g)) return single_equation(g);
  if (shares_line(f, g)) return {true, 0, {}, {}, false, true};

  const RealQuadMap fmap = to_double(map);
  const Point ftarget = to_double(target);
  for (const Scalar& s : shear_candidates()) {
    const auto e = eliminate(f, g, s);
    if (!e) continue;
    const RationalPolynomial& R = e->resultant;
    if (R.is_zero()) {
      throw Error(ErrorKind::DegenerateSystemUnresolved,
                  "resultant vanishes without a detected common component");
    }
    PreimageResult out;
    out.exact = true;
    if (R.degree() == 0) return out;
    // Generic position: r1 must not vanish at a real root of R.
    const RationalPolynomial sf = squarefree_part(R);
    if (e->r1.degree() != 0) {
      const RationalPolynomial common = gcd(sf, e->r1);
      if (common.degree() >= 1 && count_real_roots(common) > 0) continue;
    }
    out.count = count_real_roots(R);
    const RationalPolynomial multiple = gcd(R, R.derivative());
    out.has_tangential = multiple.degree() >= 1 && count_real_roots(multiple) > 0;
    if (!options.compute_points) return out;

    const RealPolynomial r1 = to_double(e->r1), r0 = to_double(e->r0);
    const double shear = e->shear.get_d();
    for (const RootInterval& iv : isolate_real_roots(R)) {
      bool tangential = false;
      if (multiple.degree() >= 1) {
        tangential = iv.exact ? is_zero(multiple(*iv.exact))
                              : count_real_roots(multiple, iv.lower, iv.upper) > 0;
      }
      const double X = refine_root(sf, iv);
      const double Y = -r0(X) / r1(X);
      Point p{X - shear * Y, Y};
      p = newton_polish(fmap, ftarget, p);
      out.points.push_back(p);
      out.tangential.push_back(tangential);
    }
    return out;
  }
  throw Error(ErrorKind::DegenerateSystemUnresolved, "no shear puts the system in generic position");
}

PreimageResult preimages(const QuadMap& map, const Point& target, const PreimageOptions& options) {
  return preimages(map, ExactPoint{exact_from_double(target.x), exact_from_double(target.y)},
                   options);
}

PreimageResult preimages_numeric(const QuadMap& map, const Point& target) {
  const RealQuadMap fmap = to_double(map);
  Quadric<double> f = fmap.a(), g = fmap.b();
  f[5] -= target.x;
  g[5] -= target.y;
  PreimageResult out;
  for (double s : {0.5772156649015329, -1.3247179572447460, 2.718281828459045}) {
    const auto e = eliminate(f, g, s);
    if (!e || e->resultant.degree() <= 0) continue;
    for (double X : real_roots(e->resultant)) {
      const double den = e->r1(X);
      if (den == 0) continue;
      const double Y = -e->r0(X) / den;
      const Point p = newton_polish(fmap, target, {X - s * Y, Y});
      if (!accept_point(fmap, target, p)) continue;
      const bool duplicate = std::any_of(out.points.begin(), out.points.end(),
                                         [&](const Point& q) { return norm(q - p) < 1e-7; });
      if (duplicate) continue;
      out.points.push_back(p);
      out.tangential.push_back(false);
    }
    out.count = static_cast<int>(out.points.size());
    return out;
  }
  return out;
}

// --- regions --------------------------------------------------------------------

Point RegionCensus::center(int i, int j) const {
  return {box.lo.x + (i + 0.5) * (box.hi.x - box.lo.x) / n,
          box.lo.y + (j + 0.5) * (box.hi.y - box.lo.y) / n};
}

RegionCensus region_census(const QuadMap& map, const Box& box, int grid_n) {
  return region_census(map, box, grid_n, classify_critical(map));
}

RegionCensus region_census(const QuadMap& map, const Box& box, int grid_n,
                           const CriticalReport& report) {
  if (grid_n < 2) throw Error(ErrorKind::PreconditionViolated, "grid must be at least 2x2");
  if (!(box.hi.x > box.lo.x) || !(box.hi.y > box.lo.y)) {
    throw Error(ErrorKind::PreconditionViolated, "bounding box is degenerate");
  }
  const RealQuadMap fmap = to_double(map);
  RegionCensus out{box, grid_n, {}};
  out.counts.reserve(static_cast<std::size_t>(grid_n * grid_n));
  const Scalar lx = exact_from_double(box.lo.x), ly = exact_from_double(box.lo.y);
  const Scalar wx = (exact_from_double(box.hi.x) - lx) / (2 * grid_n);
  const Scalar wy = (exact_from_double(box.hi.y) - ly) / (2 * grid_n);
  const PreimageOptions count_only{false};
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const ExactPoint c{Scalar(lx + (2 * i + 1) * wx), Scalar(ly + (2 * j + 1) * wy)};
      const Point fc = to_double(c);
      bool flagged = false;
      for (const auto& comp : report.j1) {
        if (distance_to_component(report, fmap, comp, fc) < 1e-6) flagged = true;
      }
      if (flagged) {
        out.counts.push_back(kInfiniteCount);
        continue;
      }
      const PreimageResult r = preimages(map, c, count_only);
      out.counts.push_back(r.infinite || r.has_tangential ? kInfiniteCount : r.count);
    }
  }
  return out;
}

// --- fold probes ----------------------------------------------------------------

namespace {

int count_at(const QuadMap& map, const Point& p) {
  const PreimageResult r = preimages(map, p, PreimageOptions{false});
  return r.infinite ? kInfiniteCount : r.count;
}

Point unit_normal(const Point& tangent) {
  const double n = norm(tangent);
  return {-tangent.y / n, tangent.x / n};
}

// Step sizes stay below a quarter of the distance to every other component,
// so a probe crosses only the curve it samples.
FoldProbe probe_across(const QuadMap& map, const CriticalReport& report, const RealQuadMap& fmap,
                       const J1Component& comp, const Point& p, const Point& normal) {
  double clearance = INFINITY;
  for (const auto& other : report.j1) {
    if (&other != &comp) clearance = std::min(clearance, distance_to_component(report, fmap, other, p));
  }
  const double first = std::min(1e-4, clearance / 4);
  FoldProbe out{p, first, 0, 0};
  for (double eps : {first, first / 100}) {
    out.epsilon = eps;
    out.before = count_at(map, p - eps * normal);
    out.after = count_at(map, p + eps * normal);
    if (out.before != out.after) break;
  }
  return out;
}

}  // namespace

std::vector<FoldProbe> fold_crossing_check(const QuadMap& map, const CriticalReport& report,
                                           const J1Component& comp, int n_probes) {
  std::vector<FoldProbe> out;
  const RealQuadMap fmap = to_double(map);
  auto fraction = [&](int k) { return (k + 0.5) / n_probes; };
  if (comp.kind == J1Kind::PointImage) {
    int at_point;
    if (comp.exact_point && comp.exact_point->x.is_rational() && comp.exact_point->y.is_rational()) {
      const ExactPoint exact{comp.exact_point->x.rational_part(), comp.exact_point->y.rational_part()};
      const PreimageResult r = preimages(map, exact, PreimageOptions{false});
      at_point = r.infinite ? kInfiniteCount : r.count;
    } else {
      at_point = count_at(map, comp.point);
    }
    for (int k = 0; k < n_probes; ++k) {
      const double angle = 2 * std::numbers::pi * fraction(k);
      const Point q = comp.point + 1e-4 * Point{std::cos(angle), std::sin(angle)};
      out.push_back({q, 1e-4, at_point, count_at(map, q)});
    }
    return out;
  }
  if (comp.source_branch) {
    const ConicBranch& b = report.j0_branches[static_cast<std::size_t>(*comp.source_branch)];
    for (int k = 0; k < n_probes; ++k) {
      double t;
      switch (b.shape) {
        case BranchShape::Ellipse: t = 2 * std::numbers::pi * fraction(k); break;
        case BranchShape::Hyperbola: t = b.label * std::exp(-2 + 4 * fraction(k)); break;
        default: t = -2 + 4 * fraction(k); break;
      }
      for (const auto& c : comp.cusps) {
        if (std::abs(c.t - t) < 1e-3) t += 2e-3;
      }
      const CurveJet jet = curve_jet(b, fmap, t);
      out.push_back(probe_across(map, report, fmap, comp, jet.value, unit_normal(jet.d1)));
    }
    return out;
  }
  for (int k = 0; k < n_probes; ++k) {
    Point p, tangent;
    if (comp.kind == J1Kind::RayImage) {
      const double s = 4 * fraction(k);
      p = comp.point + s * comp.direction;
      tangent = comp.direction;
    } else if (comp.kind == J1Kind::LineImage) {
      const double s = -2 + 4 * fraction(k);
      p = comp.point + s * comp.direction;
      tangent = comp.direction;
    } else if (comp.curve) {
      const double s = -2 + 4 * fraction(k);
      const Point p0 = to_double(comp.curve->p0), p1 = to_double(comp.curve->p1),
                  p2 = to_double(comp.curve->p2);
      p = p0 + s * p1 + (s * s) * p2;
      tangent = p1 + (2 * s) * p2;
    } else {
      break;
    }
    out.push_back(probe_across(map, report, fmap, comp, p, unit_normal(tangent)));
  }
  return out;
}

}  // namespace quadcrit
