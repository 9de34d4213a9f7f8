#include "quadcrit/conic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace quadcrit {

const char* conic_kind_name(ConicKind kind) {
  switch (kind) {
    case ConicKind::Empty: return "Empty";
    case ConicKind::SinglePoint: return "SinglePoint";
    case ConicKind::RealEllipse: return "RealEllipse";
    case ConicKind::ImaginaryEllipse: return "ImaginaryEllipse";
    case ConicKind::Hyperbola: return "Hyperbola";
    case ConicKind::Parabola: return "Parabola";
    case ConicKind::IntersectingLines: return "IntersectingLines";
    case ConicKind::DistinctParallelLines: return "DistinctParallelLines";
    case ConicKind::CoincidentLines: return "CoincidentLines";
    case ConicKind::ImaginaryParallelLines: return "ImaginaryParallelLines";
    case ConicKind::SingleLine: return "SingleLine";
    case ConicKind::WholePlane: return "WholePlane";
  }
  return "?";
}

const char* branch_shape_name(BranchShape shape) {
  switch (shape) {
    case BranchShape::Ellipse: return "ellipse";
    case BranchShape::Hyperbola: return "hyperbola";
    case BranchShape::Parabola: return "parabola";
    case BranchShape::Line: return "line";
  }
  return "?";
}

Vec2<Surd> ExactLine::base_point() const {
  const Surd nn = dot(normal, normal);
  return Surd(offset / nn) * normal;
}

Point ExactLine::unit_normal() const {
  const Point n = to_double(normal);
  const double len = norm(n);
  return {n.x / len, n.y / len};
}

double ExactLine::unit_offset() const { return offset.to_double() / norm(to_double(normal)); }

bool ConicClass::is_curve() const {
  switch (kind) {
    case ConicKind::RealEllipse:
    case ConicKind::Hyperbola:
    case ConicKind::Parabola:
    case ConicKind::IntersectingLines:
    case ConicKind::DistinctParallelLines:
    case ConicKind::CoincidentLines:
    case ConicKind::SingleLine:
      return true;
    default:
      return false;
  }
}

namespace {

Vec2<Surd> to_surd(const ExactPoint& p) { return {Surd(p.x), Surd(p.y)}; }

ExactPoint conic_center(const ConicSection<Scalar>& c) {
  const Scalar det = 4 * c.A * c.C - c.B * c.B;
  return {Scalar((c.B * c.E - 2 * c.C * c.D) / det), Scalar((c.B * c.D - 2 * c.A * c.E) / det)};
}

// Principal data of the quadratic part: angle of the larger eigenvalue's
// eigenvector (in (-pi/2, pi/2]) and both eigenvalues.
struct Principal {
  double angle;
  double lambda_major;
  double lambda_minor;
};

Principal principal_axes(const ConicSection<Scalar>& c) {
  const double a = c.A.get_d(), b = c.B.get_d(), cc = c.C.get_d();
  const double mean = 0.5 * (a + cc);
  const double radius = 0.5 * std::hypot(a - cc, b);
  return {0.5 * std::atan2(b, a - cc), mean + radius, mean - radius};
}

EllipsePayload ellipse_payload(const ConicSection<Scalar>& c, const ExactPoint& center,
                               const Scalar& level) {
  Principal pr = principal_axes(c);
  double angle = pr.angle;
  double lu = pr.lambda_major, lv = pr.lambda_minor;
  constexpr double quarter = std::numbers::pi / 4;
  if (angle > quarter) {
    angle -= std::numbers::pi / 2;
    std::swap(lu, lv);
  } else if (angle <= -quarter) {
    angle += std::numbers::pi / 2;
    std::swap(lu, lv);
  }
  const double lev = level.get_d();
  return {center, std::sqrt(lev / lu), std::sqrt(lev / lv), angle, level};
}

HyperbolaPayload hyperbola_payload(const ConicSection<Scalar>& c, const ExactPoint& center,
                                   const Scalar& level) {
  const Principal pr = principal_axes(c);
  const double lev = level.get_d();
  if (lev / pr.lambda_major > 0) {
    return {center, std::sqrt(lev / pr.lambda_major), std::sqrt(-lev / pr.lambda_minor), pr.angle,
            level};
  }
  return {center, std::sqrt(lev / pr.lambda_minor), std::sqrt(-lev / pr.lambda_major),
          pr.angle + std::numbers::pi / 2, level};
}

// Quadratic part kappa (m . p)^2 of a conic with disc = 0 and (A, C) != 0.
struct SquareForm {
  Vec2<Scalar> m;
  Scalar kappa;
  Scalar mu;  // linear part along m when L is parallel to m
};

SquareForm square_form(const ConicSection<Scalar>& c) {
  if (!is_zero(c.A)) return {{Scalar(1), Scalar(c.B / (2 * c.A))}, c.A, c.D};
  return {{Scalar(0), Scalar(1)}, c.C, c.E};
}

ParabolaPayload parabola_payload(const ConicSection<Scalar>& c) {
  const SquareForm sf = square_form(c);
  const Vec2<Scalar> n{Scalar(-sf.m.y), sf.m.x};
  const Vec2<Scalar> L{c.D, c.E};
  const Scalar ln = dot(L, n);
  const Scalar lm = dot(L, sf.m);
  const Scalar mm = dot(sf.m, sf.m);
  ParabolaPayload out;
  out.p0 = Scalar(-c.F / ln) * n;
  out.p1 = Scalar(1 / mm) * sf.m - Scalar(lm / (ln * mm)) * n;
  out.p2 = Scalar(-sf.kappa / ln) * n;
  out.multiplier = sf.kappa;
  out.opening = out.p2;
  const Scalar tv = -dot(out.p1, n) / (2 * dot(out.p2, n));
  out.vertex = out.p0 + tv * out.p1 + Scalar(tv * tv) * out.p2;
  const Point tangent = to_double(out.p1 + Scalar(2 * tv) * out.p2);
  const double tt = tangent.x * tangent.x + tangent.y * tangent.y;
  out.focal_length = tt / (4 * norm(to_double(out.p2)));
  return out;
}

LinesPayload intersecting_payload(const ConicSection<Scalar>& c, const ExactPoint& center) {
  LinesPayload out;
  out.center = center;
  std::vector<Vec2<Surd>> normals;
  if (!is_zero(c.A)) {
    const Surd root = Surd::sqrt_of(c.disc);
    for (int s : {-1, 1}) {
      const Surd k = (Surd(-c.B) + Surd(s) * root) / Surd(Scalar(2 * c.A));
      normals.push_back({Surd(1), -k});
    }
  } else {
    normals.push_back({Surd(0), Surd(1)});
    normals.push_back({Surd(c.B), Surd(c.C)});
  }
  const Vec2<Surd> cs = to_surd(center);
  for (const auto& n : normals) out.lines.push_back({n, dot(n, cs)});
  return out;
}

// Roots w1 <= w2 of kappa w^2 + mu w + F for a disc = 0, delta = 0 conic.
struct ParallelRoots {
  SquareForm sf;
  Scalar d2;
  Surd w1, w2;
};

ParallelRoots parallel_roots(const ConicSection<Scalar>& c) {
  ParallelRoots out{square_form(c), Scalar(0), Surd(), Surd()};
  out.d2 = out.sf.mu * out.sf.mu - 4 * out.sf.kappa * c.F;
  if (sgn(out.d2) < 0) return out;
  const Surd root = Surd::sqrt_of(out.d2);
  const Surd two_kappa(Scalar(2 * out.sf.kappa));
  out.w1 = (Surd(-out.sf.mu) - root) / two_kappa;
  out.w2 = (Surd(-out.sf.mu) + root) / two_kappa;
  if (out.w2 < out.w1) std::swap(out.w1, out.w2);
  return out;
}

}  // namespace

ConicClass classify_conic(const ConicSection<Scalar>& c) {
  ConicClass out;
  out.conic = c;
  if (is_zero(c.A) && is_zero(c.B) && is_zero(c.C)) {
    if (!is_zero(c.D) || !is_zero(c.E)) {
      out.kind = ConicKind::SingleLine;
      LinesPayload lines;
      lines.lines.push_back({{Surd(c.D), Surd(c.E)}, Surd(Scalar(-c.F))});
      out.payload = lines;
    } else {
      out.kind = is_zero(c.F) ? ConicKind::WholePlane : ConicKind::Empty;
    }
    return out;
  }
  const int disc_sign = sgn(c.disc);
  const int delta_sign = sgn(c.delta);
  if (disc_sign != 0) {
    const ExactPoint center = conic_center(c);
    // Value of the conic at its center: -4 delta / disc.
    const Scalar level = 4 * c.delta / c.disc;
    if (disc_sign < 0) {
      if (delta_sign == 0) {
        out.kind = ConicKind::SinglePoint;
        out.payload = PointPayload{center};
      } else if (sgn(c.C) * delta_sign < 0) {
        out.kind = ConicKind::RealEllipse;
        out.payload = ellipse_payload(c, center, level);
      } else {
        out.kind = ConicKind::ImaginaryEllipse;
        out.payload = PointPayload{center};
      }
    } else if (delta_sign != 0) {
      out.kind = ConicKind::Hyperbola;
      out.payload = hyperbola_payload(c, center, level);
    } else {
      out.kind = ConicKind::IntersectingLines;
      out.payload = intersecting_payload(c, center);
    }
    return out;
  }
  if (delta_sign != 0) {
    out.kind = ConicKind::Parabola;
    out.payload = parabola_payload(c);
    return out;
  }
  const ParallelRoots pr = parallel_roots(c);
  const int d2_sign = sgn(pr.d2);
  if (d2_sign < 0) {
    out.kind = ConicKind::ImaginaryParallelLines;
    return out;
  }
  const Vec2<Surd> m{Surd(pr.sf.m.x), Surd(pr.sf.m.y)};
  LinesPayload lines;
  lines.lines.push_back({m, pr.w1});
  if (d2_sign > 0) {
    out.kind = ConicKind::DistinctParallelLines;
    lines.lines.push_back({m, pr.w2});
  } else {
    out.kind = ConicKind::CoincidentLines;
  }
  out.payload = lines;
  return out;
}

std::vector<ExactLine> line_factors(const ConicSection<Scalar>& conic) {
  const ConicClass cls = classify_conic(conic);
  switch (cls.kind) {
    case ConicKind::IntersectingLines:
    case ConicKind::DistinctParallelLines:
    case ConicKind::CoincidentLines:
    case ConicKind::SingleLine:
      return std::get<LinesPayload>(cls.payload).lines;
    default:
      throw Error(ErrorKind::NotDegenerate,
                  std::string("conic has no real line factorization: ") + conic_kind_name(cls.kind));
  }
}

double standard_polynomial(ConicKind kind, const Point& q) {
  return to_double(standard_conic(kind))(q);
}

ConicSection<Scalar> standard_conic(ConicKind kind) {
  switch (kind) {
    case ConicKind::RealEllipse: return {1, 0, 1, 0, 0, -1};
    case ConicKind::Hyperbola: return {0, 1, 0, 0, 0, -1};
    case ConicKind::Parabola: return {1, 0, 0, 0, -1, 0};
    case ConicKind::IntersectingLines: return {0, 1, 0, 0, 0, 0};
    case ConicKind::DistinctParallelLines: return {1, 0, 0, 0, 0, -1};
    case ConicKind::CoincidentLines: return {1, 0, 0, 0, 0, 0};
    case ConicKind::SingleLine: return {0, 0, 0, 1, 0, 0};
    default:
      throw Error(ErrorKind::NotNormalizable,
                  std::string("no standard form for ") + conic_kind_name(kind));
  }
}

namespace {

AffineTransform rotation_frame(const ExactPoint& center, double angle, double sx, double sy) {
  AffineTransform f;
  const double c = std::cos(angle), s = std::sin(angle);
  f.linear.m = {{{c * sx, -s * sy}, {s * sx, c * sy}}};
  f.translation = to_double(center);
  return f;
}

// Affine map from rows h(p) = (r0 . p + t0, r1 . p + t1).
BasicAffine<Surd> from_rows(const Vec2<Surd>& r0, const Surd& t0, const Vec2<Surd>& r1,
                            const Surd& t1) {
  BasicAffine<Surd> h;
  h.linear.m = {{{r0.x, r0.y}, {r1.x, r1.y}}};
  h.translation = {t0, t1};
  return h;
}

StandardFrame exact_frame(ConicKind kind, const BasicAffine<Surd>& frame, const Surd& multiplier) {
  StandardFrame out{kind, to_double(frame), frame, multiplier.to_double(), multiplier};
  return out;
}

}  // namespace

StandardFrame standard_frame(const ConicClass& cls) {
  const auto& c = cls.conic;
  switch (cls.kind) {
    case ConicKind::RealEllipse: {
      const auto& e = std::get<EllipsePayload>(cls.payload);
      return {cls.kind, rotation_frame(e.center, e.angle, e.semi_u, e.semi_v), std::nullopt,
              e.level.get_d(), Surd(e.level)};
    }
    case ConicKind::Hyperbola: {
      const auto& hp = std::get<HyperbolaPayload>(cls.payload);
      // (X, Y) -> rotated (a (X + Y) / 2, b (X - Y) / 2)
      AffineTransform f = rotation_frame(hp.center, hp.angle, 1.0, 1.0);
      const double a = hp.transverse / 2, b = hp.conjugate / 2;
      const auto& r = f.linear.m;
      AffineTransform out;
      out.linear.m = {{{r[0][0] * a + r[0][1] * b, r[0][0] * a - r[0][1] * b},
                       {r[1][0] * a + r[1][1] * b, r[1][0] * a - r[1][1] * b}}};
      out.translation = f.translation;
      return {cls.kind, out, std::nullopt, hp.level.get_d(), Surd(hp.level)};
    }
    case ConicKind::Parabola: {
      const auto& pp = std::get<ParabolaPayload>(cls.payload);
      BasicAffine<Surd> f;
      f.linear.m = {{{Surd(pp.p1.x), Surd(pp.p2.x)}, {Surd(pp.p1.y), Surd(pp.p2.y)}}};
      f.translation = to_surd(pp.p0);
      return exact_frame(cls.kind, f, Surd(pp.multiplier));
    }
    case ConicKind::IntersectingLines: {
      const auto& lp = std::get<LinesPayload>(cls.payload);
      const auto& l1 = lp.lines[0];
      const auto& l2 = lp.lines[1];
      const auto h = from_rows(l1.normal, -l1.offset, l2.normal, -l2.offset);
      const Surd kappa = is_zero(c.A) ? Surd(1) : Surd(c.A);
      return exact_frame(cls.kind, h.inverse(), kappa);
    }
    case ConicKind::DistinctParallelLines: {
      const ParallelRoots pr = parallel_roots(c);
      const Vec2<Surd> m{Surd(pr.sf.m.x), Surd(pr.sf.m.y)};
      const Vec2<Surd> n{-m.y, m.x};
      const Surd width = pr.w2 - pr.w1;
      const Surd scale = Surd(2) / width;
      const auto h = from_rows(scale * m, -(pr.w1 + pr.w2) / width, n, Surd(0));
      return exact_frame(cls.kind, h.inverse(), Surd(Scalar(pr.d2 / (4 * pr.sf.kappa))));
    }
    case ConicKind::CoincidentLines: {
      const ParallelRoots pr = parallel_roots(c);
      const Vec2<Surd> m{Surd(pr.sf.m.x), Surd(pr.sf.m.y)};
      const auto h = from_rows(m, -pr.w1, {-m.y, m.x}, Surd(0));
      return exact_frame(cls.kind, h.inverse(), Surd(pr.sf.kappa));
    }
    case ConicKind::SingleLine: {
      const auto h = from_rows({Surd(c.D), Surd(c.E)}, Surd(c.F), {Surd(-c.E), Surd(c.D)}, Surd(0));
      return exact_frame(cls.kind, h.inverse(), Surd(1));
    }
    default:
      throw Error(ErrorKind::NotNormalizable,
                  std::string("conic class is not normalizable: ") + conic_kind_name(cls.kind));
  }
}

Point ConicBranch::standard_point(double t) const {
  switch (shape) {
    case BranchShape::Ellipse: return {std::cos(t), std::sin(t)};
    case BranchShape::Hyperbola: return {t, 1 / t};
    case BranchShape::Parabola: return {t, t * t};
    case BranchShape::Line: return {t, 0};
  }
  return {};
}

Point ConicBranch::standard_derivative(double t, int order) const {
  if (order == 0) return standard_point(t);
  switch (shape) {
    case BranchShape::Ellipse: {
      // d/dt rotates (cos, sin) by a quarter turn.
      static constexpr double signs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
      const double c = std::cos(t), s = std::sin(t);
      const int k = order % 4;
      return (k % 2 == 0) ? Point{signs[k][0] * c, signs[k][1] * s}
                          : Point{signs[k][0] * s, signs[k][1] * c};
    }
    case BranchShape::Hyperbola: {
      double d = -1;  // d^k/dt^k t^-1 = (-1)^k k! t^-(k+1)
      for (int i = 2; i <= order; ++i) d *= -i;
      return {order == 1 ? 1.0 : 0.0, d / std::pow(t, order + 1)};
    }
    case BranchShape::Parabola:
      return {order == 1 ? 1.0 : 0.0, order == 1 ? 2 * t : (order == 2 ? 2.0 : 0.0)};
    case BranchShape::Line:
      return {order == 1 ? 1.0 : 0.0, 0};
  }
  return {};
}

Point ConicBranch::derivative(double t, int order) const {
  if (order == 0) return point(t);
  return frame.apply_linear(standard_derivative(t, order));
}

std::vector<ConicBranch> parametrize_conic(const ConicClass& cls) {
  if (!cls.is_curve()) {
    throw Error(ErrorKind::NotACurve,
                std::string("zero set is not a curve: ") + conic_kind_name(cls.kind));
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<ConicBranch> out;
  switch (cls.kind) {
    case ConicKind::RealEllipse: {
      ConicBranch b;
      b.shape = BranchShape::Ellipse;
      b.frame = standard_frame(cls).frame;
      b.t_min = 0;
      b.t_max = 2 * std::numbers::pi;
      out.push_back(b);
      break;
    }
    case ConicKind::Hyperbola: {
      const AffineTransform frame = standard_frame(cls).frame;
      for (int label : {1, -1}) {
        ConicBranch b;
        b.shape = BranchShape::Hyperbola;
        b.label = label;
        b.frame = frame;
        b.t_min = label > 0 ? 0 : -inf;
        b.t_max = label > 0 ? inf : 0;
        out.push_back(b);
      }
      break;
    }
    case ConicKind::Parabola: {
      const auto& pp = std::get<ParabolaPayload>(cls.payload);
      ConicBranch b;
      b.shape = BranchShape::Parabola;
      b.frame = standard_frame(cls).frame;
      b.t_min = -inf;
      b.t_max = inf;
      b.exact = ExactCurve{to_surd(pp.p0), to_surd(pp.p1), to_surd(pp.p2)};
      out.push_back(b);
      break;
    }
    default: {
      const auto& lp = std::get<LinesPayload>(cls.payload);
      for (std::size_t i = 0; i < lp.lines.size(); ++i) {
        const auto& line = lp.lines[i];
        const Vec2<Surd> p0 = line.base_point();
        const Vec2<Surd> d = line.direction();
        ConicBranch b;
        b.shape = BranchShape::Line;
        b.label = static_cast<int>(i);
        BasicAffine<Surd> f;
        f.linear.m = {{{d.x, -d.y}, {d.y, d.x}}};
        f.translation = p0;
        b.frame = to_double(f);
        b.t_min = -inf;
        b.t_max = inf;
        b.exact = ExactCurve{p0, d, {Surd(0), Surd(0)}};
        out.push_back(b);
      }
      break;
    }
  }
  return out;
}

}  // namespace quadcrit
