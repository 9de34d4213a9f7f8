#include "quadcrit/image.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace quadcrit {

const char* j1_kind_name(J1Kind kind) {
  switch (kind) {
    case J1Kind::PointImage: return "PointImage";
    case J1Kind::LineImage: return "LineImage";
    case J1Kind::RayImage: return "RayImage";
    case J1Kind::ParabolaImage: return "ParabolaImage";
    case J1Kind::SmoothClosedCurve: return "SmoothClosedCurve";
    case J1Kind::SmoothArc: return "SmoothArc";
    case J1Kind::CuspedCurve: return "CuspedCurve";
  }
  return "?";
}

std::string CriticalReport::case_label() const {
  std::string out = std::to_string(case_number);
  if (sub_case != 0) out += sub_case;
  return out;
}

namespace {

using SurdPoint = Vec2<Surd>;

Point unit(const Point& v) {
  const double n = norm(v);
  return n > 0 ? Point{v.x / n, v.y / n} : Point{};
}

double focal_length(const Point& tangent_at_vertex, const Point& quadratic) {
  return dot(tangent_at_vertex, tangent_at_vertex) / (4 * norm(quadratic));
}

// Component for the exactly parametrized image curve P0 + s P1 + s^2 P2.
J1Component quadratic_component(const SurdPoint& P0, const SurdPoint& P1, const SurdPoint& P2) {
  const auto qi = classify_quadratic_parametrization(P2.x, P1.x, P2.y, P1.y);
  J1Component out;
  out.kind = qi.kind;
  out.curve = ExactCurve{P0, P1, P2};
  out.exact_point = P0 + qi.vertex;
  out.point = to_double(*out.exact_point);
  if (qi.kind != J1Kind::PointImage) {
    out.exact_direction = qi.direction;
    out.direction = unit(to_double(qi.direction));
  }
  if (qi.kind == J1Kind::ParabolaImage) {
    const SurdPoint tangent = P1 + Surd(Surd(2) * qi.vertex_t) * P2;
    out.focal_length = focal_length(to_double(tangent), to_double(P2));
  }
  return out;
}

// Image of the exact line p0 + t d under the map.
J1Component line_image(const BasicQuadMap<Surd>& map, const ExactCurve& line) {
  const SurdPoint P0 = eval(map, line.p0);
  const SurdPoint P1 = jacobian_matrix(map, line.p0) * line.p1;
  const SurdPoint h = second_derivative(map, line.p1, line.p1);
  const Surd half = Surd(Scalar(1, 2));
  return quadratic_component(P0, P1, half * h);
}

SurdPoint surd_point(const ExactPoint& p) { return {Surd(p.x), Surd(p.y)}; }

bool same_t(double a, double b, bool periodic) {
  double gap = std::abs(a - b);
  if (periodic) gap = std::min(gap, 2 * std::numbers::pi - gap);
  return gap <= 1e-8;
}

void curved_case(const QuadMap& map, CriticalReport& r) {
  const RealQuadMap fmap = to_double(map);
  r.j0_branches = parametrize_conic(r.j0);
  r.normalized = normalized_map(map, r.j0);
  const NormalizedMap& nm = *r.normalized;
  const bool periodic = r.j0.kind == ConicKind::RealEllipse;

  std::vector<double> ts;
  try {
    ts = nm.exact_map ? find_cusps_closed_form(*nm.exact_map, r.case_number)
                      : find_cusps_closed_form(nm.map, r.case_number);
  } catch (const Error& e) {
    r.warnings.push_back(std::string("closed-form cusps unavailable: ") + e.what());
  }
  const auto X = cross_table(nm.map);
  if (r.case_number == 3) r.phi = std::atan2(X(1, 4), -X(1, 3));
  if (r.case_number != 3 && !ts.empty()) r.T = ts.front();

  std::vector<std::vector<Cusp>> per_branch(r.j0_branches.size());
  for (double t : ts) {
    std::size_t bi = 0;
    if (r.case_number == 4) bi = t > 0 ? 0 : 1;  // branch + is listed first
    const ConicBranch& branch = r.j0_branches[bi];
    ConicBranch standard = branch;
    standard.frame = AffineTransform::identity();
    const CurveJet jet = curve_jet(standard, nm.map, t);
    const double d2 = norm(jet.d2);
    if (!(norm(jet.d1) <= 1e-8 * d2 * std::max(1.0, std::abs(t))) ||
        !(std::abs(jet.gamma()) > 1e-12 * d2 * norm(jet.d3))) {
      r.warnings.push_back("closed-form cusp parameter failed certification");
      continue;
    }
    Cusp cusp;
    cusp.branch = static_cast<int>(bi);
    cusp.t = t;
    cusp.location = eval(fmap, branch.point(t));
    cusp.tangent_direction = unit(nm.k_inverse.apply_linear(jet.d2));
    cusp.nondegeneracy = jet.gamma();
    per_branch[bi].push_back(cusp);
  }

  // Normalization-free cross-check.
  std::size_t generic_count = 0;
  for (std::size_t bi = 0; bi < r.j0_branches.size(); ++bi) {
    const auto generic = find_cusps_generic(r.j0_branches[bi], map);
    generic_count += generic.size();
    for (const auto& g : generic) r.generic_cusp_parameters.push_back(g.t);
    for (const auto& c : per_branch[bi]) {
      const bool found = std::any_of(generic.begin(), generic.end(),
                                     [&](const Cusp& g) { return same_t(g.t, c.t, periodic); });
      if (!found) r.warnings.push_back("closed-form cusp not confirmed by the generic finder");
    }
    if (r.case_number == 4 && per_branch[bi].empty() && !generic.empty()) {
      r.warnings.push_back("smooth hyperbola branch has zeros of alpha'");
    }
  }
  std::sort(r.generic_cusp_parameters.begin(), r.generic_cusp_parameters.end());
  if (generic_count != ts.size()) {
    r.warnings.push_back("closed-form and generic cusp counts differ");
  }

  for (std::size_t bi = 0; bi < r.j0_branches.size(); ++bi) {
    J1Component comp;
    comp.source_branch = static_cast<int>(bi);
    std::sort(per_branch[bi].begin(), per_branch[bi].end(),
              [](const Cusp& a, const Cusp& b) { return a.t < b.t; });
    comp.cusps = per_branch[bi];
    if (!comp.cusps.empty()) {
      comp.kind = J1Kind::CuspedCurve;
      comp.point = comp.cusps.front().location;
    } else {
      comp.kind = periodic ? J1Kind::SmoothClosedCurve : J1Kind::SmoothArc;
      const ConicBranch& b = r.j0_branches[bi];
      comp.point = eval(fmap, b.point(b.shape == BranchShape::Hyperbola ? b.label : 0.0));
    }
    r.branch_map.emplace_back(static_cast<int>(bi), static_cast<int>(r.j1.size()));
    r.j1.push_back(comp);
  }
}

void line_case(const QuadMap& map, CriticalReport& r) {
  r.j0_branches = parametrize_conic(r.j0);
  const BasicQuadMap<Surd> smap = to_surd(map);
  for (std::size_t bi = 0; bi < r.j0_branches.size(); ++bi) {
    J1Component comp = line_image(smap, *r.j0_branches[bi].exact);
    comp.source_branch = static_cast<int>(bi);
    r.branch_map.emplace_back(static_cast<int>(bi), static_cast<int>(r.j1.size()));
    r.j1.push_back(comp);
  }
  r.normalized = normalized_map(map, r.j0);
  const auto X = cross_table(*r.normalized->exact_map);
  if (r.case_number == 5) {
    r.x03_x24 = X(0, 3) * X(2, 4);
    int rays = 0, parabolas = 0;
    for (const auto& c : r.j1) {
      rays += c.kind == J1Kind::RayImage;
      parabolas += c.kind == J1Kind::ParabolaImage;
    }
    if (rays == 2) {
      r.sub_case = 'b';
    } else if (rays == 1 && parabolas == 1) {
      r.sub_case = 'a';
    } else {
      r.warnings.push_back("intersecting-lines images are not a ray pair or ray and parabola");
    }
  } else if (r.case_number == 7) {
    if (r.j0.kind == ConicKind::DistinctParallelLines) {
      r.sub_case = 'a';
      r.x13_sign = sign(X(1, 3));
    } else {
      r.sub_case = 'b';
    }
  } else {
    switch (r.j1.front().kind) {
      case J1Kind::PointImage: r.sub_case = 'a'; break;
      case J1Kind::LineImage: r.sub_case = 'b'; break;
      case J1Kind::ParabolaImage: r.sub_case = 'c'; break;
      default: r.warnings.push_back("single-line image is a ray"); break;
    }
  }
}

}  // namespace

CriticalReport classify_critical(const QuadMap& map) {
  CriticalReport r;
  r.table = cross_table(map);
  r.j0 = classify_conic(conic_from_table(r.table));
  switch (r.j0.kind) {
    case ConicKind::Empty:
      r.case_number = 1;
      break;
    case ConicKind::ImaginaryEllipse:
    case ConicKind::ImaginaryParallelLines:
      r.case_number = 1;
      r.warnings.push_back("Jacobian conic classified as an imaginary class");
      break;
    case ConicKind::SinglePoint: {
      r.case_number = 2;
      const ExactPoint c = std::get<PointPayload>(r.j0.payload).center;
      J1Component comp;
      comp.kind = J1Kind::PointImage;
      comp.exact_point = surd_point(eval(map, c));
      comp.point = to_double(*comp.exact_point);
      r.j1.push_back(comp);
      break;
    }
    case ConicKind::RealEllipse:
      r.case_number = 3;
      curved_case(map, r);
      break;
    case ConicKind::Hyperbola:
      r.case_number = 4;
      curved_case(map, r);
      break;
    case ConicKind::Parabola:
      r.case_number = 6;
      curved_case(map, r);
      break;
    case ConicKind::IntersectingLines:
      r.case_number = 5;
      line_case(map, r);
      break;
    case ConicKind::DistinctParallelLines:
    case ConicKind::CoincidentLines:
      r.case_number = 7;
      line_case(map, r);
      break;
    case ConicKind::SingleLine:
      r.case_number = 8;
      line_case(map, r);
      break;
    case ConicKind::WholePlane: {
      r.case_number = 9;
      r.j1.push_back(whole_plane_image(map));
      switch (r.j1.front().kind) {
        case J1Kind::LineImage: r.sub_case = 'a'; break;
        case J1Kind::RayImage: r.sub_case = 'b'; break;
        default: r.sub_case = 'c'; break;
      }
      break;
    }
  }
  return r;
}

J1Component whole_plane_image(const QuadMap& map) {
  const auto conic = jacobian_conic(map).coefficients();
  if (std::any_of(conic.begin(), conic.end(), [](const Scalar& v) { return !is_zero(v); })) {
    throw Error(ErrorKind::PreconditionViolated, "Jacobian determinant is not identically zero");
  }
  // Range change K with (u, v) = K F: u carries the quadratic part, v is affine.
  std::array<Scalar, 6> u = map.a(), v = map.b();
  Mat2<Scalar> k_inv;
  const bool a_quadratic = !is_zero(u[0]) || !is_zero(u[1]) || !is_zero(u[2]);
  if (a_quadratic) {
    std::size_t i = is_zero(u[0]) ? (is_zero(u[1]) ? 2 : 1) : 0;
    const Scalar lambda = v[i] / u[i];
    for (std::size_t j = 0; j < 6; ++j) v[j] -= lambda * u[j];
    k_inv.m = {{{Scalar(1), Scalar(0)}, {lambda, Scalar(1)}}};
  } else {
    std::swap(u, v);
    k_inv.m = {{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}};
  }
  if (!is_zero(v[0]) || !is_zero(v[1]) || !is_zero(v[2])) {
    throw Error(ErrorKind::PreconditionViolated, "quadratic parts are not proportional");
  }
  auto back = [&](const Scalar& x, const Scalar& y) { return surd_point(k_inv * ExactPoint{x, y}); };
  const ExactPoint ell{v[3], v[4]};
  const Scalar c = v[5];

  if (!is_zero(ell.x) || !is_zero(ell.y)) {
    // u = phi(ell . p), traced exactly along p = s ell / |ell|^2.
    const Scalar ll = dot(ell, ell);
    const Scalar phi2 = (u[0] * ell.x * ell.x + u[1] * ell.x * ell.y + u[2] * ell.y * ell.y) / (ll * ll);
    const Scalar phi1 = (u[3] * ell.x + u[4] * ell.y) / ll;
    return quadratic_component(back(u[5], c), back(phi1, Scalar(1)), back(phi2, Scalar(0)));
  }

  J1Component out;
  const Scalar disc = u[1] * u[1] - 4 * u[0] * u[2];
  auto set_line = [&](const Scalar& at) {
    out.kind = J1Kind::LineImage;
    out.exact_point = back(at, c);
    out.exact_direction = back(Scalar(1), Scalar(0));
  };
  auto set_ray = [&](const Scalar& vertex, int orientation) {
    out.kind = J1Kind::RayImage;
    out.exact_point = back(vertex, c);
    out.exact_direction = back(Scalar(orientation), Scalar(0));
  };
  if (sgn(disc) > 0) {
    set_line(Scalar(0));
  } else if (sgn(disc) < 0) {
    const ConicSection<Scalar> q(u[0], u[1], u[2], u[3], u[4], u[5]);
    const Scalar det = 4 * u[0] * u[2] - u[1] * u[1];
    const ExactPoint center{Scalar((u[1] * u[4] - 2 * u[2] * u[3]) / det),
                            Scalar((u[1] * u[3] - 2 * u[0] * u[4]) / det)};
    set_ray(q(center), sgn(u[0]));
  } else {
    // u = kappa (m . p)^2 + L . p + e
    const bool has_a = !is_zero(u[0]);
    const ExactPoint m = has_a ? ExactPoint{Scalar(1), Scalar(u[1] / (2 * u[0]))}
                               : ExactPoint{Scalar(0), Scalar(1)};
    const Scalar kappa = has_a ? u[0] : u[2];
    const ExactPoint L{u[3], u[4]};
    const ExactPoint n{Scalar(-m.y), m.x};
    if (!is_zero(dot(L, n))) {
      set_line(Scalar(0));
    } else {
      const Scalar s = dot(L, m) / dot(m, m);
      set_ray(Scalar(u[5] - s * s / (4 * kappa)), sgn(kappa));
      out.curve = ExactCurve{back(u[5], c), back(s, Scalar(0)), back(kappa, Scalar(0))};
    }
  }
  out.point = to_double(*out.exact_point);
  out.direction = unit(to_double(*out.exact_direction));
  return out;
}

// --- geometry -------------------------------------------------------------------

namespace {

Point curve_point(const ExactCurve& c, double s) {
  const Point p0 = to_double(c.p0), p1 = to_double(c.p1), p2 = to_double(c.p2);
  return p0 + s * p1 + (s * s) * p2;
}

double distance_to_quadratic_curve(const ExactCurve& c, const Point& q) {
  const Point d0 = to_double(c.p0) - q, p1 = to_double(c.p1), p2 = to_double(c.p2);
  // (alpha(s) - q) . alpha'(s) = 0
  const RealPolynomial g{dot(d0, p1), 2 * dot(d0, p2) + dot(p1, p1), 3 * dot(p1, p2),
                         2 * dot(p2, p2)};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : companion_roots(g)) {
    for (double s : {z.real(), newton_polish(g, z.real())}) best = std::min(best, norm(curve_point(c, s) - q));
  }
  if (g.degree() <= 0) best = std::min(best, norm(d0));
  return best;
}

double distance_to_branch_image(const ConicBranch& branch, const RealQuadMap& map, const Point& q) {
  const RationalImage img = rational_image(branch, map);
  const RealPolynomial w2 = img.w * img.w;
  const RealPolynomial ax = img.nx - w2 * q.x;
  const RealPolynomial ay = img.ny - w2 * q.y;
  const RealPolynomial px = img.nx.derivative() * img.w - img.nx * img.w.derivative() * 2.0;
  const RealPolynomial py = img.ny.derivative() * img.w - img.ny * img.w.derivative() * 2.0;
  const RealPolynomial g = ax * px + ay * py;
  double best = std::numeric_limits<double>::infinity();
  auto admissible = [&](double t) {
    return std::isfinite(t) && (branch.shape != BranchShape::Hyperbola ||
                                (t != 0 && (t > 0) == (branch.label > 0)));
  };
  // Newton on (alpha(t) - q) . alpha'(t) = 0, evaluated on the curve itself.
  auto consider = [&](double u) {
    double t = img.to_branch(u);
    for (int it = 0; it < 20 && admissible(t); ++it) {
      const CurveJet jet = curve_jet(branch, map, t);
      const Point r = jet.value - q;
      best = std::min(best, norm(r));
      const double h = dot(jet.d1, jet.d1) + dot(r, jet.d2);
      if (!(h > 0)) break;
      const double step = dot(r, jet.d1) / h;
      t -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(t))) break;
    }
    if (admissible(t)) best = std::min(best, norm(eval(map, branch.point(t)) - q));
  };
  if (!g.is_zero()) {
    for (const auto& z : companion_roots(g)) consider(z.real());
  }
  if (branch.shape == BranchShape::Ellipse) {
    best = std::min(best, norm(eval(map, branch.point(std::numbers::pi)) - q));
  }
  return best;
}

}  // namespace

double distance_to_component(const CriticalReport& report, const RealQuadMap& map,
                             const J1Component& comp, const Point& q) {
  switch (comp.kind) {
    case J1Kind::PointImage: return norm(q - comp.point);
    case J1Kind::LineImage: return std::abs(cross(q - comp.point, comp.direction));
    case J1Kind::RayImage: {
      const Point d = q - comp.point;
      return dot(d, comp.direction) >= 0 ? std::abs(cross(d, comp.direction)) : norm(d);
    }
    case J1Kind::ParabolaImage:
      if (comp.curve) return distance_to_quadratic_curve(*comp.curve, q);
      [[fallthrough]];
    default:
      if (comp.source_branch) {
        return distance_to_branch_image(
            report.j0_branches[static_cast<std::size_t>(*comp.source_branch)], map, q);
      }
      return std::numeric_limits<double>::infinity();
  }
}

namespace {

// Smallest S > 0 with both f(-S) and f(S) outside the ball (center, radius).
template <class F>
double escape_window(F&& f, const Point& center, double radius) {
  double S = 1;
  for (int i = 0; i < 60; ++i) {
    if (norm(f(-S) - center) > radius && norm(f(S) - center) > radius) return S;
    S *= 2;
  }
  return S;
}

// n samples of f over the branch parameter domain; unbounded branches are
// cut where f leaves the ball (center, radius).
template <class F>
std::vector<CurveSample> sample_along_branch(const ConicBranch& b, int n, const Point& center,
                                             double radius, F&& f) {
  std::vector<CurveSample> out;
  auto spread = [&](double s0, double s1, int divisions, auto&& g) {
    for (int i = 0; i < n; ++i) out.push_back(g(s0 + (s1 - s0) * i / divisions));
  };
  auto at = [&](double t) { return CurveSample{t, f(t)}; };
  switch (b.shape) {
    case BranchShape::Ellipse:
      spread(0.0, 2 * std::numbers::pi, n, at);
      break;
    case BranchShape::Hyperbola: {
      // t = label * exp(s) covers the branch.
      auto g = [&](double s) { return f(b.label * std::exp(s)); };
      const double S = std::min(escape_window(g, center, radius), 40.0);
      spread(-S, S, n - 1, [&](double s) { return at(b.label * std::exp(s)); });
      break;
    }
    default: {
      const double S = escape_window(f, center, radius);
      spread(-S, S, n - 1, at);
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<CurveSample> sample_component(const CriticalReport& report, const RealQuadMap& map,
                                          const J1Component& comp, int n, const Point& lo,
                                          const Point& hi) {
  const Point center = 0.5 * (lo + hi);
  const double radius = norm(hi - lo);
  std::vector<CurveSample> out;
  const int count = std::max(n, 2);
  // n parameters spread over [s0, s1], or [s0, s1) for closed curves.
  auto spread = [&](double s0, double s1, bool closed, auto&& f) {
    const int divisions = closed ? count : count - 1;
    for (int i = 0; i < count; ++i) {
      const double s = s0 + (s1 - s0) * i / divisions;
      out.push_back(f(s));
    }
  };
  auto along = [&](const Point& base, const Point& dir) {
    return [base, dir](double s) { return CurveSample{s, base + s * dir}; };
  };
  switch (comp.kind) {
    case J1Kind::PointImage:
      out.push_back({0, comp.point});
      return out;
    case J1Kind::LineImage:
    case J1Kind::RayImage: {
      const double mid = dot(center - comp.point, comp.direction);
      const double s0 = comp.kind == J1Kind::RayImage ? 0.0 : mid - radius;
      const double s1 = std::max(s0 + radius, mid + radius);
      spread(s0, s1, false, along(comp.point, comp.direction));
      return out;
    }
    default: break;
  }
  if (comp.curve) {
    const ExactCurve& c = *comp.curve;
    auto f = [&](double s) { return curve_point(c, s); };
    const double S = escape_window(f, center, radius);
    spread(-S, S, false, [&](double s) { return CurveSample{s, f(s)}; });
    return out;
  }
  if (!comp.source_branch) return out;
  const ConicBranch& b = report.j0_branches[static_cast<std::size_t>(*comp.source_branch)];
  return sample_along_branch(b, count, center, radius,
                             [&](double t) { return eval(map, b.point(t)); });
}

std::vector<CurveSample> sample_branch(const ConicBranch& branch, int n, const Point& lo,
                                       const Point& hi) {
  return sample_along_branch(branch, std::max(n, 2), 0.5 * (lo + hi), norm(hi - lo),
                             [&](double t) { return branch.point(t); });
}

}  // namespace quadcrit
