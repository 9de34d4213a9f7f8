#include <gtest/gtest.h>

#include <cmath>

#include "quadcrit/conic.hpp"
#include "quadcrit/verify.hpp"

using namespace quadcrit;

namespace {

using Conic = ConicSection<Scalar>;

Conic make(int a, int b, int c, int d, int e, int f) { return Conic(a, b, c, d, e, f); }

Conic pullback(const Conic& c, const ExactAffine& t) {
  const auto p = pullback_component(c.coefficients(), t);
  return Conic(p[0], p[1], p[2], p[3], p[4], p[5]);
}

// |c(p)| relative to the coefficient and point scale.
double relative_residual(const Conic& c, const Point& p) {
  const ConicSection<double> f = to_double(c);
  double scale = 0;
  for (double v : f.coefficients()) scale = std::max(scale, std::abs(v));
  return std::abs(f(p)) / (scale * std::max(1.0, dot(p, p)));
}

}  // namespace

TEST(Conic, DecisionTreeExamples) {
  EXPECT_EQ(classify_conic(make(4, 0, -4, 0, 0, -4)).kind, ConicKind::Hyperbola);
  EXPECT_EQ(classify_conic(make(4, 0, 4, 0, 0, -4)).kind, ConicKind::RealEllipse);
  EXPECT_EQ(classify_conic(make(0, 4, 0, 0, 0, 0)).kind, ConicKind::IntersectingLines);
  EXPECT_EQ(classify_conic(make(1, 0, 0, 0, 0, -1)).kind, ConicKind::DistinctParallelLines);
  EXPECT_EQ(classify_conic(make(1, 0, 0, 0, 0, 0)).kind, ConicKind::CoincidentLines);
  EXPECT_EQ(classify_conic(make(1, 0, 0, 0, 0, 1)).kind, ConicKind::ImaginaryParallelLines);
  EXPECT_EQ(classify_conic(make(1, 0, 1, 0, 0, 1)).kind, ConicKind::ImaginaryEllipse);
  EXPECT_EQ(classify_conic(make(1, 0, 1, 0, 0, 0)).kind, ConicKind::SinglePoint);
  EXPECT_EQ(classify_conic(make(0, 0, 0, 1, 2, 3)).kind, ConicKind::SingleLine);
  EXPECT_EQ(classify_conic(make(0, 0, 0, 0, 0, 5)).kind, ConicKind::Empty);
  EXPECT_EQ(classify_conic(make(0, 0, 0, 0, 0, 0)).kind, ConicKind::WholePlane);
}

TEST(Conic, ParabolaPayload) {
  const ConicClass c = classify_conic(make(1, 0, 0, 0, -1, 0));
  ASSERT_EQ(c.kind, ConicKind::Parabola);
  const auto& p = std::get<ParabolaPayload>(c.payload);
  EXPECT_EQ(p.vertex, (ExactPoint{Scalar(0), Scalar(0)}));
  EXPECT_EQ(sign(p.opening.y), 1);
  EXPECT_EQ(sign(p.opening.x), 0);
  EXPECT_NEAR(p.focal_length, 0.25, 1e-15);
}

TEST(Conic, ParallelLinesPayload) {
  const ConicClass c = classify_conic(make(1, 0, 0, 0, 0, -1));
  const auto& lines = std::get<LinesPayload>(c.payload).lines;
  ASSERT_EQ(lines.size(), 2u);
  std::vector<double> xs;
  for (const auto& l : lines) xs.push_back(to_double(l.base_point()).x);
  std::sort(xs.begin(), xs.end());
  EXPECT_EQ(xs, (std::vector<double>{-1, 1}));
}

TEST(Conic, PayloadPointsLieOnConic) {
  Rng rng(17);
  int seen_ellipse = 0, seen_hyperbola = 0;
  for (int i = 0; i < 2000; ++i) {
    const Conic c(random_rational(rng), random_rational(rng), random_rational(rng),
                  random_rational(rng), random_rational(rng), random_rational(rng));
    const ConicClass cls = classify_conic(c);
    if (const auto* e = std::get_if<EllipsePayload>(&cls.payload)) {
      ++seen_ellipse;
      const Point ctr = to_double(e->center);
      const Point u{std::cos(e->angle), std::sin(e->angle)};
      const Point v{-u.y, u.x};
      EXPECT_LT(relative_residual(c, ctr + e->semi_u * u), 1e-10);
      EXPECT_LT(relative_residual(c, ctr + e->semi_v * v), 1e-10);
    } else if (const auto* h = std::get_if<HyperbolaPayload>(&cls.payload)) {
      ++seen_hyperbola;
      const Point ctr = to_double(h->center);
      EXPECT_LT(relative_residual(c, ctr + h->transverse * Point{std::cos(h->angle),
                                                                 std::sin(h->angle)}),
                1e-10);
    } else if (const auto* p = std::get_if<PointPayload>(&cls.payload)) {
      if (cls.kind == ConicKind::SinglePoint) EXPECT_TRUE(is_zero(c(p->center)));
      // Both kinds carry the center: the gradient vanishes there.
      const Scalar& x = p->center.x;
      const Scalar& y = p->center.y;
      EXPECT_EQ(2 * c.A * x + c.B * y + c.D, 0);
      EXPECT_EQ(c.B * x + 2 * c.C * y + c.E, 0);
    } else if (const auto* pb = std::get_if<ParabolaPayload>(&cls.payload)) {
      EXPECT_TRUE(is_zero(c(pb->vertex)));
    }
  }
  EXPECT_GT(seen_ellipse, 0);
  EXPECT_GT(seen_hyperbola, 0);
}

TEST(Conic, LineFactorsMultiplyBack) {
  Rng rng(23);
  // Products of two random rational lines, plus irrational-slope pairs.
  std::vector<Conic> conics{make(1, 0, -2, 0, 0, 0), make(1, 0, 0, 0, 0, -3),
                            make(2, 1, -3, 1, 4, -1)};
  for (int i = 0; i < 200; ++i) {
    const Scalar a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    const Scalar d = random_rational(rng), e = random_rational(rng), f = random_rational(rng);
    conics.emplace_back(a * d, a * e + b * d, b * e, a * f + c * d, b * f + c * e, c * f);
  }
  for (const auto& conic : conics) {
    const ConicClass cls = classify_conic(conic);
    if (cls.kind != ConicKind::IntersectingLines && cls.kind != ConicKind::DistinctParallelLines &&
        cls.kind != ConicKind::CoincidentLines && cls.kind != ConicKind::SingleLine) {
      continue;
    }
    const auto lines = line_factors(conic);
    // Every point of every line is on the conic, exactly.
    for (const auto& l : lines) {
      const Vec2<Surd> p0 = l.base_point(), d = l.direction();
      for (int s : {-2, 0, 3}) {
        const Vec2<Surd> p = p0 + Surd(s) * d;
        const Surd value = Surd(conic.A) * p.x * p.x + Surd(conic.B) * p.x * p.y +
                           Surd(conic.C) * p.y * p.y + Surd(conic.D) * p.x +
                           Surd(conic.E) * p.y + Surd(conic.F);
        EXPECT_TRUE(is_zero(value));
      }
    }
  }
}

TEST(Conic, LineFactorsRejectNondegenerate) {
  EXPECT_THROW(line_factors(make(1, 0, 1, 0, 0, -1)), Error);
}

TEST(Conic, ParametrizationsSatisfyConic) {
  Rng rng(29);
  int curves = 0;
  for (int i = 0; i < 1000; ++i) {
    const Conic c(random_rational(rng), random_rational(rng), random_rational(rng),
                  random_rational(rng), random_rational(rng), random_rational(rng));
    const ConicClass cls = classify_conic(c);
    if (!cls.is_curve()) {
      EXPECT_THROW(parametrize_conic(cls), Error);
      continue;
    }
    ++curves;
    for (const auto& b : parametrize_conic(cls)) {
      for (double t : {-2.5, -0.7, 0.3, 1.0, 4.0}) {
        if (b.shape == BranchShape::Hyperbola && (t > 0) != (b.label > 0)) continue;
        EXPECT_LT(relative_residual(c, b.point(t)), 1e-9) << branch_shape_name(b.shape);
      }
    }
  }
  EXPECT_GT(curves, 100);
}

TEST(Conic, TagsInvariantUnderAffinePullback) {
  Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const Conic c(random_rational(rng), random_rational(rng), random_rational(rng),
                  random_rational(rng), random_rational(rng), random_rational(rng));
    const ExactAffine t = random_affine(rng);
    EXPECT_EQ(classify_conic(c).kind, classify_conic(pullback(c, t)).kind);
  }
}

TEST(Conic, StandardFramesMapStandardToConic) {
  for (auto c : {make(4, 0, 4, 0, 0, -4), make(4, 0, -4, 0, 0, -4), make(1, 0, 0, 0, -1, 0),
                 make(0, 4, 0, 0, 0, 0), make(1, 0, 0, 0, 0, -1), make(1, 0, 0, 0, 0, 0),
                 make(0, 0, 0, 2, 0, 0), make(3, 1, -2, 4, 1, -5)}) {
    const ConicClass cls = classify_conic(c);
    const StandardFrame sf = standard_frame(cls);
    const ConicSection<double> fc = to_double(c);
    for (Point q : {Point{0.3, -1.2}, Point{2, 0.5}, Point{-1, -1}}) {
      EXPECT_NEAR(fc(sf.frame(q)), sf.multiplier * standard_polynomial(sf.kind, q),
                  1e-9 * std::max(1.0, std::abs(fc(sf.frame(q)))));
    }
  }
}
