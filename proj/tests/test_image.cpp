#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

#include "quadcrit/examples.hpp"
#include "quadcrit/verify.hpp"

using namespace quadcrit;

namespace {

CriticalReport classify(const char* id) { return classify_critical(reference_example(id).map()); }

const J1Component& only(const CriticalReport& r, J1Kind kind) {
  for (const auto& c : r.j1) {
    if (c.kind == kind) return c;
  }
  throw std::runtime_error("component kind missing");
}

}  // namespace

TEST(QuadraticImage, Classification) {
  using S = Scalar;
  EXPECT_EQ(classify_quadratic_parametrization(S(0), S(0), S(0), S(0)).kind, J1Kind::PointImage);
  EXPECT_EQ(classify_quadratic_parametrization(S(0), S(1), S(0), S(2)).kind, J1Kind::LineImage);
  // (t^2 + 2t, 0): ray from (-1, 0) toward +x
  const auto ray = classify_quadratic_parametrization(S(1), S(2), S(0), S(0));
  EXPECT_EQ(ray.kind, J1Kind::RayImage);
  EXPECT_EQ(ray.vertex, (ExactPoint{S(-1), S(0)}));
  EXPECT_EQ(ray.vertex_t, S(-1));
  // (t, t^2)
  const auto par = classify_quadratic_parametrization(S(0), S(1), S(1), S(0));
  EXPECT_EQ(par.kind, J1Kind::ParabolaImage);
  EXPECT_EQ(par.vertex, (ExactPoint{S(0), S(0)}));
  EXPECT_EQ(par.direction, (ExactPoint{S(0), S(1)}));
}

TEST(Classify, ReferenceExamples) {
  for (const auto& e : reference_examples()) {
    const CriticalReport r = classify_critical(e.map());
    EXPECT_EQ(r.j0.kind, e.j0) << e.id;
    EXPECT_EQ(r.case_label(), e.case_label) << e.id;
    EXPECT_EQ(j1_kinds(r), e.j1) << e.id;
    EXPECT_TRUE(r.warnings.empty()) << e.id << ": " << (r.warnings.empty() ? "" : r.warnings[0]);
  }
}

TEST(Classify, CaseFiveRayAndParabola) {
  const CriticalReport r = classify("5a");
  const auto& ray = only(r, J1Kind::RayImage);
  EXPECT_EQ(ray.point, (Point{0, 0}));
  EXPECT_EQ(ray.direction, (Point{1, 0}));
  const auto& par = only(r, J1Kind::ParabolaImage);
  EXPECT_EQ(par.point, (Point{0, 0}));
  EXPECT_EQ(par.direction, (Point{0, 1}));
  ASSERT_TRUE(r.x03_x24);
  EXPECT_TRUE(is_zero(*r.x03_x24));
}

TEST(Classify, CaseEightImages) {
  EXPECT_EQ(only(classify("8a"), J1Kind::PointImage).point, (Point{0, 0}));
  const J1Component line = only(classify("8b"), J1Kind::LineImage);
  EXPECT_EQ(line.point.x, 0);
  EXPECT_EQ(std::abs(line.direction.y), 1);
}

TEST(Classify, CaseNineImages) {
  const J1Component ray = only(classify("9b"), J1Kind::RayImage);
  EXPECT_EQ(ray.point, (Point{0, 0}));
  EXPECT_EQ(ray.direction, (Point{1, 0}));
  // (x^2, x): the parabola x = y^2
  const J1Component par = only(classify("9c"), J1Kind::ParabolaImage);
  ASSERT_TRUE(par.curve);
  for (double s : {-2.0, 0.5, 3.0}) {
    const Point p = to_double(par.curve->p0) + s * to_double(par.curve->p1) +
                    (s * s) * to_double(par.curve->p2);
    EXPECT_NEAR(p.x, p.y * p.y, 1e-12);
  }
  // (x^2 + y, 0) is onto the x-axis.
  EXPECT_EQ(whole_plane_image(parse_quad_map("1,0,0,0,1,0,0,0,0,0,0,0")).kind, J1Kind::LineImage);
  EXPECT_THROW(whole_plane_image(reference_example("3").map()), Error);
}

TEST(Classify, WholePlaneImagesMatchSampling) {
  // Each whole-plane image must contain F(p) for random p, and random
  // conjugates of the three examples keep their kind.
  Rng rng(51);
  for (const char* id : {"9a", "9b", "9c"}) {
    const QuadMap base = reference_example(id).map();
    for (int i = 0; i < 50; ++i) {
      const QuadMap m = conjugate_exact(random_affine(rng), base, random_affine(rng));
      const CriticalReport r = classify_critical(m);
      ASSERT_EQ(r.case_number, 9);
      EXPECT_EQ(j1_kinds(r), reference_example(id).j1) << id;
      const RealQuadMap f = to_double(m);
      for (int k = 0; k < 5; ++k) {
        const Point p{to_double(random_rational(rng)), to_double(random_rational(rng))};
        const Point q = eval(f, p);
        EXPECT_LT(distance_to_component(r, f, r.j1.front(), q), 1e-8 * std::max(1.0, norm(q)));
      }
    }
  }
}

TEST(Cusps, DeltoidThreeCusps) {
  const CriticalReport r = classify("3");
  const auto& c = only(r, J1Kind::CuspedCurve);
  ASSERT_EQ(c.cusps.size(), 3u);
  const double h = 3 * std::sqrt(3.0) / 2;
  const std::vector<Point> want{{3, 0}, {-1.5, -h}, {-1.5, h}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(c.cusps[i].location.x, want[i].x, 1e-8);
    EXPECT_NEAR(c.cusps[i].location.y, want[i].y, 1e-8);
  }
  ASSERT_EQ(r.generic_cusp_parameters.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r.generic_cusp_parameters[i], c.cusps[i].t, 1e-8);
}

TEST(Cusps, HyperbolaAndParabolaCases) {
  const J1Component c4 = only(classify("4"), J1Kind::CuspedCurve);
  ASSERT_EQ(c4.cusps.size(), 1u);
  EXPECT_NEAR(c4.cusps[0].location.x, 3, 1e-8);
  EXPECT_NEAR(c4.cusps[0].location.y, 0, 1e-8);
  const J1Component c6 = only(classify("6"), J1Kind::CuspedCurve);
  ASSERT_EQ(c6.cusps.size(), 1u);
  EXPECT_NEAR(c6.cusps[0].location.x, 0, 1e-10);
  EXPECT_NEAR(c6.cusps[0].location.y, 0, 1e-10);
}

TEST(Cusps, ClosedFormNondegeneracy) {
  const CriticalReport r6 = classify("6");
  EXPECT_EQ(nondegeneracy_value(r6.normalized->map, 6, *r6.T), 18.0);
  const CriticalReport r4 = classify("4");
  EXPECT_EQ(nondegeneracy_value(r4.normalized->map, 4, *r4.T), -18 * *r4.T);
  const CriticalReport r3 = classify("3");
  for (const auto& k : r3.j1.front().cusps) {
    EXPECT_NEAR(nondegeneracy_value(r3.normalized->map, 3, k.t), 9, 1e-12);
  }
  EXPECT_THROW(nondegeneracy_value(r6.normalized->map, 5, 0), Error);
}

TEST(Cusps, ClosedFormRequiresNormalizedMap) {
  EXPECT_THROW(find_cusps_closed_form(to_double(reference_example("4").map()), 4), Error);
}

TEST(Cusps, DegenerateCurveIsNotCertified) {
  // (x^2, y^2) along (t, t^2) traces (t^2, t^4): alpha'(0) = 0 but gamma(0) = 0.
  ConicBranch b;
  b.shape = BranchShape::Parabola;
  b.frame = AffineTransform::identity();
  b.t_min = -INFINITY;
  b.t_max = INFINITY;
  EXPECT_TRUE(find_cusps_generic(b, to_double(reference_example("5b").map())).empty());
}

TEST(Cusps, LocalGeometryIsThreeHalves) {
  // Fit u, v (cusp-tangent frame) by polynomials of degree 1..4 in s/h.
  const double h = 1e-2;
  for (const char* id : {"3", "4", "6"}) {
    const CriticalReport r = classify(id);
    const RealQuadMap f = to_double(reference_example(id).map());
    for (const auto& comp : r.j1) {
      for (const auto& k : comp.cusps) {
        const ConicBranch& b = r.j0_branches[static_cast<std::size_t>(k.branch)];
        const Point e1 = k.tangent_direction, e2{-e1.y, e1.x};
        const Point base = eval(f, b.point(k.t));
        Eigen::MatrixXd basis(101, 4);
        Eigen::MatrixXd uv(101, 2);
        for (int i = -50; i <= 50; ++i) {
          const double s = h * i / 50;
          const Point d = eval(f, b.point(k.t + s)) - base;
          for (int p = 0; p < 4; ++p) basis(i + 50, p) = std::pow(s / h, p + 1);
          uv(i + 50, 0) = dot(d, e1);
          uv(i + 50, 1) = dot(d, e2);
        }
        const Eigen::MatrixXd c = basis.colPivHouseholderQr().solve(uv);
        auto coef = [&](int power, int axis) { return c(power - 1, axis) / std::pow(h, power); };
        EXPECT_LE(std::abs(coef(1, 0)), 1e-6) << id;
        EXPECT_LE(std::abs(coef(1, 1)), 1e-6) << id;
        EXPECT_LE(std::abs(coef(2, 1)), 1e-6) << id;
        EXPECT_GT(std::abs(coef(2, 0)), 1e-3) << id;
        EXPECT_GT(std::abs(coef(3, 1)), 1e-3) << id;
      }
    }
  }
}

TEST(Classify, CaseSevenAttribution) {
  const CriticalReport r = classify("7a");
  ASSERT_TRUE(r.x13_sign);
  EXPECT_EQ(std::abs(*r.x13_sign), 1);
  const auto& line = only(r, J1Kind::LineImage);
  const auto& point = only(r, J1Kind::PointImage);
  EXPECT_EQ(*line.exact_point, (Vec2<Surd>{Surd(Scalar(-1, 2)), Surd(0)}));
  EXPECT_EQ(line.direction.x, 0);
  EXPECT_EQ(*point.exact_point, (Vec2<Surd>{Surd(Scalar(3, 2)), Surd(0)}));
  // J0 lines are x = -1 and x = 1; the line x = -1 maps onto the line.
  const ConicBranch& from_line = r.j0_branches[static_cast<std::size_t>(*line.source_branch)];
  const ConicBranch& from_point = r.j0_branches[static_cast<std::size_t>(*point.source_branch)];
  EXPECT_NEAR(from_line.point(0.7).x, -1, 1e-15);
  EXPECT_NEAR(from_point.point(0.7).x, 1, 1e-15);
}

TEST(Classify, CaseSevenSignDecidesAttributionOnConjugates) {
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const QuadMap m = conjugate_exact(random_affine(rng), reference_example("7a").map(),
                                      random_affine(rng));
    const CriticalReport r = classify_critical(m);
    ASSERT_EQ(r.case_label(), "7a");
    ASSERT_TRUE(r.x13_sign);
    EXPECT_EQ(std::abs(*r.x13_sign), 1);
    EXPECT_EQ(j1_kinds(r), reference_example("7a").j1);
  }
}

TEST(Classify, CaseFiveProductVanishesOnConjugates) {
  Rng rng(67);
  for (const char* id : {"5a", "5b"}) {
    for (int i = 0; i < 200; ++i) {
      const QuadMap m = conjugate_exact(random_affine(rng), reference_example(id).map(),
                                        random_affine(rng));
      const CriticalReport r = classify_critical(m);
      ASSERT_EQ(r.case_number, 5);
      ASSERT_TRUE(r.x03_x24);
      EXPECT_TRUE(is_zero(*r.x03_x24));
      EXPECT_EQ(r.case_label(), id);
    }
  }
}

TEST(Classify, ClassificationTableOnConstructedCases) {
  Rng rng(71);
  for (const auto& e : reference_examples()) {
    for (int i = 0; i < 10000; ++i) {
      const QuadMap m = conjugate_exact(random_affine(rng), e.map(), random_affine(rng));
      const CriticalReport r = classify_critical(m);
      const auto why = conformance_violation(r);
      ASSERT_FALSE(why) << e.id << ": " << *why;
      ASSERT_EQ(r.case_label(), e.case_label);
      if (r.case_number == 3 || r.case_number == 4 || r.case_number == 6) {
        const auto diff = cusp_disagreement(r);
        ASSERT_FALSE(diff) << e.id << ": " << *diff;
      }
    }
  }
}

TEST(Classify, ClassificationTableOnRandomMaps) {
  Rng rng(73);
  for (int i = 0; i < 10000; ++i) {
    const CriticalReport r = classify_critical(random_map(rng));
    const auto why = conformance_violation(r);
    ASSERT_FALSE(why) << *why;
  }
}

TEST(Sampling, DeltoidComponent) {
  const QuadMap m = reference_example("3").map();
  const CriticalReport r = classify_critical(m);
  const RealQuadMap f = to_double(m);
  const auto samples = sample_component(r, f, r.j1.front(), 360, {-4, -4}, {4, 4});
  ASSERT_EQ(samples.size(), 360u);
  for (const auto& s : samples) {
    EXPECT_LT(distance_to_component(r, f, r.j1.front(), s.p), 1e-9);
    EXPECT_GE(s.t, 0);
    EXPECT_LT(s.t, 2 * std::numbers::pi);
  }
}
