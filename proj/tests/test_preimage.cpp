#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "quadcrit/examples.hpp"
#include "quadcrit/preimage.hpp"
#include "quadcrit/verify.hpp"

using namespace quadcrit;

namespace {

PreimageResult solve(const char* id, int u, int v) {
  return preimages(reference_example(id).map(), ExactPoint{Scalar(u), Scalar(v)});
}

void expect_points_solve(const QuadMap& map, const Point& target, const PreimageResult& r) {
  const RealQuadMap f = to_double(map);
  for (const auto& p : r.points) {
    // Values grow like |p|^2; the residual bound scales with them.
    const double scale = std::max({1.0, dot(p, p), norm(target)});
    EXPECT_LE(norm(eval(f, p) - target), 1e-8 * scale);
  }
}

std::map<int, int> histogram(const RegionCensus& c) {
  std::map<int, int> h;
  for (int k : c.counts) ++h[k];
  return h;
}

}  // namespace

TEST(Preimage, SquareMap) {
  const PreimageResult r = solve("2", 1, 0);
  EXPECT_FALSE(r.infinite);
  ASSERT_EQ(r.count, 2);
  ASSERT_EQ(r.points.size(), 2u);
  EXPECT_NEAR(std::abs(r.points[0].x), 1, 1e-12);
  EXPECT_NEAR(std::abs(r.points[1].x), 1, 1e-12);
  EXPECT_NEAR(r.points[0].x + r.points[1].x, 0, 1e-12);
}

TEST(Preimage, DeltoidInteriorHasFour) {
  const PreimageResult r = solve("3", 0, 0);
  EXPECT_EQ(r.count, 4);
  EXPECT_TRUE(r.exact);
  expect_points_solve(reference_example("3").map(), {0, 0}, r);
}

TEST(Preimage, InfiniteAndEmpty) {
  EXPECT_TRUE(solve("7b", 0, 0).infinite);
  EXPECT_TRUE(solve("8a", 0, 0).infinite);
  EXPECT_TRUE(solve("9a", 1, 0).infinite);
  EXPECT_FALSE(solve("9a", 1, 1).infinite);
  EXPECT_EQ(solve("9a", 1, 1).count, 0);
  const PreimageResult r = solve("8b", -1, 0);
  EXPECT_FALSE(r.infinite);
  EXPECT_EQ(r.count, 0);
}

TEST(Preimage, TangentialSolutionsFlagged) {
  // (3, 0) is the deltoid cusp: the preimage (1, 0) is a multiple solution.
  const PreimageResult r = solve("3", 3, 0);
  EXPECT_TRUE(r.has_tangential);
  EXPECT_EQ(r.count, 2);
  ASSERT_EQ(r.tangential.size(), r.points.size());
  // (x^2, y) on the fold: x^2 = 0 has a double root.
  const PreimageResult fold = solve("8b", 0, 2);
  EXPECT_EQ(fold.count, 1);
  EXPECT_TRUE(fold.has_tangential);
}

TEST(Preimage, ExactCountMatchesNumericOracle) {
  Rng rng(81);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const QuadMap m = random_map(rng);
    const ExactPoint t{random_rational(rng), random_rational(rng)};
    const PreimageResult exact = preimages(m, t);
    if (exact.infinite || exact.has_tangential) continue;
    const PreimageResult numeric = preimages_numeric(m, to_double(t));
    ASSERT_EQ(exact.count, numeric.count) << i;
    ASSERT_EQ(static_cast<int>(exact.points.size()), exact.count) << i;
    expect_points_solve(m, to_double(t), exact);
    ++compared;
  }
  EXPECT_GT(compared, 9000);
}

TEST(Preimage, CountsInvariantUnderConjugation) {
  Rng rng(83);
  for (int i = 0; i < 500; ++i) {
    const QuadMap m = random_map(rng);
    const ExactAffine h = random_affine(rng), k = random_affine(rng);
    const QuadMap g = conjugate_exact(k, m, h);
    const ExactPoint t{random_rational(rng), random_rational(rng)};
    const PreimageResult a = preimages(m, t, PreimageOptions{false});
    const PreimageResult b = preimages(g, k(t), PreimageOptions{false});
    EXPECT_EQ(a.infinite, b.infinite);
    EXPECT_EQ(a.count, b.count);
  }
}

TEST(Census, HenonEverywhereOne) {
  const auto h = histogram(region_census(reference_example("1").map(), {{-3, -3}, {3, 3}}, 16));
  EXPECT_EQ(h, (std::map<int, int>{{1, 256}}));
}

TEST(Census, DeltoidTwoAndFour) {
  const auto c = region_census(reference_example("3").map(), {{-4, -4}, {4, 4}}, 32);
  const auto h = histogram(c);
  EXPECT_GT(h.at(2), 0);
  EXPECT_GT(h.at(4), 0);
  for (const auto& [k, n] : h) EXPECT_TRUE(k == 2 || k == 4 || k == kInfiniteCount) << k;
  // Cell centers: (lo + (i + 1/2) w)
  EXPECT_EQ(c.center(0, 0), (Point{-3.875, -3.875}));
  EXPECT_EQ(c.at(16, 16), 4);  // near the origin
}

TEST(Census, IntersectingLinesRegions) {
  const auto h5a = histogram(region_census(reference_example("5a").map(), {{-3, -3}, {3, 3}}, 24));
  for (const auto& [k, n] : h5a) EXPECT_TRUE(k == 0 || k == 2 || k == 4 || k == kInfiniteCount);
  EXPECT_GT(h5a.at(0), 0);
  EXPECT_GT(h5a.at(2), 0);
  EXPECT_GT(h5a.at(4), 0);
  const auto c5b = region_census(reference_example("5b").map(), {{-3, -3}, {3, 3}}, 24);
  for (int i = 0; i < 24; ++i) {
    for (int j = 0; j < 24; ++j) {
      const Point p = c5b.center(i, j);
      EXPECT_EQ(c5b.at(i, j), p.x > 0 && p.y > 0 ? 4 : 0);
    }
  }
}

TEST(Census, RejectsBadInput) {
  EXPECT_THROW(region_census(reference_example("1").map(), {{0, 0}, {1, 1}}, 1), Error);
  EXPECT_THROW(region_census(reference_example("1").map(), {{1, 0}, {0, 1}}, 8), Error);
}

TEST(Fold, DeltoidSmoothPointsChangeByTwo) {
  const QuadMap m = reference_example("3").map();
  const CriticalReport r = classify_critical(m);
  for (const auto& p : fold_crossing_check(m, r, r.j1.front(), 24)) {
    EXPECT_EQ(std::abs(p.after - p.before), 2);
    EXPECT_EQ(std::min(p.before, p.after), 2);
  }
}

TEST(Fold, CaseFiveParabolaChangesByFour) {
  // Both J0 lines of (x^2 + y, y^2) map onto the parabola side of the picture.
  const QuadMap m = reference_example("5a").map();
  const CriticalReport r = classify_critical(m);
  for (const auto& c : r.j1) {
    if (c.kind != J1Kind::ParabolaImage) continue;
    int fours = 0;
    for (const auto& p : fold_crossing_check(m, r, c, 16)) {
      if (p.point.x > 0 && p.point.y > 0) fours += std::abs(p.after - p.before) == 2 &&
                                                   std::max(p.before, p.after) == 4;
    }
    EXPECT_GT(fours, 0);
  }
}

TEST(Fold, PointImagesOfCaseSeven) {
  const QuadMap m = reference_example("7b").map();
  const CriticalReport r = classify_critical(m);
  for (const auto& p : fold_crossing_check(m, r, r.j1.front(), 8)) {
    EXPECT_EQ(p.before, kInfiniteCount);
    EXPECT_GE(p.after, 0);
  }
}
