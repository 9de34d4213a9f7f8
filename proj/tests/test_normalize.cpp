#include <gtest/gtest.h>

#include "quadcrit/examples.hpp"
#include "quadcrit/normalize.hpp"
#include "quadcrit/verify.hpp"

using namespace quadcrit;

namespace {

void expect_standard(const NormalizedMap& nm) {
  const auto got = jacobian_conic(nm.map).coefficients();
  const auto want = to_double(standard_conic(nm.j0.kind)).coefficients();
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(got[i], want[i], 1e-10) << i;
}

}  // namespace

TEST(Normalize, DeltoidIsAlreadyStandard) {
  const NormalizedMap nm = normalized_map(reference_example("3").map());
  expect_standard(nm);
  EXPECT_NEAR(nm.multiplier, 4, 1e-12);
  EXPECT_NEAR(nm.h.linear.m[0][0], 1, 1e-12);
  EXPECT_NEAR(nm.h.linear.m[1][1], 1, 1e-12);
  EXPECT_NEAR(nm.h.translation.x, 0, 1e-12);
}

TEST(Normalize, HyperbolaGoesToXyMinusOne) {
  const ConicClass cls = classify_conic(ConicSection<Scalar>(1, 0, -1, 0, 0, -1));
  const NormalizingTransform t = normalizing_transform(cls);
  const ConicSection<double> c = to_double(cls.conic);
  const AffineTransform h_inv = t.h.inverse();
  for (Point q : {Point{1, 1}, Point{2, 0.5}, Point{-3, 0.25}}) {
    EXPECT_NEAR(c(h_inv(q)), t.multiplier * (q.x * q.y - 1), 1e-10);
  }
}

TEST(Normalize, ReferenceMapsNormalize) {
  for (const auto& e : reference_examples()) {
    const ConicClass cls = classify_conic(jacobian_conic(e.map()));
    if (cls.kind == ConicKind::Empty || cls.kind == ConicKind::SinglePoint ||
        cls.kind == ConicKind::WholePlane) {
      EXPECT_THROW(normalized_map(e.map()), Error) << e.id;
      continue;
    }
    expect_standard(normalized_map(e.map()));
  }
}

TEST(Normalize, RandomConjugatesNormalize) {
  Rng rng(41);
  const auto& ex = reference_examples();
  int done = 0;
  for (int i = 0; i < 600; ++i) {
    const auto& e = ex[static_cast<std::size_t>(i) % ex.size()];
    const QuadMap m = conjugate_exact(random_affine(rng), e.map(), random_affine(rng));
    const ConicClass cls = classify_conic(jacobian_conic(m));
    if (cls.kind == ConicKind::Empty || cls.kind == ConicKind::SinglePoint ||
        cls.kind == ConicKind::WholePlane) {
      continue;
    }
    const NormalizedMap nm = normalized_map(m, cls);
    expect_standard(nm);
    if (nm.exact_map) {
      const auto exact = jacobian_conic(*nm.exact_map).coefficients();
      const auto want = standard_conic(cls.kind).coefficients();
      for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(exact[k], Surd(want[k]));
    }
    ++done;
  }
  // 10 of the 15 examples have a curve to normalize.
  EXPECT_EQ(done, 400);
}

TEST(Normalize, NormalizedMapIsConjugate) {
  const QuadMap m = reference_example("4").map();
  const NormalizedMap nm = normalized_map(m);
  const RealQuadMap f = to_double(m);
  for (Point p : {Point{0.2, -0.4}, Point{1.5, 2}}) {
    const Point lhs = eval(nm.map, nm.h(p));
    const Point rhs = nm.k(eval(f, p));
    EXPECT_NEAR(lhs.x, rhs.x, 1e-12);
    EXPECT_NEAR(lhs.y, rhs.y, 1e-12);
  }
}

TEST(Normalize, TransportPoint) {
  AffineTransform t = AffineTransform::identity();
  t.linear.m[0][1] = 2;
  t.translation = {1, -1};
  const Point p = transport_point(t, {3, 4});
  EXPECT_DOUBLE_EQ(p.x, 12);
  EXPECT_DOUBLE_EQ(p.y, 3);
}
