#include <gtest/gtest.h>

#include <random>

#include "quadcrit/jacobian.hpp"
#include "quadcrit/verify.hpp"

using namespace quadcrit;

TEST(Core, ParsesCoefficientOrder) {
  const QuadMap m = parse_quad_map("-1.4,0,0,0,1,1,0,0,0,0.3,0,0");
  EXPECT_EQ(m.a(0), Scalar(-7, 5));
  EXPECT_EQ(m.a(5), Scalar(1));
  EXPECT_EQ(m.b(3), Scalar(3, 10));
  EXPECT_EQ(coefficient_strings(m)[0], "-7/5");
}

TEST(Core, RejectsAffineMapsAndBadInput) {
  EXPECT_THROW(parse_quad_map("0,0,0,1,0,0,0,0,0,0,1,0"), AffineMapNotSupported);
  EXPECT_THROW(parse_quad_map("1,2,3"), ParseError);
  EXPECT_THROW(parse_quad_map("1,0,0,0,0,0,0,0,0,0,0,x"), ParseError);
}

TEST(Core, EvalExamples) {
  const QuadMap deltoid = parse_quad_map("1,0,-1,2,0,0,0,2,0,0,-2,0");
  EXPECT_EQ(eval(deltoid, ExactPoint{Scalar(1), Scalar(0)}), (ExactPoint{Scalar(3), Scalar(0)}));
  const QuadMap henon = parse_quad_map("-1.4,0,0,0,1,1,0,0,0,0.3,0,0");
  EXPECT_EQ(eval(henon, ExactPoint{Scalar(0), Scalar(0)}), (ExactPoint{Scalar(1), Scalar(0)}));
}

TEST(Core, JacobianMatrixExample) {
  const QuadMap m = parse_quad_map("0,0,0,1,0,0,0,1,0,0,0,0");  // (x, xy)
  const auto J = jacobian_matrix(m, ExactPoint{Scalar(0), Scalar(5)});
  EXPECT_EQ(J.m[0][0], Scalar(1));
  EXPECT_EQ(J.m[0][1], Scalar(0));
  EXPECT_EQ(J.m[1][0], Scalar(5));
  EXPECT_EQ(J.m[1][1], Scalar(0));
}

TEST(Core, DeterminantEqualsJacobianConicExactly) {
  Rng rng(2024);
  for (int i = 0; i < 100000; ++i) {
    const QuadMap m = random_map(rng);
    const ExactPoint p{random_rational(rng), random_rational(rng)};
    ASSERT_EQ(jacobian_matrix(m, p).det(), jacobian_conic(m)(p)) << i;
  }
}

TEST(Core, AffineInverseComposesToIdentity) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const ExactAffine a = random_affine(rng);
    const ExactAffine id = compose(a, a.inverse());
    EXPECT_EQ(id.linear.m[0][0], Scalar(1));
    EXPECT_EQ(id.linear.m[0][1], Scalar(0));
    EXPECT_EQ(id.linear.m[1][0], Scalar(0));
    EXPECT_EQ(id.linear.m[1][1], Scalar(1));
    EXPECT_EQ(id.translation, (ExactPoint{Scalar(0), Scalar(0)}));
    const AffineTransform f = to_double(a);
    const AffineTransform fid = compose(f, f.inverse());
    EXPECT_NEAR(fid.linear.m[0][0], 1, 1e-12);
    EXPECT_NEAR(fid.linear.m[1][0], 0, 1e-12);
    EXPECT_NEAR(fid.translation.x, 0, 1e-12);
  }
}

TEST(Core, ConjugateMatchesComposition) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const QuadMap m = random_map(rng);
    const ExactAffine h = random_affine(rng), k = random_affine(rng);
    const QuadMap g = conjugate_exact(k, m, h);
    const ExactPoint p{random_rational(rng), random_rational(rng)};
    EXPECT_EQ(eval(g, h(p)), k(eval(m, p)));
  }
}
