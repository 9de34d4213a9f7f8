#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "quadcrit/errors.hpp"
#include "quadcrit/scalar.hpp"

namespace quadcrit {

template <class T>
struct Vec2 {
  T x{0};
  T y{0};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {T(a.x + b.x), T(a.y + b.y)}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {T(a.x - b.x), T(a.y - b.y)}; }
  friend Vec2 operator*(const T& s, const Vec2& v) { return {T(s * v.x), T(s * v.y)}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

/// Numerically derived point.
using Point = Vec2<double>;
/// Point with exact rational coordinates.
using ExactPoint = Vec2<Scalar>;

template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return T(a.x * b.x + a.y * b.y);
}
template <class T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
  return T(a.x * b.y - a.y * b.x);
}
inline double norm(const Point& p) { return std::hypot(p.x, p.y); }

template <class T>
Point to_double(const Vec2<T>& p) {
  return {to_double(p.x), to_double(p.y)};
}

/// Row-major 2x2 matrix.
template <class T>
struct Mat2 {
  std::array<std::array<T, 2>, 2> m{};

  T det() const { return T(m[0][0] * m[1][1] - m[0][1] * m[1][0]); }
  Vec2<T> operator*(const Vec2<T>& v) const {
    return {T(m[0][0] * v.x + m[0][1] * v.y), T(m[1][0] * v.x + m[1][1] * v.y)};
  }
};

/// Planar quadratic map
///   (a0 x^2 + a1 xy + a2 y^2 + a3 x + a4 y + a5,
///    b0 x^2 + b1 xy + b2 y^2 + b3 x + b4 y + b5).
///
/// Construction rejects affine maps (all six quadratic coefficients zero).
template <class T>
class BasicQuadMap {
 public:
  using Coefficients = std::array<T, 6>;

  BasicQuadMap(Coefficients a, Coefficients b) : a_(std::move(a)), b_(std::move(b)) {
    if (is_zero(a_[0]) && is_zero(a_[1]) && is_zero(a_[2]) && is_zero(b_[0]) && is_zero(b_[1]) &&
        is_zero(b_[2])) {
      throw AffineMapNotSupported();
    }
  }

  const Coefficients& a() const { return a_; }
  const Coefficients& b() const { return b_; }
  const T& a(int i) const { return a_[static_cast<std::size_t>(i)]; }
  const T& b(int i) const { return b_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const BasicQuadMap& l, const BasicQuadMap& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  Coefficients a_;
  Coefficients b_;
};

using QuadMap = BasicQuadMap<Scalar>;
using RealQuadMap = BasicQuadMap<double>;

/// Builds a map from the CLI coefficient order a0..a5, b0..b5.
QuadMap make_quad_map(const std::array<Scalar, 12>& coefficients);
/// Parses 12 comma-separated rationals.
QuadMap parse_quad_map(const std::string& text);
std::array<std::string, 12> coefficient_strings(const QuadMap& map);

RealQuadMap to_double(const QuadMap& map);

template <class T>
BasicQuadMap<Surd> to_surd(const BasicQuadMap<T>& map) {
  typename BasicQuadMap<Surd>::Coefficients a, b;
  for (int i = 0; i < 6; ++i) {
    a[static_cast<std::size_t>(i)] = Surd(map.a(i));
    b[static_cast<std::size_t>(i)] = Surd(map.b(i));
  }
  return {a, b};
}
RealQuadMap to_double(const BasicQuadMap<Surd>& map);

/// Value of one quadratic component with coefficients c0..c5 at p.
template <class T>
T eval_component(const std::array<T, 6>& c, const Vec2<T>& p) {
  return T(c[0] * p.x * p.x + c[1] * p.x * p.y + c[2] * p.y * p.y + c[3] * p.x + c[4] * p.y + c[5]);
}

template <class T>
Vec2<T> eval(const BasicQuadMap<T>& map, const Vec2<T>& p) {
  return {eval_component(map.a(), p), eval_component(map.b(), p)};
}

/// Float evaluation of an exact map.
Point eval(const QuadMap& map, const Point& p);

/// Rows are the gradients of the two components.
template <class T>
Mat2<T> jacobian_matrix(const BasicQuadMap<T>& map, const Vec2<T>& p) {
  Mat2<T> j;
  j.m[0][0] = T(2 * map.a(0) * p.x + map.a(1) * p.y + map.a(3));
  j.m[0][1] = T(map.a(1) * p.x + 2 * map.a(2) * p.y + map.a(4));
  j.m[1][0] = T(2 * map.b(0) * p.x + map.b(1) * p.y + map.b(3));
  j.m[1][1] = T(map.b(1) * p.x + 2 * map.b(2) * p.y + map.b(4));
  return j;
}

/// Symmetric second derivative D^2F(p)[u, v]; constant for quadratic maps.
template <class T>
Vec2<T> second_derivative(const BasicQuadMap<T>& map, const Vec2<T>& u, const Vec2<T>& v) {
  auto comp = [&](const std::array<T, 6>& c) {
    return T(2 * c[0] * u.x * v.x + c[1] * (u.x * v.y + u.y * v.x) + 2 * c[2] * u.y * v.y);
  };
  return {comp(map.a()), comp(map.b())};
}

/// Invertible affine map p -> M p + t.
template <class T>
struct BasicAffine {
  Mat2<T> linear;
  Vec2<T> translation;

  static BasicAffine identity() {
    BasicAffine out;
    out.linear.m = {{{T(1), T(0)}, {T(0), T(1)}}};
    return out;
  }

  T det() const { return linear.det(); }
  Vec2<T> operator()(const Vec2<T>& p) const { return linear * p + translation; }
  Vec2<T> apply_linear(const Vec2<T>& v) const { return linear * v; }

  BasicAffine inverse() const {
    const T d = det();
    if (is_zero(d)) throw std::domain_error("singular affine transform");
    BasicAffine out;
    out.linear.m[0][0] = T(linear.m[1][1] / d);
    out.linear.m[0][1] = T(-linear.m[0][1] / d);
    out.linear.m[1][0] = T(-linear.m[1][0] / d);
    out.linear.m[1][1] = T(linear.m[0][0] / d);
    const Vec2<T> mt = out.linear * translation;
    out.translation = {T(-mt.x), T(-mt.y)};
    return out;
  }
};

/// (outer o inner)(p) = outer(inner(p)).
template <class T>
BasicAffine<T> compose(const BasicAffine<T>& outer, const BasicAffine<T>& inner) {
  BasicAffine<T> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.linear.m[i][j] = T(outer.linear.m[i][0] * inner.linear.m[0][j] +
                             outer.linear.m[i][1] * inner.linear.m[1][j]);
    }
  }
  out.translation = outer(inner.translation);
  return out;
}

using AffineTransform = BasicAffine<double>;
using ExactAffine = BasicAffine<Scalar>;

AffineTransform to_double(const BasicAffine<Scalar>& t);
AffineTransform to_double(const BasicAffine<Surd>& t);

/// Coefficients (c0..c5) of the quadratic q(A(p)) for an affine A.
template <class T>
std::array<T, 6> pullback_component(const std::array<T, 6>& c, const BasicAffine<T>& A) {
  // x = l0 . (X, Y, 1), y = l1 . (X, Y, 1)
  const std::array<T, 3> lx{A.linear.m[0][0], A.linear.m[0][1], A.translation.x};
  const std::array<T, 3> ly{A.linear.m[1][0], A.linear.m[1][1], A.translation.y};
  // Product of two linear forms in (X, Y, 1) as c0..c5.
  auto product = [](const std::array<T, 3>& u, const std::array<T, 3>& v) {
    return std::array<T, 6>{T(u[0] * v[0]),
                            T(u[0] * v[1] + u[1] * v[0]),
                            T(u[1] * v[1]),
                            T(u[0] * v[2] + u[2] * v[0]),
                            T(u[1] * v[2] + u[2] * v[1]),
                            T(u[2] * v[2])};
  };
  const auto xx = product(lx, lx);
  const auto xy = product(lx, ly);
  const auto yy = product(ly, ly);
  std::array<T, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = T(c[0] * xx[i] + c[1] * xy[i] + c[2] * yy[i]);
  out[3] += T(c[3] * lx[0] + c[4] * ly[0]);
  out[4] += T(c[3] * lx[1] + c[4] * ly[1]);
  out[5] += T(c[3] * lx[2] + c[4] * ly[2] + c[5]);
  return out;
}

/// k o F o h_inverse for affine k and h_inverse.
template <class T>
BasicQuadMap<T> conjugate(const BasicAffine<T>& k, const BasicQuadMap<T>& map,
                          const BasicAffine<T>& h_inverse) {
  const auto fa = pullback_component(map.a(), h_inverse);
  const auto fb = pullback_component(map.b(), h_inverse);
  std::array<T, 6> ga{}, gb{};
  for (std::size_t i = 0; i < 6; ++i) {
    ga[i] = T(k.linear.m[0][0] * fa[i] + k.linear.m[0][1] * fb[i]);
    gb[i] = T(k.linear.m[1][0] * fa[i] + k.linear.m[1][1] * fb[i]);
  }
  ga[5] += k.translation.x;
  gb[5] += k.translation.y;
  return {ga, gb};
}

}  // namespace quadcrit
