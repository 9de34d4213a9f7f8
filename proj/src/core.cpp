#include "quadcrit/core.hpp"

#include <sstream>

namespace quadcrit {

QuadMap make_quad_map(const std::array<Scalar, 12>& coefficients) {
  QuadMap::Coefficients a, b;
  for (std::size_t i = 0; i < 6; ++i) {
    a[i] = coefficients[i];
    b[i] = coefficients[6 + i];
  }
  return {a, b};
}

QuadMap parse_quad_map(const std::string& text) {
  std::array<Scalar, 12> coefficients;
  std::size_t count = 0;
  std::stringstream stream(text);
  std::string field;
  while (std::getline(stream, field, ',')) {
    if (count == 12) throw ParseError("expected 12 coefficients, got more");
    coefficients[count++] = parse_scalar(field);
  }
  if (count != 12) {
    throw ParseError("expected 12 coefficients a0..a5,b0..b5, got " + std::to_string(count));
  }
  return make_quad_map(coefficients);
}

std::array<std::string, 12> coefficient_strings(const QuadMap& map) {
  std::array<std::string, 12> out;
  for (int i = 0; i < 6; ++i) {
    out[static_cast<std::size_t>(i)] = to_string(map.a(i));
    out[static_cast<std::size_t>(6 + i)] = to_string(map.b(i));
  }
  return out;
}

RealQuadMap to_double(const QuadMap& map) {
  RealQuadMap::Coefficients a, b;
  for (int i = 0; i < 6; ++i) {
    a[static_cast<std::size_t>(i)] = map.a(i).get_d();
    b[static_cast<std::size_t>(i)] = map.b(i).get_d();
  }
  return {a, b};
}

RealQuadMap to_double(const BasicQuadMap<Surd>& map) {
  RealQuadMap::Coefficients a, b;
  for (int i = 0; i < 6; ++i) {
    a[static_cast<std::size_t>(i)] = map.a(i).to_double();
    b[static_cast<std::size_t>(i)] = map.b(i).to_double();
  }
  return {a, b};
}

Point eval(const QuadMap& map, const Point& p) { return eval(to_double(map), p); }

namespace {
template <class T>
AffineTransform affine_to_double(const BasicAffine<T>& t) {
  AffineTransform out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.linear.m[i][j] = to_double(t.linear.m[i][j]);
  }
  out.translation = {to_double(t.translation.x), to_double(t.translation.y)};
  return out;
}
}  // namespace

AffineTransform to_double(const BasicAffine<Scalar>& t) { return affine_to_double(t); }
AffineTransform to_double(const BasicAffine<Surd>& t) { return affine_to_double(t); }

}  // namespace quadcrit
