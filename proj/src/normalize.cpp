#include "quadcrit/normalize.hpp"

namespace quadcrit {

NormalizingTransform normalizing_transform(const ConicClass& cls) {
  const StandardFrame sf = standard_frame(cls);
  NormalizingTransform out{sf.kind, sf.frame.inverse(), std::nullopt, sf.multiplier,
                           sf.exact_multiplier};
  if (sf.exact) out.exact_h = sf.exact->inverse();
  return out;
}

namespace {

template <class T>
BasicAffine<T> range_scaling(const T& first) {
  BasicAffine<T> k = BasicAffine<T>::identity();
  k.linear.m[0][0] = first;
  return k;
}

}  // namespace

NormalizedMap normalized_map(const QuadMap& map) {
  return normalized_map(map, classify_conic(jacobian_conic(map)));
}

NormalizedMap normalized_map(const QuadMap& map, const ConicClass& j0) {
  const StandardFrame sf = standard_frame(j0);
  NormalizedMap out{j0, RealQuadMap({1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}), std::nullopt, {}, {},
                    {}, {}, sf.multiplier};
  if (sf.exact) {
    const BasicAffine<Surd>& h_inv = *sf.exact;
    const Surd scale = Surd(1) / (*sf.exact_multiplier * h_inv.det());
    const BasicAffine<Surd> k = range_scaling(scale);
    out.exact_map = conjugate(k, to_surd(map), h_inv);
    out.map = to_double(*out.exact_map);
    out.h_inverse = to_double(h_inv);
    out.h = to_double(h_inv.inverse());
    out.k = to_double(k);
    out.k_inverse = to_double(k.inverse());
    return out;
  }
  const AffineTransform& h_inv = sf.frame;
  const AffineTransform k = range_scaling(1.0 / (sf.multiplier * h_inv.det()));
  out.map = conjugate(k, to_double(map), h_inv);
  out.h_inverse = h_inv;
  out.h = h_inv.inverse();
  out.k = k;
  out.k_inverse = k.inverse();
  return out;
}

Point transport_point(const AffineTransform& transform, const Point& p) { return transform(p); }

}  // namespace quadcrit
