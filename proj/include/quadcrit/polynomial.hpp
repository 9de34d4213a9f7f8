#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "quadcrit/scalar.hpp"

namespace quadcrit {

/// Dense univariate polynomial with coefficients in ascending degree order.
/// The zero polynomial has degree -1 and no stored coefficients.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
  /// x - root
  static Polynomial linear_factor(const T& root) { return Polynomial(std::vector<T>{-root, T(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coefficient(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * T(static_cast<int>(i));
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& factor) {
    for (auto& c : coeffs_) c *= factor;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const T& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const T& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<T> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_value(coeffs_.back())) coeffs_.pop_back();
  }
  static bool is_zero_value(const T& v) { return quadcrit::is_zero(v); }

  std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Scalar>;
using RealPolynomial = Polynomial<double>;

RealPolynomial to_double(const RationalPolynomial& p);

// --- exact tools over Q ---------------------------------------------------

struct DivMod {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

DivMod divmod(const RationalPolynomial& dividend, const RationalPolynomial& divisor);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// p / gcd(p, p'), made monic.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... for a nonzero polynomial.
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Number of distinct real roots (Sturm's theorem over the whole line).
int count_real_roots(const RationalPolynomial& p);

/// Distinct real roots in (lo, hi]; requires p(lo) != 0.
int count_real_roots(const RationalPolynomial& p, const Scalar& lo, const Scalar& hi);

/// Interval (lower, upper] holding exactly one root of a squarefree
/// polynomial; `exact` is set when the root was hit exactly.
struct RootInterval {
  Scalar lower;
  Scalar upper;
  std::optional<Scalar> exact;
};

/// Isolates every real root of `p` (made squarefree internally), sorted.
std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p);

/// Bisects an isolating interval until it pins a double; returns the root.
double refine_root(const RationalPolynomial& squarefree, RootInterval interval);

/// Real roots as doubles, sorted ascending, distinct.
std::vector<double> real_roots(const RationalPolynomial& p);

// --- floating-point tools ---------------------------------------------------

/// Complex roots via eigenvalues of the companion matrix. Leading
/// coefficients below 1e-13 of the largest one are treated as zero.
std::vector<std::complex<double>> companion_roots(const RealPolynomial& p);

/// Real roots of `p`: companion eigenvalues whose imaginary part is small
/// relative to their modulus, Newton-polished, clustered at 1e-12 relative.
std::vector<double> real_roots(const RealPolynomial& p, double imag_tolerance = 1e-7);

/// Newton polish on p starting at x; returns the improved root (or x when
/// the iteration does not reduce |p|).
double newton_polish(const RealPolynomial& p, double x, int max_iterations = 50);

}  // namespace quadcrit
