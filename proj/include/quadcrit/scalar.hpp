#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace quadcrit {

/// Exact rational scalar. gmpxx keeps values canonical (gcd-reduced,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses an integer ("-3"), a fraction ("22/7") or a finite decimal with an
/// optional exponent ("1.4", "-.25", "3e-2") into an exact rational.
/// Throws ParseError on anything else.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

/// Float view. mpq_get_d truncates, so the result is within one ulp.
inline double to_double(const Scalar& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

inline int sign(const Scalar& value) { return sgn(value); }
inline int sign(double value) { return (value > 0) - (value < 0); }

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }
inline bool is_zero(double value) { return value == 0.0; }

/// Exact conversion of a finite double to a rational.
Scalar exact_from_double(double value);

/// True when `value` is the square of a rational; `root` receives the root.
bool rational_sqrt(const Scalar& value, Scalar& root);

/// Element of the quadratic field Q(sqrt(r)): rational + coeff * sqrt(r).
///
/// Line factorizations of degenerate conics live in such a field; keeping
/// them exact lets the degenerate cases of the classification be decided by
/// exact sign tests. Values with different radicands may only be combined
/// when one of them is rational.
class Surd {
 public:
  Surd() = default;
  Surd(int value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Surd(Scalar value) : rational_(std::move(value)) {}  // NOLINT
  Surd(Scalar rational, Scalar coeff, Scalar radicand);

  /// sqrt(r) for r >= 0; folds to a rational when r is a perfect square.
  static Surd sqrt_of(const Scalar& r);

  const Scalar& rational_part() const { return rational_; }
  const Scalar& irrational_coeff() const { return coeff_; }
  const Scalar& radicand() const { return radicand_; }
  bool is_rational() const { return sgn(coeff_) == 0; }

  int sign() const;
  double to_double() const;
  Surd conjugate() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& other);
  Surd& operator-=(const Surd& other);
  Surd& operator*=(const Surd& other);
  Surd& operator/=(const Surd& other);

  friend Surd operator+(Surd lhs, const Surd& rhs) { return lhs += rhs; }
  friend Surd operator-(Surd lhs, const Surd& rhs) { return lhs -= rhs; }
  friend Surd operator*(Surd lhs, const Surd& rhs) { return lhs *= rhs; }
  friend Surd operator/(Surd lhs, const Surd& rhs) { return lhs /= rhs; }
  friend bool operator==(const Surd& lhs, const Surd& rhs) { return (lhs - rhs).sign() == 0; }
  friend bool operator<(const Surd& lhs, const Surd& rhs) { return (lhs - rhs).sign() < 0; }

 private:
  void normalize();
  void adopt_radicand(const Surd& other);

  Scalar rational_{0};
  Scalar coeff_{0};
  Scalar radicand_{0};
};

std::string to_string(const Surd& value);
inline double to_double(const Surd& value) { return value.to_double(); }
inline int sign(const Surd& value) { return value.sign(); }
inline bool is_zero(const Surd& value) { return value.sign() == 0; }

}  // namespace quadcrit
