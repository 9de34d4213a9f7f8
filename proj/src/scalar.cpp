#include "quadcrit/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "quadcrit/errors.hpp"

namespace quadcrit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::AffineMapNotSupported: return "AffineMapNotSupported";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::NotACurve: return "NotACurve";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::RootFindingFailed: return "RootFindingFailed";
    case ErrorKind::DegenerateSystemUnresolved: return "DegenerateSystemUnresolved";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  auto fail = [&]() -> ParseError {
    return ParseError("cannot parse '" + std::string(original) + "' as a rational number");
  };
  if (text.empty()) throw fail();

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Scalar value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    const mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(original) + "'");
    value = Scalar(n, d);
    value.canonicalize();
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) throw fail();
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw fail();
    if (!int_part.empty() && !all_digits(int_part)) throw fail();
    if (!frac_part.empty() && !all_digits(frac_part)) throw fail();

    const mpz_class digits(std::string(int_part) + std::string(frac_part));
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) {
      value = Scalar(digits * pow10(static_cast<unsigned long>(exponent)));
    } else {
      value = Scalar(digits, pow10(static_cast<unsigned long>(-exponent)));
      value.canonicalize();
    }
  }
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& value) {
  Scalar canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Scalar exact_from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite value has no rational form");
  Scalar q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

bool rational_sqrt(const Scalar& value, Scalar& root) {
  if (sgn(value) < 0) return false;
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
    return false;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value.get_den_mpz_t());
  root = Scalar(n, d);
  root.canonicalize();
  return true;
}

// ---------------------------------------------------------------------------
// Surd

Surd::Surd(Scalar rational, Scalar coeff, Scalar radicand)
    : rational_(std::move(rational)), coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (sgn(radicand_) < 0) throw std::domain_error("negative radicand");
  normalize();
}

Surd Surd::sqrt_of(const Scalar& r) { return Surd(Scalar(0), Scalar(1), r); }

void Surd::normalize() {
  if (sgn(coeff_) == 0) {
    radicand_ = 0;
    return;
  }
  Scalar root;
  if (rational_sqrt(radicand_, root)) {
    rational_ += coeff_ * root;
    coeff_ = 0;
    radicand_ = 0;
  }
}

void Surd::adopt_radicand(const Surd& other) {
  if (other.is_rational()) return;
  if (is_rational()) {
    radicand_ = other.radicand_;
    return;
  }
  if (radicand_ != other.radicand_) {
    throw std::domain_error("cannot combine surds with radicands " + radicand_.get_str() +
                            " and " + other.radicand_.get_str());
  }
}

int Surd::sign() const {
  const int sa = sgn(rational_);
  const int sb = sgn(coeff_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 r.
  const Scalar lhs = rational_ * rational_;
  const Scalar rhs = coeff_ * coeff_ * radicand_;
  const int c = cmp(lhs, rhs);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

double Surd::to_double() const {
  if (is_rational()) return rational_.get_d();
  return rational_.get_d() + coeff_.get_d() * std::sqrt(radicand_.get_d());
}

Surd Surd::conjugate() const {
  Surd out = *this;
  out.coeff_ = -coeff_;
  return out;
}

Surd Surd::operator-() const {
  Surd out = *this;
  out.rational_ = -rational_;
  out.coeff_ = -coeff_;
  return out;
}

Surd& Surd::operator+=(const Surd& other) {
  adopt_radicand(other);
  rational_ += other.rational_;
  coeff_ += other.coeff_;
  normalize();
  return *this;
}

Surd& Surd::operator-=(const Surd& other) {
  adopt_radicand(other);
  rational_ -= other.rational_;
  coeff_ -= other.coeff_;
  normalize();
  return *this;
}

Surd& Surd::operator*=(const Surd& other) {
  if (other.is_rational()) {
    rational_ *= other.rational_;
    coeff_ *= other.rational_;
    normalize();
    return *this;
  }
  adopt_radicand(other);
  const Scalar a = rational_ * other.rational_ + coeff_ * other.coeff_ * radicand_;
  const Scalar b = rational_ * other.coeff_ + coeff_ * other.rational_;
  rational_ = a;
  coeff_ = b;
  normalize();
  return *this;
}

Surd& Surd::operator/=(const Surd& other) {
  if (other.sign() == 0) throw std::domain_error("division by zero");
  if (other.is_rational()) {
    rational_ /= other.rational_;
    coeff_ /= other.rational_;
    normalize();
    return *this;
  }
  // x / y = x * conj(y) / (y * conj(y)), the denominator being rational.
  const Scalar norm =
      other.rational_ * other.rational_ - other.coeff_ * other.coeff_ * other.radicand_;
  *this *= other.conjugate();
  rational_ /= norm;
  coeff_ /= norm;
  normalize();
  return *this;
}

std::string to_string(const Surd& value) {
  if (value.is_rational()) return to_string(value.rational_part());
  std::string out;
  if (sgn(value.rational_part()) != 0) {
    out = to_string(value.rational_part());
    out += sgn(value.irrational_coeff()) < 0 ? " - " : " + ";
    out += to_string(Scalar(abs(value.irrational_coeff())));
  } else {
    out = to_string(value.irrational_coeff());
  }
  out += "*sqrt(" + to_string(value.radicand()) + ")";
  return out;
}

}  // namespace quadcrit
