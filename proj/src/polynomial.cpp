#include "quadcrit/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadcrit {

RealPolynomial to_double(const RationalPolynomial& p) {
  std::vector<double> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.push_back(v.get_d());
  return RealPolynomial(std::move(c));
}

DivMod divmod(const RationalPolynomial& dividend, const RationalPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {RationalPolynomial{}, dividend};
  std::vector<Scalar> quot(static_cast<std::size_t>(dividend.degree() - dd + 1), Scalar(0));
  const Scalar lead_inv = 1 / divisor.leading();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const Scalar factor = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = factor;
    if (sgn(factor) == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * divisor.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

namespace {

RationalPolynomial make_monic(RationalPolynomial p) {
  if (p.is_zero()) return p;
  const Scalar inv = 1 / p.leading();
  return p * inv;
}

// Sign of p at +inf (at_plus) or -inf.
int sign_at_infinity(const RationalPolynomial& p, bool at_plus) {
  if (p.is_zero()) return 0;
  const int s = sgn(p.leading());
  return (at_plus || p.degree() % 2 == 0) ? s : -s;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<RationalPolynomial>& chain, const Scalar& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sgn(q(x)));
  return sign_changes(signs);
}

int variations_at_infinity(const std::vector<RationalPolynomial>& chain, bool at_plus) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_at_infinity(q, at_plus));
  return sign_changes(signs);
}

Scalar cauchy_bound(const RationalPolynomial& p) {
  Scalar bound(0);
  const Scalar lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    const Scalar ratio = abs(p.coefficients()[static_cast<std::size_t>(i)]) / lead;
    if (ratio > bound) bound = ratio;
  }
  return bound + 1;
}

}  // namespace

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return make_monic(p);
  const RationalPolynomial g = gcd(p, p.derivative());
  return make_monic(divmod(p, g).quotient);
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  std::vector<RationalPolynomial> chain{p};
  RationalPolynomial next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    // Positive rescaling keeps the sign pattern; monic keeps numbers small.
    RationalPolynomial r = divmod(a, b).remainder;
    if (r.is_zero()) break;
    const Scalar scale = -1 / abs(r.leading());
    next = r * scale;
  }
  return chain;
}

int count_real_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_sequence(p);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

int count_real_roots(const RationalPolynomial& p, const Scalar& lo, const Scalar& hi) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_sequence(p);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  const RationalPolynomial sf = squarefree_part(p);
  const auto chain = sturm_sequence(sf);
  const Scalar bound = cauchy_bound(sf);

  struct Pending {
    Scalar lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  const int total = variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
  if (total == 0) return out;
  // Endpoints +-bound are never roots (strict Cauchy bound).
  stack.push_back({Scalar(-bound), bound, total});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi, std::nullopt});
      continue;
    }
    Scalar mid = (cur.lo + cur.hi) / 2;
    if (sgn(sf(mid)) == 0) {
      // Exact rational root at the midpoint: record it, split around it.
      const Scalar width = (cur.hi - cur.lo) / 4;
      Scalar left = mid - width / 1024;
      Scalar right = mid + width / 1024;
      while (sgn(sf(left)) == 0 || sgn(sf(right)) == 0 ||
             variations_at(chain, left) - variations_at(chain, right) != 1) {
        left = (left + mid) / 2;
        right = (right + mid) / 2;
      }
      out.push_back({left, right, mid});
      const int cl = variations_at(chain, cur.lo) - variations_at(chain, left);
      const int cr = variations_at(chain, right) - variations_at(chain, cur.hi);
      if (cl > 0) stack.push_back({cur.lo, left, cl});
      if (cr > 0) stack.push_back({right, cur.hi, cr});
      continue;
    }
    const int v_mid = variations_at(chain, mid);
    const int cl = variations_at(chain, cur.lo) - v_mid;
    const int cr = v_mid - variations_at(chain, cur.hi);
    if (cl > 0) stack.push_back({cur.lo, mid, cl});
    if (cr > 0) stack.push_back({mid, cur.hi, cr});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lower < b.lower; });
  return out;
}

double refine_root(const RationalPolynomial& squarefree, RootInterval interval) {
  if (interval.exact) return interval.exact->get_d();
  Scalar lo = interval.lower;
  Scalar hi = interval.upper;
  int s_lo = sgn(squarefree(lo));
  // (lo, hi] contains exactly one simple root; hi may itself be the root.
  if (sgn(squarefree(hi)) == 0) return hi.get_d();
  for (int iter = 0; iter < 200; ++iter) {
    const double dlo = lo.get_d();
    const double dhi = hi.get_d();
    if (dlo == dhi || std::nextafter(dlo, dhi) == dhi) break;
    const Scalar mid = (lo + hi) / 2;
    const int s_mid = sgn(squarefree(mid));
    if (s_mid == 0) return mid.get_d();
    if (s_mid == s_lo) {
      lo = mid;
      s_lo = s_mid;
    } else {
      hi = mid;
    }
  }
  return Scalar((lo + hi) / 2).get_d();
}

std::vector<double> real_roots(const RationalPolynomial& p) {
  const RationalPolynomial sf = squarefree_part(p);
  std::vector<double> out;
  for (const auto& interval : isolate_real_roots(sf)) out.push_back(refine_root(sf, interval));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::complex<double>> companion_roots(const RealPolynomial& p_in) {
  // Leading coefficients at rounding level stand for roots near infinity;
  // keeping them swamps the companion matrix and loses the finite roots.
  std::vector<double> coeffs = p_in.coefficients();
  double scale = 0;
  for (double v : coeffs) scale = std::max(scale, std::abs(v));
  while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-13 * scale) coeffs.pop_back();
  const RealPolynomial p(std::move(coeffs));
  const int n = p.degree();
  if (n < 1) return {};
  const auto& c = p.coefficients();
  if (n == 1) return {std::complex<double>(-c[0] / c[1], 0.0)};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

double newton_polish(const RealPolynomial& p, double x, int max_iterations) {
  const RealPolynomial dp = p.derivative();
  double best = x;
  double best_val = std::abs(p(x));
  for (int i = 0; i < max_iterations && best_val > 0; ++i) {
    const double d = dp(x);
    if (d == 0.0) break;
    const double next = x - p(x) / d;
    if (!std::isfinite(next)) break;
    const double val = std::abs(p(next));
    x = next;
    if (val < best_val) {
      best = next;
      best_val = val;
    } else if (val > 4 * best_val) {
      break;
    }
  }
  return best;
}

std::vector<double> real_roots(const RealPolynomial& p, double imag_tolerance) {
  std::vector<double> out;
  for (const auto& z : companion_roots(p)) {
    if (std::abs(z.imag()) > imag_tolerance * std::max(1.0, std::abs(z))) continue;
    out.push_back(newton_polish(p, z.real()));
  }
  std::sort(out.begin(), out.end());
  std::vector<double> clustered;
  for (double r : out) {
    if (!clustered.empty() &&
        std::abs(r - clustered.back()) <= 1e-12 * std::max(1.0, std::abs(r))) {
      continue;
    }
    clustered.push_back(r);
  }
  return clustered;
}

}  // namespace quadcrit
