#include "quadcrit/jacobian.hpp"

#include <cstdlib>

namespace quadcrit {

ConicSection<double> to_double(const ConicSection<Scalar>& c) {
  return ConicSection<double>(c.A.get_d(), c.B.get_d(), c.C.get_d(), c.D.get_d(), c.E.get_d(),
                              c.F.get_d());
}

std::string IdentityResidual::name() const {
  std::string out;
  switch (kind) {
    case IdentityKind::Antisymmetry: out = "X."; break;
    case IdentityKind::AlphaCycle: out = "aX."; break;
    case IdentityKind::BetaCycle: out = "bX."; break;
    case IdentityKind::Plucker: out = "XX."; break;
  }
  for (int idx : indices) {
    if (idx >= 0) out += static_cast<char>('0' + idx);
  }
  return out;
}

std::vector<IdentityResidual> verify_identities(const QuadMap& map) {
  return verify_identities(map, cross_table(map));
}

std::vector<IdentityResidual> verify_identities(const QuadMap& map,
                                                const CrossTable<Scalar>& table) {
  std::vector<IdentityResidual> out;
  out.reserve(36 + 2 * 216 + 1296);
  const auto& X = table;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      out.push_back({IdentityKind::Antisymmetry, {i, j, -1, -1}, Scalar(X(i, j) + X(j, i))});
    }
  }
  for (int k = 0; k < 6; ++k) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        out.push_back({IdentityKind::AlphaCycle,
                       {k, i, j, -1},
                       Scalar(map.a(k) * X(i, j) + map.a(i) * X(j, k) + map.a(j) * X(k, i))});
        out.push_back({IdentityKind::BetaCycle,
                       {k, i, j, -1},
                       Scalar(map.b(k) * X(i, j) + map.b(i) * X(j, k) + map.b(j) * X(k, i))});
      }
    }
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      for (int k = 0; k < 6; ++k) {
        for (int l = 0; l < 6; ++l) {
          out.push_back({IdentityKind::Plucker,
                         {i, j, k, l},
                         Scalar(X(i, j) * X(k, l) - X(i, k) * X(j, l) + X(i, l) * X(j, k))});
        }
      }
    }
  }
  return out;
}

namespace {

// Residual counting over an integer ring R (either __int128 or mpz_class).
template <class R>
std::size_t count_failures(const std::array<R, 6>& a, const std::array<R, 6>& b) {
  std::array<std::array<R, 6>, 6> X;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) X[i][j] = a[i] * b[j] - a[j] * b[i];
  }
  std::size_t failures = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (X[i][j] + X[j][i] != 0) ++failures;
    }
  }
  for (std::size_t k = 0; k < 6; ++k) {
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        if (a[k] * X[i][j] + a[i] * X[j][k] + a[j] * X[k][i] != 0) ++failures;
        if (b[k] * X[i][j] + b[i] * X[j][k] + b[j] * X[k][i] != 0) ++failures;
      }
    }
  }
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t l = 0; l < 6; ++l) {
          if (X[i][j] * X[k][l] - X[i][k] * X[j][l] + X[i][l] * X[j][k] != 0) ++failures;
        }
      }
    }
  }
  return failures;
}

// Multiplies a coefficient row by the lcm of its denominators. Every
// identity is homogeneous in each row, so vanishing is unaffected.
std::array<mpz_class, 6> clear_denominators(const std::array<Scalar, 6>& row) {
  mpz_class lcm = 1;
  for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  std::array<mpz_class, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = row[i].get_num() * (lcm / row[i].get_den());
  return out;
}

}  // namespace

std::size_t count_identity_failures(const QuadMap& map) {
  const auto a = clear_denominators(map.a());
  const auto b = clear_denominators(map.b());
  // 2^30 bounds keep every product and three-term sum inside 127 bits.
  bool small = true;
  for (std::size_t i = 0; i < 6 && small; ++i) {
    small = mpz_sizeinbase(a[i].get_mpz_t(), 2) <= 30 && mpz_sizeinbase(b[i].get_mpz_t(), 2) <= 30;
  }
  if (small) {
    std::array<__int128, 6> ai, bi;
    for (std::size_t i = 0; i < 6; ++i) {
      ai[i] = a[i].get_si();
      bi[i] = b[i].get_si();
    }
    return count_failures(ai, bi);
  }
  return count_failures(a, b);
}

}  // namespace quadcrit
