#pragma once

#include <array>
#include <string>
#include <vector>

#include "quadcrit/core.hpp"

namespace quadcrit {

/// Cross-determinants X[i][j] = a_i b_j - a_j b_i of a quadratic map.
template <class T>
struct CrossTable {
  std::array<std::array<T, 6>, 6> X{};

  const T& operator()(int i, int j) const {
    return X[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

/// A x^2 + B xy + C y^2 + D x + E y + F with its discriminant B^2 - 4AC and
/// the determinant of the symmetric 3x3 matrix of the conic.
template <class T>
struct ConicSection {
  T A{0}, B{0}, C{0}, D{0}, E{0}, F{0};
  T disc{0};
  T delta{0};

  ConicSection() = default;
  ConicSection(T a, T b, T c, T d, T e, T f)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)), E(std::move(e)),
        F(std::move(f)) {
    disc = T(B * B - 4 * A * C);
    // det [[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]] scaled out by 4:
    //   4 det = 4ACF + BDE - A E^2 - C D^2 - F B^2
    delta = T((4 * A * C * F + B * D * E - A * E * E - C * D * D - F * B * B) / T(4));
  }

  template <class P>
  P operator()(const Vec2<P>& p) const {
    return P(P(A) * p.x * p.x + P(B) * p.x * p.y + P(C) * p.y * p.y + P(D) * p.x + P(E) * p.y +
             P(F));
  }

  std::array<T, 6> coefficients() const { return {A, B, C, D, E, F}; }

  friend bool operator==(const ConicSection& l, const ConicSection& r) {
    return l.coefficients() == r.coefficients();
  }
};

template <class T>
CrossTable<T> cross_table(const BasicQuadMap<T>& map) {
  CrossTable<T> table;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      table.X[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          T(map.a(i) * map.b(j) - map.a(j) * map.b(i));
    }
  }
  return table;
}

template <class T>
ConicSection<T> conic_from_table(const CrossTable<T>& X) {
  return ConicSection<T>(T(2 * X(0, 1)), T(4 * X(0, 2)), T(2 * X(1, 2)), T(2 * X(0, 4) - X(1, 3)),
                         T(X(1, 4) - 2 * X(2, 3)), X(3, 4));
}

/// det DF(x, y) as a conic, coefficients linear in the cross-determinants.
template <class T>
ConicSection<T> jacobian_conic(const BasicQuadMap<T>& map) {
  return conic_from_table(cross_table(map));
}

ConicSection<double> to_double(const ConicSection<Scalar>& c);

enum class IdentityKind { Antisymmetry, AlphaCycle, BetaCycle, Plucker };

/// One evaluated polynomial identity among the cross-determinants.
struct IdentityResidual {
  IdentityKind kind;
  std::array<int, 4> indices{};  // unused trailing slots are -1
  Scalar residual;

  /// e.g. "X.01", "aX.201", "bX.413", "XX.0134"
  std::string name() const;
};

/// Evaluates every index combination over {0..5} of
///   X_ij + X_ji = 0,
///   a_k X_ij + a_i X_jk + a_j X_ki = 0  (and the same with b),
///   X_ij X_kl - X_ik X_jl + X_il X_jk = 0
/// exactly. All residuals are zero for a consistent table.
std::vector<IdentityResidual> verify_identities(const QuadMap& map);

/// Same identities against an explicitly supplied table (lets callers check
/// a table that did not come from cross_table).
std::vector<IdentityResidual> verify_identities(const QuadMap& map, const CrossTable<Scalar>& table);

/// Number of nonzero residuals, computed on the integer-scaled coefficients
/// without materializing the residual list.
std::size_t count_identity_failures(const QuadMap& map);

}  // namespace quadcrit
