#ifndef L2SIG_INERTIA_HPP
#define L2SIG_INERTIA_HPP

#include <compare>
#include <cstdint>

#include <Eigen/Dense>

#include "l2sig/rational.hpp"

namespace l2sig {

/// Counts of positive, negative and zero eigenvalues of a Hermitian matrix.
struct Inertia {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  std::int64_t zero = 0;

  std::int64_t signature() const { return positive - negative; }
  std::int64_t size() const { return positive + negative + zero; }

  auto operator<=>(const Inertia&) const = default;
};

/// Sylvester inertia by congruence diagonalization over Q. The input must be
/// symmetric; it is taken by value and destroyed.
Inertia exact_inertia(Matrix<Rational> symmetric);

/// Hermitian Q(i) matrices are realified to [[X, -Y], [Y, X]], whose inertia is
/// twice that of X + iY; the halved counts are returned.
Inertia exact_inertia(const Matrix<GaussianRational>& hermitian);

Matrix<Rational> realify(const Matrix<GaussianRational>& hermitian);

/// Floating-point route: eigenvalues of the Hermitian part, with |λ| ≤ eps
/// counted as zero.
Inertia spectral_inertia(const Eigen::MatrixXcd& hermitian, double eps);

Eigen::MatrixXcd to_complex_matrix(const Matrix<Rational>& m);
Eigen::MatrixXcd to_complex_matrix(const Matrix<GaussianRational>& m);

}  // namespace l2sig

#endif  // L2SIG_INERTIA_HPP
