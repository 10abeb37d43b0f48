#ifndef L2SIG_VN_SIGNATURE_HPP
#define L2SIG_VN_SIGNATURE_HPP

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "l2sig/hermitian_form.hpp"
#include "l2sig/inertia.hpp"
#include "l2sig/quadrature.hpp"

namespace l2sig {

enum class Method { exact_finite, torus_quadrature, tower_limit, explicit_cover };

std::string to_string(Method m);

/// sign^(2), ordinary signature and normalized kernel dimension of a form or
/// of a covered complex. Exact methods carry the rational values as well and
/// report a zero error bound.
struct SignatureReport {
  Method method = Method::exact_finite;
  double sign2 = 0.0;
  double kernel_dim = 0.0;
  /// Normalized dimension of the space the pairing lives on.
  double total_dim = 0.0;
  std::optional<Rational> sign2_exact;
  std::optional<Rational> kernel_exact;
  std::optional<Rational> total_exact;
  std::int64_t ordinary_sign = 0;
  double error_bound = 0.0;
  std::optional<QuadratureSpec> quadrature;
};

/// Exact normalized report from the inertia of a realization of dimension
/// `scale` times the normalized one (scale = |Γ| for regular representations).
SignatureReport exact_report(const Inertia& inertia, std::int64_t scale, Method method);

namespace detail {

template <typename Scalar>
Matrix<Scalar> regular_rep_matrix(const HermitianForm<Scalar>& f) {
  const GroupModel& group = f.group();
  const auto order = static_cast<Eigen::Index>(group.order());
  const Eigen::Index n = f.size();
  Matrix<Scalar> big = Matrix<Scalar>::Zero(n * order, n * order);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) big.block(i * order, j * order, order, order) = regular_rep(f(i, j));
  return big;
}

inline Inertia exact_inertia_of(const Matrix<Rational>& m) { return exact_inertia(m); }
inline Inertia exact_inertia_of(const Matrix<GaussianRational>& m) { return exact_inertia(m); }

template <typename Scalar>
Eigen::MatrixXcd fourier_matrix(const HermitianForm<Scalar>& f, std::span<const double> theta) {
  Eigen::MatrixXcd m(f.size(), f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    for (Eigen::Index j = 0; j < f.size(); ++j) m(i, j) = fourier_eval(f(i, j), theta);
  return m;
}

template <typename Scalar>
void require_hermitian(const HermitianForm<Scalar>& f, const char* op) {
  if (f.parity() != Parity::hermitian)
    throw ValidationError(std::string(op) + " is only defined for Hermitian (parity +1) forms");
}

}  // namespace detail

/// Exact inertia of the n|Γ|×n|Γ| regular-representation matrix (finite Γ).
template <typename Scalar>
Inertia regular_rep_inertia(const HermitianForm<Scalar>& f) {
  return detail::exact_inertia_of(detail::regular_rep_matrix(f));
}

/// The same count by floating-point eigenvalues with |λ| ≤ eps as zero.
template <typename Scalar>
Inertia regular_rep_spectral_inertia(const HermitianForm<Scalar>& f, double eps) {
  return spectral_inertia(to_complex_matrix(detail::regular_rep_matrix(f)), eps);
}

/// sign(ε(F)): the augmented rational matrix's exact signature.
template <typename Scalar>
std::int64_t ordinary_signature(const HermitianForm<Scalar>& f) {
  detail::require_hermitian(f, "ordinary_signature");
  Matrix<Scalar> m(f.size(), f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    for (Eigen::Index j = 0; j < f.size(); ++j) m(i, j) = augment(f(i, j));
  return detail::exact_inertia_of(m).signature();
}

/// Finite Γ: exact congruence inertia of the regular representation divided
/// by |Γ|. ℤᵈ: jittered torus quadrature of the pointwise inertia of F(θ).
template <typename Scalar>
SignatureReport l2_signature_of_form(const HermitianForm<Scalar>& f,
                                     const std::optional<QuadratureSpec>& spec = std::nullopt) {
  detail::require_hermitian(f, "l2_signature_of_form");
  const GroupModel& group = f.group();
  if (group.kind() == GroupModel::Kind::tower)
    throw ValidationError("forms over a tower model go through signature_tower");
  SignatureReport report;
  if (group.is_finite()) {
    report = exact_report(regular_rep_inertia(f), group.order(), Method::exact_finite);
  } else {
    if (!spec) throw ValidationError("a quadrature spec is required for forms over " + group.describe());
    const double eps = spec->zero_threshold;
    const QuadratureResult q = torus_quadrature(group.rank(), *spec, [&](std::span<const double> theta) {
      const Inertia in = spectral_inertia(detail::fourier_matrix(f, theta), eps);
      return NodeSample{in, in.zero > 0};
    });
    report.method = Method::torus_quadrature;
    report.sign2 = q.sign2;
    report.kernel_dim = q.kernel_dim;
    report.total_dim = static_cast<double>(f.size());
    report.error_bound = q.error_bound;
    report.quadrature = spec;
  }
  report.ordinary_sign = ordinary_signature(f);
  return report;
}

/// One level of a quotient tower: the index [Γ : Γ_k] and the normalized
/// signature (p − q)/[Γ : Γ_k] of the pushed-forward form.
struct TowerLevel {
  int level = 0;
  std::int64_t index = 0;
  Rational value;
};

template <typename Scalar>
std::vector<TowerLevel> signature_tower(const HermitianForm<Scalar>& f, int depth) {
  detail::require_hermitian(f, "signature_tower");
  const auto& quotients = f.group().quotients();
  if (f.group().kind() != GroupModel::Kind::tower) throw ValidationError("signature_tower needs a tower model");
  if (depth < 0 || depth > static_cast<int>(quotients.size()))
    throw ValidationError("tower depth " + std::to_string(depth) + " exceeds the " +
                          std::to_string(quotients.size()) + " available quotients");
  std::vector<TowerLevel> out;
  for (int k = 0; k < depth; ++k) {
    const Quotient& q = quotients[k];
    const HermitianForm<Scalar> pushed = push_form(f, q.map);
    const Inertia in = regular_rep_inertia(pushed);
    out.push_back({k + 1, q.index(), Rational(in.signature()) / q.index()});
  }
  return out;
}

/// Normalized signature of F(θ) over the k-th roots of unity θ = 2πj/k,
/// counted with the ε band as zero. For a form over ℤ this is the same number
/// the ℤ → ℤ/k quotient gives exactly, reached through Fourier evaluation.
template <typename Scalar>
Rational root_of_unity_signature(const HermitianForm<Scalar>& f, std::int64_t k, double eps) {
  detail::require_hermitian(f, "root_of_unity_signature");
  if (!f.group().base().is_free_abelian() || f.group().base().rank() != 1)
    throw ValidationError("root_of_unity_signature needs a form over Z");
  std::int64_t total = 0;
  for (std::int64_t j = 0; j < k; ++j) {
    const double theta[] = {2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k)};
    total += spectral_inertia(detail::fourier_matrix(f, theta), eps).signature();
  }
  return Rational(total) / k;
}

}  // namespace l2sig

#endif  // L2SIG_VN_SIGNATURE_HPP
