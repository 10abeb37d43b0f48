#ifndef L2SIG_PAIRING_HPP
#define L2SIG_PAIRING_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "l2sig/cochain.hpp"
#include "l2sig/covering.hpp"
#include "l2sig/inertia.hpp"
#include "l2sig/quadrature.hpp"
#include "l2sig/vn_signature.hpp"

namespace l2sig {

/// How one oriented top simplex contributes to the middle pairing: the front
/// and back faces in the local ordering, the deck elements carrying their
/// least vertices relative to the simplex's least vertex, and the product of
/// the fundamental-cycle sign with the reordering signs.
struct PairingTerm {
  std::size_t front = 0;
  std::size_t back = 0;
  GroupElement front_shift;
  GroupElement back_shift;
  int sign = 1;
};

std::vector<PairingTerm> pairing_terms(const OrientedSimplicialComplex& complex, const FundamentalCycle& cycle,
                                       const CoveringCocycle& cocycle, const LocalOrdering& ordering);

/// s(a, b) = Σ_τ fund(τ)·(a ∪ b̄)(τ) summed over every sheet, for realized
/// middle-degree cochains a, b.
Rational pair_cochains(const std::vector<PairingTerm>& terms, const CoveringCocycle& cocycle,
                       ExactRealization realization, const std::vector<Rational>& a, const std::vector<Rational>& b);
std::complex<double> pair_cochains(const std::vector<PairingTerm>& terms, std::span<const double> theta,
                                   const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

/// The middle pairing on exact cohomology: a basis of cocycle representatives
/// of H^m of the realized complex and the matrix of s on it. The pairing
/// vanishes on coboundaries, so by Sylvester's law this matrix has the
/// inertia of the duality operator on the harmonic space.
struct MiddlePairingData {
  int degree = 0;
  std::int64_t rep_dim = 1;
  std::vector<std::vector<Rational>> basis;
  Matrix<Rational> pairing;
};

MiddlePairingData intersection_pairing(const CoveredComplex& space, ExactRealization realization,
                                       const std::optional<LocalOrdering>& ordering = std::nullopt);

/// The middle pairing at one torus point: orthonormal harmonic cochains (the
/// eigenvectors of the combinatorial Laplacian with eigenvalue ≤ tolerance)
/// and the Hermitian matrix of s on them, which is the duality operator A.
struct TorusPairingData {
  int degree = 0;
  Eigen::MatrixXcd harmonic;
  Eigen::MatrixXcd pairing;
  double hermitian_defect = 0.0;
  /// Some Laplacian eigenvalue lies just above the tolerance.
  bool near_harmonic = false;
};

TorusPairingData intersection_pairing(const CoveredComplex& space, std::span<const double> theta, double tolerance,
                                      const std::optional<LocalOrdering>& ordering = std::nullopt);

/// sign² of the covering space. Finite groups (including the trivial one):
/// exact inertia of the realized pairing over |Γ|. Free abelian groups: torus
/// quadrature of the pointwise pairing inertia. The ordinary signature is the
/// base complex's. total_dim is the normalized middle Betti number.
SignatureReport l2_signature_of_space(const CoveredComplex& space, const std::optional<QuadratureSpec>& spec = std::nullopt,
                                      const std::optional<LocalOrdering>& ordering = std::nullopt);

/// The same number through the total space: ordinary signature of
/// explicit_cover divided by |Γ|.
SignatureReport explicit_cover_signature(const CoveredComplex& space);

}  // namespace l2sig

#endif  // L2SIG_PAIRING_HPP
