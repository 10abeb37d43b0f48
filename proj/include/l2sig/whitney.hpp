#ifndef L2SIG_WHITNEY_HPP
#define L2SIG_WHITNEY_HPP

#include <span>
#include <vector>

#include "l2sig/rational.hpp"

namespace l2sig {

/// ∫ over the standard d-simplex of Π x_i^{α_i} (barycentric coordinates,
/// d = α.size() − 1, Lebesgue measure in x_1..x_d): Π α_i! / (|α| + d)!.
Rational simplex_monomial_integral(std::span<const int> exponents);

/// ∫ over ⟨0, 1, …, d⟩ of W(σ₁) ∧ W(σ₂), where σ₁ and σ₂ are oriented faces
/// given as vertex tuples and W(⟨e_0..e_p⟩) = p! Σ (-1)^i x_{e_i} dx_{e_0} ∧ … ∧ dx_{e_i}^ ∧ … ∧ dx_{e_p}.
/// The degrees must add up to d.
Rational whitney_wedge_integral(int d, std::span<const int> first, std::span<const int> second);

/// *(σ₁, σ₂): with σ₁ reordered to end at the shared vertex and σ₂ to start at
/// it, the product of those reordering signs and the sign of the concatenated
/// tuple against ⟨0..d⟩. Requires exactly one shared vertex.
int star_sign(int d, std::span<const int> first, std::span<const int> second);

/// Value of the averaged cup product of the elementary cochains of σ₁ and σ₂
/// on the single simplex ⟨0..d⟩, viewed as a top simplex of a barycentric
/// subdivision with vertex i of dimension label i.
Rational averaged_cup_on_simplex(int d, std::span<const int> first, std::span<const int> second);

struct WhitneyCase {
  int p = 0;
  int q = 0;
  std::vector<int> first;
  std::vector<int> second;
  int shared = 0;
  Rational integral;
  Rational cup;
  Rational expected;
  bool pass = false;
};

/// Every pair of sorted faces of dimensions p and q of the (p+q)-simplex:
/// the Whitney integral and the averaged cup both equal
/// *(σ₁,σ₂)·p!q!/(p+q+1)! when exactly one vertex is shared and 0 otherwise.
std::vector<WhitneyCase> whitney_pairing_check(int p, int q);

/// All (p, q) with p + q ≤ max_dim.
std::vector<WhitneyCase> whitney_pairing_check(int max_dim);

}  // namespace l2sig

#endif  // L2SIG_WHITNEY_HPP
