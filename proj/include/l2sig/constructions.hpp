#ifndef L2SIG_CONSTRUCTIONS_HPP
#define L2SIG_CONSTRUCTIONS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l2sig/covering.hpp"
#include "l2sig/hermitian_form.hpp"

namespace l2sig {

/// Staircase triangulation of |X| × |Y| with both factors ordered by vertex
/// id. Vertex (x, y) gets id x·|V(Y)| + y; every pair of top simplices
/// contributes one simplex per monotone lattice path, oriented by
/// o(σ)·o(τ)·sign(shuffle). The result is oriented iff both factors are.
OrientedSimplicialComplex staircase_product(const OrientedSimplicialComplex& x, const OrientedSimplicialComplex& y);

/// The product complex with the covering pulled back from both factors into
/// Γ_X × Γ_Y.
CoveredComplex staircase_product(const CoveredComplex& x, const CoveredComplex& y);

/// Shipped complexes: sphere2, sphere4, circle3, cp2_9, rp2_6, torus2, torus4.
/// Orientable ones come oriented (cp2_9 with signature +1).
OrientedSimplicialComplex standard_complex(std::string_view name);
std::vector<std::string> standard_complex_names();

/// The 3-vertex circle carrying monodromy g around the loop 0 → 1 → 2 → 0
/// (label g on the edge (0, 2) read backwards, i.e. g(0, 2) = g⁻¹).
CoveredComplex circle_with_monodromy(const GroupModel& group, const GroupElement& g);

/// T⁴ = four staircase circles, the first carrying the given monodromy.
CoveredComplex torus4_with_monodromy(const GroupModel& group, const GroupElement& g);

/// 1 − z for the canonical generator z (the first unit vector for ℤᵈ).
RationalElement one_minus_generator(const GroupModel& group);

/// (1 − z) + (1 − z⁻¹) as a 1×1 Hermitian form.
HermitianForm<Rational> counterexample_form(const GroupModel& group);

struct BatteryEntry {
  std::int64_t p = 1;
  HermitianForm<Rational> form;
  Rational expected_sign2;
  std::int64_t expected_sign = 0;
};

/// p > 1: the form over ℤ/p with expected sign² = 1 − 1/p; p = 1: over ℤ with
/// expected sign² = 1. The ordinary signature is 0 in every case.
std::vector<BatteryEntry> counterexample_battery(std::span<const std::int64_t> p_list);

/// Tower ℤ → ℤ/k for the given k.
GroupModel cyclic_tower(std::span<const std::int64_t> orders);

}  // namespace l2sig

#endif  // L2SIG_CONSTRUCTIONS_HPP
