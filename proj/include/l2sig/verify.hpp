#ifndef L2SIG_VERIFY_HPP
#define L2SIG_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "l2sig/hermitian_form.hpp"

namespace l2sig {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t failures() const;
};

/// whitney, kunneth, sylvester, two-route, ordering.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs one named suite; random batteries draw from a generator seeded with `seed`.
SuiteReport run_suite(std::string_view name, std::uint64_t seed = 0);

// The individual batteries the suites are assembled from.

/// ∫W∧W and the averaged cup against *(σ₁,σ₂)·p!q!/(p+q+1)!, one line per (p, q).
std::vector<CaseResult> check_whitney(int max_dim = 6);
/// sign²(F⊗G) = sign²(F)·sign²(G) on `random_pairs` random finite-group pairs
/// plus the fixed cases.
std::vector<CaseResult> check_kunneth(std::mt19937_64& rng, int random_pairs = 20);
/// sign²(U F U*) = sign²(F) for random invertible U.
std::vector<CaseResult> check_sylvester_invariance(std::mt19937_64& rng, int count = 50);
/// Exact congruence inertia against eigenvalue counting on the regular representation.
std::vector<CaseResult> check_route_consistency(std::mt19937_64& rng, int count = 50);
/// sign² and ordinary signature unchanged by induce_form on a fixed battery.
std::vector<CaseResult> check_induction_invariance();
/// sign² and kernel additive under ⊕.
std::vector<CaseResult> check_direct_sum(std::mt19937_64& rng, int count = 20);
/// δ∘δ = 0 in realized complexes and the Leibniz rule for the Alexander–Whitney product.
std::vector<CaseResult> check_cochain_identities(std::mt19937_64& rng);
/// Middle pairings congruent under random basis changes of cohomology.
std::vector<CaseResult> check_pairing_basis_change(std::mt19937_64& rng);
/// Regular-representation route against the explicit cover.
std::vector<CaseResult> check_two_route();
/// Space signatures computed with different global vertex orderings.
std::vector<CaseResult> check_ordering_independence(std::mt19937_64& rng);

/// Random finite model from a small fixed list (cyclic groups, Klein four, S3).
GroupModel random_finite_group(std::mt19937_64& rng);
RationalElement random_element(std::mt19937_64& rng, const GroupModel& group, int terms = 3);
/// M + M* + D for a random n×n M and a random constant diagonal D.
HermitianForm<Rational> random_hermitian_form(std::mt19937_64& rng, const GroupModel& group, int n);
/// Unitriangular times a diagonal of units (nonzero constants times group elements).
GroupRingMatrix<Rational> random_invertible(std::mt19937_64& rng, const GroupModel& group, int n);

}  // namespace l2sig

#endif  // L2SIG_VERIFY_HPP
