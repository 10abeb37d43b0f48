#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "l2sig/constructions.hpp"
#include "l2sig/pairing.hpp"
#include "l2sig/verify.hpp"
#include "l2sig/vn_signature.hpp"
#include "l2sig/whitney.hpp"

using namespace l2sig;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

bool all_passed(const std::vector<CaseResult>& cases, Outcome& o) {
  bool ok = true;
  for (const auto& c : cases)
    if (!c.passed) {
      o.require(false, c.name + " (" + c.detail + ")");
      ok = false;
    }
  return ok;
}

int failures = 0;

void criterion(int n, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (t > budget_s) o.require(false, "took " + std::to_string(t) + " s, budget " + std::to_string(budget_s) + " s");
  if (!o.passed) ++failures;
  std::printf("criterion %d: %s  %s  [%.3f s]%s%s\n", n, o.passed ? "PASS" : "FAIL", title.c_str(), t,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

CoveredComplex plain(const std::string& name) { return {standard_complex(name), CoveringCocycle::trivial()}; }

}  // namespace

int main() {
  criterion(1, "Z/p counterexamples have sign2 = 1 - 1/p and signature 0", 1.0, [] {
    Outcome o;
    const std::vector<std::int64_t> ps = {2, 3, 5, 7, 11};
    for (std::int64_t p : ps) {
      const SignatureReport r = l2_signature_of_form(counterexample_form(GroupModel::cyclic(p)));
      const Rational expected = Rational(1) - Rational(1, p);
      o.require(r.sign2_exact && *r.sign2_exact == expected, "p=" + std::to_string(p) + " sign2");
      o.require(r.ordinary_sign == 0, "p=" + std::to_string(p) + " signature");
    }
    return o;
  });

  criterion(2, "Z counterexample: quadrature within 0.01 of 1, towers (k-1)/k for k <= 64", 5.0, [] {
    Outcome o;
    const SignatureReport r = l2_signature_of_form(counterexample_form(GroupModel::free_abelian(1)), QuadratureSpec{2048, 0, 1e-9});
    const double residual = std::abs(r.sign2 - 1.0);
    o.require(residual <= 0.01, "quadrature sign2 " + std::to_string(r.sign2));
    o.require(residual <= r.error_bound, "error bound " + std::to_string(r.error_bound) + " below residual");
    std::vector<std::int64_t> orders;
    for (std::int64_t k = 2; k <= 64; ++k) orders.push_back(k);
    const GroupModel tower = cyclic_tower(orders);
    GroupRingMatrix<Rational> m(tower, 1, 1);
    m(0, 0) = RationalElement(tower, {{GroupElement{{0}}, Rational(2)},
                                      {GroupElement{{1}}, Rational(-1)},
                                      {GroupElement{{-1}}, Rational(-1)}});
    for (const TowerLevel& l : signature_tower(check_hermitian(m, Parity::hermitian), static_cast<int>(orders.size())))
      o.require(l.value == Rational(l.index - 1, l.index), "tower k=" + std::to_string(l.index));
    return o;
  });

  criterion(3, "Whitney integral and averaged cup equal *(s1,s2) p!q!/(p+q+1)! for p+q <= 6", 30.0, [] {
    Outcome o;
    std::size_t count = 0;
    for (const WhitneyCase& w : whitney_pairing_check(6)) {
      ++count;
      o.require(w.integral == w.expected && w.cup == w.expected,
                "p=" + std::to_string(w.p) + " q=" + std::to_string(w.q) + " expected " + to_string(w.expected));
    }
    o.require(count > 0, "no cases");
    if (o.passed) o.detail = std::to_string(count) + " face pairs";
    return o;
  });

  criterion(4, "sign2 = signature on cp2_9, sphere4 and T4 with a Z/2 cover; routes agree", 600.0, [] {
    Outcome o;
    struct Case {
      std::string name;
      CoveredComplex space;
      std::int64_t expected;
    };
    const std::vector<Case> cases = {
        {"cp2_9", plain("cp2_9"), 1},
        {"sphere4", plain("sphere4"), 0},
        {"torus4 Z/2", torus4_with_monodromy(GroupModel::cyclic(2), GroupElement{{1}}), 0}};
    for (const auto& c : cases) {
      const SignatureReport regular = l2_signature_of_space(c.space);
      const SignatureReport cover = explicit_cover_signature(c.space);
      o.require(regular.sign2_exact && *regular.sign2_exact == Rational(c.expected), c.name + " sign2");
      o.require(regular.ordinary_sign == c.expected, c.name + " signature");
      o.require(cover.sign2_exact && regular.sign2_exact && *cover.sign2_exact == *regular.sign2_exact,
                c.name + " explicit cover disagrees");
    }
    return o;
  });

  criterion(5, "Kunneth: sign2(F x G) = sign2(F) sign2(G) on 20 random pairs and the 1/3 case", 60.0, [] {
    Outcome o;
    const SignatureReport worked = l2_signature_of_form(
        kunneth_product(counterexample_form(GroupModel::cyclic(2)), counterexample_form(GroupModel::cyclic(3))));
    o.require(worked.sign2_exact && *worked.sign2_exact == Rational(1, 3), "worked case");
    std::mt19937_64 rng(0);
    const auto cases = check_kunneth(rng, 20);
    o.require(cases.size() >= 22, "battery too small");
    all_passed(cases, o);
    return o;
  });

  criterion(6, "Sylvester, induction, direct sums, coboundary/Leibniz and ordering independence", 120.0, [] {
    Outcome o;
    std::mt19937_64 rng(0);
    const auto sylvester = check_sylvester_invariance(rng, 50);
    o.require(sylvester.size() == 50, "expected 50 congruences");
    all_passed(sylvester, o);
    all_passed(check_induction_invariance(), o);
    all_passed(check_direct_sum(rng, 20), o);
    all_passed(check_cochain_identities(rng), o);
    all_passed(check_ordering_independence(rng), o);
    return o;
  });

  std::printf("%d of 6 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
