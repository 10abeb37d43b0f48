#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "l2sig/constructions.hpp"
#include "l2sig/errors.hpp"
#include "l2sig/verify.hpp"
#include "l2sig/vn_signature.hpp"

using namespace l2sig;

namespace {

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

// sign² of a 1×1 form over ℤ/n from the character values â(j) = Σ a_g e^{2πi g j / n}.
std::pair<double, double> character_oracle(const RationalElement& a, std::int64_t n) {
  int pos = 0, neg = 0, zero = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    double v = 0;
    for (const auto& [g, c] : a.support())
      v += to_double(c) * std::cos(2.0 * std::numbers::pi * static_cast<double>(g.coords[0] * j) / static_cast<double>(n));
    if (v > 1e-9)
      ++pos;
    else if (v < -1e-9)
      ++neg;
    else
      ++zero;
  }
  return {static_cast<double>(pos - neg) / static_cast<double>(n), static_cast<double>(zero) / static_cast<double>(n)};
}

}  // namespace

TEST_SUITE("vn-signature") {
  TEST_CASE("counterexample over Z/p matches the circulant eigenvalues") {
    for (std::int64_t p : range(2, 40)) {
      const SignatureReport r = l2_signature_of_form(counterexample_form(GroupModel::cyclic(p)));
      // Eigenvalues of the circulant 2 - z - z^-1 are 2 - 2cos(2πj/p).
      int positive = 0;
      for (std::int64_t j = 0; j < p; ++j)
        if (2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p)) > 1e-9) ++positive;
      CHECK(*r.sign2_exact == Rational(positive) / p);
      CHECK(*r.kernel_exact == Rational(p - positive) / p);
      CHECK(r.ordinary_sign == 0);
      CHECK(r.method == Method::exact_finite);
      CHECK(r.error_bound == 0.0);
    }
  }

  TEST_CASE("random cyclic forms agree with the character oracle") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 40; ++k) {
      const std::int64_t n = 2 + k % 6;
      const GroupModel group = GroupModel::cyclic(n);
      const auto f = random_hermitian_form(rng, group, 1);
      const SignatureReport r = l2_signature_of_form(f);
      const auto [sign2, kernel] = character_oracle(f(0, 0), n);
      CHECK(r.sign2 == doctest::Approx(sign2).epsilon(1e-12));
      CHECK(r.kernel_dim == doctest::Approx(kernel).epsilon(1e-12));
    }
  }

  TEST_CASE("exact inertia against matrices of known inertia") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int k = 0; k < 50; ++k) {
      const int n = 2 + k % 6;
      // M = P D Pᵀ with P unit lower triangular, so inertia(M) = inertia(D).
      Matrix<Rational> p = Matrix<Rational>::Identity(n, n);
      Matrix<Rational> d = Matrix<Rational>::Zero(n, n);
      Inertia expected;
      for (int i = 0; i < n; ++i) {
        const int v = entry(rng);
        d(i, i) = Rational(v);
        (v > 0 ? expected.positive : v < 0 ? expected.negative : expected.zero) += 1;
        for (int j = 0; j < i; ++j) p(i, j) = Rational(entry(rng));
      }
      const Matrix<Rational> m = p * d * p.transpose();
      CHECK(exact_inertia(m) == expected);
      CHECK(spectral_inertia(to_complex_matrix(m), 1e-9) == expected);
    }
  }

  TEST_CASE("gaussian inertia") {
    Matrix<GaussianRational> h(2, 2);
    h(0, 0) = GaussianRational(Rational(0));
    h(1, 1) = GaussianRational(Rational(0));
    h(0, 1) = {Rational(0), Rational(1)};
    h(1, 0) = {Rational(0), Rational(-1)};
    CHECK(exact_inertia(h) == Inertia{1, 1, 0});
    h(0, 0) = GaussianRational(Rational(1));
    h(1, 1) = GaussianRational(Rational(1));
    // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
    CHECK(exact_inertia(h) == Inertia{1, 0, 1});
  }

  TEST_CASE("identity form over Z/2") {
    const auto f = check_hermitian(GroupRingMatrix<Rational>::identity(GroupModel::cyclic(2), 3), Parity::hermitian);
    const SignatureReport r = l2_signature_of_form(f);
    CHECK(*r.sign2_exact == Rational(3));
    CHECK(r.ordinary_sign == 3);
  }

  TEST_CASE("skew forms have no signature") {
    const GroupModel z3 = GroupModel::cyclic(3);
    GroupRingMatrix<Rational> psi(z3, 1, 1);
    psi(0, 0) = one_minus_generator(z3);
    CHECK_THROWS_AS(l2_signature_of_form(plumbing_form(psi, 1)), ValidationError);
  }

  TEST_CASE("tower levels and the root-of-unity route") {
    const auto orders = range(2, 64);
    const GroupModel tower = cyclic_tower(orders);
    GroupRingMatrix<Rational> m(tower, 1, 1);
    m(0, 0) = RationalElement(tower, {{GroupElement{{0}}, Rational(2)}, {GroupElement{{1}}, Rational(-1)},
                                      {GroupElement{{-1}}, Rational(-1)}});
    const auto f = check_hermitian(m, Parity::hermitian);
    const auto levels = signature_tower(f, 63);
    REQUIRE(levels.size() == 63);
    for (const auto& l : levels) {
      CHECK(l.value == Rational(l.index - 1) / l.index);
      CHECK(root_of_unity_signature(on_base(f), l.index, 1e-9) == l.value);
    }
    CHECK(signature_tower(f, 0).empty());
    CHECK_THROWS_AS(signature_tower(f, 64), ValidationError);
    CHECK_FALSE(tower_is_nested(tower));
  }

  TEST_CASE("quadrature over Z against the limit") {
    const SignatureReport r = l2_signature_of_form(counterexample_form(GroupModel::free_abelian(1)), QuadratureSpec{});
    CHECK(std::abs(r.sign2 - 1.0) <= 0.01);
    CHECK(std::abs(r.sign2 - 1.0) <= r.error_bound + 1e-15);
    CHECK(r.method == Method::torus_quadrature);
    CHECK(r.quadrature->jitter_seed == 0);
  }

  TEST_CASE("quadrature over Z^2 against a one-dimensional integral") {
    // a = 1 + (z1 + z1⁻¹)/2 + (z2 + z2⁻¹)/2, â(θ) = 1 + cos θ1 + cos θ2.
    const GroupModel z2 = GroupModel::free_abelian(2);
    const Rational half(1, 2);
    const RationalElement a(z2, {{GroupElement{{0, 0}}, Rational(1)},
                                 {GroupElement{{1, 0}}, half},
                                 {GroupElement{{-1, 0}}, half},
                                 {GroupElement{{0, 1}}, half},
                                 {GroupElement{{0, -1}}, half}});
    GroupRingMatrix<Rational> m(z2, 1, 1);
    m(0, 0) = a;
    const auto f = check_hermitian(m, Parity::hermitian);
    // Measure of {cos b > c} in [0, 2π) is 2 arccos(c) for c ∈ [-1, 1] and 2π below -1.
    const int steps = 200000;
    double positive = 0;
    for (int i = 0; i < steps; ++i) {
      const double t = 2.0 * std::numbers::pi * (i + 0.5) / steps;
      const double c = -1.0 - std::cos(t);
      positive += c < -1.0 ? 2.0 * std::numbers::pi : 2.0 * std::acos(c);
    }
    const double fraction = positive / steps / (2.0 * std::numbers::pi);
    const double oracle = 2.0 * fraction - 1.0;
    const SignatureReport r = l2_signature_of_form(f, QuadratureSpec{256, 3, 1e-9});
    CHECK(std::abs(r.sign2 - oracle) <= r.error_bound + 0.01);
    CHECK(r.error_bound < 0.05);
    const SignatureReport again = l2_signature_of_form(f, QuadratureSpec{256, 3, 1e-9});
    CHECK(again.sign2 == r.sign2);
    CHECK(again.error_bound == r.error_bound);
  }

  TEST_CASE("jitter offsets are reproducible") {
    const auto a = jitter_offsets(42, 3);
    CHECK(a == jitter_offsets(42, 3));
    CHECK(a != jitter_offsets(43, 3));
    for (double u : a) {
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
    }
    CHECK_THROWS_AS((QuadratureSpec{0, 0, 1e-9}.validate()), ValidationError);
  }

  TEST_CASE("battery expectations") {
    const std::vector<std::int64_t> ps = {1, 2, 3, 5, 7, 11};
    for (const BatteryEntry& e : counterexample_battery(ps)) {
      if (e.p == 1) {
        const auto r = l2_signature_of_form(e.form, QuadratureSpec{});
        CHECK(std::abs(r.sign2 - to_double(e.expected_sign2)) <= r.error_bound + 0.01);
      } else {
        CHECK(*l2_signature_of_form(e.form).sign2_exact == e.expected_sign2);
      }
      CHECK(ordinary_signature(e.form) == e.expected_sign);
    }
  }

  TEST_CASE("invariance batteries") {
    std::mt19937_64 rng(99);
    for (const auto& c : check_sylvester_invariance(rng, 50)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    for (const auto& c : check_route_consistency(rng, 30)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    for (const auto& c : check_induction_invariance()) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    for (const auto& c : check_direct_sum(rng, 20)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    for (const auto& c : check_kunneth(rng, 20)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  }

  TEST_CASE("kunneth worked case over Z/2 x Z/3") {
    const auto f = counterexample_form(GroupModel::cyclic(2));
    const auto g = counterexample_form(GroupModel::cyclic(3));
    const auto p = kunneth_product(f, g);
    CHECK(p.group().order() == 6);
    CHECK(*l2_signature_of_form(p).sign2_exact == Rational(1, 3));
  }
}
