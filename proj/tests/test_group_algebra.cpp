#include <doctest.h>

#include <cmath>
#include <random>

#include "l2sig/errors.hpp"
#include "l2sig/hermitian_form.hpp"
#include "l2sig/verify.hpp"

using namespace l2sig;

namespace {

GroupElement el(std::int64_t k) { return GroupElement{{k}}; }

std::vector<std::vector<int>> s3_table() {
  // Permutations of {0,1,2} in lexicographic order; entry (i, j) is perm_i ∘ perm_j.
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) {
        bool same = true;
        for (int x = 0; x < 3; ++x) same = same && perms[i][perms[j][x]] == perms[k][x];
        if (same) t[i][j] = k;
      }
  return t;
}

}  // namespace

TEST_SUITE("group-algebra") {
  TEST_CASE("cyclic arithmetic") {
    const GroupModel z5 = GroupModel::cyclic(5);
    CHECK(z5.multiply(el(3), el(4)) == el(2));
    CHECK(z5.inverse(el(2)) == el(3));
    CHECK(z5.power(el(2), 7) == el(4));
    CHECK(z5.order() == 5);
    CHECK(z5.is_abelian());
  }

  TEST_CASE("multiplication tables are validated") {
    CHECK_NOTHROW(GroupModel::table(s3_table()));
    CHECK_FALSE(GroupModel::table(s3_table()).is_abelian());
    CHECK_THROWS_AS(GroupModel::table({{0, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(GroupModel::table({{0, 1, 2}, {1, 2, 0}}), ValidationError);
    CHECK_THROWS_AS(GroupModel::table({{0, 1}, {1, 2}}), ValidationError);
  }

  TEST_CASE("homomorphisms are checked") {
    CHECK_NOTHROW(GroupHom(GroupModel::cyclic(2), GroupModel::cyclic(4), {el(2)}));
    CHECK_THROWS_AS(GroupHom(GroupModel::cyclic(2), GroupModel::cyclic(3), {el(1)}), ValidationError);
    const GroupHom q(GroupModel::free_abelian(1), GroupModel::cyclic(6), {el(1)});
    CHECK(q(GroupElement{{-1}}) == el(5));
    CHECK(q.is_surjective());
    CHECK_FALSE(q.is_injective());
    CHECK(GroupHom(GroupModel::cyclic(3), GroupModel::table(s3_table()), {el(3)}).is_injective());
  }

  TEST_CASE("star is an anti-involution and the trace of a a* is the squared norm") {
    std::mt19937_64 rng(7);
    const GroupModel s3 = GroupModel::table(s3_table());
    for (int k = 0; k < 20; ++k) {
      const RationalElement a = random_element(rng, s3, 4);
      const RationalElement b = random_element(rng, s3, 4);
      CHECK(star(star(a)) == a);
      CHECK(star(a * b) == star(b) * star(a));
      Rational norm(0);
      for (const auto& [g, c] : a.support()) norm += c * c;
      CHECK(vn_trace(a * star(a)) == norm);
    }
  }

  TEST_CASE("regular representation is multiplicative and the augmentation is a ring map") {
    std::mt19937_64 rng(11);
    const GroupModel s3 = GroupModel::table(s3_table());
    for (int k = 0; k < 10; ++k) {
      const RationalElement a = random_element(rng, s3, 3);
      const RationalElement b = random_element(rng, s3, 3);
      CHECK(regular_rep(a * b) == regular_rep(a) * regular_rep(b));
      CHECK(augment(a * b) == augment(a) * augment(b));
      CHECK(regular_rep(star(a)) == regular_rep(a).transpose());
      // tr of the regular representation is |Γ| times the von Neumann trace.
      CHECK(regular_rep(a).trace() == Rational(6) * vn_trace(a));
    }
  }

  TEST_CASE("fourier evaluation of 1 - z") {
    const GroupModel z = GroupModel::free_abelian(1);
    const RationalElement a(z, {{GroupElement{{0}}, Rational(1)}, {GroupElement{{1}}, Rational(-1)}});
    for (double theta : {0.0, 0.3, 1.7, 3.1}) {
      const double th[] = {theta};
      const auto v = fourier_eval(a, th);
      CHECK(std::abs(v - (1.0 - std::polar(1.0, theta))) < 1e-14);
    }
  }

  TEST_CASE("direct products and tensors") {
    const GroupModel p = direct_product(GroupModel::cyclic(2), GroupModel::cyclic(3));
    CHECK(p.order() == 6);
    CHECK(p.is_abelian());
    CHECK(direct_product(GroupModel::free_abelian(1), GroupModel::free_abelian(2)).rank() == 3);
    CHECK(direct_product(GroupModel::trivial(), GroupModel::cyclic(4)) == GroupModel::cyclic(4));
    CHECK_THROWS_AS(direct_product(GroupModel::cyclic(2), GroupModel::free_abelian(1)), ValidationError);
    std::mt19937_64 rng(3);
    const RationalElement a = random_element(rng, GroupModel::cyclic(2), 2);
    const RationalElement b = random_element(rng, GroupModel::cyclic(3), 2);
    CHECK(vn_trace(tensor(a, b, p)) == vn_trace(a) * vn_trace(b));
    CHECK(augment(tensor(a, b, p)) == augment(a) * augment(b));
  }

  TEST_CASE("tower nestedness") {
    const GroupModel z = GroupModel::free_abelian(1);
    const GroupModel nested = GroupModel::tower(
        z, {{GroupHom(z, GroupModel::cyclic(2), {el(1)})}, {GroupHom(z, GroupModel::cyclic(4), {el(1)})}});
    const GroupModel not_nested = GroupModel::tower(
        z, {{GroupHom(z, GroupModel::cyclic(2), {el(1)})}, {GroupHom(z, GroupModel::cyclic(3), {el(1)})}});
    CHECK(tower_is_nested(nested));
    CHECK_FALSE(tower_is_nested(not_nested));
  }

  TEST_CASE("hermitian check names the offending entry") {
    const GroupModel z3 = GroupModel::cyclic(3);
    GroupRingMatrix<Rational> m(z3, 2, 2);
    m(0, 1) = RationalElement(z3, {{el(1), Rational(1)}});
    m(1, 0) = RationalElement(z3, {{el(1), Rational(1)}});
    try {
      check_hermitian(m, Parity::hermitian);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
    m(1, 0) = RationalElement(z3, {{el(2), Rational(1)}});
    CHECK_NOTHROW(check_hermitian(m, Parity::hermitian));
  }

  TEST_CASE("plumbing form of 1 - z") {
    const GroupModel z4 = GroupModel::cyclic(4);
    GroupRingMatrix<Rational> psi(z4, 1, 1);
    psi(0, 0) = RationalElement(z4, {{el(0), Rational(1)}, {el(1), Rational(-1)}});
    const auto f = plumbing_form(psi, 0);
    CHECK(f(0, 0) == RationalElement(z4, {{el(0), Rational(2)}, {el(1), Rational(-1)}, {el(3), Rational(-1)}}));
    const auto skew = plumbing_form(psi, 1);
    CHECK(skew.parity() == Parity::skew);
    CHECK(skew(0, 0) == RationalElement(z4, {{el(1), Rational(-1)}, {el(3), Rational(1)}}));
  }
}
