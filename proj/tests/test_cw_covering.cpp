#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "l2sig/constructions.hpp"
#include "l2sig/errors.hpp"
#include "l2sig/pairing.hpp"
#include "l2sig/verify.hpp"
#include "l2sig/whitney.hpp"

using namespace l2sig;

namespace {

GroupElement el(std::int64_t k) { return GroupElement{{k}}; }

CoveredComplex plain(const OrientedSimplicialComplex& c) { return {c, CoveringCocycle::trivial()}; }

std::vector<std::int64_t> exact_betti(const CoveredComplex& s, ExactRealization r = ExactRealization::regular) {
  return betti_numbers(twisted_cochain_complex(s.complex, s.covering, r));
}

std::string message_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("cw-covering") {
  TEST_CASE("sorting signs") {
    const int id[] = {0, 1, 2, 3};
    const int swap[] = {1, 0, 2, 3};
    const int cycle[] = {1, 2, 0};
    CHECK(sorting_sign(id) == 1);
    CHECK(sorting_sign(swap) == -1);
    CHECK(sorting_sign(cycle) == 1);
  }

  TEST_CASE("face closure and orientation") {
    const auto s2 = boundary_of_simplex(2);
    CHECK(s2.f_vector() == std::vector<std::int64_t>{4, 6, 4});
    CHECK(s2.euler_characteristic() == 2);
    const auto cycle = validate_and_orient(s2);
    for (auto b : boundary_of_top_chain(s2, cycle.signs)) CHECK(b == 0);
    const auto sd = barycentric_subdivision(s2);
    CHECK(sd.f_vector() == std::vector<std::int64_t>{14, 36, 24});
    CHECK(sd.is_subdivision());
    CHECK_NOTHROW(validate_and_orient(sd));
  }

  TEST_CASE("non-orientable and non-manifold complexes are rejected") {
    const auto rp2 = standard_complex("rp2_6");
    CHECK(message_of([&] { validate_and_orient(rp2); }).find("not orientable") != std::string::npos);
    CHECK_THROWS_AS(validate_and_orient(rp2), ValidationError);
    const OrientedSimplicialComplex book(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK_THROWS_AS(validate_and_orient(book), ValidationError);
    // A stored orientation whose boundary does not vanish.
    const OrientedSimplicialComplex bad(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, std::vector<int>{1, 1, 1, 1});
    CHECK_THROWS_AS(validate_and_orient(bad), ValidationError);
  }

  TEST_CASE("betti numbers of the shipped complexes") {
    CHECK(exact_betti(plain(standard_complex("sphere4"))) == std::vector<std::int64_t>{1, 0, 0, 0, 1});
    CHECK(exact_betti(plain(standard_complex("torus2"))) == std::vector<std::int64_t>{1, 2, 1});
    CHECK(exact_betti(plain(standard_complex("cp2_9"))) == std::vector<std::int64_t>{1, 0, 1, 0, 1});
    // Rational cohomology of RP² is that of a point.
    CHECK(exact_betti(plain(standard_complex("rp2_6"))) == std::vector<std::int64_t>{1, 0, 0});
  }

  TEST_CASE("coverings of the circle") {
    const GroupModel z3 = GroupModel::cyclic(3);
    const CoveredComplex c = circle_with_monodromy(z3, el(1));
    CHECK_NOTHROW(validate_cocycle(c.complex, c.covering));
    const int loop[] = {0, 1, 2};
    CHECK(monodromy(c.covering, loop) == el(1));
    // The connected triple cover is a 9-gon.
    const auto cover = explicit_cover(c.complex, c.covering);
    CHECK(cover.f_vector() == std::vector<std::int64_t>{9, 9});
    CHECK(exact_betti(plain(cover)) == std::vector<std::int64_t>{1, 1});
    CHECK(exact_betti(c) == std::vector<std::int64_t>{1, 1});
    // Trivial labels: three disjoint circles.
    const CoveredComplex split{c.complex, CoveringCocycle(z3)};
    CHECK(exact_betti(split) == std::vector<std::int64_t>{3, 3});
  }

  TEST_CASE("cocycle condition is enforced") {
    const auto s2 = boundary_of_simplex(2);
    CoveringCocycle cocycle(GroupModel::cyclic(2));
    cocycle.set(0, 1, el(1));
    CHECK(message_of([&] { validate_cocycle(s2, cocycle); }).find("cocycle condition fails") != std::string::npos);
    CoveringCocycle off_edge(GroupModel::cyclic(2));
    off_edge.set(0, 5, el(1));
    CHECK_THROWS_AS(validate_cocycle(s2, off_edge), ValidationError);
  }

  TEST_CASE("gauging to a spanning tree keeps the monodromy") {
    const GroupModel z5 = GroupModel::cyclic(5);
    const CoveredComplex t = staircase_product(circle_with_monodromy(z5, el(2)), plain(standard_complex("circle3")));
    const GaugedCocycle g = gauge_to_spanning_tree(t.complex, t.covering);
    CHECK_NOTHROW(validate_cocycle(t.complex, g.cocycle));
    for (const auto& [u, w] : g.tree_edges) CHECK(g.cocycle(u, w) == z5.identity());
    CHECK(g.tree_edges.size() == static_cast<std::size_t>(t.complex.vertex_count() - 1));
    CHECK(exact_betti(t) == exact_betti({t.complex, g.cocycle}));
  }

  TEST_CASE("twisted circle is acyclic away from the trivial character") {
    const GroupModel z = GroupModel::free_abelian(1);
    const CoveredComplex c = circle_with_monodromy(z, el(1));
    for (double theta : {0.0, 0.7, 2.0}) {
      // δ⁰ by hand: edges (0,1), (0,2), (1,2); only (0,2) carries a nontrivial label.
      const double th[] = {theta};
      const std::complex<double> chi = std::polar(1.0, theta * static_cast<double>(c.covering(0, 2).coords[0]));
      Eigen::Matrix3cd d;
      d << -1.0, 1.0, 0.0, -1.0, 0.0, chi, 0.0, -1.0, 1.0;
      const bool invertible = std::abs(d.determinant()) > 1e-9;
      const auto betti = betti_numbers(twisted_cochain_complex(c.complex, c.covering, th), 1e-9);
      CHECK(betti == (invertible ? std::vector<std::int64_t>{0, 0} : std::vector<std::int64_t>{1, 1}));
      CHECK(invertible == (theta != 0.0));
    }
  }

  TEST_CASE("coboundary and cup identities") {
    std::mt19937_64 rng(21);
    for (const auto& c : check_cochain_identities(rng)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  }

  TEST_CASE("torus intersection form is skew and nondegenerate") {
    const MiddlePairingData d = intersection_pairing(plain(standard_complex("torus2")), ExactRealization::trivial);
    REQUIRE(d.pairing.rows() == 2);
    CHECK(d.pairing == Matrix<Rational>(-d.pairing.transpose()));
    CHECK(d.pairing(0, 0) * d.pairing(1, 1) - d.pairing(0, 1) * d.pairing(1, 0) != Rational(0));
  }

  TEST_CASE("cup square on CP2") {
    const OrientedSimplicialComplex cp2 = standard_complex("cp2_9");
    CHECK(cp2.f_vector() == std::vector<std::int64_t>{9, 36, 84, 90, 36});
    const MiddlePairingData d = intersection_pairing(plain(cp2), ExactRealization::trivial);
    REQUIRE(d.pairing.rows() == 1);
    const Cochain x{2, d.basis[0]};
    CHECK(coboundary(cp2, x) == zero_cochain(cp2, 3));
    const FundamentalCycle cycle = validate_and_orient(cp2);
    const Rational square = evaluate_on_cycle(cp2, cycle, aw_cup(cp2, x, x, LocalOrdering::identity(9)));
    CHECK(square == d.pairing(0, 0));
    CHECK(square > 0);
    CHECK(l2_signature_of_space(plain(cp2)).ordinary_sign == 1);
  }

  TEST_CASE("middle dimension must exist") {
    CHECK(message_of([] { intersection_pairing(plain(standard_complex("circle3")), ExactRealization::trivial); })
              .find("middle dimension undefined") != std::string::npos);
    CHECK_THROWS_AS(l2_signature_of_space(plain(standard_complex("torus2"))), ValidationError);
  }

  TEST_CASE("spaces: closed-complex signature, two routes, orderings") {
    std::mt19937_64 rng(4);
    for (const auto& c : check_two_route()) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    for (const auto& c : check_ordering_independence(rng)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    for (const auto& c : check_pairing_basis_change(rng)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  }

  TEST_CASE("relabelled CP2 keeps its signature") {
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(8);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = l2_signature_of_space(plain(relabel(standard_complex("cp2_9"), perm)));
    CHECK(*r.sign2_exact == Rational(1));
  }

  TEST_CASE("torus route on a trivially covered CP2") {
    CoveredComplex s{standard_complex("cp2_9"), CoveringCocycle(GroupModel::free_abelian(1))};
    const double theta[] = {0.9};
    const TorusPairingData d = intersection_pairing(s, theta, 1e-9);
    REQUIRE(d.harmonic.cols() == 1);
    CHECK(d.hermitian_defect < 1e-10);
    CHECK(d.pairing(0, 0).real() > 0.0);
    const SignatureReport r = l2_signature_of_space(s, QuadratureSpec{64, 0, 1e-9});
    CHECK(r.sign2 == 1.0);
    CHECK(r.ordinary_sign == 1);
  }

  TEST_CASE("twisted torus is acyclic") {
    const GroupModel z = GroupModel::free_abelian(1);
    const CoveredComplex t = staircase_product(circle_with_monodromy(z, el(1)), plain(standard_complex("circle3")));
    const double theta[] = {1.3};
    CHECK(betti_numbers(twisted_cochain_complex(t.complex, t.covering, theta), 1e-9) ==
          std::vector<std::int64_t>{0, 0, 0});
    const double zero[] = {0.0};
    CHECK(betti_numbers(twisted_cochain_complex(t.complex, t.covering, zero), 1e-9) ==
          std::vector<std::int64_t>{1, 2, 1});
  }

  TEST_CASE("simplex monomial integrals") {
    const int len[] = {0, 0};
    const int sq[] = {2, 0};
    const int x1[] = {0, 1, 0};
    const int x0x1[] = {1, 1, 0};
    CHECK(simplex_monomial_integral(len) == Rational(1));
    CHECK(simplex_monomial_integral(sq) == Rational(1, 3));
    CHECK(simplex_monomial_integral(x1) == Rational(1, 6));
    CHECK(simplex_monomial_integral(x0x1) == Rational(1, 24));
  }

  TEST_CASE("whitney pairing constants") {
    const int e01[] = {0, 1};
    const int e12[] = {1, 2};
    const int e10[] = {1, 0};
    CHECK(star_sign(2, e01, e12) == 1);
    CHECK(whitney_wedge_integral(2, e01, e12) == Rational(1, 6));
    CHECK(whitney_wedge_integral(2, e10, e12) == Rational(-1, 6));
    CHECK(whitney_wedge_integral(2, e01, e01) == Rational(0));
    CHECK(averaged_cup_on_simplex(2, e01, e12) == Rational(1, 6));
    const auto cases = whitney_pairing_check(6);
    std::size_t failed = 0;
    for (const auto& w : cases) failed += w.pass ? 0 : 1;
    CHECK(failed == 0);
    CHECK(cases.size() > 1000);
  }
}
