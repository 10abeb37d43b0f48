#include <doctest.h>

#include <cstdlib>
#include <string>

#include "l2sig/constructions.hpp"
#include "l2sig/errors.hpp"
#include "l2sig/json_io.hpp"
#include "l2sig/pairing.hpp"

using namespace l2sig;

namespace {

GroupElement el(std::int64_t k) { return GroupElement{{k}}; }

CoveredComplex plain(const OrientedSimplicialComplex& c) { return {c, CoveringCocycle::trivial()}; }

std::string data_path(const std::string& name) { return std::string(L2SIG_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("square from two intervals") {
    const auto square = staircase_product(full_simplex(1), full_simplex(1));
    CHECK(square.f_vector() == std::vector<std::int64_t>{4, 5, 2});
    // The product orientation cancels on the diagonal and leaves the four sides.
    const auto boundary = boundary_of_top_chain(square, square.orientation());
    for (std::size_t e = 0; e < square.simplices(1).size(); ++e) {
      const bool diagonal = square.simplices(1)[e] == Simplex{0, 3};
      CHECK(std::abs(boundary[e]) == (diagonal ? 0 : 1));
    }
  }

  TEST_CASE("tori by shuffle counts") {
    const auto t2 = standard_complex("torus2");
    CHECK(t2.f_vector() == std::vector<std::int64_t>{9, 27, 18});
    CHECK(t2.euler_characteristic() == 0);
    const auto t4 = standard_complex("torus4");
    CHECK(t4.vertex_count() == 81);
    // 4! lattice paths for each of the 3⁴ products of edges.
    CHECK(t4.top_simplices().size() == 24u * 81u);
    CHECK(t4.euler_characteristic() == 0);
    CHECK_NOTHROW(validate_and_orient(t4));
  }

  TEST_CASE("euler characteristic is multiplicative and the product is associative") {
    const auto s2 = standard_complex("sphere2");
    const auto c = standard_complex("circle3");
    CHECK(staircase_product(s2, s2).euler_characteristic() == 4);
    CHECK(staircase_product(s2, c).euler_characteristic() == 0);
    CHECK(staircase_product(staircase_product(c, c), c).f_vector() ==
          staircase_product(c, staircase_product(c, c)).f_vector());
    const auto s2s2 = staircase_product(s2, s2);
    const auto r = l2_signature_of_space(plain(s2s2));
    CHECK(*r.sign2_exact == Rational(0));
    CHECK(r.total_dim == 2.0);
  }

  TEST_CASE("product coverings") {
    const CoveredComplex a = circle_with_monodromy(GroupModel::cyclic(2), el(1));
    const CoveredComplex b = circle_with_monodromy(GroupModel::cyclic(3), el(1));
    const CoveredComplex t = staircase_product(a, b);
    CHECK(t.covering.group().order() == 6);
    CHECK_NOTHROW(validate_cocycle(t.complex, t.covering));
    // Both monodromies together generate the group, so the cover is one torus.
    const auto cover = explicit_cover(t.complex, t.covering);
    CHECK(cover.euler_characteristic() == 0);
    CHECK(betti_numbers(twisted_cochain_complex(cover, CoveringCocycle::trivial(), ExactRealization::trivial)) ==
          std::vector<std::int64_t>{1, 2, 1});
    CHECK(betti_numbers(twisted_cochain_complex(t.complex, t.covering, ExactRealization::regular)) ==
          std::vector<std::int64_t>{1, 2, 1});
  }

  TEST_CASE("shipped data files match the built-in complexes") {
    for (const std::string name : {"sphere2", "sphere4", "circle3", "cp2_9", "rp2_6", "torus2"}) {
      const CoveredComplex parsed = parse_complex(read_json_file(data_path(name + ".json")));
      const OrientedSimplicialComplex built = standard_complex(name);
      CHECK_MESSAGE(parsed.complex.top_simplices() == built.top_simplices(), name);
      CHECK_MESSAGE(parsed.complex.orientation() == built.orientation(), name);
      CHECK(parsed.covering.group().is_trivial());
    }
    CHECK_THROWS_AS(standard_complex("klein_bottle"), ValidationError);
  }

  TEST_CASE("counterexample battery") {
    const std::vector<std::int64_t> ps = {1, 2, 7};
    const auto battery = counterexample_battery(ps);
    REQUIRE(battery.size() == 3);
    CHECK(battery[0].form.group().is_free_abelian());
    CHECK(battery[0].expected_sign2 == Rational(1));
    CHECK(battery[1].expected_sign2 == Rational(1, 2));
    CHECK(battery[2].expected_sign2 == Rational(6, 7));
    for (const auto& e : battery) CHECK(e.expected_sign == 0);
    const std::vector<std::int64_t> bad = {0};
    CHECK_THROWS_AS(counterexample_battery(bad), ValidationError);
  }
}
