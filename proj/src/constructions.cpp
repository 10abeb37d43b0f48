#include "l2sig/constructions.hpp"

#include <algorithm>
#include <bit>

#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

// Kühnel's 9-vertex complex projective plane, vertices renumbered from 0.
const std::vector<Simplex> kCp2Facets = {
    {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5}, {0, 1, 3, 4, 6}, {0, 1, 3, 5, 7}, {0, 1, 3, 6, 7},
    {0, 1, 4, 5, 6}, {0, 1, 5, 6, 8}, {0, 1, 5, 7, 8}, {0, 1, 6, 7, 8}, {0, 2, 3, 4, 8}, {0, 2, 3, 5, 8},
    {0, 2, 4, 5, 6}, {0, 2, 4, 6, 7}, {0, 2, 4, 7, 8}, {0, 2, 5, 6, 8}, {0, 2, 6, 7, 8}, {0, 3, 4, 6, 7},
    {0, 3, 4, 7, 8}, {0, 3, 5, 7, 8}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 3, 6, 7}, {1, 2, 3, 6, 8},
    {1, 2, 4, 5, 7}, {1, 2, 4, 7, 8}, {1, 2, 6, 7, 8}, {1, 3, 4, 6, 8}, {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8},
    {2, 3, 5, 6, 7}, {2, 3, 5, 6, 8}, {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}, {3, 4, 5, 6, 8}, {3, 4, 5, 7, 8}};

// The 6-vertex real projective plane (hemi-icosahedron).
const std::vector<Simplex> kRp2Facets = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};

OrientedSimplicialComplex oriented(const OrientedSimplicialComplex& c) {
  return with_orientation(c, validate_and_orient(c));
}

OrientedSimplicialComplex negated(const OrientedSimplicialComplex& c) {
  std::vector<int> signs = c.orientation();
  for (int& s : signs) s = -s;
  return OrientedSimplicialComplex(c.vertex_count(), c.top_simplices(), signs);
}

OrientedSimplicialComplex circle3() {
  return OrientedSimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}, std::vector<int>{1, 1, -1});
}

}  // namespace

OrientedSimplicialComplex staircase_product(const OrientedSimplicialComplex& x, const OrientedSimplicialComplex& y) {
  const int p = x.dim();
  const int q = y.dim();
  const int ny = y.vertex_count();
  const bool oriented_result = x.is_oriented() && y.is_oriented();
  std::vector<Simplex> tops;
  std::vector<int> signs;
  // Lattice paths as bit masks over p + q steps; a set bit is a step in X.
  std::vector<std::pair<unsigned, int>> paths;
  for (unsigned mask = 0; mask < (1u << (p + q)); ++mask) {
    if (std::popcount(mask) != p) continue;
    int sign = 1;
    int y_steps = 0;
    for (int k = 0; k < p + q; ++k) {
      if (mask & (1u << k)) {
        if (y_steps % 2) sign = -sign;
      } else {
        ++y_steps;
      }
    }
    paths.emplace_back(mask, sign);
  }
  const auto& xt = x.top_simplices();
  const auto& yt = y.top_simplices();
  for (std::size_t a = 0; a < xt.size(); ++a)
    for (std::size_t b = 0; b < yt.size(); ++b)
      for (const auto& [mask, shuffle_sign] : paths) {
        Simplex s;
        int i = 0;
        int j = 0;
        s.push_back(xt[a][0] * ny + yt[b][0]);
        for (int k = 0; k < p + q; ++k) {
          if (mask & (1u << k))
            ++i;
          else
            ++j;
          s.push_back(xt[a][i] * ny + yt[b][j]);
        }
        tops.push_back(std::move(s));
        if (oriented_result) signs.push_back(x.orientation()[a] * y.orientation()[b] * shuffle_sign);
      }
  std::optional<std::vector<int>> orientation;
  if (oriented_result) orientation = std::move(signs);
  return OrientedSimplicialComplex(x.vertex_count() * ny, std::move(tops), std::move(orientation));
}

CoveredComplex staircase_product(const CoveredComplex& x, const CoveredComplex& y) {
  validate_cocycle(x.complex, x.covering);
  validate_cocycle(y.complex, y.covering);
  OrientedSimplicialComplex product = staircase_product(x.complex, y.complex);
  const GroupModel& gx = x.covering.group();
  const GroupModel& gy = y.covering.group();
  CoveringCocycle cocycle(direct_product(gx, gy));
  const int ny = y.complex.vertex_count();
  for (const auto& e : product.simplices(1)) {
    const int x0 = e[0] / ny, y0 = e[0] % ny, x1 = e[1] / ny, y1 = e[1] % ny;
    const GroupElement g = product_element(gx, gy, x.covering(x0, x1), y.covering(y0, y1));
    if (g != cocycle.group().identity()) cocycle.set(e[0], e[1], g);
  }
  validate_cocycle(product, cocycle);
  return {std::move(product), std::move(cocycle)};
}

OrientedSimplicialComplex standard_complex(std::string_view name) {
  if (name == "sphere2") return boundary_of_simplex(2);
  if (name == "sphere4") return boundary_of_simplex(4);
  if (name == "circle3") return circle3();
  if (name == "cp2_9") {
    // The propagated orientation has signature -1; the complex orientation is its negative.
    OrientedSimplicialComplex c = negated(oriented(OrientedSimplicialComplex(9, kCp2Facets)));
    const auto f = c.f_vector();
    if (c.vertex_count() != 9 || f.back() != 36 || c.euler_characteristic() != 3)
      throw Error("shipped CP2 triangulation failed its f-vector check");
    return c;
  }
  if (name == "rp2_6") return OrientedSimplicialComplex(6, kRp2Facets);
  if (name == "torus2") return staircase_product(circle3(), circle3());
  if (name == "torus4") {
    const auto t2 = staircase_product(circle3(), circle3());
    return staircase_product(t2, t2);
  }
  throw ValidationError("unknown standard complex '" + std::string(name) + "'");
}

std::vector<std::string> standard_complex_names() {
  return {"sphere2", "sphere4", "circle3", "cp2_9", "rp2_6", "torus2", "torus4"};
}

CoveredComplex circle_with_monodromy(const GroupModel& group, const GroupElement& g) {
  CoveringCocycle cocycle(group);
  if (g != group.identity()) cocycle.set(2, 0, g);
  return {circle3(), std::move(cocycle)};
}

CoveredComplex torus4_with_monodromy(const GroupModel& group, const GroupElement& g) {
  const CoveredComplex plain{circle3(), CoveringCocycle::trivial()};
  CoveredComplex t = staircase_product(circle_with_monodromy(group, g), plain);
  t = staircase_product(t, plain);
  return staircase_product(t, plain);
}

RationalElement one_minus_generator(const GroupModel& group) {
  const auto gens = group.generators();
  if (gens.empty()) throw ValidationError("the trivial group has no generator");
  return RationalElement(group, {{group.identity(), Rational(1)}, {gens.front(), Rational(-1)}});
}

HermitianForm<Rational> counterexample_form(const GroupModel& group) {
  GroupRingMatrix<Rational> psi(group, 1, 1);
  psi(0, 0) = one_minus_generator(group);
  return plumbing_form(psi, 0);
}

std::vector<BatteryEntry> counterexample_battery(std::span<const std::int64_t> p_list) {
  std::vector<BatteryEntry> out;
  for (std::int64_t p : p_list) {
    if (p < 1) throw ValidationError("battery entries must be at least 1");
    const GroupModel group = p == 1 ? GroupModel::free_abelian(1) : GroupModel::cyclic(p);
    out.push_back({p, counterexample_form(group), p == 1 ? Rational(1) : Rational(p - 1) / p, 0});
  }
  return out;
}

GroupModel cyclic_tower(std::span<const std::int64_t> orders) {
  const GroupModel z = GroupModel::free_abelian(1);
  std::vector<Quotient> quotients;
  for (std::int64_t k : orders) quotients.push_back({GroupHom(z, GroupModel::cyclic(k), {GroupElement{{1}}})});
  return GroupModel::tower(z, std::move(quotients));
}

}  // namespace l2sig
