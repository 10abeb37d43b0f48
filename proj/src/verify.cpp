#include "l2sig/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "l2sig/constructions.hpp"
#include "l2sig/errors.hpp"
#include "l2sig/json_io.hpp"
#include "l2sig/pairing.hpp"
#include "l2sig/vn_signature.hpp"
#include "l2sig/whitney.hpp"

namespace l2sig {

namespace {

std::vector<std::vector<int>> s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return table;
}

GroupModel s3() { return GroupModel::table(s3_table()); }

GroupModel klein() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return GroupModel::table(std::move(t));
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

GroupElement random_group_element(std::mt19937_64& rng, const GroupModel& group) {
  return group.element_at(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(group.order()) - 1)));
}

Rational random_small_rational(std::mt19937_64& rng) { return Rational(uniform(rng, -3, 3)) / uniform(rng, 1, 2); }

template <typename Scalar>
Scalar random_scalar(std::mt19937_64& rng);

template <>
Rational random_scalar<Rational>(std::mt19937_64& rng) {
  return random_small_rational(rng);
}

template <>
GaussianRational random_scalar<GaussianRational>(std::mt19937_64& rng) {
  return {random_small_rational(rng), random_small_rational(rng)};
}

template <typename Scalar>
GroupRingElement<Scalar> random_ring_element(std::mt19937_64& rng, const GroupModel& group, int terms) {
  std::vector<std::pair<GroupElement, Scalar>> t;
  for (int k = 0; k < terms; ++k) t.emplace_back(random_group_element(rng, group), random_scalar<Scalar>(rng));
  return GroupRingElement<Scalar>(group, t);
}

template <typename Scalar>
HermitianForm<Scalar> random_form(std::mt19937_64& rng, const GroupModel& group, int n) {
  GroupRingMatrix<Scalar> m(group, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_ring_element<Scalar>(rng, group, uniform(rng, 0, 3));
  // A constant diagonal shift keeps sign² away from the balanced value 0.
  GroupRingMatrix<Scalar> shift(group, n, n);
  for (int i = 0; i < n; ++i) shift(i, i) = GroupRingElement<Scalar>::constant(group, Scalar(Rational(uniform(rng, -6, 6))));
  return check_hermitian(m + star_transpose(m) + shift, Parity::hermitian);
}

template <typename Scalar>
GroupRingMatrix<Scalar> random_unit_matrix(std::mt19937_64& rng, const GroupModel& group, int n) {
  static const int numerators[] = {1, -1, 2, -2, 1, -3};
  static const int denominators[] = {1, 1, 1, 1, 2, 2};
  GroupRingMatrix<Scalar> lower = GroupRingMatrix<Scalar>::identity(group, n);
  GroupRingMatrix<Scalar> upper = GroupRingMatrix<Scalar>::identity(group, n);
  GroupRingMatrix<Scalar> diag(group, n, n);
  for (int i = 0; i < n; ++i) {
    const int k = uniform(rng, 0, 5);
    diag(i, i) = GroupRingElement<Scalar>::basis(group, random_group_element(rng, group),
                                                 Scalar(Rational(numerators[k]) / denominators[k]));
    for (int j = 0; j < i; ++j) {
      lower(i, j) = random_ring_element<Scalar>(rng, group, 2);
      upper(j, i) = random_ring_element<Scalar>(rng, group, 2);
    }
  }
  return lower * diag * upper;
}

std::string describe(const SignatureReport& r) {
  return "sign2 " + (r.sign2_exact ? to_string(*r.sign2_exact) : format_double(r.sign2)) + ", kernel " +
         (r.kernel_exact ? to_string(*r.kernel_exact) : format_double(r.kernel_dim));
}

CaseResult compare_reports(std::string name, const SignatureReport& a, const SignatureReport& b) {
  const bool ok = a.sign2_exact && b.sign2_exact && *a.sign2_exact == *b.sign2_exact && a.kernel_exact &&
                  b.kernel_exact && *a.kernel_exact == *b.kernel_exact;
  return {std::move(name), ok, describe(a) + " vs " + describe(b)};
}

GroupHom embedding(const GroupModel& source, const GroupModel& target, std::vector<GroupElement> images) {
  return GroupHom(source, target, std::move(images));
}

GroupElement el(std::int64_t k) { return GroupElement{{k}}; }

CoveredComplex plain(const OrientedSimplicialComplex& c) { return {c, CoveringCocycle::trivial()}; }

CoveredComplex torus2_with_monodromy(const GroupModel& group, const GroupElement& g) {
  return staircase_product(circle_with_monodromy(group, g), plain(standard_complex("circle3")));
}

Cochain random_cochain(std::mt19937_64& rng, const OrientedSimplicialComplex& c, int degree) {
  Cochain out = zero_cochain(c, degree);
  for (auto& v : out.values)
    if (uniform(rng, 0, 2) == 0) v = Rational(uniform(rng, -2, 2));
  return out;
}

LocalOrdering random_ordering(std::mt19937_64& rng, int vertex_count) {
  std::vector<int> ranks(static_cast<std::size_t>(vertex_count));
  std::iota(ranks.begin(), ranks.end(), 0);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return LocalOrdering::from_ranks(std::move(ranks));
}

LocalOrdering reversed_ordering(int vertex_count) {
  std::vector<int> ranks(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) ranks[v] = vertex_count - 1 - v;
  return LocalOrdering::from_ranks(std::move(ranks));
}

template <typename Cup>
CaseResult leibniz_case(std::string name, const OrientedSimplicialComplex& c, const Cochain& a, const Cochain& b,
                        Cup&& cup) {
  const Cochain lhs = coboundary(c, cup(a, b));
  const Rational sign(a.degree % 2 == 0 ? 1 : -1);
  const Cochain rhs = cup(coboundary(c, a), b) + sign * cup(a, coboundary(c, b));
  return {std::move(name), lhs == rhs,
          "degrees " + std::to_string(a.degree) + "," + std::to_string(b.degree)};
}

Matrix<Rational> pairing_matrix(const std::vector<PairingTerm>& terms, const CoveringCocycle& cocycle,
                                const std::vector<std::vector<Rational>>& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix<Rational> s(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      s(i, j) = pair_cochains(terms, cocycle, ExactRealization::regular, basis[i], basis[j]);
  return s;
}

}  // namespace

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"whitney", "kunneth", "sylvester", "two-route", "ordering"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

GroupModel random_finite_group(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0:
      return GroupModel::cyclic(2);
    case 1:
      return GroupModel::cyclic(3);
    case 2:
      return GroupModel::cyclic(4);
    case 3:
      return GroupModel::cyclic(5);
    case 4:
      return klein();
    default:
      return s3();
  }
}

RationalElement random_element(std::mt19937_64& rng, const GroupModel& group, int terms) {
  return random_ring_element<Rational>(rng, group, terms);
}

HermitianForm<Rational> random_hermitian_form(std::mt19937_64& rng, const GroupModel& group, int n) {
  return random_form<Rational>(rng, group, n);
}

GroupRingMatrix<Rational> random_invertible(std::mt19937_64& rng, const GroupModel& group, int n) {
  return random_unit_matrix<Rational>(rng, group, n);
}

std::vector<CaseResult> check_whitney(int max_dim) {
  std::map<std::pair<int, int>, std::pair<int, int>> tally;
  std::vector<CaseResult> failures;
  for (const WhitneyCase& w : whitney_pairing_check(max_dim)) {
    auto& [total, passed] = tally[{w.p, w.q}];
    ++total;
    if (w.pass) {
      ++passed;
    } else {
      std::string faces;
      for (int v : w.first) faces += std::to_string(v);
      faces += "|";
      for (int v : w.second) faces += std::to_string(v);
      failures.push_back({"whitney p=" + std::to_string(w.p) + " q=" + std::to_string(w.q) + " faces " + faces, false,
                          "integral " + to_string(w.integral) + ", cup " + to_string(w.cup) + ", expected " +
                              to_string(w.expected)});
    }
  }
  std::vector<CaseResult> out;
  for (const auto& [pq, counts] : tally)
    out.push_back({"whitney p=" + std::to_string(pq.first) + " q=" + std::to_string(pq.second),
                   counts.first == counts.second,
                   std::to_string(counts.second) + "/" + std::to_string(counts.first) + " face pairs"});
  out.insert(out.end(), failures.begin(), failures.end());
  return out;
}

std::vector<CaseResult> check_kunneth(std::mt19937_64& rng, int random_pairs) {
  std::vector<CaseResult> out;
  auto run = [&](std::string name, const HermitianForm<Rational>& f, const HermitianForm<Rational>& g) {
    const SignatureReport rf = l2_signature_of_form(f);
    const SignatureReport rg = l2_signature_of_form(g);
    const SignatureReport rp = l2_signature_of_form(kunneth_product(f, g));
    const Rational expected = *rf.sign2_exact * *rg.sign2_exact;
    out.push_back({std::move(name), *rp.sign2_exact == expected,
                   to_string(*rf.sign2_exact) + " * " + to_string(*rg.sign2_exact) + " = " + to_string(expected) +
                       ", product " + to_string(*rp.sign2_exact)});
  };
  run("kunneth Z/2 x Z/3 counterexamples", counterexample_form(GroupModel::cyclic(2)),
      counterexample_form(GroupModel::cyclic(3)));
  run("kunneth identity x Z/5 counterexample",
      check_hermitian(GroupRingMatrix<Rational>::identity(GroupModel::cyclic(2), 2), Parity::hermitian),
      counterexample_form(GroupModel::cyclic(5)));
  for (int k = 0; k < random_pairs; ++k) {
    GroupModel g1 = random_finite_group(rng);
    GroupModel g2 = random_finite_group(rng);
    while (g1.order() * g2.order() > 16) g2 = random_finite_group(rng);
    const int n1 = uniform(rng, 1, 2);
    const int n2 = g1.order() * g2.order() > 8 ? 1 : uniform(rng, 1, 2);
    run("kunneth random " + std::to_string(k) + " " + g1.describe() + " x " + g2.describe(),
        random_hermitian_form(rng, g1, n1), random_hermitian_form(rng, g2, n2));
  }
  return out;
}

std::vector<CaseResult> check_sylvester_invariance(std::mt19937_64& rng, int count) {
  std::vector<CaseResult> out;
  for (int k = 0; k < count; ++k) {
    const GroupModel group = random_finite_group(rng);
    const int n = uniform(rng, 1, group.order() > 4 ? 2 : 3);
    const std::string name = "sylvester " + std::to_string(k) + " " + group.describe() + " n=" + std::to_string(n);
    if (k % 5 == 4) {
      const auto f = random_form<GaussianRational>(rng, group, n);
      const auto u = random_unit_matrix<GaussianRational>(rng, group, n);
      out.push_back(compare_reports(name + " gaussian", l2_signature_of_form(f), l2_signature_of_form(congruence(u, f))));
    } else {
      const auto f = random_form<Rational>(rng, group, n);
      const auto u = random_unit_matrix<Rational>(rng, group, n);
      out.push_back(compare_reports(name, l2_signature_of_form(f), l2_signature_of_form(congruence(u, f))));
    }
  }
  return out;
}

std::vector<CaseResult> check_route_consistency(std::mt19937_64& rng, int count) {
  std::vector<CaseResult> out;
  auto compare = [&](std::string name, const Inertia& exact, const Inertia& spectral) {
    auto text = [](const Inertia& i) {
      return "(" + std::to_string(i.positive) + "," + std::to_string(i.negative) + "," + std::to_string(i.zero) + ")";
    };
    out.push_back({std::move(name), exact == spectral, "exact " + text(exact) + ", spectral " + text(spectral)});
  };
  for (int k = 0; k < count; ++k) {
    const GroupModel group = random_finite_group(rng);
    const int n = uniform(rng, 1, 3);
    const std::string name = "route " + std::to_string(k) + " " + group.describe() + " n=" + std::to_string(n);
    if (k % 5 == 4) {
      const auto f = random_form<GaussianRational>(rng, group, n);
      compare(name + " gaussian", regular_rep_inertia(f), regular_rep_spectral_inertia(f, 1e-9));
    } else {
      const auto f = random_form<Rational>(rng, group, n);
      compare(name, regular_rep_inertia(f), regular_rep_spectral_inertia(f, 1e-9));
    }
  }
  return out;
}

std::vector<CaseResult> check_induction_invariance() {
  std::vector<CaseResult> out;
  auto run = [&](std::string name, const HermitianForm<Rational>& f, const GroupHom& map) {
    const SignatureReport before = l2_signature_of_form(f);
    const SignatureReport after = l2_signature_of_form(induce_form(f, map));
    CaseResult c = compare_reports(std::move(name), before, after);
    c.passed = c.passed && before.ordinary_sign == after.ordinary_sign;
    c.detail += ", sign " + std::to_string(before.ordinary_sign) + " vs " + std::to_string(after.ordinary_sign);
    out.push_back(std::move(c));
  };
  const GroupModel trivial = GroupModel::trivial();
  const GroupModel z2 = GroupModel::cyclic(2), z3 = GroupModel::cyclic(3), z4 = GroupModel::cyclic(4),
                   z6 = GroupModel::cyclic(6), sym = s3();
  Matrix<Rational> constant(2, 2);
  constant << Rational(2), Rational(1), Rational(1), Rational(-1);
  run("induction constant form trivial -> Z/3", check_hermitian(GroupRingMatrix<Rational>::constant(trivial, constant), Parity::hermitian),
      embedding(trivial, z3, {}));
  run("induction counterexample Z/2 -> Z/4", counterexample_form(z2), embedding(z2, z4, {el(2)}));
  run("induction counterexample Z/2 -> S3", counterexample_form(z2), embedding(z2, sym, {el(1)}));
  run("induction counterexample Z/3 -> S3", counterexample_form(z3), embedding(z3, sym, {el(3)}));
  run("induction counterexample Z/3 -> Z/6", counterexample_form(z3), embedding(z3, z6, {el(2)}));
  GroupRingMatrix<Rational> psi(z3, 2, 2);
  psi(0, 0) = RationalElement(z3, {{el(0), Rational(3)}, {el(1), Rational(-1)}});
  psi(0, 1) = RationalElement(z3, {{el(2), Rational(1, 2)}});
  psi(1, 0) = RationalElement(z3, {{el(1), Rational(-2)}});
  psi(1, 1) = RationalElement(z3, {{el(0), Rational(-1)}, {el(2), Rational(1)}});
  run("induction plumbing 2x2 Z/3 -> Z/6", plumbing_form(psi, 0), embedding(z3, z6, {el(2)}));
  run("induction plumbing 2x2 Z/3 -> S3", plumbing_form(psi, 0), embedding(z3, sym, {el(3)}));
  return out;
}

std::vector<CaseResult> check_direct_sum(std::mt19937_64& rng, int count) {
  std::vector<CaseResult> out;
  for (int k = 0; k < count; ++k) {
    const GroupModel group = random_finite_group(rng);
    const auto f = random_hermitian_form(rng, group, uniform(rng, 1, 2));
    const auto g = random_hermitian_form(rng, group, uniform(rng, 1, 2));
    const SignatureReport rf = l2_signature_of_form(f);
    const SignatureReport rg = l2_signature_of_form(g);
    const SignatureReport rs = l2_signature_of_form(direct_sum(f, g));
    const bool ok = *rs.sign2_exact == *rf.sign2_exact + *rg.sign2_exact &&
                    *rs.kernel_exact == *rf.kernel_exact + *rg.kernel_exact &&
                    rs.ordinary_sign == rf.ordinary_sign + rg.ordinary_sign;
    out.push_back({"direct sum " + std::to_string(k) + " " + group.describe(), ok,
                   to_string(*rf.sign2_exact) + " + " + to_string(*rg.sign2_exact) + " vs " + to_string(*rs.sign2_exact)});
  }
  return out;
}

std::vector<CaseResult> check_cochain_identities(std::mt19937_64& rng) {
  std::vector<CaseResult> out;
  auto exact = [&](std::string name, const CoveredComplex& s, ExactRealization r) {
    out.push_back({std::move(name), coboundary_squares_to_zero(twisted_cochain_complex(s.complex, s.covering, r)), ""});
  };
  const GroupModel z2 = GroupModel::cyclic(2), z3 = GroupModel::cyclic(3);
  exact("delta squared cp2_9", plain(standard_complex("cp2_9")), ExactRealization::trivial);
  exact("delta squared circle Z/2 regular", circle_with_monodromy(z2, el(1)), ExactRealization::regular);
  exact("delta squared torus2 Z/3 regular", torus2_with_monodromy(z3, el(1)), ExactRealization::regular);
  exact("delta squared torus4 Z/2 regular", torus4_with_monodromy(z2, el(1)), ExactRealization::regular);
  {
    const GroupModel z = GroupModel::free_abelian(1);
    const CoveredComplex t = torus2_with_monodromy(z, el(1));
    const double theta[] = {0.7};
    const double defect = coboundary_square_defect(twisted_cochain_complex(t.complex, t.covering, theta));
    out.push_back({"delta squared torus2 Z at theta=0.7", defect < 1e-12, "defect " + format_double(defect)});
  }

  const OrientedSimplicialComplex cp2 = standard_complex("cp2_9");
  const OrientedSimplicialComplex t2 = standard_complex("torus2");
  for (const auto* c : {&cp2, &t2}) {
    const std::string label = c == &cp2 ? "cp2_9" : "torus2";
    const std::vector<std::pair<std::string, LocalOrdering>> orderings = {
        {"vertex order", LocalOrdering::identity(c->vertex_count())},
        {"random order", random_ordering(rng, c->vertex_count())}};
    for (const auto& [ord_name, ord] : orderings)
      for (int p = 0; p < c->dim(); ++p)
        for (int q = 0; p + q < c->dim(); ++q) {
          const Cochain a = random_cochain(rng, *c, p);
          const Cochain b = random_cochain(rng, *c, q);
          out.push_back(leibniz_case("leibniz " + label + " " + ord_name, *c, a, b,
                                     [&](const Cochain& x, const Cochain& y) { return aw_cup(*c, x, y, ord); }));
        }
  }
  const OrientedSimplicialComplex sd = barycentric_subdivision(standard_complex("sphere2"));
  for (int p = 0; p < 2; ++p)
    for (int q = 0; p + q < 2; ++q) {
      const Cochain a = random_cochain(rng, sd, p);
      const Cochain b = random_cochain(rng, sd, q);
      out.push_back(leibniz_case("leibniz averaged cup sd(sphere2)", sd, a, b,
                                 [&](const Cochain& x, const Cochain& y) { return averaged_cup(sd, x, y); }));
    }
  return out;
}

std::vector<CaseResult> check_pairing_basis_change(std::mt19937_64& rng) {
  std::vector<CaseResult> out;
  const GroupModel z2 = GroupModel::cyclic(2);
  const std::vector<std::pair<std::string, CoveredComplex>> spaces = {
      {"cp2_9", plain(standard_complex("cp2_9"))},
      {"torus4 Z/2", torus4_with_monodromy(z2, el(1))}};
  for (const auto& [name, space] : spaces) {
    const MiddlePairingData data = intersection_pairing(space, ExactRealization::regular);
    const Inertia base = exact_inertia(data.pairing);
    const auto b = data.pairing.rows();

    // A random invertible change of basis of H^m.
    Matrix<Rational> u = Matrix<Rational>::Identity(b, b);
    for (Eigen::Index i = 0; i < b; ++i) {
      u(i, i) = Rational(uniform(rng, 1, 3)) * (uniform(rng, 0, 1) ? 1 : -1);
      for (Eigen::Index j = 0; j < i; ++j) u(i, j) = Rational(uniform(rng, -2, 2));
    }
    const Matrix<Rational> changed = u * data.pairing * u.transpose();
    out.push_back({"pairing basis change " + name, exact_inertia(changed) == base,
                   "signature " + std::to_string(base.signature())});

    // Other cocycle representatives: the pairing vanishes on coboundaries.
    const FundamentalCycle cycle = validate_and_orient(space.complex);
    const auto terms = pairing_terms(space.complex, cycle, space.covering, LocalOrdering::identity(space.complex.vertex_count()));
    const auto cochains = twisted_cochain_complex(space.complex, space.covering, ExactRealization::regular);
    const auto& delta = cochains.coboundary[data.degree - 1];
    std::vector<std::vector<Rational>> shifted = data.basis;
    for (auto& v : shifted) {
      std::vector<Rational> x(delta.cols(), Rational(0));
      for (auto& e : x)
        if (uniform(rng, 0, 3) == 0) e = Rational(uniform(rng, -2, 2));
      const auto dx = delta.apply(x);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += dx[k];
    }
    out.push_back({"pairing representative change " + name,
                   pairing_matrix(terms, space.covering, shifted) == data.pairing, ""});
  }
  return out;
}

std::vector<CaseResult> check_two_route() {
  std::vector<CaseResult> out;
  const GroupModel z2 = GroupModel::cyclic(2), z3 = GroupModel::cyclic(3);
  const std::vector<std::pair<std::string, CoveredComplex>> spaces = {
      {"cp2_9 trivial", plain(standard_complex("cp2_9"))},
      {"sphere4 trivial", plain(standard_complex("sphere4"))},
      {"cp2_9 with the trivial Z/2 cocycle", {standard_complex("cp2_9"), CoveringCocycle(z2)}},
      {"torus4 Z/2", torus4_with_monodromy(z2, el(1))},
      {"torus4 Z/3", torus4_with_monodromy(z3, el(1))}};
  for (const auto& [name, space] : spaces) {
    const SignatureReport regular = l2_signature_of_space(space);
    const SignatureReport cover = explicit_cover_signature(space);
    CaseResult c = compare_reports("two-route " + name, regular, cover);
    c.passed = c.passed && Rational(regular.ordinary_sign) == *regular.sign2_exact;
    c.detail += ", ordinary " + std::to_string(regular.ordinary_sign);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CaseResult> check_ordering_independence(std::mt19937_64& rng) {
  std::vector<CaseResult> out;
  const GroupModel z2 = GroupModel::cyclic(2);
  const std::vector<std::pair<std::string, CoveredComplex>> spaces = {
      {"cp2_9", plain(standard_complex("cp2_9"))},
      {"sphere4", plain(standard_complex("sphere4"))},
      {"torus4 Z/2", torus4_with_monodromy(z2, el(1))}};
  for (const auto& [name, space] : spaces) {
    const int n = space.complex.vertex_count();
    const SignatureReport base = l2_signature_of_space(space, std::nullopt, LocalOrdering::identity(n));
    out.push_back(compare_reports("ordering reversed " + name, base,
                                  l2_signature_of_space(space, std::nullopt, reversed_ordering(n))));
    out.push_back(compare_reports("ordering random " + name, base,
                                  l2_signature_of_space(space, std::nullopt, random_ordering(rng, n))));
  }
  return out;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  if (!is_suite(name)) throw ValidationError("unknown suite '" + std::string(name) + "'");
  std::mt19937_64 rng(seed);
  SuiteReport report{std::string(name), {}};
  auto append = [&](std::vector<CaseResult> cases) {
    report.cases.insert(report.cases.end(), std::make_move_iterator(cases.begin()), std::make_move_iterator(cases.end()));
  };
  if (name == "whitney") {
    append(check_whitney(6));
  } else if (name == "kunneth") {
    append(check_kunneth(rng, 20));
  } else if (name == "sylvester") {
    append(check_sylvester_invariance(rng, 50));
    append(check_route_consistency(rng, 50));
    append(check_induction_invariance());
    append(check_direct_sum(rng, 20));
    append(check_pairing_basis_change(rng));
  } else if (name == "two-route") {
    append(check_two_route());
  } else {
    append(check_ordering_independence(rng));
    append(check_cochain_identities(rng));
  }
  return report;
}

}  // namespace l2sig
