#include "l2sig/whitney.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "l2sig/cochain.hpp"
#include "l2sig/complex.hpp"
#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Rational>;
// Differential forms keyed by the increasing set of dx indices (a bit mask).
using Form = std::map<unsigned, Polynomial>;

void add_term(Polynomial& poly, const Monomial& m, const Rational& c) {
  auto& slot = poly[m];
  slot += c;
  if (slot.is_zero()) poly.erase(m);
}

Form whitney_form(int d, std::span<const int> vertices) {
  const int p = static_cast<int>(vertices.size()) - 1;
  const Rational scale = factorial(p);
  Form form;
  for (int i = 0; i <= p; ++i) {
    std::vector<int> rest;
    for (int j = 0; j <= p; ++j)
      if (j != i) rest.push_back(vertices[j]);
    unsigned mask = 0;
    for (int v : rest) mask |= 1u << v;
    Monomial m(d + 1, 0);
    m[vertices[i]] = 1;
    add_term(form[mask], m, scale * ((i % 2 == 0 ? 1 : -1) * sorting_sign(rest)));
  }
  return form;
}

// Sign of dx_A ∧ dx_B against the increasing order of A ∪ B.
int wedge_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned bits = b; bits; bits &= bits - 1) {
    const int j = std::countr_zero(bits);
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

Rational simplex_monomial_integral(std::span<const int> exponents) {
  const int d = static_cast<int>(exponents.size()) - 1;
  Rational num(1);
  int total = 0;
  for (int a : exponents) {
    num *= factorial(a);
    total += a;
  }
  return num / factorial(total + d);
}

Rational whitney_wedge_integral(int d, std::span<const int> first, std::span<const int> second) {
  if (static_cast<int>(first.size() + second.size()) != d + 2)
    throw ValidationError("whitney_wedge_integral: degrees must add up to the simplex dimension");
  const Form a = whitney_form(d, first);
  const Form b = whitney_form(d, second);
  Rational total(0);
  for (const auto& [ma, pa] : a)
    for (const auto& [mb, pb] : b) {
      if (ma & mb) continue;
      // dx over {0..d} minus k equals (-1)^k dx_1 ∧ … ∧ dx_d once dx_0 = -Σ dx_i.
      const unsigned missing = ((1u << (d + 1)) - 1) & ~(ma | mb);
      const int k = std::countr_zero(missing);
      const int sign = wedge_sign(ma, mb) * (k % 2 == 0 ? 1 : -1);
      for (const auto& [xa, ca] : pa)
        for (const auto& [xb, cb] : pb) {
          Monomial m(d + 1);
          for (int i = 0; i <= d; ++i) m[i] = xa[i] + xb[i];
          total += sign * ca * cb * simplex_monomial_integral(m);
        }
    }
  return total;
}

int star_sign(int d, std::span<const int> first, std::span<const int> second) {
  std::vector<int> shared;
  for (int v : first)
    if (std::find(second.begin(), second.end(), v) != second.end()) shared.push_back(v);
  if (shared.size() != 1) throw ValidationError("star_sign needs faces meeting in exactly one vertex");
  const int v = shared[0];
  std::vector<int> f(first.begin(), first.end());
  std::vector<int> g(second.begin(), second.end());
  const int s1 = sorting_sign(f);
  const int s2 = sorting_sign(g);
  f.erase(std::find(f.begin(), f.end(), v));
  f.push_back(v);
  g.erase(std::find(g.begin(), g.end(), v));
  g.insert(g.begin(), v);
  std::vector<int> concat = f;
  concat.insert(concat.end(), g.begin() + 1, g.end());
  if (static_cast<int>(concat.size()) != d + 1) throw ValidationError("star_sign: faces do not span the simplex");
  return s1 * sorting_sign(f) * s2 * sorting_sign(g) * sorting_sign(concat);
}

Rational averaged_cup_on_simplex(int d, std::span<const int> first, std::span<const int> second) {
  OrientedSimplicialComplex simplex = full_simplex(d);
  std::vector<int> labels(d + 1);
  std::iota(labels.begin(), labels.end(), 0);
  simplex.set_subdivision_labels(labels);
  const Cochain a = elementary_cochain(simplex, first);
  const Cochain b = elementary_cochain(simplex, second);
  const Cochain c = averaged_cup(simplex, a, b);
  std::vector<int> top(d + 1);
  std::iota(top.begin(), top.end(), 0);
  return evaluate(simplex, c, top);
}

std::vector<WhitneyCase> whitney_pairing_check(int p, int q) {
  const int d = p + q;
  if (p < 0 || q < 0 || d > 6) throw ValidationError("whitney_pairing_check supports p, q >= 0 with p + q <= 6");
  auto subsets = [d](int size) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (d + 1)); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<int> s;
      for (int v = 0; v <= d; ++v)
        if (mask & (1u << v)) s.push_back(v);
      out.push_back(std::move(s));
    }
    return out;
  };
  const Rational constant = factorial(p) * factorial(q) / factorial(p + q + 1);
  std::vector<WhitneyCase> cases;
  for (const auto& f : subsets(p + 1))
    for (const auto& g : subsets(q + 1)) {
      WhitneyCase c;
      c.p = p;
      c.q = q;
      c.first = f;
      c.second = g;
      for (int v : f) c.shared += static_cast<int>(std::count(g.begin(), g.end(), v));
      c.integral = whitney_wedge_integral(d, f, g);
      c.cup = averaged_cup_on_simplex(d, f, g);
      c.expected = c.shared == 1 ? star_sign(d, f, g) * constant : Rational(0);
      c.pass = c.integral == c.expected && c.cup == c.expected;
      cases.push_back(std::move(c));
    }
  return cases;
}

std::vector<WhitneyCase> whitney_pairing_check(int max_dim) {
  std::vector<WhitneyCase> all;
  for (int d = 0; d <= max_dim; ++d)
    for (int p = 0; p <= d; ++p) {
      auto cases = whitney_pairing_check(p, d - p);
      all.insert(all.end(), cases.begin(), cases.end());
    }
  return all;
}

}  // namespace l2sig
