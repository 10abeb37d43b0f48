#include "l2sig/cochain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/SVD>

#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

Simplex drop(const Simplex& s, int i) {
  Simplex f = s;
  f.erase(f.begin() + i);
  return f;
}

// rho(h, s) lists (t, x) with (ρ(h)v)[s] = Σ x·v[t].
template <typename Scalar, typename Rho>
TwistedCochainComplex<Scalar> build_complex(const OrientedSimplicialComplex& complex, const CoveringCocycle& cocycle,
                                            std::int64_t rep_dim, Rho rho) {
  TwistedCochainComplex<Scalar> out;
  out.dim = complex.dim();
  out.rep_dim = rep_dim;
  const auto r = static_cast<std::size_t>(rep_dim);
  for (int p = 0; p <= complex.dim(); ++p) out.cochain_dims.push_back(complex.count(p) * r);
  for (int p = 0; p < complex.dim(); ++p) {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> triplets;
    const auto& cofaces = complex.simplices(p + 1);
    for (std::size_t row = 0; row < cofaces.size(); ++row) {
      const Simplex& tau = cofaces[row];
      for (int i = 0; i <= p + 1; ++i) {
        const Simplex face = drop(tau, i);
        const std::size_t col = complex.index(face);
        const GroupElement h = cocycle(tau[0], face[0]);
        const Scalar sign(i % 2 == 0 ? 1 : -1);
        for (std::size_t s = 0; s < r; ++s)
          for (const auto& [t, x] : rho(h, s)) triplets.emplace_back(row * r + s, col * r + t, sign * x);
      }
    }
    out.coboundary.push_back(
        SparseColumns<Scalar>::from_triplets(cofaces.size() * r, complex.count(p) * r, std::move(triplets)));
  }
  return out;
}

std::size_t numerical_rank(const SparseColumns<std::complex<double>>& m, double tolerance) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const Eigen::MatrixXcd dense = m.to_dense();
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(dense);
  const auto& sv = svd.singularValues();
  return static_cast<std::size_t>((sv.array() > tolerance).count());
}

}  // namespace

TwistedCochainComplex<Rational> twisted_cochain_complex(const OrientedSimplicialComplex& complex,
                                                        const CoveringCocycle& cocycle, ExactRealization realization) {
  if (realization == ExactRealization::trivial) {
    using Terms = std::vector<std::pair<std::size_t, Rational>>;
    const Terms unit{{0, Rational(1)}};
    return build_complex<Rational>(complex, cocycle, 1, [&](const GroupElement&, std::size_t) { return unit; });
  }
  const GroupModel& group = cocycle.group();
  if (!group.is_finite())
    throw ValidationError("the regular realization needs a finite group, got " + group.describe());
  const auto sheets = group.elements();
  return build_complex<Rational>(complex, cocycle, group.order(), [&](const GroupElement& h, std::size_t s) {
    return std::vector<std::pair<std::size_t, Rational>>{{group.index_of(group.multiply(sheets[s], h)), Rational(1)}};
  });
}

TwistedCochainComplex<std::complex<double>> twisted_cochain_complex(const OrientedSimplicialComplex& complex,
                                                                    const CoveringCocycle& cocycle,
                                                                    std::span<const double> theta) {
  const GroupModel& group = cocycle.group();
  if (!group.is_free_abelian())
    throw ValidationError("torus-point realizations need a free abelian group, got " + group.describe());
  if (static_cast<int>(theta.size()) != group.rank())
    throw ValidationError("torus point has " + std::to_string(theta.size()) + " angles for " + group.describe());
  return build_complex<std::complex<double>>(complex, cocycle, 1, [&](const GroupElement& h, std::size_t) {
    double phase = 0.0;
    for (std::size_t a = 0; a < theta.size(); ++a) phase += static_cast<double>(h.coords[a]) * theta[a];
    return std::vector<std::pair<std::size_t, std::complex<double>>>{{0, std::polar(1.0, phase)}};
  });
}

std::vector<std::int64_t> betti_numbers(const TwistedCochainComplex<Rational>& cochains) {
  std::vector<std::int64_t> rank(cochains.dim + 1, 0);
  for (int p = 0; p < cochains.dim; ++p) rank[p] = static_cast<std::int64_t>(exact_rank(cochains.coboundary[p]));
  std::vector<std::int64_t> betti;
  for (int p = 0; p <= cochains.dim; ++p)
    betti.push_back(static_cast<std::int64_t>(cochains.cochain_dims[p]) - rank[p] - (p > 0 ? rank[p - 1] : 0));
  return betti;
}

std::vector<std::int64_t> betti_numbers(const TwistedCochainComplex<std::complex<double>>& cochains,
                                        double tolerance) {
  std::vector<std::int64_t> rank(cochains.dim + 1, 0);
  for (int p = 0; p < cochains.dim; ++p)
    rank[p] = static_cast<std::int64_t>(numerical_rank(cochains.coboundary[p], tolerance));
  std::vector<std::int64_t> betti;
  for (int p = 0; p <= cochains.dim; ++p)
    betti.push_back(static_cast<std::int64_t>(cochains.cochain_dims[p]) - rank[p] - (p > 0 ? rank[p - 1] : 0));
  return betti;
}

bool coboundary_squares_to_zero(const TwistedCochainComplex<Rational>& cochains) {
  for (int p = 0; p + 1 < cochains.dim; ++p)
    if (!cochains.coboundary[p + 1].multiply(cochains.coboundary[p]).is_zero_matrix()) return false;
  return true;
}

double coboundary_square_defect(const TwistedCochainComplex<std::complex<double>>& cochains) {
  double worst = 0.0;
  for (int p = 0; p + 1 < cochains.dim; ++p) {
    const auto sq = cochains.coboundary[p + 1].multiply(cochains.coboundary[p]);
    for (std::size_t j = 0; j < sq.cols(); ++j)
      for (const auto& [i, x] : sq.column(j)) worst = std::max(worst, std::abs(x));
  }
  return worst;
}

LocalOrdering LocalOrdering::identity(int vertex_count) {
  std::vector<int> rank(vertex_count);
  std::iota(rank.begin(), rank.end(), 0);
  return LocalOrdering(std::move(rank));
}

LocalOrdering LocalOrdering::from_ranks(std::vector<int> rank) { return LocalOrdering(std::move(rank)); }

LocalOrdering LocalOrdering::by_dimension(const OrientedSimplicialComplex& subdivision, std::span<const int> tau) {
  if (!subdivision.is_subdivision())
    throw ValidationError("dimension orderings need a complex flagged as a barycentric subdivision");
  if (static_cast<int>(tau.size()) != subdivision.dim() + 1)
    throw ValidationError("dimension ordering needs a permutation of " + std::to_string(subdivision.dim() + 1) +
                          " labels");
  std::vector<int> rank;
  for (int label : subdivision.subdivision_labels()) rank.push_back(tau[label]);
  return LocalOrdering(std::move(rank));
}

std::vector<int> LocalOrdering::order(const Simplex& s) const {
  std::vector<int> out = s;
  std::sort(out.begin(), out.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
  return out;
}

void LocalOrdering::check(const OrientedSimplicialComplex& complex) const {
  if (static_cast<int>(rank_.size()) != complex.vertex_count())
    throw ValidationError("local ordering has " + std::to_string(rank_.size()) + " ranks for " +
                          std::to_string(complex.vertex_count()) + " vertices");
  for (const auto& s : complex.top_simplices()) {
    const auto o = order(s);
    for (std::size_t i = 1; i < o.size(); ++i)
      if (rank_[o[i]] == rank_[o[i - 1]]) throw ValidationError("local ordering ties two vertices of a simplex");
  }
}

Cochain zero_cochain(const OrientedSimplicialComplex& complex, int degree) {
  return {degree, std::vector<Rational>(complex.count(degree), Rational(0))};
}

Cochain elementary_cochain(const OrientedSimplicialComplex& complex, std::span<const int> vertices) {
  const int p = static_cast<int>(vertices.size()) - 1;
  Cochain c = zero_cochain(complex, p);
  Simplex s(vertices.begin(), vertices.end());
  std::sort(s.begin(), s.end());
  c.values[complex.index(s)] = Rational(sorting_sign(vertices));
  return c;
}

Rational evaluate(const OrientedSimplicialComplex& complex, const Cochain& c, std::span<const int> vertices) {
  Simplex s(vertices.begin(), vertices.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return Rational(0);
  return sorting_sign(vertices) * c.values[complex.index(s)];
}

Cochain coboundary(const OrientedSimplicialComplex& complex, const Cochain& c) {
  Cochain out = zero_cochain(complex, c.degree + 1);
  const auto& cofaces = complex.simplices(c.degree + 1);
  for (std::size_t k = 0; k < cofaces.size(); ++k)
    for (int i = 0; i <= c.degree + 1; ++i) {
      const Rational& v = c.values[complex.index(drop(cofaces[k], i))];
      if (i % 2 == 0)
        out.values[k] += v;
      else
        out.values[k] -= v;
    }
  return out;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size()) throw ValidationError("adding cochains of different degrees");
  Cochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

Cochain operator*(const Rational& s, const Cochain& a) {
  Cochain out = a;
  for (auto& v : out.values) v *= s;
  return out;
}

Cochain aw_cup(const OrientedSimplicialComplex& complex, const Cochain& a, const Cochain& b,
               const LocalOrdering& ordering) {
  const int p = a.degree;
  const int n = a.degree + b.degree;
  if (n > complex.dim()) return {n, {}};
  Cochain out = zero_cochain(complex, n);
  const auto& simplices = complex.simplices(n);
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    const auto ord = ordering.order(simplices[k]);
    const std::span<const int> front(ord.data(), p + 1);
    const std::span<const int> back(ord.data() + p, b.degree + 1);
    const Rational x = evaluate(complex, a, front);
    if (x.is_zero()) continue;
    out.values[k] = sorting_sign(ord) * x * evaluate(complex, b, back);
  }
  return out;
}

Cochain averaged_cup(const OrientedSimplicialComplex& subdivision, const Cochain& a, const Cochain& b) {
  if (!subdivision.is_subdivision())
    throw ValidationError("averaged_cup needs a complex flagged as a barycentric subdivision");
  const int p = a.degree;
  const int n = a.degree + b.degree;
  if (n > subdivision.dim()) return {n, {}};
  // The labels inside a simplex are distinct, so as τ runs over the
  // permutations of {0..d} the induced order on an n-simplex runs over all
  // (n+1)! orders of its vertices, each equally often. Averaging over those
  // orders is therefore the average over τ.
  Cochain out = zero_cochain(subdivision, n);
  const Rational weight = 1 / factorial(n + 1);
  const auto& simplices = subdivision.simplices(n);
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    std::vector<int> ord = simplices[k];
    Rational sum(0);
    do {
      const Rational x = evaluate(subdivision, a, std::span<const int>(ord.data(), p + 1));
      if (x.is_zero()) continue;
      sum += sorting_sign(ord) * x * evaluate(subdivision, b, std::span<const int>(ord.data() + p, b.degree + 1));
    } while (std::next_permutation(ord.begin(), ord.end()));
    out.values[k] = weight * sum;
  }
  return out;
}

Rational evaluate_on_cycle(const OrientedSimplicialComplex& complex, const FundamentalCycle& cycle, const Cochain& c) {
  if (c.degree != complex.dim()) throw ValidationError("only top-degree cochains evaluate on the fundamental cycle");
  Rational total(0);
  for (std::size_t k = 0; k < c.values.size(); ++k) total += cycle.signs[k] * c.values[k];
  return total;
}

}  // namespace l2sig
