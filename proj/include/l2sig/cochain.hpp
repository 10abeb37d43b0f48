#ifndef L2SIG_COCHAIN_HPP
#define L2SIG_COCHAIN_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "l2sig/complex.hpp"
#include "l2sig/covering.hpp"
#include "l2sig/rational.hpp"
#include "l2sig/sparse_reduction.hpp"

namespace l2sig {

/// Exact realizations of the equivariant cochains: the base complex itself,
/// or the regular representation of a finite deck group (the cochains of the
/// total space).
enum class ExactRealization { trivial, regular };

/// Cochains of a covered complex realized through a representation ρ of
/// dimension rep_dim. Degree-p cochains are indexed simplex-major:
/// simplex_index·rep_dim + component. coboundary[p] maps C^p to C^{p+1}.
///
/// A cochain value f[σ] is the value on the lift of σ whose least vertex t sits
/// on the base sheet; then (δf)[τ] = Σ_i (-1)^i ρ(g(t, m_i)) f[∂_i τ] with m_i
/// the least vertex of the i-th face, and (ρ(h)v)[s] = v[s·h].
template <typename Scalar>
struct TwistedCochainComplex {
  int dim = 0;
  std::int64_t rep_dim = 1;
  std::vector<std::size_t> cochain_dims;
  std::vector<SparseColumns<Scalar>> coboundary;
};

TwistedCochainComplex<Rational> twisted_cochain_complex(const OrientedSimplicialComplex& complex,
                                                        const CoveringCocycle& cocycle, ExactRealization realization);

/// The rank-one realization twisted by the character χ(h) = exp(i⟨h, θ⟩) of a
/// free abelian deck group.
TwistedCochainComplex<std::complex<double>> twisted_cochain_complex(const OrientedSimplicialComplex& complex,
                                                                    const CoveringCocycle& cocycle,
                                                                    std::span<const double> theta);

/// Exact Betti numbers of the realized complex (not normalized by rep_dim).
std::vector<std::int64_t> betti_numbers(const TwistedCochainComplex<Rational>& cochains);

/// Numerical Betti numbers: singular values at most `tolerance` count as zero.
std::vector<std::int64_t> betti_numbers(const TwistedCochainComplex<std::complex<double>>& cochains, double tolerance);

/// Whether δ∘δ vanishes exactly in every degree.
bool coboundary_squares_to_zero(const TwistedCochainComplex<Rational>& cochains);

/// Largest entry of δ∘δ in absolute value.
double coboundary_square_defect(const TwistedCochainComplex<std::complex<double>>& cochains);

/// A total order of the vertices of every simplex, given by a rank per vertex
/// and therefore compatible with restriction to faces.
class LocalOrdering {
 public:
  /// Orders vertices by id.
  static LocalOrdering identity(int vertex_count);
  /// Vertex v precedes w iff rank[v] < rank[w].
  static LocalOrdering from_ranks(std::vector<int> rank);
  /// On a barycentric subdivision: vertex v gets rank tau[label(v)], so
  /// tau = identity orders every simplex by dimension.
  static LocalOrdering by_dimension(const OrientedSimplicialComplex& subdivision, std::span<const int> tau);

  const std::vector<int>& ranks() const { return rank_; }
  /// The vertices of s in increasing rank.
  std::vector<int> order(const Simplex& s) const;
  /// Throws if two vertices of some simplex share a rank.
  void check(const OrientedSimplicialComplex& complex) const;

 private:
  explicit LocalOrdering(std::vector<int> rank) : rank_(std::move(rank)) {}
  std::vector<int> rank_;
};

/// An untwisted rational cochain; values are indexed like simplices(degree).
struct Cochain {
  int degree = 0;
  std::vector<Rational> values;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain zero_cochain(const OrientedSimplicialComplex& complex, int degree);
/// The cochain dual to the oriented simplex ⟨v_0, …, v_p⟩: value ±1 on the
/// underlying simplex, according to how the tuple compares with sorted order.
Cochain elementary_cochain(const OrientedSimplicialComplex& complex, std::span<const int> vertices);
/// Value of a cochain on the oriented simplex ⟨v_0, …, v_p⟩.
Rational evaluate(const OrientedSimplicialComplex& complex, const Cochain& c, std::span<const int> vertices);
Cochain coboundary(const OrientedSimplicialComplex& complex, const Cochain& c);
Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator*(const Rational& s, const Cochain& a);

/// Alexander–Whitney product: (a ∪ b)⟨e_0..e_n⟩ = a⟨e_0..e_p⟩ · b⟨e_p..e_n⟩
/// with (e_0, …, e_n) ordered by `ordering`.
Cochain aw_cup(const OrientedSimplicialComplex& complex, const Cochain& a, const Cochain& b,
               const LocalOrdering& ordering);

/// Mean of the Alexander–Whitney products over all (d+1)! orderings of a
/// barycentric subdivision obtained by permuting the dimension order.
Cochain averaged_cup(const OrientedSimplicialComplex& subdivision, const Cochain& a, const Cochain& b);

/// Σ_τ fund(τ)·c(τ) over the top simplices.
Rational evaluate_on_cycle(const OrientedSimplicialComplex& complex, const FundamentalCycle& cycle, const Cochain& c);

}  // namespace l2sig

#endif  // L2SIG_COCHAIN_HPP
