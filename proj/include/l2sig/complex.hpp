#ifndef L2SIG_COMPLEX_HPP
#define L2SIG_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace l2sig {

/// Sorted vertex ids. As a basis chain it carries the orientation of its
/// increasing vertex order.
using Simplex = std::vector<int>;

/// Sign of the permutation sorting `order` into increasing order (entries distinct).
int sorting_sign(std::span<const int> order);

/// A finite pure simplicial complex given by its top simplices, closed under
/// faces on construction, with optional orientation signs on the top
/// simplices and optional per-vertex labels marking a barycentric subdivision
/// (label = dimension of the original simplex a vertex is the barycentre of).
class OrientedSimplicialComplex {
 public:
  OrientedSimplicialComplex(int vertex_count, std::vector<Simplex> top_simplices,
                            std::optional<std::vector<int>> orientation = std::nullopt);

  int dim() const { return dim_; }
  int vertex_count() const { return vertex_count_; }

  /// All p-simplices, lexicographically sorted.
  const std::vector<Simplex>& simplices(int p) const { return simplices_.at(p); }
  std::size_t count(int p) const { return p < 0 || p > dim_ ? 0 : simplices_[p].size(); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  std::size_t index(const Simplex& s) const;  // throws when absent

  const std::vector<Simplex>& top_simplices() const { return simplices_.at(dim_); }
  /// ±1 per top simplex (aligned with top_simplices()), empty if not oriented.
  const std::vector<int>& orientation() const { return orientation_; }
  bool is_oriented() const { return !orientation_.empty(); }

  std::vector<std::int64_t> f_vector() const;
  std::int64_t euler_characteristic() const;

  const std::vector<int>& subdivision_labels() const { return labels_; }
  bool is_subdivision() const { return !labels_.empty(); }
  void set_subdivision_labels(std::vector<int> labels);

 private:
  int vertex_count_;
  int dim_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> lookup_;
  std::vector<int> orientation_;
  std::vector<int> labels_;
};

/// Signed top simplices (aligned with top_simplices()) whose boundary vanishes.
struct FundamentalCycle {
  std::vector<int> signs;
};

/// Integer boundary of a top-dimensional chain, indexed like simplices(dim-1).
std::vector<std::int64_t> boundary_of_top_chain(const OrientedSimplicialComplex& complex,
                                                std::span<const int> coefficients);

/// Checks the pseudomanifold condition and orientability and returns the
/// fundamental cycle: the stored orientation if present (after checking its
/// boundary vanishes), otherwise signs propagated from +1 on the first top
/// simplex of every connected component of the dual graph.
FundamentalCycle validate_and_orient(const OrientedSimplicialComplex& complex);

/// The same complex with the given orientation attached.
OrientedSimplicialComplex with_orientation(const OrientedSimplicialComplex& complex, const FundamentalCycle& cycle);

/// Renames vertex v to perm[v], transporting the orientation.
OrientedSimplicialComplex relabel(const OrientedSimplicialComplex& complex, std::span<const int> perm);

/// Barycentric subdivision. Vertices are the simplices of the input (indexed
/// dimension-major), labels are their dimensions, and the orientation is the
/// one induced from the input's orientation.
OrientedSimplicialComplex barycentric_subdivision(const OrientedSimplicialComplex& complex);

/// The boundary of the (n+1)-simplex, an n-sphere on n+2 vertices, oriented.
OrientedSimplicialComplex boundary_of_simplex(int n);

/// A single oriented n-simplex.
OrientedSimplicialComplex full_simplex(int n);

}  // namespace l2sig

#endif  // L2SIG_COMPLEX_HPP
