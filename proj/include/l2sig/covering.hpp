#ifndef L2SIG_COVERING_HPP
#define L2SIG_COVERING_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "l2sig/complex.hpp"
#include "l2sig/group.hpp"

namespace l2sig {

/// Γ-labels on the edges of a complex. g(i, j) for i < j is stored; the
/// reverse edge carries the inverse and unlabelled edges carry the identity.
/// Walking the edge i → j from sheet s of the covering lands on sheet s·g(i, j).
class CoveringCocycle {
 public:
  explicit CoveringCocycle(GroupModel group) : group_(std::move(group)) {}

  static CoveringCocycle trivial() { return CoveringCocycle(GroupModel::trivial()); }

  const GroupModel& group() const { return group_; }
  const std::map<std::pair<int, int>, GroupElement>& labels() const { return labels_; }

  /// Sets g(i, j); for i > j this stores g(j, i) = g(i, j)⁻¹.
  void set(int i, int j, const GroupElement& g);
  GroupElement operator()(int i, int j) const;

 private:
  GroupModel group_;
  std::map<std::pair<int, int>, GroupElement> labels_;
};

/// A complex together with the covering it is equipped with.
struct CoveredComplex {
  OrientedSimplicialComplex complex;
  CoveringCocycle covering;
};

/// Checks that every label sits on an edge of the complex and is an element
/// of the group, and that g(i,j)·g(j,k) = g(i,k) on every 2-simplex i<j<k.
void validate_cocycle(const OrientedSimplicialComplex& complex, const CoveringCocycle& cocycle);

/// A cohomologous cocycle that is the identity on a spanning forest of the
/// 1-skeleton: g'(u, w) = φ(u)·g(u, w)·φ(w)⁻¹.
struct GaugedCocycle {
  CoveringCocycle cocycle;
  std::vector<GroupElement> potential;  // φ, one per vertex
  std::vector<std::pair<int, int>> tree_edges;
};

GaugedCocycle gauge_to_spanning_tree(const OrientedSimplicialComplex& complex, const CoveringCocycle& cocycle);

/// Product of the labels along a closed edge path v0 → v1 → … → v0.
GroupElement monodromy(const CoveringCocycle& cocycle, std::span<const int> loop);

/// The total space of the covering for a finite group. The lift of vertex v to
/// sheet s has id index(s)·n + v; a simplex whose least vertex t sits on sheet
/// s has vertex w on sheet s·g(t, w). The orientation is lifted sheetwise.
OrientedSimplicialComplex explicit_cover(const OrientedSimplicialComplex& complex, const CoveringCocycle& cocycle);

}  // namespace l2sig

#endif  // L2SIG_COVERING_HPP
