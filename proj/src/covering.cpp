#include "l2sig/covering.hpp"

#include <queue>
#include <string>

#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

std::string edge_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

void CoveringCocycle::set(int i, int j, const GroupElement& g) {
  if (i == j) throw ValidationError("covering label on a loop edge " + edge_name(i, j));
  group_.check_element(g);
  if (i < j)
    labels_[{i, j}] = g;
  else
    labels_[{j, i}] = group_.inverse(g);
}

GroupElement CoveringCocycle::operator()(int i, int j) const {
  if (i == j) return group_.identity();
  auto it = labels_.find({std::min(i, j), std::max(i, j)});
  if (it == labels_.end()) return group_.identity();
  return i < j ? it->second : group_.inverse(it->second);
}

void validate_cocycle(const OrientedSimplicialComplex& complex, const CoveringCocycle& cocycle) {
  const GroupModel& group = cocycle.group();
  for (const auto& [edge, g] : cocycle.labels()) {
    if (!complex.index_of({edge.first, edge.second}) || complex.dim() < 1)
      throw ValidationError("covering label on " + edge_name(edge.first, edge.second) +
                            ", which is not an edge of the complex");
    group.check_element(g);
  }
  if (complex.dim() < 2) return;
  for (const auto& t : complex.simplices(2)) {
    const GroupElement lhs = group.multiply(cocycle(t[0], t[1]), cocycle(t[1], t[2]));
    if (lhs != cocycle(t[0], t[2]))
      throw ValidationError("cocycle condition fails on the 2-simplex {" + std::to_string(t[0]) + "," +
                            std::to_string(t[1]) + "," + std::to_string(t[2]) + "}");
  }
}

GaugedCocycle gauge_to_spanning_tree(const OrientedSimplicialComplex& complex, const CoveringCocycle& cocycle) {
  const GroupModel& group = cocycle.group();
  const int n = complex.vertex_count();
  std::vector<std::vector<int>> adjacency(n);
  if (complex.dim() >= 1)
    for (const auto& e : complex.simplices(1)) {
      adjacency[e[0]].push_back(e[1]);
      adjacency[e[1]].push_back(e[0]);
    }
  GaugedCocycle out{CoveringCocycle(group), std::vector<GroupElement>(n, group.identity()), {}};
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : adjacency[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        // φ(w) = φ(u)·g(u, w) makes the gauged label on u → w trivial.
        out.potential[w] = group.multiply(out.potential[u], cocycle(u, w));
        out.tree_edges.emplace_back(std::min(u, w), std::max(u, w));
        frontier.push(w);
      }
    }
  }
  if (complex.dim() >= 1)
    for (const auto& e : complex.simplices(1)) {
      const GroupElement g = group.multiply(group.multiply(out.potential[e[0]], cocycle(e[0], e[1])),
                                            group.inverse(out.potential[e[1]]));
      if (g != group.identity()) out.cocycle.set(e[0], e[1], g);
    }
  return out;
}

GroupElement monodromy(const CoveringCocycle& cocycle, std::span<const int> loop) {
  const GroupModel& group = cocycle.group();
  GroupElement g = group.identity();
  for (std::size_t k = 0; k < loop.size(); ++k) g = group.multiply(g, cocycle(loop[k], loop[(k + 1) % loop.size()]));
  return g;
}

OrientedSimplicialComplex explicit_cover(const OrientedSimplicialComplex& complex, const CoveringCocycle& cocycle) {
  const GroupModel& group = cocycle.group();
  if (!group.is_finite()) throw ValidationError("explicit_cover needs a finite group, got " + group.describe());
  const int n = complex.vertex_count();
  const auto sheets = group.elements();
  std::vector<Simplex> tops;
  std::vector<int> signs;
  const auto& base_tops = complex.top_simplices();
  for (std::size_t k = 0; k < base_tops.size(); ++k) {
    const Simplex& t = base_tops[k];
    for (const GroupElement& s : sheets) {
      // Vertices listed in the base order; the constructor folds the sorting
      // sign into the orientation.
      Simplex lifted;
      for (int w : t)
        lifted.push_back(static_cast<int>(group.index_of(group.multiply(s, cocycle(t[0], w)))) * n + w);
      tops.push_back(std::move(lifted));
      signs.push_back(complex.is_oriented() ? complex.orientation()[k] : 1);
    }
  }
  std::optional<std::vector<int>> orientation;
  if (complex.is_oriented()) orientation = std::move(signs);
  return OrientedSimplicialComplex(n * static_cast<int>(sheets.size()), std::move(tops), std::move(orientation));
}

}  // namespace l2sig
