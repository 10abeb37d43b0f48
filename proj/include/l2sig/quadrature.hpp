#ifndef L2SIG_QUADRATURE_HPP
#define L2SIG_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "l2sig/inertia.hpp"

namespace l2sig {

/// Discretization of the dual torus of ℤᵈ.
struct QuadratureSpec {
  int nodes_per_axis = 2048;
  std::uint64_t jitter_seed = 0;
  double zero_threshold = 1e-9;

  void validate() const;
};

/// What one torus node contributes.
struct NodeSample {
  Inertia inertia;
  /// The node sits close to a jump set (some eigenvalue inside the ε band,
  /// or an ambiguous numerical rank); counted into the error bound.
  bool ambiguous = false;
};

struct QuadratureResult {
  double sign2 = 0.0;
  double kernel_dim = 0.0;
  double total_dim = 0.0;
  double band_fraction = 0.0;
  double refinement_delta = 0.0;
  double error_bound = 0.0;
  std::int64_t nodes = 0;
};

/// Seeded per-axis offsets in [0, 1), reproducible across platforms.
std::vector<double> jitter_offsets(std::uint64_t seed, int rank);

/// θ_j = 2π (j + u) / N per axis.
std::vector<double> grid_node(std::span<const std::int64_t> multi_index, std::span<const double> offsets, int nodes);

/// Averages the node samples over the jittered grid, evaluating nodes
/// concurrently. Accumulation is over integer counts, so the result does not
/// depend on scheduling. The error bound is the ambiguous-node fraction plus
/// the change in sign2 against the grid with half as many nodes per axis.
QuadratureResult torus_quadrature(int rank, const QuadratureSpec& spec,
                                  const std::function<NodeSample(std::span<const double>)>& sample);

/// Runs body(i) for i in [0, count) on a small thread pool.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body);

}  // namespace l2sig

#endif  // L2SIG_QUADRATURE_HPP
