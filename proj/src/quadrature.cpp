#include "l2sig/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "l2sig/errors.hpp"

namespace l2sig {

void QuadratureSpec::validate() const {
  if (nodes_per_axis < 2) throw ValidationError("quadrature needs at least 2 nodes per axis");
  if (!(zero_threshold > 0.0)) throw ValidationError("quadrature zero threshold must be positive");
}

std::vector<double> jitter_offsets(std::uint64_t seed, int rank) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(rank);
  for (auto& u : out) u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return out;
}

std::vector<double> grid_node(std::span<const std::int64_t> multi_index, std::span<const double> offsets,
                              int nodes) {
  std::vector<double> theta(multi_index.size());
  for (std::size_t a = 0; a < multi_index.size(); ++a)
    theta[a] = 2.0 * std::numbers::pi * (static_cast<double>(multi_index[a]) + offsets[a]) / nodes;
  return theta;
}

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body) {
  const auto workers = static_cast<std::int64_t>(
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, 16u));
  if (workers == 1 || count < 2) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::int64_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < count; i += workers) body(i);
    });
}

namespace {

struct GridTotals {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  std::int64_t zero = 0;
  std::int64_t ambiguous = 0;
  std::int64_t nodes = 0;
};

GridTotals run_grid(int rank, int nodes, std::span<const double> offsets,
                    const std::function<NodeSample(std::span<const double>)>& sample) {
  std::int64_t total = 1;
  for (int a = 0; a < rank; ++a) total *= nodes;
  std::vector<NodeSample> samples(total);
  parallel_for(total, [&](std::int64_t flat) {
    std::vector<std::int64_t> idx(rank);
    std::int64_t rest = flat;
    for (int a = 0; a < rank; ++a) {
      idx[a] = rest % nodes;
      rest /= nodes;
    }
    samples[flat] = sample(grid_node(idx, offsets, nodes));
  });
  GridTotals t;
  t.nodes = total;
  for (const auto& s : samples) {
    t.positive += s.inertia.positive;
    t.negative += s.inertia.negative;
    t.zero += s.inertia.zero;
    t.ambiguous += s.ambiguous ? 1 : 0;
  }
  return t;
}

}  // namespace

QuadratureResult torus_quadrature(int rank, const QuadratureSpec& spec,
                                  const std::function<NodeSample(std::span<const double>)>& sample) {
  spec.validate();
  const auto offsets = jitter_offsets(spec.jitter_seed, rank);
  const GridTotals fine = run_grid(rank, spec.nodes_per_axis, offsets, sample);
  const GridTotals coarse = run_grid(rank, std::max(1, spec.nodes_per_axis / 2), offsets, sample);

  const auto n = static_cast<double>(fine.nodes);
  QuadratureResult r;
  r.nodes = fine.nodes;
  r.sign2 = static_cast<double>(fine.positive - fine.negative) / n;
  r.kernel_dim = static_cast<double>(fine.zero) / n;
  r.total_dim = static_cast<double>(fine.positive + fine.negative + fine.zero) / n;
  r.band_fraction = static_cast<double>(fine.ambiguous) / n;
  const double coarse_sign2 =
      static_cast<double>(coarse.positive - coarse.negative) / static_cast<double>(coarse.nodes);
  r.refinement_delta = std::abs(r.sign2 - coarse_sign2);
  r.error_bound = r.band_fraction + r.refinement_delta;
  return r;
}

}  // namespace l2sig
