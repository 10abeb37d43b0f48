#include "l2sig/sparse_reduction.hpp"

#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

using Column = SparseColumns<Rational>::Column;

// target -= factor · source, both sorted by index.
void subtract_scaled(Column& target, const Column& source, const Rational& factor) {
  Column out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

void scale(Column& column, const Rational& factor) {
  for (auto& e : column) e.second *= factor;
}

}  // namespace

ColumnReduction reduce_columns(const SparseColumns<Rational>& matrix, const std::vector<bool>& skip,
                               bool track_kernel) {
  if (!skip.empty() && skip.size() != matrix.cols()) throw Error("reduce_columns: skip mask has the wrong size");
  ColumnReduction out;
  out.low.assign(matrix.cols(), ColumnReduction::none);
  // Reduced pivot columns are normalized to have 1 at their low entry.
  std::vector<std::size_t> pivot_column(matrix.rows(), ColumnReduction::none);
  std::vector<Column> reduced(matrix.cols());
  std::vector<Column> transform(track_kernel ? matrix.cols() : 0);

  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    Column r = matrix.column(j);
    Column v;
    if (track_kernel) v.emplace_back(j, Rational(1));
    while (!r.empty()) {
      const std::size_t low = r.back().first;
      const std::size_t k = pivot_column[low];
      if (k == ColumnReduction::none) break;
      const Rational factor = r.back().second;
      subtract_scaled(r, reduced[k], factor);
      if (track_kernel) subtract_scaled(v, transform[k], factor);
    }
    if (r.empty()) {
      if (track_kernel) out.kernel.emplace_back(j, std::move(v));
      continue;
    }
    const Rational inv = 1 / r.back().second;
    scale(r, inv);
    if (track_kernel) {
      scale(v, inv);
      transform[j] = std::move(v);
    }
    out.low[j] = r.back().first;
    pivot_column[r.back().first] = j;
    reduced[j] = std::move(r);
    ++out.rank;
  }
  return out;
}

std::size_t exact_rank(const SparseColumns<Rational>& matrix) { return reduce_columns(matrix).rank; }

std::vector<std::vector<Rational>> cohomology_basis(const SparseColumns<Rational>& previous,
                                                    const SparseColumns<Rational>& next) {
  if (previous.rows() != next.cols()) throw Error("cohomology_basis: maps are not composable");
  const ColumnReduction image = reduce_columns(previous);
  std::vector<bool> boundary_pivot(next.cols(), false);
  for (std::size_t l : image.low)
    if (l != ColumnReduction::none) boundary_pivot[l] = true;
  const ColumnReduction cycles = reduce_columns(next, boundary_pivot, true);
  std::vector<std::vector<Rational>> basis;
  for (const auto& [j, v] : cycles.kernel) {
    std::vector<Rational> dense(next.cols(), Rational(0));
    for (const auto& [i, x] : v) dense[i] = x;
    basis.push_back(std::move(dense));
  }
  return basis;
}

}  // namespace l2sig
