#ifndef L2SIG_SPARSE_REDUCTION_HPP
#define L2SIG_SPARSE_REDUCTION_HPP

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "l2sig/rational.hpp"

namespace l2sig {

/// Column-major sparse matrix; each column holds (row, value) pairs sorted by
/// row with no explicit zeros.
template <typename Scalar>
class SparseColumns {
 public:
  using Column = std::vector<std::pair<std::size_t, Scalar>>;

  SparseColumns(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  /// Sums duplicate entries and drops zeros.
  static SparseColumns from_triplets(std::size_t rows, std::size_t cols,
                                     std::vector<std::tuple<std::size_t, std::size_t, Scalar>> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<1>(a), std::get<0>(a)) < std::tie(std::get<1>(b), std::get<0>(b));
    });
    SparseColumns m(rows, cols);
    for (auto& [r, c, v] : triplets) {
      auto& col = m.columns_[c];
      if (!col.empty() && col.back().first == r)
        col.back().second += v;
      else
        col.emplace_back(r, std::move(v));
    }
    for (auto& col : m.columns_) std::erase_if(col, [](const auto& e) { return is_zero(e.second); });
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_[j]; }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  Matrix<Scalar> to_dense() const {
    Matrix<Scalar> d = Matrix<Scalar>::Zero(rows_, columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j)
      for (const auto& [i, v] : columns_[j]) d(i, j) = v;
    return d;
  }

  /// this · other.
  SparseColumns multiply(const SparseColumns& other) const {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> triplets;
    for (std::size_t j = 0; j < other.cols(); ++j)
      for (const auto& [k, b] : other.column(j))
        for (const auto& [i, a] : columns_[k]) triplets.emplace_back(i, j, a * b);
    return from_triplets(rows_, other.cols(), std::move(triplets));
  }

  /// Applies the matrix to a dense vector.
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
    std::vector<Scalar> y(rows_, Scalar(0));
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (is_zero(x[j])) continue;
      for (const auto& [i, a] : columns_[j]) y[i] += a * x[j];
    }
    return y;
  }

  bool is_zero_matrix() const {
    for (const auto& c : columns_)
      if (!c.empty()) return false;
    return true;
  }

 private:
  std::size_t rows_;
  std::vector<Column> columns_;
};

/// Result of the left-to-right column reduction R = D·V of a rational matrix.
struct ColumnReduction {
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  /// low[j]: largest row index of reduced column j, or `none` if it vanished.
  std::vector<std::size_t> low;
  std::size_t rank = 0;
  /// For every column that reduced to zero (and was not skipped), the kernel
  /// vector V[:, j] as sparse (column, value) pairs; its largest index is j.
  std::vector<std::pair<std::size_t, SparseColumns<Rational>::Column>> kernel;
};

/// Exact column reduction. Columns flagged in `skip` are treated as already
/// known to reduce to zero and left out (clearing). With `track_kernel` the
/// column operations are recorded so that kernel vectors can be returned.
ColumnReduction reduce_columns(const SparseColumns<Rational>& matrix, const std::vector<bool>& skip = {},
                               bool track_kernel = false);

/// Exact rank.
std::size_t exact_rank(const SparseColumns<Rational>& matrix);

/// A basis of ker(next) / im(previous) for composable previous: C^{m-1} → C^m and
/// next: C^m → C^{m+1} with next·previous = 0, as dense cocycle vectors in C^m.
/// Each basis vector has a distinct leading index outside the pivot rows of
/// the reduced `previous`, so the classes are independent.
std::vector<std::vector<Rational>> cohomology_basis(const SparseColumns<Rational>& previous,
                                                    const SparseColumns<Rational>& next);

}  // namespace l2sig

#endif  // L2SIG_SPARSE_REDUCTION_HPP
