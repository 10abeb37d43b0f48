#include "l2sig/inertia.hpp"

#include "l2sig/errors.hpp"

namespace l2sig {

Inertia exact_inertia(Matrix<Rational> a) {
  if (a.rows() != a.cols()) throw ValidationError("inertia of a non-square matrix");
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw ValidationError("inertia of a non-symmetric matrix");

  Inertia result;
  // The active block is a(k.., k..); each step either splits off a 1x1 pivot
  // or proves the leading row is zero.
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index j = k; j < n; ++j)
      if (!a(j, j).is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) {
      // Zero diagonal: find a nonzero off-diagonal a(i, j) and replace e_i by
      // e_i + e_j, which puts 2·a(i, j) on the diagonal.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = k; i < n && pi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) {
        result.zero += n - k;
        break;
      }
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      pivot = pi;
    }
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      a.col(pivot).swap(a.col(k));
    }
    const Rational d = a(k, k);
    if (d > 0)
      ++result.positive;
    else
      ++result.negative;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / d;
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      a(i, k) = 0;
    }
    for (Eigen::Index j = k + 1; j < n; ++j) a(k, j) = 0;
  }
  return result;
}

Matrix<Rational> realify(const Matrix<GaussianRational>& h) {
  const Eigen::Index n = h.rows();
  Matrix<Rational> r(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      r(i, j) = h(i, j).re;
      r(i + n, j + n) = h(i, j).re;
      r(i, j + n) = -h(i, j).im;
      r(i + n, j) = h(i, j).im;
    }
  return r;
}

Inertia exact_inertia(const Matrix<GaussianRational>& h) {
  bool real = true;
  for (Eigen::Index i = 0; i < h.rows() && real; ++i)
    for (Eigen::Index j = 0; j < h.cols() && real; ++j) real = h(i, j).im.is_zero();
  if (real) {
    Matrix<Rational> re(h.rows(), h.cols());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      for (Eigen::Index j = 0; j < h.cols(); ++j) re(i, j) = h(i, j).re;
    return exact_inertia(std::move(re));
  }
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = i; j < h.cols(); ++j)
      if (h(i, j) != conjugate(h(j, i))) throw ValidationError("inertia of a non-Hermitian matrix");
  const Inertia doubled = exact_inertia(realify(h));
  return {doubled.positive / 2, doubled.negative / 2, doubled.zero / 2};
}

Inertia spectral_inertia(const Eigen::MatrixXcd& h, double eps) {
  Inertia result;
  if (h.rows() == 0) return result;
  const Eigen::MatrixXcd sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double l = solver.eigenvalues()(i);
    if (l > eps)
      ++result.positive;
    else if (l < -eps)
      ++result.negative;
    else
      ++result.zero;
  }
  return result;
}

Eigen::MatrixXcd to_complex_matrix(const Matrix<Rational>& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
  return out;
}

Eigen::MatrixXcd to_complex_matrix(const Matrix<GaussianRational>& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
  return out;
}

}  // namespace l2sig
