#ifndef L2SIG_HERMITIAN_FORM_HPP
#define L2SIG_HERMITIAN_FORM_HPP

#include <string>
#include <vector>

#include "l2sig/group_ring.hpp"

namespace l2sig {

/// Dense rows×cols matrix of group-ring elements over one group model.
template <typename Scalar>
class GroupRingMatrix {
 public:
  using Element = GroupRingElement<Scalar>;

  GroupRingMatrix(GroupModel group, Eigen::Index rows, Eigen::Index cols)
      : group_(std::move(group)), rows_(rows), cols_(cols), entries_(rows * cols, Element(group_)) {}

  static GroupRingMatrix identity(const GroupModel& group, Eigen::Index n) {
    GroupRingMatrix m(group, n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Element::identity(group);
    return m;
  }

  /// Embeds a scalar matrix as constant group-ring entries.
  static GroupRingMatrix constant(const GroupModel& group, const Matrix<Scalar>& values) {
    GroupRingMatrix m(group, values.rows(), values.cols());
    for (Eigen::Index i = 0; i < values.rows(); ++i)
      for (Eigen::Index j = 0; j < values.cols(); ++j) m(i, j) = Element::constant(group, values(i, j));
    return m;
  }

  const GroupModel& group() const { return group_; }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  Element& operator()(Eigen::Index i, Eigen::Index j) { return entries_[i * cols_ + j]; }
  const Element& operator()(Eigen::Index i, Eigen::Index j) const { return entries_[i * cols_ + j]; }

  friend GroupRingMatrix operator+(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    a.require_shape(b.rows_, b.cols_);
    GroupRingMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
  }

  friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("group ring matrix product: inner dimensions differ");
    GroupRingMatrix r(a.group_, a.rows_, b.cols_);
    for (Eigen::Index i = 0; i < a.rows_; ++i)
      for (Eigen::Index k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (Eigen::Index j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend GroupRingMatrix operator*(const Scalar& s, GroupRingMatrix a) {
    for (auto& e : a.entries_) e *= s;
    return a;
  }

  friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    return a.group_ == b.group_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void require_shape(Eigen::Index r, Eigen::Index c) const {
    if (r != rows_ || c != cols_) throw ValidationError("group ring matrices of different shapes");
  }

  GroupModel group_;
  Eigen::Index rows_;
  Eigen::Index cols_;
  std::vector<Element> entries_;
};

/// (M*)_{ij} = (M_{ji})*.
template <typename Scalar>
GroupRingMatrix<Scalar> star_transpose(const GroupRingMatrix<Scalar>& m) {
  GroupRingMatrix<Scalar> r(m.group(), m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(j, i) = star(m(i, j));
  return r;
}

enum class Parity { hermitian = 1, skew = -1 };

template <typename Scalar>
class HermitianForm;
template <typename Scalar>
HermitianForm<Scalar> check_hermitian(GroupRingMatrix<Scalar> matrix, Parity parity);

/// A square group-ring matrix F with F* = parity·F. Only constructible through
/// check_hermitian, so every instance satisfies the invariant.
template <typename Scalar>
class HermitianForm {
 public:
  const GroupModel& group() const { return matrix_.group(); }
  Eigen::Index size() const { return matrix_.rows(); }
  Parity parity() const { return parity_; }
  const GroupRingMatrix<Scalar>& matrix() const { return matrix_; }
  const GroupRingElement<Scalar>& operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

  friend bool operator==(const HermitianForm& a, const HermitianForm& b) {
    return a.parity_ == b.parity_ && a.matrix_ == b.matrix_;
  }

 private:
  HermitianForm(GroupRingMatrix<Scalar> m, Parity p) : matrix_(std::move(m)), parity_(p) {}

  template <typename S>
  friend HermitianForm<S> check_hermitian(GroupRingMatrix<S> matrix, Parity parity);

  GroupRingMatrix<Scalar> matrix_;
  Parity parity_;
};

/// Validates M_{ji}* = parity·M_{ij}; the error names the first offending entry.
template <typename Scalar>
HermitianForm<Scalar> check_hermitian(GroupRingMatrix<Scalar> matrix, Parity parity) {
  if (matrix.rows() != matrix.cols())
    throw ValidationError("form matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()));
  const Scalar sign(parity == Parity::hermitian ? 1 : -1);
  for (Eigen::Index i = 0; i < matrix.rows(); ++i)
    for (Eigen::Index j = i; j < matrix.cols(); ++j)
      if (star(matrix(j, i)) != sign * matrix(i, j))
        throw ValidationError("star-transpose mismatch at entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ")");
  return HermitianForm<Scalar>(std::move(matrix), parity);
}

/// ψ + (-1)^k ψ*, with parity (-1)^k.
template <typename Scalar>
HermitianForm<Scalar> plumbing_form(const GroupRingMatrix<Scalar>& psi, int k) {
  const bool even = k % 2 == 0;
  GroupRingMatrix<Scalar> adj = star_transpose(psi);
  if (!even) adj = Scalar(-1) * adj;
  return check_hermitian(psi + adj, even ? Parity::hermitian : Parity::skew);
}

template <typename Scalar>
HermitianForm<Scalar> direct_sum(const HermitianForm<Scalar>& f, const HermitianForm<Scalar>& g) {
  if (f.group() != g.group()) throw ValidationError("direct sum of forms over different groups");
  if (f.parity() != g.parity()) throw ValidationError("direct sum of forms with different parity");
  const Eigen::Index n = f.size(), m = g.size();
  GroupRingMatrix<Scalar> r(f.group(), n + m, n + m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) r(i, j) = f(i, j);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) r(n + i, n + j) = g(i, j);
  return check_hermitian(std::move(r), f.parity());
}

/// U F U*, which stays Hermitian.
template <typename Scalar>
HermitianForm<Scalar> congruence(const GroupRingMatrix<Scalar>& u, const HermitianForm<Scalar>& f) {
  return check_hermitian(u * f.matrix() * star_transpose(u), f.parity());
}

/// Entrywise Kronecker product over Γ × Γ′; index (i, k) ↦ i·m + k.
template <typename Scalar>
HermitianForm<Scalar> kunneth_product(const HermitianForm<Scalar>& f, const HermitianForm<Scalar>& g) {
  if (f.parity() != Parity::hermitian || g.parity() != Parity::hermitian)
    throw ValidationError("kunneth_product needs Hermitian (parity +1) factors");
  const GroupModel product = direct_product(f.group(), g.group());
  const Eigen::Index n = f.size(), m = g.size();
  GroupRingMatrix<Scalar> r(product, n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < m; ++k)
        for (Eigen::Index l = 0; l < m; ++l) r(i * m + k, j * m + l) = tensor(f(i, j), g(k, l), product);
  return check_hermitian(std::move(r), Parity::hermitian);
}

/// Entries reinterpreted through an injective homomorphism Γ ↪ Γ′.
template <typename Scalar>
HermitianForm<Scalar> induce_form(const HermitianForm<Scalar>& f, const GroupHom& embedding) {
  if (!embedding.is_injective()) throw ValidationError("induce_form: the map is not injective");
  const GroupModel& target = embedding.target();
  if (target.kind() == GroupModel::Kind::tower)
    throw ValidationError("induce_form: unsupported target model " + target.describe());
  GroupRingMatrix<Scalar> r(target, f.size(), f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    for (Eigen::Index j = 0; j < f.size(); ++j) r(i, j) = push_forward(f(i, j), embedding);
  return check_hermitian(std::move(r), f.parity());
}

/// Entries pushed through a quotient map (or the augmentation).
template <typename Scalar>
HermitianForm<Scalar> push_form(const HermitianForm<Scalar>& f, const GroupHom& map) {
  GroupRingMatrix<Scalar> r(map.target(), f.size(), f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    for (Eigen::Index j = 0; j < f.size(); ++j) r(i, j) = push_forward(f(i, j), map);
  return check_hermitian(std::move(r), f.parity());
}

/// A form over a tower model viewed as a form over the tower's base group.
template <typename Scalar>
HermitianForm<Scalar> on_base(const HermitianForm<Scalar>& f) {
  const GroupModel& base = f.group().base();
  GroupRingMatrix<Scalar> r(base, f.size(), f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    for (Eigen::Index j = 0; j < f.size(); ++j) {
      std::vector<std::pair<GroupElement, Scalar>> terms(f(i, j).support().begin(), f(i, j).support().end());
      r(i, j) = GroupRingElement<Scalar>(base, terms);
    }
  return check_hermitian(std::move(r), f.parity());
}

inline HermitianForm<GaussianRational> to_gaussian(const HermitianForm<Rational>& f) {
  GroupRingMatrix<GaussianRational> r(f.group(), f.size(), f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    for (Eigen::Index j = 0; j < f.size(); ++j) r(i, j) = to_gaussian(f(i, j));
  return check_hermitian(std::move(r), f.parity());
}

}  // namespace l2sig

#endif  // L2SIG_HERMITIAN_FORM_HPP
