#ifndef L2SIG_GROUP_RING_HPP
#define L2SIG_GROUP_RING_HPP

#include <cmath>
#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "l2sig/errors.hpp"
#include "l2sig/group.hpp"
#include "l2sig/rational.hpp"

namespace l2sig {

/// Finitely supported formal sum Σ a_g·g over a group model, with exact
/// coefficients (Rational or GaussianRational). The support never stores a
/// zero coefficient.
template <typename Scalar>
class GroupRingElement {
 public:
  using Support = std::map<GroupElement, Scalar>;

  explicit GroupRingElement(GroupModel group) : group_(std::move(group)) {}

  GroupRingElement(GroupModel group, const std::vector<std::pair<GroupElement, Scalar>>& terms)
      : group_(std::move(group)) {
    for (const auto& [g, c] : terms) accumulate(g, c);
  }

  static GroupRingElement zero(const GroupModel& group) { return GroupRingElement(group); }
  static GroupRingElement constant(const GroupModel& group, const Scalar& c) {
    return GroupRingElement(group, {{group.identity(), c}});
  }
  static GroupRingElement identity(const GroupModel& group) { return constant(group, Scalar(1)); }
  static GroupRingElement basis(const GroupModel& group, const GroupElement& g, const Scalar& c = Scalar(1)) {
    return GroupRingElement(group, {{g, c}});
  }

  const GroupModel& group() const { return group_; }
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  Scalar coefficient(const GroupElement& g) const {
    auto it = support_.find(g);
    return it == support_.end() ? Scalar(0) : it->second;
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    require_same_group(o);
    for (const auto& [g, c] : o.support_) accumulate(g, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    require_same_group(o);
    for (const auto& [g, c] : o.support_) accumulate(g, -c);
    return *this;
  }
  GroupRingElement& operator*=(const Scalar& s) {
    if (l2sig::is_zero(s)) {
      support_.clear();
      return *this;
    }
    for (auto& [g, c] : support_) c *= s;
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement a) { return a *= Scalar(-1); }
  friend GroupRingElement operator*(GroupRingElement a, const Scalar& s) { return a *= s; }
  friend GroupRingElement operator*(const Scalar& s, GroupRingElement a) { return a *= s; }

  /// Convolution product.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.require_same_group(b);
    GroupRingElement r(a.group_);
    for (const auto& [g, x] : a.support_)
      for (const auto& [h, y] : b.support_) r.accumulate(a.group_.multiply(g, h), x * y);
    return r;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.support_ == b.support_;
  }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

 private:
  void accumulate(const GroupElement& g, const Scalar& c) {
    if (l2sig::is_zero(c)) return;
    group_.check_element(g);
    auto [it, inserted] = support_.try_emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (l2sig::is_zero(it->second)) support_.erase(it);
  }

  void require_same_group(const GroupRingElement& o) const {
    if (group_ != o.group_)
      throw ValidationError("group ring elements over different models: " + group_.describe() + " vs " +
                            o.group_.describe());
  }

  GroupModel group_;
  Support support_;
};

using RationalElement = GroupRingElement<Rational>;
using GaussianElement = GroupRingElement<GaussianRational>;

/// (Σ a_g g)* = Σ conj(a_g) g⁻¹.
template <typename Scalar>
GroupRingElement<Scalar> star(const GroupRingElement<Scalar>& a) {
  std::vector<std::pair<GroupElement, Scalar>> terms;
  terms.reserve(a.support().size());
  for (const auto& [g, c] : a.support()) terms.emplace_back(a.group().inverse(g), conjugate(c));
  return GroupRingElement<Scalar>(a.group(), terms);
}

/// The von Neumann trace: the coefficient of the identity.
template <typename Scalar>
Scalar vn_trace(const GroupRingElement<Scalar>& a) {
  return a.coefficient(a.group().identity());
}

/// Left regular representation on ℓ²(Γ) for finite Γ: ρ(a)_{h,g} = a_{h g⁻¹}.
template <typename Scalar>
Matrix<Scalar> regular_rep(const GroupRingElement<Scalar>& a) {
  const GroupModel& group = a.group();
  if (!group.is_finite()) throw ValidationError("regular_rep requires a finite group, got " + group.describe());
  const auto n = static_cast<Eigen::Index>(group.order());
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index gi = 0; gi < n; ++gi) {
    const GroupElement g = group.element_at(gi);
    for (const auto& [x, c] : a.support()) {
      // row h = x·g
      m(static_cast<Eigen::Index>(group.index_of(group.multiply(x, g))), gi) = c;
    }
  }
  return m;
}

/// Σ a_v exp(i⟨v, θ⟩) for Γ = ℤᵈ.
template <typename Scalar>
std::complex<double> fourier_eval(const GroupRingElement<Scalar>& a, std::span<const double> theta) {
  const GroupModel& group = a.group().base();
  if (!group.is_free_abelian()) throw ValidationError("fourier_eval requires a free abelian group");
  if (static_cast<int>(theta.size()) != group.rank())
    throw ValidationError("torus point has " + std::to_string(theta.size()) + " angles, group rank is " +
                          std::to_string(group.rank()));
  std::complex<double> sum = 0.0;
  for (const auto& [v, c] : a.support()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) phase += static_cast<double>(v.coords[i]) * theta[i];
    sum += to_complex(c) * std::polar(1.0, phase);
  }
  return sum;
}

/// Pushes an element through a homomorphism (quotient maps, the augmentation,
/// embeddings); coefficients of merged elements add.
template <typename Scalar>
GroupRingElement<Scalar> push_forward(const GroupRingElement<Scalar>& a, const GroupHom& map) {
  if (map.source() != a.group().base() && map.source() != a.group())
    throw ValidationError("homomorphism source " + map.source().describe() + " does not match element group " +
                          a.group().describe());
  std::vector<std::pair<GroupElement, Scalar>> terms;
  terms.reserve(a.support().size());
  for (const auto& [g, c] : a.support()) terms.emplace_back(map(g), c);
  return GroupRingElement<Scalar>(map.target(), terms);
}

/// The augmentation ε(a) = Σ a_g as a scalar.
template <typename Scalar>
Scalar augment(const GroupRingElement<Scalar>& a) {
  Scalar s(0);
  for (const auto& [g, c] : a.support()) s += c;
  return s;
}

/// a ⊗ b in the group ring of the direct product.
template <typename Scalar>
GroupRingElement<Scalar> tensor(const GroupRingElement<Scalar>& a, const GroupRingElement<Scalar>& b,
                                const GroupModel& product) {
  std::vector<std::pair<GroupElement, Scalar>> terms;
  for (const auto& [g, x] : a.support())
    for (const auto& [h, y] : b.support())
      terms.emplace_back(product_element(a.group(), b.group(), g, h), x * y);
  return GroupRingElement<Scalar>(product, terms);
}

/// Re-types a rational element as a Gaussian-rational one.
inline GaussianElement to_gaussian(const RationalElement& a) {
  std::vector<std::pair<GroupElement, GaussianRational>> terms;
  for (const auto& [g, c] : a.support()) terms.emplace_back(g, GaussianRational(c));
  return GaussianElement(a.group(), terms);
}

}  // namespace l2sig

#endif  // L2SIG_GROUP_RING_HPP
