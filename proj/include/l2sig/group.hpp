#ifndef L2SIG_GROUP_HPP
#define L2SIG_GROUP_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace l2sig {

/// A group element. Finite models use a single coordinate (the element index,
/// for cyclic groups the exponent of the generator); free abelian models use
/// the exponent vector.
struct GroupElement {
  std::vector<std::int64_t> coords;

  auto operator<=>(const GroupElement&) const = default;
};

class GroupHom;
struct Quotient;

/// The deck groups the library can compute with.
///
/// Values are immutable and cheap to copy; finite tables and tower data are
/// shared.
class GroupModel {
 public:
  enum class Kind { finite_cyclic, finite_table, free_abelian, tower };

  static GroupModel trivial() { return cyclic(1); }
  static GroupModel cyclic(std::int64_t order);
  /// Validates the table as a group law (associativity, identity, inverses).
  static GroupModel table(std::vector<std::vector<int>> table);
  static GroupModel free_abelian(int rank);
  /// Every quotient map must be a surjective homomorphism from `base` onto a
  /// finite model.
  static GroupModel tower(const GroupModel& base, std::vector<Quotient> quotients);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite_cyclic || kind_ == Kind::finite_table; }
  bool is_free_abelian() const { return kind_ == Kind::free_abelian; }
  bool is_trivial() const { return is_finite() && order_ == 1; }
  /// Abelian as a law: cyclic, free abelian, commutative table.
  bool is_abelian() const;

  std::int64_t order() const;  // finite models only
  int rank() const;            // free abelian models only

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, std::int64_t k) const;
  bool contains(const GroupElement& a) const;
  /// Throws ValidationError naming the model when `a` is not an element.
  void check_element(const GroupElement& a) const;

  std::vector<GroupElement> elements() const;  // finite models only
  std::size_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::size_t i) const;
  /// The canonical generating set used by homomorphisms given on generators:
  /// {1} for cyclic, the unit vectors for free abelian, every element for a
  /// table, the base's generators for a tower.
  std::vector<GroupElement> generators() const;

  /// Tower models: the underlying group. Other models return *this.
  const GroupModel& base() const;
  const std::vector<Quotient>& quotients() const;

  const std::vector<std::vector<int>>& table_data() const;

  std::string describe() const;

  friend bool operator==(const GroupModel& a, const GroupModel& b);
  friend bool operator!=(const GroupModel& a, const GroupModel& b) { return !(a == b); }

 private:
  struct TableData;
  struct TowerData;

  Kind kind_ = Kind::finite_cyclic;
  std::int64_t order_ = 1;
  int rank_ = 0;
  std::shared_ptr<const TableData> table_;
  std::shared_ptr<const TowerData> tower_;
};

/// A homomorphism determined by the images of the source's canonical generators.
class GroupHom {
 public:
  /// Validates the homomorphism property; throws ValidationError otherwise.
  GroupHom(GroupModel source, GroupModel target, std::vector<GroupElement> generator_images);

  const GroupModel& source() const { return *source_; }
  const GroupModel& target() const { return *target_; }
  const std::vector<GroupElement>& generator_images() const { return images_; }

  GroupElement operator()(const GroupElement& g) const;

  bool is_injective() const;
  bool is_surjective() const;  // finite targets only

 private:
  std::shared_ptr<const GroupModel> source_;
  std::shared_ptr<const GroupModel> target_;
  std::vector<GroupElement> images_;
};

/// One level of a quotient tower: a surjection of the base onto a finite group
/// whose order is the index [Γ : Γ_k].
struct Quotient {
  GroupHom map;

  std::int64_t index() const { return map.target().order(); }
};

/// The map onto the trivial group.
GroupHom augmentation(const GroupModel& group);

/// finite × finite → table (element (g, h) has index g·|H| + h);
/// free abelian × free abelian → free abelian of summed rank.
/// Trivial factors are absorbed. Anything else throws ValidationError.
GroupModel direct_product(const GroupModel& first, const GroupModel& second);
GroupElement product_element(const GroupModel& first, const GroupModel& second,
                             const GroupElement& g, const GroupElement& h);

/// Whether Γ_{k+1} ⊆ Γ_k for every consecutive pair of quotients, i.e. each
/// quotient map factors through the next one. Decided exactly by walking the
/// Cayley graph of the finer quotient.
bool tower_is_nested(const GroupModel& tower);

}  // namespace l2sig

#endif  // L2SIG_GROUP_HPP
