#include "l2sig/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "l2sig/errors.hpp"
#include "l2sig/rational.hpp"

namespace l2sig {

struct GroupModel::TableData {
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;
  bool abelian = true;
};

struct GroupModel::TowerData {
  GroupModel base;
  std::vector<Quotient> quotients;
};

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

[[noreturn]] void not_finite(const GroupModel& g, const char* what) {
  throw ValidationError(std::string(what) + " requires a finite group model, got " + g.describe());
}

}  // namespace

GroupModel GroupModel::cyclic(std::int64_t order) {
  if (order < 1) throw ValidationError("cyclic group order must be positive");
  GroupModel g;
  g.kind_ = Kind::finite_cyclic;
  g.order_ = order;
  return g;
}

GroupModel GroupModel::table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw ValidationError("group table entry out of range");
  }
  auto data = std::make_shared<TableData>();
  data->identity = -1;
  for (int e = 0; e < n && data->identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) data->identity = e;
  }
  if (data->identity < 0) throw ValidationError("group table has no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("group table is not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  data->inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == data->identity && table[b][a] == data->identity) data->inverse[a] = b;
    if (data->inverse[a] < 0) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] != table[b][a]) data->abelian = false;
  data->table = std::move(table);
  GroupModel g;
  g.kind_ = Kind::finite_table;
  g.order_ = n;
  g.table_ = std::move(data);
  return g;
}

GroupModel GroupModel::free_abelian(int rank) {
  if (rank < 1) throw ValidationError("free abelian rank must be at least 1");
  GroupModel g;
  g.kind_ = Kind::free_abelian;
  g.order_ = 0;
  g.rank_ = rank;
  return g;
}

GroupModel GroupModel::tower(const GroupModel& base, std::vector<Quotient> quotients) {
  if (base.kind() == Kind::tower) throw ValidationError("tower base cannot itself be a tower");
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    const GroupHom& q = quotients[k].map;
    if (q.source() != base)
      throw ValidationError("tower quotient " + std::to_string(k) + " is not defined on the base group");
    if (!q.target().is_finite())
      throw ValidationError("tower quotient " + std::to_string(k) + " has an infinite target");
    if (!q.is_surjective())
      throw ValidationError("tower quotient " + std::to_string(k) + " is not surjective");
  }
  GroupModel g;
  g.kind_ = Kind::tower;
  g.order_ = base.order_;
  g.rank_ = base.rank_;
  g.tower_ = std::make_shared<TowerData>(TowerData{base, std::move(quotients)});
  return g;
}

bool GroupModel::is_abelian() const {
  switch (kind_) {
    case Kind::finite_cyclic:
    case Kind::free_abelian:
      return true;
    case Kind::finite_table:
      return table_->abelian;
    case Kind::tower:
      return tower_->base.is_abelian();
  }
  return false;
}

std::int64_t GroupModel::order() const {
  if (!is_finite()) not_finite(*this, "order");
  return order_;
}

int GroupModel::rank() const {
  if (kind_ == Kind::tower) return tower_->base.rank();
  if (kind_ != Kind::free_abelian) throw ValidationError("rank requires a free abelian model, got " + describe());
  return rank_;
}

GroupElement GroupModel::identity() const {
  switch (kind_) {
    case Kind::finite_cyclic:
      return {{0}};
    case Kind::finite_table:
      return {{table_->identity}};
    case Kind::free_abelian:
      return {std::vector<std::int64_t>(rank_, 0)};
    case Kind::tower:
      return tower_->base.identity();
  }
  return {};
}

GroupElement GroupModel::multiply(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case Kind::finite_cyclic:
      return {{mod(a.coords[0] + b.coords[0], order_)}};
    case Kind::finite_table:
      return {{table_->table[a.coords[0]][b.coords[0]]}};
    case Kind::free_abelian: {
      GroupElement r = a;
      for (int i = 0; i < rank_; ++i) r.coords[i] += b.coords[i];
      return r;
    }
    case Kind::tower:
      return tower_->base.multiply(a, b);
  }
  return {};
}

GroupElement GroupModel::inverse(const GroupElement& a) const {
  switch (kind_) {
    case Kind::finite_cyclic:
      return {{mod(-a.coords[0], order_)}};
    case Kind::finite_table:
      return {{table_->inverse[a.coords[0]]}};
    case Kind::free_abelian: {
      GroupElement r = a;
      for (auto& c : r.coords) c = -c;
      return r;
    }
    case Kind::tower:
      return tower_->base.inverse(a);
  }
  return {};
}

GroupElement GroupModel::power(const GroupElement& a, std::int64_t k) const {
  GroupElement base = k < 0 ? inverse(a) : a;
  std::int64_t e = k < 0 ? -k : k;
  GroupElement result = identity();
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

bool GroupModel::contains(const GroupElement& a) const {
  switch (kind_) {
    case Kind::finite_cyclic:
    case Kind::finite_table:
      return a.coords.size() == 1 && a.coords[0] >= 0 && a.coords[0] < order_;
    case Kind::free_abelian:
      return static_cast<int>(a.coords.size()) == rank_;
    case Kind::tower:
      return tower_->base.contains(a);
  }
  return false;
}

void GroupModel::check_element(const GroupElement& a) const {
  if (!contains(a)) throw ValidationError("element is not in group " + describe());
}

std::vector<GroupElement> GroupModel::elements() const {
  if (!is_finite()) not_finite(*this, "element enumeration");
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::int64_t i = 0; i < order_; ++i) out.push_back({{i}});
  return out;
}

std::size_t GroupModel::index_of(const GroupElement& a) const {
  if (!is_finite()) not_finite(*this, "element indexing");
  return static_cast<std::size_t>(a.coords[0]);
}

GroupElement GroupModel::element_at(std::size_t i) const {
  if (!is_finite()) not_finite(*this, "element indexing");
  return {{static_cast<std::int64_t>(i)}};
}

std::vector<GroupElement> GroupModel::generators() const {
  switch (kind_) {
    case Kind::finite_cyclic:
      return order_ == 1 ? std::vector<GroupElement>{} : std::vector<GroupElement>{{{1}}};
    case Kind::finite_table:
      return elements();
    case Kind::free_abelian: {
      std::vector<GroupElement> gens;
      for (int i = 0; i < rank_; ++i) {
        GroupElement e = identity();
        e.coords[i] = 1;
        gens.push_back(std::move(e));
      }
      return gens;
    }
    case Kind::tower:
      return tower_->base.generators();
  }
  return {};
}

const GroupModel& GroupModel::base() const { return kind_ == Kind::tower ? tower_->base : *this; }

const std::vector<Quotient>& GroupModel::quotients() const {
  static const std::vector<Quotient> none;
  return kind_ == Kind::tower ? tower_->quotients : none;
}

const std::vector<std::vector<int>>& GroupModel::table_data() const {
  if (kind_ != Kind::finite_table) throw ValidationError("not a table model: " + describe());
  return table_->table;
}

std::string GroupModel::describe() const {
  switch (kind_) {
    case Kind::finite_cyclic:
      return "Z/" + std::to_string(order_);
    case Kind::finite_table:
      return "table(" + std::to_string(order_) + ")";
    case Kind::free_abelian:
      return "Z^" + std::to_string(rank_);
    case Kind::tower:
      return "tower(" + tower_->base.describe() + ", " + std::to_string(tower_->quotients.size()) +
             " quotients)";
  }
  return "?";
}

bool operator==(const GroupModel& a, const GroupModel& b) {
  if (a.kind_ != b.kind_ || a.order_ != b.order_ || a.rank_ != b.rank_) return false;
  switch (a.kind_) {
    case GroupModel::Kind::finite_cyclic:
    case GroupModel::Kind::free_abelian:
      return true;
    case GroupModel::Kind::finite_table:
      return a.table_ == b.table_ || a.table_->table == b.table_->table;
    case GroupModel::Kind::tower: {
      if (a.tower_ == b.tower_) return true;
      const auto& qa = a.tower_->quotients;
      const auto& qb = b.tower_->quotients;
      if (a.tower_->base != b.tower_->base || qa.size() != qb.size()) return false;
      for (std::size_t k = 0; k < qa.size(); ++k)
        if (qa[k].map.target() != qb[k].map.target() ||
            qa[k].map.generator_images() != qb[k].map.generator_images())
          return false;
      return true;
    }
  }
  return false;
}

GroupHom::GroupHom(GroupModel source, GroupModel target, std::vector<GroupElement> generator_images)
    : source_(std::make_shared<const GroupModel>(std::move(source))),
      target_(std::make_shared<const GroupModel>(std::move(target))),
      images_(std::move(generator_images)) {
  const GroupModel& src = source_->base();
  const GroupModel& tgt = *target_;
  const auto gens = src.generators();
  if (gens.size() != images_.size())
    throw ValidationError("homomorphism from " + src.describe() + " needs " + std::to_string(gens.size()) +
                          " generator images, got " + std::to_string(images_.size()));
  for (const auto& x : images_) tgt.check_element(x);
  switch (src.kind()) {
    case GroupModel::Kind::finite_cyclic:
      if (!gens.empty() && tgt.power(images_[0], src.order()) != tgt.identity())
        throw ValidationError("generator image order does not divide " + std::to_string(src.order()));
      break;
    case GroupModel::Kind::free_abelian:
      for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
          if (tgt.multiply(images_[i], images_[j]) != tgt.multiply(images_[j], images_[i]))
            throw ValidationError("images of free abelian generators do not commute");
      break;
    case GroupModel::Kind::finite_table: {
      const auto& t = src.table_data();
      for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
          if (images_[t[a][b]] != tgt.multiply(images_[a], images_[b]))
            throw ValidationError("map is not a homomorphism at (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
      break;
    }
    case GroupModel::Kind::tower:
      break;
  }
}

GroupElement GroupHom::operator()(const GroupElement& g) const {
  const GroupModel& src = source_->base();
  const GroupModel& tgt = *target_;
  switch (src.kind()) {
    case GroupModel::Kind::finite_cyclic:
      return images_.empty() ? tgt.identity() : tgt.power(images_[0], g.coords[0]);
    case GroupModel::Kind::finite_table:
      return images_[g.coords[0]];
    case GroupModel::Kind::free_abelian: {
      GroupElement r = tgt.identity();
      for (std::size_t i = 0; i < images_.size(); ++i) r = tgt.multiply(r, tgt.power(images_[i], g.coords[i]));
      return r;
    }
    case GroupModel::Kind::tower:
      break;
  }
  return tgt.identity();
}

bool GroupHom::is_injective() const {
  const GroupModel& src = source_->base();
  const GroupModel& tgt = target_->base();
  if (src.is_finite()) {
    std::set<GroupElement> seen;
    for (const auto& g : src.elements())
      if (!seen.insert((*this)(g)).second) return false;
    return true;
  }
  // Free abelian source: injective iff the target is free abelian and the
  // integer matrix of generator images has full column rank.
  if (!tgt.is_free_abelian()) return false;
  const int rows = tgt.rank();
  const int cols = static_cast<int>(images_.size());
  Matrix<Rational> m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = Rational(images_[c].coords[r]);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    for (int r = rank + 1; r < rows; ++r) {
      const Rational f = m(r, c) / m(rank, c);
      for (int k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank == cols;
}

bool GroupHom::is_surjective() const {
  const GroupModel& tgt = *target_;
  if (!tgt.is_finite()) throw ValidationError("surjectivity is only decided for finite targets");
  std::set<GroupElement> reached{tgt.identity()};
  std::queue<GroupElement> frontier;
  frontier.push(tgt.identity());
  while (!frontier.empty()) {
    const GroupElement x = frontier.front();
    frontier.pop();
    for (const auto& g : images_) {
      for (const auto& y : {tgt.multiply(x, g), tgt.multiply(x, tgt.inverse(g))})
        if (reached.insert(y).second) frontier.push(y);
    }
  }
  return static_cast<std::int64_t>(reached.size()) == tgt.order();
}

GroupHom augmentation(const GroupModel& group) {
  const GroupModel trivial = GroupModel::trivial();
  return GroupHom(group.base(), trivial,
                  std::vector<GroupElement>(group.base().generators().size(), trivial.identity()));
}

GroupModel direct_product(const GroupModel& first, const GroupModel& second) {
  const GroupModel& a = first.base();
  const GroupModel& b = second.base();
  if (a.is_trivial()) return b;
  if (b.is_trivial()) return a;
  if (a.is_finite() && b.is_finite()) {
    const auto n = static_cast<int>(a.order());
    const auto m = static_cast<int>(b.order());
    std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
    for (int g1 = 0; g1 < n; ++g1)
      for (int h1 = 0; h1 < m; ++h1)
        for (int g2 = 0; g2 < n; ++g2)
          for (int h2 = 0; h2 < m; ++h2) {
            const auto g = a.multiply({{g1}}, {{g2}}).coords[0];
            const auto h = b.multiply({{h1}}, {{h2}}).coords[0];
            table[g1 * m + h1][g2 * m + h2] = static_cast<int>(g * m + h);
          }
    return GroupModel::table(std::move(table));
  }
  if (a.is_free_abelian() && b.is_free_abelian()) return GroupModel::free_abelian(a.rank() + b.rank());
  throw ValidationError("unsupported product model " + a.describe() + " x " + b.describe());
}

GroupElement product_element(const GroupModel& first, const GroupModel& second, const GroupElement& g,
                             const GroupElement& h) {
  const GroupModel& a = first.base();
  const GroupModel& b = second.base();
  if (a.is_trivial()) return h;
  if (b.is_trivial()) return g;
  if (a.is_finite() && b.is_finite()) return {{g.coords[0] * b.order() + h.coords[0]}};
  GroupElement r = g;
  r.coords.insert(r.coords.end(), h.coords.begin(), h.coords.end());
  return r;
}

bool tower_is_nested(const GroupModel& tower) {
  const auto& qs = tower.quotients();
  for (std::size_t k = 0; k + 1 < qs.size(); ++k) {
    const GroupHom& coarse = qs[k].map;
    const GroupHom& fine = qs[k + 1].map;
    const GroupModel& qf = fine.target();
    const GroupModel& qc = coarse.target();
    // Try to build φ: Q_{k+1} → Q_k with φ∘fine = coarse along the Cayley graph.
    std::map<GroupElement, GroupElement> phi{{qf.identity(), qc.identity()}};
    std::queue<GroupElement> frontier;
    frontier.push(qf.identity());
    while (!frontier.empty()) {
      const GroupElement x = frontier.front();
      frontier.pop();
      const GroupElement fx = phi.at(x);
      for (std::size_t i = 0; i < fine.generator_images().size(); ++i) {
        const GroupElement y = qf.multiply(x, fine.generator_images()[i]);
        const GroupElement fy = qc.multiply(fx, coarse.generator_images()[i]);
        auto [it, inserted] = phi.emplace(y, fy);
        if (inserted)
          frontier.push(y);
        else if (it->second != fy)
          return false;
      }
    }
  }
  return true;
}

}  // namespace l2sig
