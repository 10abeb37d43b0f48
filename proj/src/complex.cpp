#include "l2sig/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

std::string show(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

int sorting_sign(std::span<const int> order) {
  int sign = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j]) sign = -sign;
  return sign;
}

OrientedSimplicialComplex::OrientedSimplicialComplex(int vertex_count, std::vector<Simplex> top,
                                                     std::optional<std::vector<int>> orientation)
    : vertex_count_(vertex_count) {
  if (top.empty()) throw ValidationError("complex has no top simplices");
  dim_ = static_cast<int>(top.front().size()) - 1;
  if (orientation && orientation->size() != top.size())
    throw ValidationError("orientation has " + std::to_string(orientation->size()) + " entries for " +
                          std::to_string(top.size()) + " top simplices");
  // Sort each top simplex, folding the sorting sign into its orientation.
  std::vector<std::pair<Simplex, int>> tops;
  for (std::size_t k = 0; k < top.size(); ++k) {
    Simplex s = top[k];
    if (static_cast<int>(s.size()) != dim_ + 1) throw ValidationError("complex is not pure: " + show(s));
    for (int v : s)
      if (v < 0 || v >= vertex_count) throw ValidationError("vertex out of range in " + show(s));
    int sign = orientation ? (*orientation)[k] : 1;
    if (sign != 1 && sign != -1) throw ValidationError("orientation entries must be +1 or -1");
    sign *= sorting_sign(s);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ValidationError("degenerate simplex " + show(s));
    tops.emplace_back(std::move(s), sign);
  }
  std::sort(tops.begin(), tops.end());
  for (std::size_t k = 1; k < tops.size(); ++k)
    if (tops[k].first == tops[k - 1].first) throw ValidationError("duplicate top simplex " + show(tops[k].first));

  simplices_.assign(dim_ + 1, {});
  lookup_.assign(dim_ + 1, {});
  std::vector<std::set<Simplex>> faces(dim_ + 1);
  for (const auto& [s, sign] : tops) {
    const int n = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      faces[f.size() - 1].insert(std::move(f));
    }
  }
  for (int p = 0; p <= dim_; ++p) {
    simplices_[p].assign(faces[p].begin(), faces[p].end());
    for (std::size_t i = 0; i < simplices_[p].size(); ++i) lookup_[p].emplace(simplices_[p][i], i);
  }
  if (orientation) {
    orientation_.reserve(tops.size());
    for (const auto& t : tops) orientation_.push_back(t.second);
  }
}

std::optional<std::size_t> OrientedSimplicialComplex::index_of(const Simplex& s) const {
  const int p = static_cast<int>(s.size()) - 1;
  if (p < 0 || p > dim_) return std::nullopt;
  auto it = lookup_[p].find(s);
  if (it == lookup_[p].end()) return std::nullopt;
  return it->second;
}

std::size_t OrientedSimplicialComplex::index(const Simplex& s) const {
  auto i = index_of(s);
  if (!i) throw ValidationError("simplex " + show(s) + " is not in the complex");
  return *i;
}

std::vector<std::int64_t> OrientedSimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f;
  for (const auto& level : simplices_) f.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

std::int64_t OrientedSimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int p = 0; p <= dim_; ++p) chi += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(simplices_[p].size());
  return chi;
}

void OrientedSimplicialComplex::set_subdivision_labels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != vertex_count_) throw ValidationError("one label per vertex required");
  for (int p = 0; p <= dim_; ++p)
    for (const auto& s : simplices_[p]) {
      std::set<int> seen;
      for (int v : s)
        if (!seen.insert(labels[v]).second)
          throw ValidationError("subdivision labels repeat inside simplex " + show(s));
    }
  labels_ = std::move(labels);
}

std::vector<std::int64_t> boundary_of_top_chain(const OrientedSimplicialComplex& complex,
                                                std::span<const int> coefficients) {
  const int d = complex.dim();
  std::vector<std::int64_t> out(complex.count(d - 1), 0);
  const auto& tops = complex.top_simplices();
  for (std::size_t k = 0; k < tops.size(); ++k) {
    if (coefficients[k] == 0) continue;
    for (int i = 0; i <= d; ++i) {
      Simplex face = tops[k];
      face.erase(face.begin() + i);
      out[complex.index(face)] += (i % 2 == 0 ? 1 : -1) * coefficients[k];
    }
  }
  return out;
}

FundamentalCycle validate_and_orient(const OrientedSimplicialComplex& complex) {
  const int d = complex.dim();
  const auto& tops = complex.top_simplices();
  if (d < 1) throw ValidationError("fundamental cycles need dimension at least 1");
  // cofaces[f] = (top index, position of the removed vertex)
  std::vector<std::vector<std::pair<std::size_t, int>>> cofaces(complex.count(d - 1));
  for (std::size_t k = 0; k < tops.size(); ++k)
    for (int i = 0; i <= d; ++i) {
      Simplex face = tops[k];
      face.erase(face.begin() + i);
      cofaces[complex.index(face)].emplace_back(k, i);
    }
  for (std::size_t f = 0; f < cofaces.size(); ++f)
    if (cofaces[f].size() != 2)
      throw ValidationError("not a pseudomanifold: face " + show(complex.simplices(d - 1)[f]) + " lies in " +
                            std::to_string(cofaces[f].size()) + " top simplices");

  if (complex.is_oriented()) {
    const auto& o = complex.orientation();
    const auto boundary = boundary_of_top_chain(complex, o);
    for (std::size_t f = 0; f < boundary.size(); ++f)
      if (boundary[f] != 0)
        throw ValidationError("given orientation is not a cycle: boundary nonzero on " +
                              show(complex.simplices(d - 1)[f]));
    return {o};
  }

  std::vector<std::vector<std::pair<std::size_t, int>>> adjacency(tops.size());
  for (const auto& pair : cofaces) {
    const auto [a, ia] = pair[0];
    const auto [b, ib] = pair[1];
    // Induced orientations on the shared face must be opposite:
    // s_a (-1)^ia = -s_b (-1)^ib, i.e. s_b = -(-1)^(ia+ib) s_a.
    const int rel = ((ia + ib) % 2 == 0) ? -1 : 1;
    adjacency[a].emplace_back(b, rel);
    adjacency[b].emplace_back(a, rel);
  }
  std::vector<int> signs(tops.size(), 0);
  for (std::size_t start = 0; start < tops.size(); ++start) {
    if (signs[start] != 0) continue;
    signs[start] = 1;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t a = frontier.front();
      frontier.pop();
      for (const auto& [b, rel] : adjacency[a]) {
        const int want = rel * signs[a];
        if (signs[b] == 0) {
          signs[b] = want;
          frontier.push(b);
        } else if (signs[b] != want) {
          throw ValidationError("not orientable: inconsistent signs around top simplices " + show(tops[a]) +
                                " and " + show(tops[b]));
        }
      }
    }
  }
  const auto boundary = boundary_of_top_chain(complex, signs);
  if (std::any_of(boundary.begin(), boundary.end(), [](std::int64_t x) { return x != 0; }))
    throw ValidationError("propagated orientation has nonzero boundary");
  return {signs};
}

OrientedSimplicialComplex with_orientation(const OrientedSimplicialComplex& complex, const FundamentalCycle& cycle) {
  OrientedSimplicialComplex out(complex.vertex_count(), complex.top_simplices(), cycle.signs);
  if (complex.is_subdivision()) out.set_subdivision_labels(complex.subdivision_labels());
  return out;
}

OrientedSimplicialComplex relabel(const OrientedSimplicialComplex& complex, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != complex.vertex_count()) throw ValidationError("relabel: wrong permutation size");
  std::vector<Simplex> tops;
  for (const auto& s : complex.top_simplices()) {
    Simplex t;
    for (int v : s) t.push_back(perm[v]);
    tops.push_back(std::move(t));
  }
  std::optional<std::vector<int>> orientation;
  if (complex.is_oriented()) orientation = complex.orientation();
  OrientedSimplicialComplex out(complex.vertex_count(), std::move(tops), std::move(orientation));
  if (complex.is_subdivision()) {
    std::vector<int> labels(complex.vertex_count());
    for (int v = 0; v < complex.vertex_count(); ++v) labels[perm[v]] = complex.subdivision_labels()[v];
    out.set_subdivision_labels(std::move(labels));
  }
  return out;
}

OrientedSimplicialComplex barycentric_subdivision(const OrientedSimplicialComplex& complex) {
  const int d = complex.dim();
  std::vector<std::size_t> offset(d + 2, 0);
  for (int p = 0; p <= d; ++p) offset[p + 1] = offset[p] + complex.count(p);
  std::vector<int> labels(offset[d + 1]);
  for (int p = 0; p <= d; ++p)
    for (std::size_t i = 0; i < complex.count(p); ++i) labels[offset[p] + i] = p;

  std::vector<Simplex> flags;
  std::vector<int> signs;
  const auto& tops = complex.top_simplices();
  for (std::size_t k = 0; k < tops.size(); ++k) {
    const int parent_sign = complex.is_oriented() ? complex.orientation()[k] : 1;
    // A flag s_0 ⊂ … ⊂ s_d is an ordering (v_0, …, v_d) of the parent's
    // vertices with s_i = {v_0..v_i}; the flag (b(s_0), …, b(s_d)) is
    // positively oriented iff (v_0, …, v_d) is.
    std::vector<int> order = tops[k];
    do {
      Simplex flag;
      for (int i = 0; i <= d; ++i) {
        Simplex s(order.begin(), order.begin() + i + 1);
        std::sort(s.begin(), s.end());
        flag.push_back(static_cast<int>(offset[i] + complex.index(s)));
      }
      signs.push_back(parent_sign * sorting_sign(order));
      flags.push_back(std::move(flag));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::optional<std::vector<int>> orientation;
  if (complex.is_oriented()) orientation = std::move(signs);
  OrientedSimplicialComplex out(static_cast<int>(offset[d + 1]), std::move(flags), std::move(orientation));
  out.set_subdivision_labels(std::move(labels));
  return out;
}

OrientedSimplicialComplex boundary_of_simplex(int n) {
  std::vector<Simplex> tops;
  std::vector<int> signs;
  for (int skip = 0; skip <= n + 1; ++skip) {
    Simplex s;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) s.push_back(v);
    tops.push_back(std::move(s));
    signs.push_back(skip % 2 == 0 ? 1 : -1);
  }
  return OrientedSimplicialComplex(n + 2, std::move(tops), std::move(signs));
}

OrientedSimplicialComplex full_simplex(int n) {
  Simplex s(n + 1);
  std::iota(s.begin(), s.end(), 0);
  return OrientedSimplicialComplex(n + 1, {s}, std::vector<int>{1});
}

}  // namespace l2sig
