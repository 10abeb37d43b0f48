#include "l2sig/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    if (j[1].get<std::int64_t>() == 0) throw ParseError("zero denominator in coefficient");
    return Rational(j[0].get<std::int64_t>()) / j[1].get<std::int64_t>();
  }
  throw ParseError("bad rational coefficient " + j.dump());
}

template <typename F>
auto translating(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

GroupModel parse_group(const json& j) {
  return translating([&] {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "trivial") return GroupModel::trivial();
    if (type == "finite_cyclic") return GroupModel::cyclic(as_int(field(j, "order"), "order"));
    if (type == "finite_table") return GroupModel::table(field(j, "table").get<std::vector<std::vector<int>>>());
    if (type == "free_abelian") return GroupModel::free_abelian(static_cast<int>(as_int(field(j, "rank"), "rank")));
    if (type == "tower") {
      const GroupModel base = parse_group(field(j, "base"));
      std::vector<Quotient> quotients;
      for (const auto& q : field(j, "quotients")) {
        const GroupModel target = parse_group(field(q, "target"));
        std::vector<GroupElement> images;
        for (const auto& g : field(q, "images")) images.push_back(parse_group_element(g, target));
        quotients.push_back({GroupHom(base, target, std::move(images))});
      }
      return GroupModel::tower(base, std::move(quotients));
    }
    throw ParseError("unknown group type '" + type + "'");
  });
}

json group_to_json(const GroupModel& group) {
  switch (group.kind()) {
    case GroupModel::Kind::finite_cyclic:
      if (group.is_trivial()) return {{"type", "trivial"}};
      return {{"type", "finite_cyclic"}, {"order", group.order()}};
    case GroupModel::Kind::finite_table:
      return {{"type", "finite_table"}, {"table", group.table_data()}};
    case GroupModel::Kind::free_abelian:
      return {{"type", "free_abelian"}, {"rank", group.rank()}};
    case GroupModel::Kind::tower: {
      json quotients = json::array();
      for (const auto& q : group.quotients()) {
        json images = json::array();
        for (const auto& g : q.map.generator_images()) images.push_back(group_element_to_json(g, q.map.target()));
        quotients.push_back({{"target", group_to_json(q.map.target())}, {"images", images}});
      }
      return {{"type", "tower"}, {"base", group_to_json(group.base())}, {"quotients", quotients}};
    }
  }
  return {};
}

GroupElement parse_group_element(const json& j, const GroupModel& group) {
  const GroupModel& g = group.base();
  GroupElement out;
  if (g.is_free_abelian()) {
    if (j.is_number_integer())
      out.coords = {j.get<std::int64_t>()};
    else if (j.is_array())
      out.coords = translating([&] { return j.get<std::vector<std::int64_t>>(); });
    else
      throw ParseError("group element must be an integer or an exponent vector, got " + j.dump());
  } else {
    std::int64_t k = 0;
    if (j.is_number_integer())
      k = j.get<std::int64_t>();
    else if (j.is_array() && j.size() == 1 && j[0].is_number_integer())
      k = j[0].get<std::int64_t>();
    else
      throw ParseError("finite group element must be an integer, got " + j.dump());
    // Exponents of the cyclic generator are read modulo the order.
    if (g.kind() == GroupModel::Kind::finite_cyclic) k = ((k % g.order()) + g.order()) % g.order();
    out.coords = {k};
  }
  g.check_element(out);
  return out;
}

json group_element_to_json(const GroupElement& g, const GroupModel& group) {
  if (group.base().is_free_abelian()) return g.coords;
  return g.coords.at(0);
}

GaussianRational parse_coefficient(const json& j) {
  if (j.is_array() && j.size() == 2 && (j[0].is_array() || j[0].is_string())) return {rational_from(j[0]), rational_from(j[1])};
  return {rational_from(j), Rational(0)};
}

json coefficient_to_json(const Rational& x) { return to_string(x); }

json coefficient_to_json(const GaussianRational& x) {
  if (x.im.is_zero()) return to_string(x.re);
  return json::array({to_string(x.re), to_string(x.im)});
}

GaussianElement parse_element(const json& j, const GroupModel& group) {
  if (!j.is_array()) throw ParseError("group ring element must be a list of terms, got " + j.dump());
  std::vector<std::pair<GroupElement, GaussianRational>> terms;
  for (const auto& term : j) {
    const GaussianRational c = parse_coefficient(field(term, "coeff"));
    const GroupElement g = term.contains("g") ? parse_group_element(term["g"], group) : group.identity();
    terms.emplace_back(g, c);
  }
  return GaussianElement(group, terms);
}

AnyForm parse_form(const json& j) {
  return translating([&]() -> AnyForm {
    const GroupModel group = parse_group(field(j, "group"));
    const std::int64_t parity = j.contains("parity") ? as_int(j["parity"], "parity") : 1;
    if (parity != 1 && parity != -1) throw ValidationError("parity must be 1 or -1");
    const json& rows = field(j, "matrix");
    if (!rows.is_array()) throw ParseError("matrix must be a list of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    GroupRingMatrix<GaussianRational> m(group, n, n);
    bool real = true;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (!rows[r].is_array() || static_cast<Eigen::Index>(rows[r].size()) != n)
        throw ParseError("matrix row " + std::to_string(r) + " does not have " + std::to_string(n) + " entries");
      for (Eigen::Index c = 0; c < n; ++c) {
        m(r, c) = parse_element(rows[r][c], group);
        for (const auto& [g, x] : m(r, c).support()) real = real && x.im.is_zero();
      }
    }
    const Parity p = parity == 1 ? Parity::hermitian : Parity::skew;
    if (!real) return check_hermitian(std::move(m), p);
    GroupRingMatrix<Rational> rm(group, n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        std::vector<std::pair<GroupElement, Rational>> terms;
        for (const auto& [g, x] : m(r, c).support()) terms.emplace_back(g, x.re);
        rm(r, c) = RationalElement(group, terms);
      }
    return check_hermitian(std::move(rm), p);
  });
}

CoveredComplex parse_complex(const json& j) {
  return translating([&] {
    const auto dim = as_int(field(j, "dim"), "dim");
    const auto vertices = static_cast<int>(as_int(field(j, "vertices"), "vertices"));
    auto tops = field(j, "top_simplices").get<std::vector<Simplex>>();
    for (const auto& s : tops)
      if (static_cast<std::int64_t>(s.size()) != dim + 1)
        throw ValidationError("top simplex of the wrong size for dimension " + std::to_string(dim));
    std::optional<std::vector<int>> orientation;
    if (j.contains("orientation")) orientation = j["orientation"].get<std::vector<int>>();
    OrientedSimplicialComplex complex(vertices, std::move(tops), std::move(orientation));
    CoveringCocycle cocycle = CoveringCocycle::trivial();
    if (j.contains("covering")) {
      const json& cov = j["covering"];
      cocycle = CoveringCocycle(parse_group(field(cov, "group")));
      if (cov.contains("edge_labels"))
        for (const auto& label : cov["edge_labels"]) {
          const auto edge = field(label, "edge").get<std::vector<int>>();
          if (edge.size() != 2) throw ParseError("edge labels need two endpoints");
          cocycle.set(edge[0], edge[1], parse_group_element(field(label, "g"), cocycle.group()));
        }
    }
    return CoveredComplex{std::move(complex), std::move(cocycle)};
  });
}

json complex_to_json(const CoveredComplex& space) {
  const auto& c = space.complex;
  json out = {{"dim", c.dim()}, {"vertices", c.vertex_count()}, {"top_simplices", c.top_simplices()}};
  if (c.is_oriented()) out["orientation"] = c.orientation();
  if (!space.covering.group().is_trivial()) {
    json labels = json::array();
    for (const auto& [edge, g] : space.covering.labels())
      labels.push_back({{"edge", {edge.first, edge.second}}, {"g", group_element_to_json(g, space.covering.group())}});
    out["covering"] = {{"group", group_to_json(space.covering.group())}, {"edge_labels", labels}};
  }
  return out;
}

json report_to_json(const SignatureReport& r) {
  json out = {{"method", to_string(r.method)},   {"sign2", r.sign2},           {"kernel_dim", r.kernel_dim},
              {"total_dim", r.total_dim},        {"ordinary_sign", r.ordinary_sign}, {"error_bound", r.error_bound}};
  if (r.sign2_exact) out["sign2_exact"] = to_string(*r.sign2_exact);
  if (r.kernel_exact) out["kernel_exact"] = to_string(*r.kernel_exact);
  if (r.total_exact) out["total_exact"] = to_string(*r.total_exact);
  if (r.quadrature)
    out["quadrature"] = {{"nodes_per_axis", r.quadrature->nodes_per_axis},
                         {"jitter_seed", r.quadrature->jitter_seed},
                         {"zero_threshold", r.quadrature->zero_threshold}};
  return out;
}

std::string format_double(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

}  // namespace l2sig
