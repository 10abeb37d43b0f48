#ifndef L2SIG_JSON_IO_HPP
#define L2SIG_JSON_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "l2sig/covering.hpp"
#include "l2sig/hermitian_form.hpp"
#include "l2sig/vn_signature.hpp"

namespace l2sig {

using json = nlohmann::json;

/// A parsed form: rational when every coefficient is real, Gaussian otherwise.
using AnyForm = std::variant<HermitianForm<Rational>, HermitianForm<GaussianRational>>;

// Shape and type problems raise ParseError; well-formed documents describing
// invalid objects (a non-group table, a non-Hermitian matrix) raise
// ValidationError.

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

GroupModel parse_group(const json& j);
json group_to_json(const GroupModel& group);

GroupElement parse_group_element(const json& j, const GroupModel& group);
json group_element_to_json(const GroupElement& g, const GroupModel& group);

/// Accepts an integer, a "num/den" string, [num, den], or [[re_num, re_den], [im_num, im_den]].
GaussianRational parse_coefficient(const json& j);
json coefficient_to_json(const Rational& x);
json coefficient_to_json(const GaussianRational& x);

/// A list of {"coeff": …, "g": …} terms; a missing "g" is the identity.
GaussianElement parse_element(const json& j, const GroupModel& group);
template <typename Scalar>
json element_to_json(const GroupRingElement<Scalar>& a) {
  json terms = json::array();
  for (const auto& [g, c] : a.support())
    terms.push_back({{"coeff", coefficient_to_json(c)}, {"g", group_element_to_json(g, a.group())}});
  return terms;
}

AnyForm parse_form(const json& j);
template <typename Scalar>
json form_to_json(const HermitianForm<Scalar>& f) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < f.size(); ++j) row.push_back(element_to_json(f(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"group", group_to_json(f.group())}, {"parity", static_cast<int>(f.parity())}, {"matrix", rows}};
}

/// {"dim", "vertices", "top_simplices", "orientation"?, "covering"?}; without a
/// covering the trivial group is used.
CoveredComplex parse_complex(const json& j);
json complex_to_json(const CoveredComplex& space);

json report_to_json(const SignatureReport& report);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace l2sig

#endif  // L2SIG_JSON_IO_HPP
