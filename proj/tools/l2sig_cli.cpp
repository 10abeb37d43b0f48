#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "l2sig/constructions.hpp"
#include "l2sig/errors.hpp"
#include "l2sig/json_io.hpp"
#include "l2sig/pairing.hpp"
#include "l2sig/verify.hpp"
#include "l2sig/vn_signature.hpp"

using namespace l2sig;

namespace {

struct RunConfig {
  int nodes = 2048;
  double eps = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

QuadratureSpec spec_of(const RunConfig& c) {
  QuadratureSpec s{c.nodes, c.seed, c.eps};
  s.validate();
  return s;
}

json config_json(const RunConfig& c) { return {{"nodes", c.nodes}, {"eps", c.eps}, {"seed", c.seed}}; }

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
}

std::string format_or(const RunConfig& c, const std::string& fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "json" && f != "csv") throw ParseError("unknown output format '" + f + "'");
  return f;
}

std::string csv_report(const SignatureReport& r, const RunConfig& c, double wall) {
  std::ostringstream out;
  out << "method,sign2,sign2_exact,kernel_dim,total_dim,ordinary_sign,error_bound,seed,wall_time_s\n";
  out << to_string(r.method) << ',' << format_double(r.sign2) << ',' << (r.sign2_exact ? to_string(*r.sign2_exact) : "")
      << ',' << format_double(r.kernel_dim) << ',' << format_double(r.total_dim) << ',' << r.ordinary_sign << ','
      << format_double(r.error_bound) << ',' << c.seed << ',' << format_double(wall) << '\n';
  return out.str();
}

void emit_report(const std::string& command, const std::string& input, const SignatureReport& r, const RunConfig& c,
                 Clock::time_point start) {
  if (format_or(c, "json") == "csv") return emit(c, csv_report(r, c, seconds_since(start)));
  const json out = {{"command", command}, {"input", input}, {"config", config_json(c)}, {"report", report_to_json(r)}};
  emit(c, out.dump(2) + "\n");
}

template <typename Scalar>
SignatureReport form_signature(const HermitianForm<Scalar>& f, const RunConfig& c) {
  if (f.group().kind() == GroupModel::Kind::tower) return form_signature(on_base(f), c);
  if (f.group().is_finite()) return l2_signature_of_form(f);
  return l2_signature_of_form(f, spec_of(c));
}

bool is_complex_document(const json& j) { return j.is_object() && j.contains("top_simplices"); }

int cmd_form_sig(const std::string& path, const RunConfig& c) {
  const auto start = Clock::now();
  const AnyForm form = parse_form(read_json_file(path));
  const SignatureReport r = std::visit([&](const auto& f) { return form_signature(f, c); }, form);
  emit_report("form-sig", path, r, c, start);
  return 0;
}

int cmd_space_sig(const std::string& path, const RunConfig& c) {
  const auto start = Clock::now();
  const CoveredComplex space = parse_complex(read_json_file(path));
  std::optional<QuadratureSpec> spec;
  if (space.covering.group().is_free_abelian()) spec = spec_of(c);
  const SignatureReport r = l2_signature_of_space(space, spec);
  emit_report("space-sig", path, r, c, start);
  return 0;
}

template <typename Scalar>
int run_tower(const HermitianForm<Scalar>& f, int depth, const std::string& path, const RunConfig& c) {
  const auto start = Clock::now();
  const std::vector<TowerLevel> levels = signature_tower(f, depth);
  std::optional<SignatureReport> limit;
  if (depth > 0 && f.group().base().is_free_abelian()) limit = l2_signature_of_form(on_base(f), spec_of(c));
  if (format_or(c, "csv") == "csv") {
    std::ostringstream out;
    out << "level,index,sign2,sign2_decimal,error_bound\n";
    for (const auto& l : levels)
      out << l.level << ',' << l.index << ',' << to_string(l.value) << ',' << format_double(to_double(l.value)) << ",0\n";
    if (limit)
      out << "quadrature,," << "," << format_double(limit->sign2) << ',' << format_double(limit->error_bound) << '\n';
    std::cerr << "seed " << c.seed << ", wall time " << format_double(seconds_since(start)) << " s\n";
    emit(c, out.str());
    return 0;
  }
  json rows = json::array();
  for (const auto& l : levels)
    rows.push_back({{"level", l.level}, {"index", l.index}, {"sign2", to_string(l.value)}});
  json out = {{"command", "tower"}, {"input", path}, {"config", config_json(c)}, {"levels", rows}};
  if (limit) out["quadrature"] = report_to_json(*limit);
  emit(c, out.dump(2) + "\n");
  return 0;
}

int cmd_tower(const std::string& path, int depth, const RunConfig& c) {
  const AnyForm form = parse_form(read_json_file(path));
  return std::visit([&](const auto& f) { return run_tower(f, depth, path, c); }, form);
}

template <typename Scalar>
int run_form_product(const HermitianForm<Scalar>& f, const HermitianForm<Scalar>& g, const RunConfig& c) {
  const SignatureReport rf = form_signature(f, c);
  const SignatureReport rg = form_signature(g, c);
  const SignatureReport rp = form_signature(kunneth_product(f, g), c);
  const bool exact = rf.sign2_exact && rg.sign2_exact && rp.sign2_exact;
  const bool multiplicative = exact ? *rp.sign2_exact == *rf.sign2_exact * *rg.sign2_exact
                                    : std::abs(rp.sign2 - rf.sign2 * rg.sign2) <= rp.error_bound + rf.error_bound +
                                                                                    rg.error_bound;
  const json out = {{"command", "product"},
                    {"config", config_json(c)},
                    {"first", report_to_json(rf)},
                    {"second", report_to_json(rg)},
                    {"product", report_to_json(rp)},
                    {"multiplicative", multiplicative}};
  emit(c, out.dump(2) + "\n");
  return multiplicative ? 0 : 1;
}

int cmd_product(const std::string& first, const std::string& second, const RunConfig& c) {
  const json a = read_json_file(first);
  const json b = read_json_file(second);
  if (is_complex_document(a) != is_complex_document(b))
    throw ParseError("product needs two forms or two complexes");
  if (is_complex_document(a)) {
    const CoveredComplex product = staircase_product(parse_complex(a), parse_complex(b));
    emit(c, complex_to_json(product).dump() + "\n");
    return 0;
  }
  const AnyForm f = parse_form(a);
  const AnyForm g = parse_form(b);
  if (f.index() == 0 && g.index() == 0)
    return run_form_product(std::get<0>(f), std::get<0>(g), c);
  auto gaussian = [](const AnyForm& x) {
    return x.index() == 0 ? to_gaussian(std::get<0>(x)) : std::get<1>(x);
  };
  return run_form_product(gaussian(f), gaussian(g), c);
}

int cmd_verify(const std::string& suite, const RunConfig& c) {
  if (!is_suite(suite)) throw ParseError("unknown suite '" + suite + "'");
  const SuiteReport report = run_suite(suite, c.seed);
  if (c.format == "json") {
    json cases = json::array();
    for (const auto& k : report.cases) cases.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
    emit(c, json{{"suite", report.suite}, {"seed", c.seed}, {"passed", report.passed()}, {"cases", cases}}.dump(2) +
                "\n");
  } else if (c.format == "csv") {
    std::ostringstream out;
    out << "case,passed,detail\n";
    for (const auto& k : report.cases) out << '"' << k.name << "\"," << k.passed << ",\"" << k.detail << "\"\n";
    emit(c, out.str());
  } else {
    std::ostringstream out;
    for (const auto& k : report.cases)
      out << (k.passed ? "PASS " : "FAIL ") << k.name << (k.detail.empty() ? "" : ": " + k.detail) << '\n';
    out << report.suite << ": " << report.cases.size() - report.failures() << "/" << report.cases.size()
        << " cases passed (seed " << c.seed << ")\n";
    emit(c, out.str());
  }
  return report.passed() ? 0 : 1;
}

int cmd_battery(const std::vector<std::int64_t>& p_list, const std::string& dir, const RunConfig& c) {
  std::filesystem::create_directories(dir);
  std::ostringstream csv;
  csv << "p,file,expected_sign2,expected_sign\n";
  for (const BatteryEntry& e : counterexample_battery(p_list)) {
    const std::string name = e.p == 1 ? "counterexample_Z.json" : "counterexample_Z" + std::to_string(e.p) + ".json";
    write_text_file(std::filesystem::path(dir) / name, form_to_json(e.form).dump(2) + "\n");
    csv << e.p << ',' << name << ',' << to_string(e.expected_sign2) << ',' << e.expected_sign << '\n';
  }
  write_text_file(std::filesystem::path(dir) / "expectations.csv", csv.str());
  std::cerr << "wrote " << p_list.size() << " forms to " << dir << " (seed " << c.seed << ")\n";
  return 0;
}

int cmd_export(const std::string& name, const RunConfig& c) {
  const CoveredComplex space{standard_complex(name), CoveringCocycle::trivial()};
  emit(c, complex_to_json(space).dump() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L2-signatures of Hermitian forms over group rings and of covered simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  app.add_option("--nodes", config.nodes, "quadrature nodes per torus axis")->check(CLI::PositiveNumber);
  app.add_option("--eps", config.eps, "eigenvalue zero threshold")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "jitter and random battery seed");
  app.add_option("--out", config.out, "output path (stdout when absent)");
  app.add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string input, second, suite, name;
  int depth = 0;
  std::vector<std::int64_t> p_list;
  std::string battery_dir = "battery";

  auto* form_sig = app.add_subcommand("form-sig", "signatures of a Hermitian form");
  form_sig->add_option("form", input, "form JSON")->required();
  auto* space_sig = app.add_subcommand("space-sig", "L2-signature of a covered complex");
  space_sig->add_option("complex", input, "complex JSON")->required();
  auto* tower = app.add_subcommand("tower", "normalized quotient signatures of a tower form");
  tower->add_option("form", input, "form JSON over a tower group")->required();
  tower->add_option("--depth", depth, "number of quotients")->required()->check(CLI::NonNegativeNumber);
  auto* product = app.add_subcommand("product", "Kunneth product of two forms or staircase product of two complexes");
  product->add_option("first", input, "form or complex JSON")->required();
  product->add_option("second", second, "form or complex JSON")->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "whitney, kunneth, sylvester, two-route or ordering")->required();
  auto* battery = app.add_subcommand("battery", "write counterexample forms and their expectations");
  battery->add_option("p", p_list, "orders p (1 for Z)")->required()->check(CLI::PositiveNumber);
  battery->add_option("--dir", battery_dir, "output directory");
  auto* exporter = app.add_subcommand("export", "write a shipped complex as JSON");
  exporter->add_option("name", name, "sphere2, sphere4, circle3, cp2_9, rp2_6, torus2 or torus4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*form_sig) return cmd_form_sig(input, config);
    if (*space_sig) return cmd_space_sig(input, config);
    if (*tower) return cmd_tower(input, depth, config);
    if (*product) return cmd_product(input, second, config);
    if (*verify) return cmd_verify(suite, config);
    if (*battery) return cmd_battery(p_list, battery_dir, config);
    if (*exporter) return cmd_export(name, config);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
