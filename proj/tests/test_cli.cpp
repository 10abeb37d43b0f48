#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "l2sig/constructions.hpp"
#include "l2sig/json_io.hpp"

using namespace l2sig;

namespace {

const std::filesystem::path kScratch = std::filesystem::temp_directory_path() / "l2sig_cli_tests";

std::string data_path(const std::string& name) { return std::string(L2SIG_DATA_DIR) + "/" + name; }

struct Run {
  int code = -1;
  std::string out;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  std::filesystem::create_directories(kScratch);
  const auto out = kScratch / "stdout.txt";
  const std::string cmd = std::string(L2SIG_CLI) + " " + args + " > " + out.string() + " 2> " +
                          (kScratch / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

std::string write_scratch(const std::string& name, const std::string& text) {
  std::filesystem::create_directories(kScratch);
  const auto p = kScratch / name;
  std::ofstream(p) << text;
  return p.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("form-sig on the battery and the identity") {
    const Run r = run("form-sig " + data_path("battery/counterexample_Z5.json"));
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["report"]["sign2_exact"] == "4/5");
    CHECK(j["report"]["ordinary_sign"] == 0);
    CHECK(j["config"]["seed"] == 0);
    const json id = json::parse(run("form-sig " + data_path("identity3_z2.json")).out);
    CHECK(id["report"]["sign2_exact"] == "3/1");
    CHECK(id["report"]["ordinary_sign"] == 3);
    const json g = json::parse(run("form-sig " + data_path("gaussian_hyperbolic.json")).out);
    CHECK(g["report"]["sign2_exact"] == "0/1");
    CHECK(g["report"]["total_dim"] == 2.0);
  }

  TEST_CASE("exit codes") {
    CHECK(run("form-sig " + data_path("malformed.json")).code == 2);
    CHECK(run("form-sig " + kScratch.string() + "/missing.json").code == 2);
    const std::string unknown = write_scratch("unknown_group.json", R"({"group":{"type":"lie"},"matrix":[]})");
    CHECK(run("form-sig " + unknown).code == 2);
    const std::string skewed = write_scratch(
        "not_hermitian.json",
        R"({"group":{"type":"finite_cyclic","order":3},"matrix":[[[], [{"coeff":1,"g":1}]],[[{"coeff":1,"g":1}], []]]})");
    CHECK(run("form-sig " + skewed).code == 3);
    CHECK(run("space-sig " + data_path("rp2_6.json")).code == 3);
    CHECK(run("space-sig " + data_path("circle3.json")).code == 3);
    CHECK(run("verify foo").code == 2);
    CHECK(run("form-sig").code == 2);
    CHECK(run("form-sig " + data_path("identity3_z2.json") + " --format xml").code == 2);
  }

  TEST_CASE("space-sig") {
    const json cp2 = json::parse(run("space-sig " + data_path("cp2_9.json")).out);
    CHECK(cp2["report"]["sign2_exact"] == "1/1");
    CHECK(cp2["report"]["ordinary_sign"] == 1);
    const json s4 = json::parse(run("space-sig " + data_path("sphere4.json")).out);
    CHECK(s4["report"]["sign2_exact"] == "0/1");
    CHECK(s4["report"]["ordinary_sign"] == 0);
    const json t4 = json::parse(run("space-sig " + data_path("torus4_z2.json")).out);
    CHECK(t4["report"]["sign2_exact"] == "0/1");
    CHECK(t4["report"]["total_exact"] == "3/1");
  }

  TEST_CASE("tower") {
    const Run r = run("tower " + data_path("tower_counterexample.json") + " --depth 15 --nodes 512");
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == "level,index,sign2,sign2_decimal,error_bound");
    for (int k = 2; k <= 16; ++k) {
      const std::string prefix =
          std::to_string(k - 1) + "," + std::to_string(k) + "," + std::to_string(k - 1) + "/" + std::to_string(k) + ",";
      CHECK(rows[k - 1].rfind(prefix, 0) == 0);
    }
    CHECK(rows[16].rfind("quadrature,,,1,", 0) == 0);
    const auto empty = lines(run("tower " + data_path("tower_counterexample.json") + " --depth 0").out);
    CHECK(empty == std::vector<std::string>{"level,index,sign2,sign2_decimal,error_bound"});
    const auto ones = lines(run("tower " + data_path("tower_identity.json") + " --depth 7 --nodes 64").out);
    REQUIRE(ones.size() == 9);
    for (int k = 1; k <= 7; ++k) CHECK(ones[k].find(",1/1,") != std::string::npos);
    CHECK(run("tower " + data_path("tower_counterexample.json") + " --depth 16").code == 3);
  }

  TEST_CASE("reports are deterministic") {
    for (const std::string args : {"form-sig " + data_path("battery/counterexample_Z.json") + " --seed 5",
                                   "space-sig " + data_path("cp2_9.json"),
                                   "tower " + data_path("tower_counterexample.json") + " --depth 4 --format json"}) {
      const Run a = run(args);
      const Run b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
    const json seeded = json::parse(run("form-sig " + data_path("battery/counterexample_Z.json") + " --seed 5").out);
    CHECK(seeded["config"]["seed"] == 5);
    CHECK(seeded["report"]["quadrature"]["jitter_seed"] == 5);
  }

  TEST_CASE("product") {
    const Run forms = run("product " + data_path("battery/counterexample_Z2.json") + " " +
                          data_path("battery/counterexample_Z3.json"));
    CHECK(forms.code == 0);
    const json j = json::parse(forms.out);
    CHECK(j["product"]["sign2_exact"] == "1/3");
    CHECK(j["multiplicative"] == true);
    const Run spaces = run("product " + data_path("circle3.json") + " " + data_path("circle3.json"));
    CHECK(spaces.code == 0);
    const CoveredComplex t2 = parse_complex(json::parse(spaces.out));
    CHECK(t2.complex.top_simplices() == standard_complex("torus2").top_simplices());
    CHECK(run("product " + data_path("circle3.json") + " " + data_path("identity3_z2.json")).code == 2);
  }

  TEST_CASE("verify, battery and export") {
    const Run v = run("verify kunneth");
    CHECK(v.code == 0);
    CHECK(v.out.find("PASS kunneth Z/2 x Z/3 counterexamples") != std::string::npos);
    const json vj = json::parse(run("verify two-route --format json").out);
    CHECK(vj["passed"] == true);
    const auto dir = kScratch / "battery";
    CHECK(run("battery 1 2 5 --dir " + dir.string()).code == 0);
    CHECK(slurp(dir / "expectations.csv") ==
          "p,file,expected_sign2,expected_sign\n1,counterexample_Z.json,1/1,0\n2,counterexample_Z2.json,1/2,0\n"
          "5,counterexample_Z5.json,4/5,0\n");
    CHECK(slurp(dir / "counterexample_Z5.json") == slurp(data_path("battery/counterexample_Z5.json")));
    CHECK(run("export cp2_9").out == slurp(data_path("cp2_9.json")));
    CHECK(run("export nothing").code == 3);
  }

  TEST_CASE("json round trips") {
    const auto f = counterexample_form(GroupModel::cyclic(4));
    const AnyForm back = parse_form(form_to_json(f));
    REQUIRE(back.index() == 0);
    CHECK(std::get<0>(back) == f);
    const json doc = read_json_file(data_path("torus4_z2.json"));
    CHECK(complex_to_json(parse_complex(doc)) == doc);
    CHECK(parse_coefficient(json::parse(R"([[1,2],[-3,4]])")) == GaussianRational{Rational(1, 2), Rational(-3, 4)});
    CHECK(parse_coefficient(json::parse(R"("5/6")")) == GaussianRational(Rational(5, 6)));
    CHECK(format_double(0.1) == "0.1");
  }
}
