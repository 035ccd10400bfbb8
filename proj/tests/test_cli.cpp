#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "polarmac/catalog.hpp"
#include "polarmac/report.hpp"

using namespace polarmac;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(POLARMAC_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ToolRun {
  int exit_code = -1;
  std::string out;
};

/// Runs the installed CLI binary (path from POLARMAC_TOOL) if available.
ToolRun run_tool(const std::string& args) {
  const char* tool = std::getenv("POLARMAC_TOOL");
  REQUIRE(tool != nullptr);
  std::string cmd = std::string(tool) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  ToolRun r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunOptions opts(const std::string& command, int k = -1) {
  RunOptions o;
  o.command = command;
  o.cycle_k = k;
  return o;
}

}  // namespace

TEST_CASE("fixtures mirror the built-in catalog byte for byte") {
  for (const auto& name : catalog_names())
    CHECK(slurp(fixture_path(name + ".json")) == catalog_text(name));
}

TEST_CASE("problem loading and schema validation") {
  auto cusp = catalog_problem("cusp");
  CHECK(cusp.variables == std::vector<std::string>{"x", "y"});
  CHECK(cusp.strata.size() == 2);
  CHECK(cusp.strata[0].dim == 1);
  CHECK(cusp.seed == 42);
  CHECK(cusp.links.at("S0").at("S1") == 2);

  CHECK_THROWS_AS(parse_problem_text("{", "t"), InputError);
  CHECK_THROWS_AS(parse_problem_text("[]", "t"), InputError);
  CHECK_THROWS_AS(parse_problem_text(R"({"variables": ["x"]})", "t"),
                  InputError);  // no strata
  CHECK_THROWS_AS(
      parse_problem_text(
          R"({"variables": ["x"], "strata": [], "bogus": 1})", "t"),
      InputError);  // unknown key
  // alpha and eta are mutually exclusive
  CHECK_THROWS_AS(
      parse_problem_text(
          R"({"variables": ["x", "y"],
              "strata": [{"name": "S", "closure": ["y"], "dim": 1}],
              "alpha": {"S": 1}, "eta": {"S": 1}})",
          "t"),
      InputError);
  // alpha without links on a multi-stratum space
  CHECK_THROWS_AS(
      parse_problem_text(
          R"({"variables": ["x", "y"],
              "strata": [{"name": "S1", "closure": ["y^2 - x^3"], "dim": 1},
                         {"name": "S0", "closure": ["x", "y"], "dim": 0}],
              "alpha": {"S1": 1, "S0": 1}})",
          "t"),
      InputError);
  // composite modulus
  CHECK_THROWS_AS(
      parse_problem_text(
          R"({"variables": ["x"], "field": {"type": "gfp", "p": 2147483630},
              "strata": [{"name": "S", "closure": ["x"], "dim": 0}]})",
          "t"),
      InputError);
}

TEST_CASE("declared dims are verified when the command runs") {
  std::string text = R"({"variables": ["x", "y"],
    "strata": [{"name": "S", "closure": ["y^2 - x^3"], "dim": 2}]})";
  // dim 2 >= ambient 2 is rejected up front; use a 3-variable wrong-dim case
  auto bad = parse_problem_text(
      R"({"variables": ["x", "y", "z"],
          "strata": [{"name": "S", "closure": ["y^2 - x^3"], "dim": 1}]})",
      "t");
  CHECK_THROWS_AS(run_command(bad, opts("profile")), InputError);
  auto bad2 = parse_problem_text(text, "t");
  CHECK_THROWS_AS(run_command(bad2, opts("profile")), InputError);
}

TEST_CASE("chi on the cusp catalog entry") {
  auto result = run_command(catalog_problem("cusp"), opts("chi"));
  CHECK(result.exit_code == 0);
  const auto& out = result.report.at("outputs");
  CHECK(out.at("chi").get<long long>() == 1);
  CHECK(out.at("gamma_alpha").get<std::vector<long long>>() ==
        std::vector<long long>{-2, -3});
}

TEST_CASE("eu on the nodal cubic catalog entry") {
  auto result = run_command(catalog_problem("node"), opts("eu"));
  CHECK(result.report.at("outputs").at("eu").get<long long>() == 1);
  CHECK(result.report.at("outputs").at("gamma").get<std::vector<long long>>() ==
        std::vector<long long>{2, 3});
}

TEST_CASE("eulerfn on the cusp catalog entry") {
  auto result = run_command(catalog_problem("cusp"), opts("eulerfn"));
  const auto& values = result.report.at("outputs").at("values");
  REQUIRE(values.size() == 2);
  CHECK(values[0].at("stratum").get<std::string>() == "S1");
  CHECK(values[0].at("eu").get<long long>() == 1);
  CHECK(values[1].at("stratum").get<std::string>() == "S0");
  CHECK(values[1].at("eu").get<long long>() == 2);
}

TEST_CASE("cycle 0 on the cusp catalog entry") {
  auto result = run_command(catalog_problem("cusp"), opts("cycle", 0));
  const auto& out = result.report.at("outputs");
  CHECK(out.at("k").get<int>() == 0);
  REQUIRE(out.at("terms").size() == 2);
  for (const auto& t : out.at("terms")) {
    CHECK(t.at("coefficient").get<long long>() == -1);
    CHECK(t.at("gamma_k").get<long long>() == 1);
    CHECK(!t.at("polar_generators").empty());
  }
  CHECK(out.at("gamma_alpha_k").get<long long>() == -2);
}

TEST_CASE("profile includes diagnostics and seeds") {
  auto result = run_command(catalog_problem("line"), opts("profile"));
  const auto& profiles = result.report.at("outputs").at("profiles");
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].at("gamma").get<std::vector<long long>>() ==
        std::vector<long long>{0, 1});
  const auto& per_k = profiles[0].at("per_k");
  REQUIRE(per_k.size() == 2);
  CHECK(per_k[0].at("purity").get<std::string>() == "empty");
  CHECK(per_k[1].at("purity").get<std::string>() == "pure");
  CHECK(per_k[0].at("seeds").size() == 3);
  CHECK(result.report.at("validation").at("agreement").get<std::string>() ==
        "agreed");
}

TEST_CASE("reports are byte-identical across runs and parallel mode") {
  auto problem = catalog_problem("umbrella");
  auto a = run_command(problem, opts("chi"));
  auto b = run_command(problem, opts("chi"));
  CHECK(a.report.dump(2) == b.report.dump(2));
  RunOptions par = opts("chi");
  par.parallel = true;
  auto c = run_command(problem, par);
  CHECK(a.report.dump(2) == c.report.dump(2));
}

TEST_CASE("field and seed overrides change the echo, not the invariants") {
  auto problem = catalog_problem("cusp");
  RunOptions o = opts("chi");
  o.seed = 777;
  o.field = FieldSpec::prime(FieldSpec::kAlternatePrime);
  auto result = run_command(problem, o);
  CHECK(result.report.at("problem").at("seed").get<std::uint64_t>() == 777);
  CHECK(result.report.at("problem").at("field").at("p").get<std::uint64_t>() ==
        FieldSpec::kAlternatePrime);
  CHECK(result.report.at("outputs").at("chi").get<long long>() == 1);
}

TEST_CASE("rational field run matches the prime-field values") {
  RunOptions o = opts("chi");
  o.field = FieldSpec::rational();
  auto result = run_command(catalog_problem("cusp"), o);
  CHECK(result.report.at("outputs").at("chi").get<long long>() == 1);
}

TEST_CASE("check passes on every catalog fixture (in-process)") {
  for (const auto& name : catalog_names()) {
    auto result = run_command(catalog_problem(name), opts("check"));
    INFO(name);
    CHECK(result.exit_code == 0);
    CHECK(result.report.at("outputs").at("all_pass").get<bool>());
  }
}

TEST_CASE("text rendering mentions the headline numbers") {
  auto result = run_command(catalog_problem("cusp"), opts("chi"));
  std::string text = render_text(result.report);
  CHECK(text.find("chi(X, alpha) = 1") != std::string::npos);
}

TEST_CASE("cli binary: exit codes") {
  // 0: success
  CHECK(run_tool("chi " + fixture_path("cusp.json")).exit_code == 0);
  // 2: missing file
  CHECK(run_tool("chi " + fixture_path("nope.json")).exit_code == 2);
  // 2: chi without constructible data
  {
    std::string tmp = "/tmp/polarmac_no_alpha.json";
    std::ofstream out(tmp);
    out << R"({"variables": ["x", "y"],
               "strata": [{"name": "S", "closure": ["y"], "dim": 1}]})";
    out.close();
    CHECK(run_tool("chi " + tmp).exit_code == 2);
    CHECK(run_tool("profile " + tmp).exit_code == 0);
  }
  // 2: bad flag value
  CHECK(run_tool("chi --field gfp:6 " + fixture_path("cusp.json")).exit_code ==
        2);
}

TEST_CASE("cli binary: reports match the pinned golden files") {
  struct Golden {
    std::string args;
    std::string file;
  };
  const std::vector<Golden> goldens = {
      {"chi " + fixture_path("cusp.json"), "cusp_chi.json"},
      {"profile " + fixture_path("quadric.json"), "quadric_profile.json"},
      {"cycle -k 0 " + fixture_path("cusp.json"), "cusp_cycle0.json"},
  };
  for (const auto& g : goldens) {
    auto run = run_tool(g.args);
    CHECK(run.exit_code == 0);
    CHECK(run.out ==
          slurp(std::string(POLARMAC_FIXTURES_DIR) + "/../tests/golden/" +
                g.file));
  }
}

TEST_CASE("cli binary: byte-identical stdout across runs") {
  auto a = run_tool("chi " + fixture_path("cusp.json"));
  auto b = run_tool("chi " + fixture_path("cusp.json"));
  auto c = run_tool("chi --parallel " + fixture_path("cusp.json"));
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(!a.out.empty());
}
