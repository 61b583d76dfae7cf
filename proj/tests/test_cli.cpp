#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "yukawa/cli.hpp"
#include "yukawa/serialize.hpp"
#include "yukawa/tridiagonal.hpp"

using namespace yukawa;
using namespace yukawa::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "yukawa_ab");
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("defaults mirror the table parameters") {
    const auto c = parse_args({"yukawa_ab", "energy", "--n", "0", "--m", "0"});
    CHECK(c.command == Command::Energy);
    CHECK(c.physical == PhysicalParams{});
    CHECK(c.fields == FieldConfig{});
    REQUIRE(c.states.size() == 1);
    CHECK(c.states[0] == QuantumNumbers(0, 0));
    CHECK(c.format == OutputFormat::Csv);
  }

  TEST_CASE("field scenario request") {
    const auto c = parse_args({"yukawa_ab", "energy", "--omega-c", "5", "--xi", "5", "--n", "3", "--m", "1"});
    CHECK(c.fields == FieldConfig(5, 5));
    CHECK(c.states[0] == QuantumNumbers(3, 1));
    const auto r = invoke({"energy", "--omega-c", "5", "--xi", "5", "--n", "3", "--m", "1"});
    CHECK(r.code == kExitSuccess);
    CHECK(r.out == "m,n,omega_c,xi,energy,is_bound\n1,3,5,5,-0.0005830,true\n");
  }

  TEST_CASE("global flags after the subcommand") {
    const auto c = parse_args({"yukawa_ab", "energy", "--delta", "0.01", "--format", "json"});
    CHECK(c.physical.delta() == 0.01);
    CHECK(c.format == OutputFormat::Json);
  }

  TEST_CASE("invariant violations are usage errors") {
    CHECK_THROWS_WITH_AS(parse_args({"yukawa_ab", "energy", "--delta", "-1"}), "delta must be > 0", UsageError);
    auto r = invoke({"energy", "--delta", "-1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("delta must be > 0") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(invoke({"energy", "--n", "-2"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"bogus"}).code == kExitUsage);
    CHECK(invoke({"energy", "--omega-c", "1", "--b-field", "1"}).code == kExitUsage);
    CHECK(invoke({"energy", "--xi", "0.5", "--strict-integer-xi"}).code == kExitUsage);
    CHECK(invoke({"energy", "--format", "xml"}).code == kExitUsage);
    CHECK(invoke({"sweep", "--axis", "beta", "--values", "1"}).code == kExitUsage);
    CHECK(invoke({"verify", "--points", "10"}).code == kExitUsage);
    CHECK(invoke({"wavefunction", "--r-min", "5", "--r-max", "1"}).code == kExitUsage);
  }

  TEST_CASE("help exits cleanly") {
    const auto r = invoke({"--help"});
    CHECK(r.code == kExitSuccess);
    CHECK(r.out.find("table1") != std::string::npos);
  }

  TEST_CASE("b-field converts at parse time") {
    const auto c = parse_args({"yukawa_ab", "--mu", "2", "--b-field", "4", "energy"});
    CHECK(c.fields.omega_c() == doctest::Approx(2.0));
  }

  TEST_CASE("non-integer xi warns") {
    const auto r = invoke({"energy", "--xi", "0.5"});
    CHECK(r.code == kExitSuccess);
    CHECK(r.err.find("warning") != std::string::npos);
  }

  TEST_CASE("table1 output") {
    const auto r = invoke({"table1"});
    CHECK(r.code == kExitSuccess);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 49);
    CHECK(rows[0] == "m,n,scenario,computed,published,status");
    int match = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) match += rows[i].ends_with(",MATCH");
    CHECK(match == 47);
    CHECK(r.out.find("-1,1,wc5_xi0,0.0000092,0.0000009,MISMATCH-DOCUMENTED") != std::string::npos);
    CHECK(rows[1] == "0,0,wc0_xi0,-8.0000031,-8.0000031,MATCH");
  }

  TEST_CASE("table1 with other parameters fails") {
    CHECK(invoke({"table1", "--v1", "2.5"}).code == kExitFailure);
  }

  TEST_CASE("wavefunction output has one node for n = 1") {
    const auto r = invoke({"wavefunction", "--n", "1", "--m", "0", "--r-max", "2000", "--points", "500"});
    CHECK(r.code == kExitSuccess);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 501);
    CHECK(rows[0] == "r,R");
    std::vector<double> values;
    for (std::size_t i = 1; i < rows.size(); ++i) values.push_back(std::strtod(rows[i].c_str() + rows[i].find(',') + 1, nullptr));
    CHECK(tridiag::count_sign_changes(values) == 1);
    CHECK(rows.back().starts_with("2000,"));
  }

  TEST_CASE("wavefunction uniform spacing") {
    const auto r = invoke({"wavefunction", "--n", "2", "--points", "300", "--spacing", "uniform", "--format", "json"});
    CHECK(r.code == kExitSuccess);
    const auto j = json::parse(r.out);
    CHECK(j["nodes"] == 2);
    CHECK(j["r"].size() == 300);
  }

  TEST_CASE("wavefunction of a non-normalizable state is a command error") {
    const auto r = invoke({"wavefunction", "--omega-c", "5", "--n", "0", "--m", "0"});
    CHECK(r.code == kExitFailure);
    CHECK(r.out.starts_with("error,message\ndomain_error,"));
    const auto j = invoke({"wavefunction", "--omega-c", "5", "--format", "json"});
    CHECK(json::parse(j.out)["error"]["kind"] == "domain_error");
  }

  TEST_CASE("verify JSON report") {
    const auto r = invoke({"verify", "--n", "0", "--m", "0", "--format", "json"});
    CHECK(r.code == kExitSuccess);
    const auto j = json::parse(r.out);
    for (const char* key : {"closed_form", "oracle_approx", "oracle_exact", "gaps"}) CHECK(j.contains(key));
    CHECK(j["passed"] == true);
  }

  TEST_CASE("verify CSV report") {
    const auto r = invoke({"verify", "--n", "1", "--m", "1"});
    CHECK(r.code == kExitSuccess);
    const auto rows = lines(r.out);
    CHECK(rows[0] == "quantity,value");
    CHECK(rows.back() == "passed,true");
  }

  TEST_CASE("verify failure exits 1") {
    const auto r = invoke({"verify", "--n", "0", "--m", "0", "--tolerance", "1e-14", "--points", "200"});
    CHECK(r.code == kExitFailure);
  }

  TEST_CASE("JSON round trip of the verification report") {
    VerifyOptions opts;
    opts.coarse_points = 1000;
    const auto report = verify_closed_form(PhysicalParams{}, {}, 1, 0, opts);
    const json j = report;
    CHECK(json::parse(j.dump()).get<VerificationReport>() == report);

    auto no_cutoff = verify_closed_form(PhysicalParams{}, {}, 0, 1, opts);
    CHECK_FALSE(no_cutoff.cutoff.has_value());
    CHECK(json::parse(json(no_cutoff).dump()).get<VerificationReport>() == no_cutoff);
  }

  TEST_CASE("JSON round trip of table cells and energy rows") {
    const auto report = reproduce_table1();
    const json j = report.cells;
    CHECK(json::parse(j.dump()).get<std::vector<Table1Cell>>() == report.cells);

    const auto row = make_energy_row(solve(PhysicalParams{}, FieldConfig(0, 5), 2, -1), FieldConfig(0, 5));
    CHECK(json::parse(json(row).dump()).get<EnergyRow>() == row);
    CHECK_THROWS(parse_cell_status("MAYBE"));
  }

  TEST_CASE("identical invocations are byte-identical") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"table1", "--format", "json"}, {"spectrum", "--xi", "5"},
          {"sweep", "--axis", "omega_c", "--values", "0,1,5"}, {"degeneracy"}, {"potential", "--m", "1"}}) {
      const auto a = invoke(args);
      const auto b = invoke(args);
      CHECK(a.code == kExitSuccess);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("spectrum, sweep, degeneracy and potential schemas") {
    CHECK(lines(invoke({"spectrum"}).out).size() == 13);
    const auto sweep = lines(invoke({"sweep", "--axis", "delta", "--values", "0.001,0.005", "--n-max", "0", "--m-values", "0"}).out);
    REQUIRE(sweep.size() == 3);
    CHECK(sweep[0] == "axis,value,m,n,energy,flag");
    CHECK(sweep[1] == "delta,0.001,0,0,-8.0000001,ok");
    const auto degeneracy = lines(invoke({"degeneracy", "--n-max", "0", "--m-values", "-1,1"}).out);
    REQUIRE(degeneracy.size() == 3);
    CHECK(degeneracy[0] == "group,energy,n,m,max_gap");
    CHECK(degeneracy[1] == "0,-0.8822253,0,-1,0");
    CHECK(degeneracy[2] == "0,-0.8822253,0,1,0");
    const auto potential = lines(invoke({"potential", "--points", "10"}).out);
    CHECK(potential.size() == 11);
    CHECK(potential[0] == "r,v_eff,v_approx");
  }

  TEST_CASE("output goes to the named file only") {
    const auto path = std::filesystem::temp_directory_path() / "yukawa_cli_test_output.csv";
    std::filesystem::remove(path);
    const auto r = invoke({"energy", "--output", path.string()});
    CHECK(r.code == kExitSuccess);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "m,n,omega_c,xi,energy,is_bound\n0,0,0,0,-8.0000031,true\n");
    std::filesystem::remove(path);
  }
}
