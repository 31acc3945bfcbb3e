#include <doctest.h>
#include <json.hpp>

#include "rzr/cli.hpp"

using namespace rzr;
using namespace rzr::cli;

TEST_SUITE("cli") {
  TEST_CASE("basis in zeta style") {
    RunConfig c;
    c.m = 1;
    c.style = RelationStyle::ZetaFibonacci;
    const RunResult r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.document.find("−2ζ_F(2) + ζ_F*(2) + 5ζ_L*(2) = 0") != std::string::npos);
  }

  TEST_CASE("basis JSON") {
    RunConfig c;
    c.m = 4;
    c.format = OutputFormat::Json;
    const RunResult r = run(c);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.document);
    CHECK(j["dim"] == 4);
    CHECK(j["m"] == 4);
    CHECK(j["zero_pattern_ok"] == true);
    CHECK(j["vectors"].size() == 4);
    CHECK(j["vectors"][0].size() == 16);
    CHECK(j["vectors"][0][0].is_string());
    CHECK(run(c).document == r.document);
  }

  TEST_CASE("matrix dump") {
    RunConfig c;
    c.command = Command::Matrix;
    c.subcommand = "dump";
    c.m = 3;
    c.format = OutputFormat::Json;
    c.scalar = true;
    const RunResult r = run(c);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.document);
    CHECK(j["blocks"][0][4] == "-11/1440");
    CHECK(j["blocks"][5][8]["k2_coeffs"].size() == 4);
    CHECK(j["scalar"]["rows"].size() == j["scalar"]["labels"].size());
  }

  TEST_CASE("tables") {
    RunConfig c;
    c.command = Command::Series;
    c.m = 2;
    c.format = OutputFormat::Json;
    auto j = nlohmann::json::parse(run(c).document);
    CHECK(j["c"][0] == nlohmann::json::array({"1/15", "-1/15", "1/15"}));
    CHECK(j["a"][2] == "2/189");
    c.command = Command::Aux;
    j = nlohmann::json::parse(run(c).document);
    CHECK(j["aux"][0]["xi_kernel"] == nlohmann::json::array({"-7", "8", "1", "0"}));
  }

  TEST_CASE("verify and checks") {
    RunConfig c;
    c.command = Command::Verify;
    c.m = 3;
    c.precision = 60;
    CHECK(run(c).exit_code == 0);
    c.command = Command::Check;
    c.subcommand = "fib8";
    CHECK(run(c).exit_code == 0);
    c.subcommand = "closedforms";
    c.m = 2;
    CHECK(run(c).exit_code == 0);
    c.subcommand = "nonsense";
    CHECK(run(c).exit_code == 2);
  }

  TEST_CASE("usage errors") {
    RunConfig c;
    c.m = 0;
    CHECK(run(c).exit_code == 2);
    c.m = 1;
    c.precision = 3;
    c.command = Command::Verify;
    CHECK(run(c).exit_code == 2);
    c.precision = 60;
    c.sequence = "nope";
    CHECK(run(c).exit_code == 2);

    const char* argv[] = {"rzr", "basis", "-m", "x"};
    CHECK(main_entry(4, const_cast<char**>(argv)) == 2);
    const char* argv2[] = {"rzr", "frobnicate"};
    CHECK(main_entry(2, const_cast<char**>(argv2)) == 2);
  }
}
