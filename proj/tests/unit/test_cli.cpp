#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "primemodes/cli.hpp"
#include "primemodes/table.hpp"

using namespace primemodes;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "primemodes");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("table emitters") {
    Table t;
    t.columns = {"n", "x", "name"};
    t.add_row({std::int64_t{4}, 0.1, std::string("a\"b")});
    CHECK(emit(t, Format::Csv) == "n,x,name\n4,0.10000000000000001,\"a\"\"b\"\n");
    const auto j = json::parse(emit(t, Format::Json));
    REQUIRE(j.is_array());
    CHECK(j[0]["n"] == 4);
    CHECK(j[0]["x"].get<double>() == 0.1);
    CHECK(j[0]["name"] == "a\"b");
    const auto pretty = emit(t, Format::Pretty);
    CHECK(pretty.find("name") != std::string::npos);
    CHECK(std::stod(format_double(0.1)) == 0.1);
    CHECK_THROWS(parse_format("xml"));
  }

  TEST_CASE("goldbach subcommand") {
    const auto r = run_cli({"--format", "json", "goldbach", "--n", "10"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j[0]["ordered"] == 3);
    CHECK(j[0]["unordered"] == 2);
    const auto range = json::parse(run_cli({"--format", "json", "goldbach", "--n", "4", "--to", "20"}).out);
    CHECK(range.size() == 9);
  }

  TEST_CASE("casimir and mertens subcommands") {
    const auto c = run_cli({"--format", "json", "casimir", "--modes", "all"});
    REQUIRE(c.code == 0);
    const double ren = json::parse(c.out)[0]["renormalized"];
    CHECK(ren == doctest::Approx(-1 / (24 * 3.14159265358979323846)).epsilon(1e-5));
    const auto m = run_cli({"--format", "json", "mertens"});
    REQUIRE(m.code == 0);
    CHECK(json::parse(m.out)[0]["B1"].get<double>() == doctest::Approx(0.2614972128476428).epsilon(1e-14));
  }

  TEST_CASE("exit codes") {
    CHECK(run_cli({"goldbach", "--n", "10", "--bogus"}).code == 2);
    CHECK(run_cli({}).code == 2);
    const auto odd = run_cli({"goldbach", "--n", "11"});
    CHECK(odd.code == 2);
    CHECK(!odd.err.empty());
    const auto cap = run_cli({"abel", "--a", "1e-6", "--max-cutoff", "1000"});
    CHECK(cap.code == 1);
    CHECK(cap.err.find("capacity") != std::string::npos);
    CHECK(run_cli({"-o", "/nonexistent-dir/x.csv", "mertens"}).code == 1);
    CHECK(run_cli({"casimir", "--modes", "primes"}).code == 2);
  }

  TEST_CASE("help describes the formulas") {
    const auto h = run_cli({"abel", "--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("e^{-a p}") != std::string::npos);
  }

  TEST_CASE("output is deterministic and honours --output") {
    const std::vector<std::string> args{"abel", "--a", "0.01,0.1", "--kind", "g"};
    const auto a = run_cli(args), b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const auto path = std::filesystem::temp_directory_path() / "primemodes_cli_test.csv";
    auto with_out = args;
    with_out.insert(with_out.begin(), {"-o", path.string()});
    REQUIRE(run_cli(with_out).code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == a.out);
    std::filesystem::remove(path);
  }

  TEST_CASE("config file supplies defaults; flags win") {
    const auto path = std::filesystem::temp_directory_path() / "primemodes_cli_test.cfg";
    {
      std::ofstream f(path);
      f << "# defaults\nformat = json\nthreads=1\n";
    }
    const auto r = run_cli({"--config", path.string(), "mertens", "--k-max", "2"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)[0]["k_max"] == 2);
    const auto csv = run_cli({"--config", path.string(), "--format", "csv", "mertens"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("k_max,B1", 0) == 0);
    std::filesystem::remove(path);
    CHECK(run_cli({"--config", "/nonexistent/cfg", "mertens"}).code == 1);
  }

  TEST_CASE("residuals report") {
    const auto r = run_cli({"--format", "json", "residuals", "--kind", "f", "--a", "1e-2,1e-3"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j.size() == 2);
    for (const char* key : {"a", "exact", "approx", "residual", "normalized_residual"}) {
      CHECK(j[0].contains(key));
    }
    CHECK(r.err.find("exponent") != std::string::npos);
  }
}
