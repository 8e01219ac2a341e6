#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef CMC_CLI_PATH
#error "CMC_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  std::string out_path = "cli_stdout.tmp";
  std::string err_path = "cli_stderr.tmp";
  std::string cmd = std::string(CMC_CLI_PATH) + " " + args + " > " + out_path +
                    " 2> " + err_path;
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

// Parse CSV with a single header row into columns of doubles.
std::vector<std::vector<double>> columns(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> cols;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    std::size_t i = 0;
    while (std::getline(row, cell, ',')) {
      if (cols.size() <= i) cols.emplace_back();
      cols[i].push_back(std::strtod(cell.c_str(), nullptr));
      ++i;
    }
  }
  return cols;
}

}  // namespace

TEST_CASE("profile table matches the m=2 closed form") {
  RunResult r =
      run("profile --m 2 --c 1 --signature riemannian --r-max 3 --steps 4");
  CHECK(r.exit_code == 0);
  auto cols = columns(r.out);
  REQUIRE(cols.size() == 7);
  REQUIRE(cols[0].size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    double rr = cols[0][i];
    CHECK(cols[4][i] ==
          doctest::Approx(2.0 * std::cosh(0.5 * rr) - 2.0).epsilon(1e-12));
    CHECK(std::fabs(cols[6][i]) < 1e-12);  // ode residual column
  }
  // Origin row carries the limits.
  CHECK(cols[5][0] == doctest::Approx(0.5));
}

TEST_CASE("zero constant zeroes w and phi") {
  RunResult r = run("profile --m 3 --c 0 --r-max 2 --steps 3");
  CHECK(r.exit_code == 0);
  auto cols = columns(r.out);
  for (double v : cols[3]) CHECK(v == 0.0);
  for (double v : cols[4]) CHECK(v == 0.0);
}

TEST_CASE("csv output is byte stable") {
  std::string args = "profile --m 5 --c 3.5 --r-max 4 --steps 20";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("inadmissible riemannian constant exits 2 with the range") {
  RunResult r = run("profile --m 2 --c 3 --signature riemannian");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("[1-m, m-1]") != std::string::npos);
}

TEST_CASE("unknown flags and subcommands exit 2") {
  CHECK(run("profile --nonsense 1").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("profile --m 2 --c 1 --format xml").exit_code == 2);
  CHECK(run("verify --suite bogus").exit_code == 2);
  CHECK(run("curvature --family bogus").exit_code == 2);
}

TEST_CASE("slice curvature column is identically zero") {
  RunResult r = run("curvature --family slice --m 3 --r-max 2 --steps 6");
  CHECK(r.exit_code == 0);
  auto cols = columns(r.out);
  for (double v : cols[4]) CHECK(v == 0.0);
}

TEST_CASE("exp demo row at the origin") {
  RunResult r = run("curvature --family exp-demo --r-max 2 --steps 5");
  CHECK(r.exit_code == 0);
  auto cols = columns(r.out);
  REQUIRE(cols[0].size() == 5);
  CHECK(cols[0][2] == 0.0);
  CHECK(cols[4][2] == doctest::Approx(0.3535534).epsilon(1e-6));
}

TEST_CASE("radial lorentzian family prints its deviation") {
  RunResult r = run(
      "curvature --family radial --m 3 --c 2 --signature lorentzian "
      "--r-max 3 --steps 10");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("max_deviation_from_c") != std::string::npos);
  auto cols = columns(r.out);
  for (double v : cols[4]) CHECK(v == doctest::Approx(2.0).epsilon(1e-5));
  for (double v : cols[3]) CHECK(v < 1.0);  // spacelike
}

TEST_CASE("forcing the lorentzian signature on exp demo exits 3") {
  RunResult r =
      run("curvature --family exp-demo --signature lorentzian --r-max 2 "
          "--steps 5");
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify subcommand exit codes") {
  CHECK(run("verify --suite ode").exit_code == 0);
  CHECK(run("verify --suite isoperimetric --tol 1e-20").exit_code == 1);
}

TEST_CASE("verify emits one report row per check") {
  RunResult r = run("verify --suite ode --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"name\"") != std::string::npos);
  CHECK(r.out.find("ode_residual_analytic") != std::string::npos);
  CHECK(r.out.find("\"tolerance\"") != std::string::npos);
}

TEST_CASE("isoperimetric slack column is positive") {
  RunResult r = run("isoperimetric --m 2 --c 1 --r-max 10 --steps 8");
  CHECK(r.exit_code == 0);
  auto cols = columns(r.out);
  for (double v : cols[4]) CHECK(v > 0.0);
}

TEST_CASE("foliation leaf samples") {
  RunResult r = run("foliation --mode vary-d --m 2 --c 0.5 --r-max 2 --grid 4");
  CHECK(r.exit_code == 0);
  auto cols = columns(r.out);
  REQUIRE(cols.size() == 4);
  // Separation between consecutive d-leaves at fixed x is constant.
  CHECK(cols[3][1] - cols[3][0] == doctest::Approx(0.5));

  RunResult rc =
      run("foliation --mode vary-c --m 2 --signature riemannian --r-max 2 "
          "--grid 4");
  CHECK(rc.exit_code == 0);
  auto ccols = columns(rc.out);
  // f strictly increasing in c at fixed x: compare first two c-leaves at
  // the same sample radius.
  for (std::size_t i = 0; i + 1 < ccols[0].size(); ++i) {
    if (ccols[2][i] == ccols[2][i + 1] && ccols[0][i] < ccols[0][i + 1]) {
      CHECK(ccols[3][i] < ccols[3][i + 1]);
    }
  }
}

TEST_CASE("output path flag writes the same bytes") {
  std::string path = "cli_out_file.tmp";
  RunResult direct = run("profile --m 2 --c 1 --r-max 1 --steps 2");
  RunResult filed =
      run("profile --m 2 --c 1 --r-max 1 --steps 2 --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}
