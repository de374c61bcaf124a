// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the pqml binary (path injected by the build).
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#ifndef PQML_CLI_PATH
#error "PQML_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PQML_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("eval prints the exponential reduction") {
  auto r = run_cli("eval --alpha 1 --beta 1 --gamma 1 --c 2 --p 0 --q 0 --z 1");
  CHECK(r.exit_code == 0);
  double v = std::strtod(r.out.c_str(), nullptr);
  CHECK(std::fabs(v - 2.718281828459045) <= 1e-13);
}

TEST_CASE("beta prints the classical value at default precision") {
  auto r = run_cli("beta --x 2 --y 2 --p 0 --q 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0.166666666666667\n");
}

TEST_CASE("printed values round-trip at full precision") {
  auto r = run_cli("eval --alpha 0.8 --beta 1.1 --gamma 1.2 --c 2.5 --p 0.3 --q 0.7 "
                   "--z 0.9 --precision 17");
  REQUIRE(r.exit_code == 0);
  std::string printed = lines_of(r.out).at(0);
  double v = std::strtod(printed.c_str(), nullptr);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  CHECK(std::string(buf) == printed);
}

TEST_CASE("table emits the documented CSV contract") {
  auto r = run_cli("table --alpha 0.8 --beta 1 --gamma 1.2 --c 2.5 --p 0.3 --q 0.6 "
                   "--z-from -1 --z-to 1 --steps 41");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find('\r') == std::string::npos);  // LF line endings only
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 42);  // header + 41 rows
  CHECK(lines[0] == "z,value,abs_err_est,terms");
  for (size_t i = 1; i < lines.size(); ++i) {
    int commas = 0;
    for (char ch : lines[i]) commas += ch == ',';
    CHECK(commas == 3);
    CHECK(lines[i].find('.') != std::string::npos);  // '.' decimal point
  }
  // endpoints of the sweep
  CHECK(lines[1].substr(0, 3) == "-1,");
  CHECK(lines[41].substr(0, 2) == "1,");
}

TEST_CASE("csv output mode carries the error estimate") {
  auto r = run_cli("beta --x 1.2 --y 2.5 --p 0.7 --q 0.7 --output csv");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "value,abs_err_est,effort,status");
  CHECK(lines[1].find("converged") != std::string::npos);
}

TEST_CASE("structured output is a JSON object") {
  auto r = run_cli("eval --alpha 1 --beta 1 --gamma 1.2 --c 2.5 --z 0.5 "
                   "--output structured");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("{\"value\": ") == 0);
  CHECK(r.out.find("\"status\": \"converged\"") != std::string::npos);
}

TEST_CASE("argument errors exit with status 2") {
  CHECK(run_cli("eval --alpha 1").exit_code == 2);       // missing required flags
  CHECK(run_cli("nonsense").exit_code == 2);             // unknown subcommand
  CHECK(run_cli("").exit_code == 2);                     // subcommand required
  CHECK(run_cli("beta --x 0 --y 1").exit_code == 2);     // domain violation
  CHECK(run_cli("verify --config missing.json").exit_code == 2);
  CHECK(run_cli("wright --upper 1 --lower 1,1 --z 0").exit_code == 2);  // bad pair
}

TEST_CASE("verify subcommand writes a report and reflects the outcome") {
  const char* report = "pqml_cli_test_report.json";
  auto ok = run_cli(std::string("verify --identity thm-3.4 --report ") + report);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("thm-3.4") != std::string::npos);
  CHECK(ok.out.find("PASS") != std::string::npos);
  std::ifstream is(report);
  REQUIRE(is.good());
  std::string body((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  CHECK(body.find("\"identity_id\": \"thm-3.4\"") != std::string::npos);
  std::remove(report);

  // An unreachable tolerance must flip the exit status to 1.
  const char* cfg_path = "pqml_cli_test_cfg.json";
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"identities": ["thm-3.4"], "tolerances": {"thm-3.4": 1e-30}})";
  }
  auto fail = run_cli(std::string("verify --config ") + cfg_path + " --report " + report);
  CHECK(fail.exit_code == 1);
  std::remove(cfg_path);
  std::remove(report);
}

TEST_CASE("PQML_REL_TOL relaxes the default tolerance") {
  auto strict = run_cli("eval --alpha 0.8 --beta 1.1 --gamma 1.2 --c 2.5 --p 0.4 "
                        "--q 0.2 --z 0.9 --output csv");
  std::string relaxed_cmd = std::string("PQML_REL_TOL=1e-4 ") + PQML_CLI_PATH +
                            " eval --alpha 0.8 --beta 1.1 --gamma 1.2 --c 2.5 "
                            "--p 0.4 --q 0.2 --z 0.9 --output csv 2>/dev/null";
  FILE* pipe = popen(relaxed_cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);

  auto effort_of = [](const std::string& csv) {
    auto ls = lines_of(csv);
    REQUIRE(ls.size() == 2);
    std::size_t second_comma = ls[1].find(',', ls[1].find(',') + 1);
    return std::strtol(ls[1].c_str() + second_comma + 1, nullptr, 10);
  };
  CHECK(effort_of(out) < effort_of(strict.out));
}
