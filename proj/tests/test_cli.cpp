#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("DF_SPECTRA_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("energy text output") {
  const auto r = run("energy --molecule CO --potential df --n 0 --l 0 --dim 3 --delta 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0.14236930\n");
}

TEST_CASE("energy shifted variant") {
  const auto r = run("energy --molecule CO --potential sdf --n 0 --l 0 --dim 3 --delta 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-10.70270434\n");
}

TEST_CASE("exit codes") {
  CHECK(run("energy --molecule Kr2 --delta 1").exit_code == 2);
  CHECK(run("energy --molecule CO --delta 0").exit_code == 64);
  CHECK(run("energy --molecule CO --delta 1.5").exit_code == 64);
  CHECK(run("energy --molecule H2 --n 80 --delta 1").exit_code == 3);
  CHECK(run("nosuchcommand").exit_code == 64);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("json carries diagnostics and round-trips the csv fields") {
  const auto j = run("energy --molecule CO --n 1 --l 1 --delta 0.8 --format json");
  REQUIRE(j.exit_code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["e_ev"].is_number());
  CHECK(parsed["epsilon"].is_number());
  CHECK(parsed["sqrt_s"].is_number());
  CHECK(parsed["root"].is_number());

  const auto c = run("energy --molecule CO --n 1 --l 1 --delta 0.8 --format csv");
  REQUIRE(c.exit_code == 0);
  const auto header_end = c.out.find('\n');
  const auto line = c.out.substr(header_end + 1);
  // csv columns: molecule,variant,n,l,dim,delta,gamma,e_ev,epsilon,sqrt_s,root
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == '\n') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  REQUIRE(fields.size() == 11);
  CHECK(std::stod(fields[7]) == parsed["e_ev"].get<double>());
  CHECK(std::stod(fields[8]) == parsed["epsilon"].get<double>());
  CHECK(std::stod(fields[9]) == parsed["sqrt_s"].get<double>());
  CHECK(std::stod(fields[10]) == parsed["root"].get<double>());
}

TEST_CASE("table emits the published 40-row shape deterministically") {
  const std::string args =
      "table --molecule CO --potential df --n-max 3 --l-max 3 --dim 3 "
      "--delta 0.2 --delta 0.5 --delta 0.8 --delta 1";
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  int lines = 0;
  for (char ch : a.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 41);  // header + 40 data rows
  CHECK(a.out.find("CO,df,0,0,3,0.2,") != std::string::npos);
}

TEST_CASE("table rejects an empty delta list") {
  CHECK(run("table --molecule CO").exit_code == 64);
}

TEST_CASE("verify passes on the embedded tables") {
  const auto r = run("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify: PASS") != std::string::npos);
  // fractional columns also hold at gamma=1 under --strict
  const auto s = run("verify --strict --include-fractional");
  CHECK(s.exit_code == 0);
  const auto one = run("verify --tables dfp_co");
  CHECK(one.exit_code == 0);
  CHECK(run("verify --tables nonsense").exit_code == 2);
}

TEST_CASE("calibrate reports gamma near one") {
  const auto r = run(
      "calibrate --table dfp_co --delta 0.5 --gamma-min 0.9 --gamma-max 1.1 "
      "--step 0.01 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto line = r.out.substr(r.out.find('\n') + 1);
  CHECK(line.find("dfp_co,0.5,10,") == 0);
  CHECK(line.find(",1\n") != std::string::npos);  // gamma=1 within 2x
  CHECK(run("calibrate --table dfp_co --delta 0.31").exit_code == 2);
}

TEST_CASE("wavefunction csv shows n sign changes in phi") {
  const auto r = run(
      "wavefunction --molecule CO --n 2 --l 0 --delta 1 --r-min 0.6 "
      "--r-max 4.0 --samples 800");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("r_angstrom,phi,F,rho", 0) == 0);
  int sign_changes = 0;
  double prev = 0.0;
  size_t pos = r.out.find('\n') + 1;
  while (pos < r.out.size()) {
    const size_t eol = r.out.find('\n', pos);
    const std::string line = r.out.substr(pos, eol - pos);
    const size_t c1 = line.find(',');
    const size_t c2 = line.find(',', c1 + 1);
    const double phi = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    if (phi != 0.0) {
      if (prev != 0.0 && (phi > 0) != (prev > 0)) ++sign_changes;
      prev = phi;
    }
    pos = eol + 1;
  }
  CHECK(sign_changes == 2);
}

TEST_CASE("wavefunction marks fractional output experimental") {
  const auto r = run("wavefunction --molecule CO --n 1 --l 0 --delta 0.5 --samples 5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("# experimental", 0) == 0);
}

TEST_CASE("potential emits the minimum row at r_e") {
  const auto r = run(
      "potential --molecule CO --potential df --r-min 1.1282 --r-max 1.1282 "
      "--samples 1");
  REQUIRE(r.exit_code == 0);
  const auto line = r.out.substr(r.out.find('\n') + 1);
  CHECK(line.rfind("CO,df,1.1282,", 0) == 0);
  const double v = std::stod(line.substr(line.rfind(',') + 1));
  CHECK(std::fabs(v) < 1e-10);
}

TEST_CASE("oracle reports small deltas for CO") {
  const auto r = run(
      "oracle --molecule CO --l 0 --n-min 0 --n-max 3 --grid-points 20000");
  REQUIRE(r.exit_code == 0);
  size_t pos = r.out.find('\n') + 1;
  int rows = 0;
  while (pos < r.out.size()) {
    const size_t eol = r.out.find('\n', pos);
    const std::string line = r.out.substr(pos, eol - pos);
    std::vector<std::string> f;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        f.push_back(cur);
        cur.clear();
      } else
        cur += ch;
    }
    f.push_back(cur);
    REQUIRE(f.size() == 8);
    CHECK(std::fabs(std::stod(f[6])) <= 1e-4);
    ++rows;
    pos = eol + 1;
  }
  CHECK(rows == 4);
}

TEST_CASE("molecules lists ten builtins in loadable form") {
  const auto r = run("molecules");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("name,re_angstrom", 0) == 0);
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 11);
  CHECK(r.out.find("ScH,") != std::string::npos);
}

TEST_CASE("extra parameter sets load from a molecule file") {
  const std::string params = std::string(DFS_DATA_DIR) + "/reference_params.csv";
  const auto r = run("energy --molecule I2.tbl --molecules-file " + params +
                     " --n 3 --l 3 --delta 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "0.09276690\n");  // published I2 value, recovered constants
}

TEST_CASE("DF_SPECTRA_MOLECULES env var merges into the database") {
  const char* bin = std::getenv("DF_SPECTRA_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd =
      std::string("DF_SPECTRA_MOLECULES=") + DFS_DATA_DIR +
      "/reference_params.csv " + bin +
      " energy --molecule CO.cmp --n 0 --l 0 --delta 1 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 256> buf;
  size_t got;
  while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(out == "0.14485010\n");  // published comparison-table CO value
}
