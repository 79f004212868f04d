// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli() {
  const char* p = std::getenv("NHGAP_CLI");
  REQUIRE(p != nullptr);
  return p;
}

int run(const std::string& args, const std::string& out_path) {
  std::string cmd = cli() + " " + args + " > " + out_path + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("linegap runs end to end with the oracle check") {
  write_file("/tmp/nhgap_cli_a.txt", "cmatrix 2\n0.2+0.3j 0\n0 0.5+0.6j\n");
  int rc = run(
      "linegap --input /tmp/nhgap_cli_a.txt --eps 0.02 --k-bound 1 "
      "--oracle-check --seed 5",
      "/tmp/nhgap_cli_a.json");
  CHECK(rc == 0);
  std::string out = slurp("/tmp/nhgap_cli_a.json");
  CHECK(out.find("\"schema\": 1") != std::string::npos);
  CHECK(out.find("\"oracle_check\": true") != std::string::npos);
}

TEST_CASE("same seed gives byte-identical reports") {
  write_file("/tmp/nhgap_cli_b.txt", "cmatrix 2\n0.1+0.4j 0\n0 -0.3+0.7j\n");
  const std::string args =
      "linegap --input /tmp/nhgap_cli_b.txt --eps 0.02 --k-bound 1 "
      "--backend filtered --seed 42";
  CHECK(run(args, "/tmp/nhgap_cli_b1.json") == 0);
  CHECK(run(args, "/tmp/nhgap_cli_b2.json") == 0);
  CHECK(slurp("/tmp/nhgap_cli_b1.json") == slurp("/tmp/nhgap_cli_b2.json"));
}

TEST_CASE("schema violations exit with code 3") {
  write_file("/tmp/nhgap_cli_c.txt", "cmatrix 2\nbad 0\n0 1\n");
  CHECK(run("linegap --input /tmp/nhgap_cli_c.txt --eps 0.1 --k-bound 1",
            "/tmp/nhgap_cli_c.json") == 3);
}

TEST_CASE("promise violations exit with code 2") {
  write_file("/tmp/nhgap_cli_d.txt", "cmatrix 2\n1 0\n0 1\n");
  CHECK(run("markovgap --input /tmp/nhgap_cli_d.txt --eps 0.01 "
            "--delta-promise 0.4",
            "/tmp/nhgap_cli_d.json") == 2);
}

TEST_CASE("human output is derived from the same run") {
  write_file("/tmp/nhgap_cli_e.txt", "cmatrix 2\n0.2+0.3j 0\n0 0.5+0.6j\n");
  CHECK(run("linegap --input /tmp/nhgap_cli_e.txt --eps 0.05 --k-bound 1 "
            "--output human",
            "/tmp/nhgap_cli_e.txt.out") == 0);
  std::string out = slurp("/tmp/nhgap_cli_e.txt.out");
  CHECK(out.find("estimate:") != std::string::npos);
  CHECK(out.find("fqed queries:") != std::string::npos);
}

TEST_CASE("trace CSV has the documented header") {
  write_file("/tmp/nhgap_cli_f.txt", "cmatrix 2\n0.2+0.3j 0\n0 0.5+0.6j\n");
  CHECK(run("linegap --input /tmp/nhgap_cli_f.txt --eps 0.05 --k-bound 1 "
            "--trace /tmp/nhgap_cli_f.csv",
            "/tmp/nhgap_cli_f.json") == 0);
  std::string csv = slurp("/tmp/nhgap_cli_f.csv");
  CHECK(csv.rfind("index,region_lo,region_hi,covering_size,verdict,"
                  "cumulative_queries\n",
                  0) == 0);
}

TEST_CASE("filtercheck certifies and exits zero") {
  CHECK(run("filtercheck --eps-th 0.1 --delta 0.01 --grid 256",
            "/tmp/nhgap_cli_g.csv") == 0);
  std::string csv = slurp("/tmp/nhgap_cli_g.csv");
  CHECK(csv.rfind("x,value,branch,pass\n", 0) == 0);
}

TEST_CASE("vectorize and liouvgap accept a Lindblad spec") {
  write_file("/tmp/nhgap_cli_h.json",
             R"({"n": 1, "hamiltonian": [],
                 "dissipators": [[{"coeff": 0.25, "pauli": "Z", "phase": "+1"}]]})");
  CHECK(run("vectorize --input /tmp/nhgap_cli_h.json",
            "/tmp/nhgap_cli_h1.json") == 0);
  std::string v = slurp("/tmp/nhgap_cli_h1.json");
  CHECK(v.find("\"c_tilde\": 0.5") != std::string::npos);
  CHECK(run("liouvgap --input /tmp/nhgap_cli_h.json --eps 0.05 --oracle-check",
            "/tmp/nhgap_cli_h2.json") == 0);
  CHECK(slurp("/tmp/nhgap_cli_h2.json").find("\"oracle_check\": true") !=
        std::string::npos);
}

TEST_CASE("missing input exits nonzero") {
  CHECK(run("linegap --input /tmp/definitely_missing_nhgap.txt --eps 0.1 "
            "--k-bound 1",
            "/tmp/nhgap_cli_i.json") != 0);
}
