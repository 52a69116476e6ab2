#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "physkit/cli.hpp"
#include "physkit/demos.hpp"

using physkit::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval: printed values with 17 significant digits") {
  Result r = invoke({"eval", "legendre-p", "2", "0", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "-0.125\n");

  Result g = invoke({"eval", "gamma", "0.5"});
  CHECK(g.code == 0);
  CHECK(g.out.substr(0, 12) == "1.7724538509");

  Result p = invoke({"eval", "pochhammer", "1", "5"});
  CHECK(p.code == 0);
  CHECK(p.out == "120\n");
}

TEST_CASE("eval: usage and domain errors exit 2") {
  CHECK(invoke({"eval", "nosuch", "1"}).code == 2);
  CHECK(invoke({"eval", "gamma"}).code == 2);          // arity
  CHECK(invoke({"eval", "gamma", "x"}).code == 2);     // non-numeric
  CHECK(invoke({"eval", "gamma", "-3"}).code == 2);    // domain (pole)
  CHECK(invoke({"eval", "legendre-p", "2.5", "0", "0.5"}).code == 2);
}

TEST_CASE("unknown demo exits 2; unknown command exits 2") {
  Result r = invoke({"demo", "nosuch"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown demo") != std::string::npos);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("demo residues passes and prints per-record lines") {
  Result r = invoke({"demo", "residues"});
  CHECK(r.code == 0);
  size_t pass_lines = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("PASS", 0) == 0) ++pass_lines;
  CHECK(pass_lines >= 5);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("demo euler-series emits the CSV columns") {
  Result r = invoke({"demo", "euler-series", "--x", "0.1", "--kmax", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k,partial,gap,bound") != std::string::npos);
}

TEST_CASE("table: grid endpoints and bit-for-bit reparse") {
  std::string path = "physkit_table_test.csv";
  Result r = invoke({"table", "legendre-p", "4", "0", "--from", "-1", "--to",
                     "1", "--steps", "5", "--out", path});
  CHECK(r.code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == "x,legendre-p");
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(f, line)) {
    auto comma = line.find(',');
    rows.emplace_back(line.substr(0, comma), line.substr(comma + 1));
  }
  REQUIRE(rows.size() == 5);
  // P_4(+-1) = 1 at the endpoints
  CHECK(std::stod(rows.front().second) == doctest::Approx(1.0));
  CHECK(std::stod(rows.back().second) == doctest::Approx(1.0));
  // re-parse and re-print round-trips bit for bit at %.17g
  for (const auto& [xs, vs] : rows) {
    double v = std::stod(vs);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    CHECK(vs == buf);
  }
  std::remove(path.c_str());
}

TEST_CASE("table: singlet sweep is monotone from -1 to 1") {
  Result r = invoke({"table", "singlet-correlation", "1.5707963267948966", "0",
                     "1.5707963267948966", "--from", "0", "--to",
                     "3.14159265358979", "--steps", "9"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);  // header
  double prev = -2.0;
  int n = 0;
  while (std::getline(in, line)) {
    double v = std::stod(line.substr(line.find(',') + 1));
    CHECK(v >= prev);
    prev = v;
    ++n;
  }
  CHECK(n == 9);
  CHECK(prev == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("table: usage errors exit 2, write failures exit 3") {
  CHECK(invoke({"table"}).code == 2);
  CHECK(invoke({"table", "gamma", "--from", "1", "--to", "0", "--steps", "5"})
            .code == 2);
  CHECK(invoke({"table", "gamma", "--from", "0.5", "--to", "2", "--steps", "1"})
            .code == 2);
  CHECK(invoke({"table", "legendre-p", "4", "--from", "-1", "--to", "1",
                "--steps", "3"})
            .code == 2);  // wrong fixed arity
  CHECK(invoke({"table", "gamma", "--from", "0.5", "--to", "2", "--steps", "3",
                "--out", "/nonexistent-dir/x.csv"})
            .code == 3);
}

TEST_CASE("list names every demo and function") {
  Result r = invoke({"list"});
  CHECK(r.code == 0);
  for (const auto& name : physkit::demos::demo_names())
    CHECK(r.out.find(name) != std::string::npos);
  CHECK(r.out.find("gamma x") != std::string::npos);
}

TEST_CASE("table fourier-series emits coefficient rows") {
  Result r = invoke({"table", "fourier-series", "--f", "abs", "--L",
                     "6.283185307179586", "--K", "3", "--out", "csv"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,a_k,b_k");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  REQUIRE(rows.size() == 4);
  CHECK(std::stod(rows[0][1]) == doctest::Approx(M_PI).epsilon(1e-9));
  CHECK(std::stod(rows[1][1]) == doctest::Approx(-4.0 / M_PI).epsilon(1e-8));
  CHECK(std::abs(std::stod(rows[2][1])) < 1e-9);
}

TEST_CASE("PHYSKIT_TOL scales demo tolerances") {
  setenv("PHYSKIT_TOL", "2.5", 1);
  CHECK(physkit::demos::tolerance_scale() == doctest::Approx(2.5));
  auto rec = physkit::demos::make_record("t", "scaling check", 0.0, 0.0, 1e-6);
  CHECK(rec.tol == doctest::Approx(2.5e-6));
  unsetenv("PHYSKIT_TOL");
  CHECK(physkit::demos::tolerance_scale() == doctest::Approx(1.0));
}

TEST_CASE("demo runs are deterministic") {
  Result a = invoke({"demo", "eigensystem"});
  Result b = invoke({"demo", "eigensystem"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
