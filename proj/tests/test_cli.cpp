#include "rankcode/cli.hpp"
#include "rankcode/code_io.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace rankcode;

namespace {

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("rankcode_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

// Value of a key in TSV key/value output.
std::string tsv_value(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + "\t", 0) == 0) return line.substr(key.size() + 1);
  return "";
}

}  // namespace

TEST_CASE("successful commands exit 0") {
  auto r = run_command({"--tsv", "field", "info", "--N", "4"});
  CHECK(r.exit_code == 0);
  CHECK(tsv_value(r.out, "polynomial") == "x^4+x+1");
  r = run_command({"circulant", "norm", "--N", "4", "--poly", "1+x"});
  CHECK(r.exit_code == 0);
  r = run_command({"--tsv", "extremal", "a", "--N", "3", "--n", "1", "--r", "1", "--d", "1"});
  CHECK(r.exit_code == 0);
  CHECK(tsv_value(r.out, "size") == "7");
}

TEST_CASE("mrd new output round-trips through code analyze") {
  auto made = run_command({"--tsv", "mrd", "new", "--N", "4", "--n", "4", "--k", "2"});
  REQUIRE(made.exit_code == 0);
  CHECK(parse_code_text(made.out).n() == 4);
  const auto path = temp_file("gab.txt", made.out);
  auto r = run_command({"--tsv", "code", "analyze", "--file", path});
  REQUIRE(r.exit_code == 0);
  CHECK(tsv_value(r.out, "d") == "3");
  CHECK(tsv_value(r.out, "mrd") == "yes");
  CHECK(tsv_value(r.out, "3") == "225");
  CHECK(tsv_value(r.out, "4") == "30");
  std::filesystem::remove(path);
}

TEST_CASE("output is deterministic for a fixed seed") {
  const std::vector<std::string> args{"--seed", "7", "--tsv", "amrd", "build", "--N", "5", "--n", "4"};
  const auto a = run_command(args), b = run_command(args);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
}

TEST_CASE("bad input exits 2 with a message") {
  const auto path = temp_file("bad.txt", "field N=4\ncode n=4 k=1\nrow 1 2\n");
  auto r = run_command({"code", "analyze", "--file", path});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run_command({"nosuch"}).exit_code == 2);
  CHECK(run_command({"field", "info", "--N", "17"}).exit_code == 2);
  CHECK(run_command({"verify", "--suite", "nope"}).exit_code == 2);
  CHECK(run_command({"code", "analyze", "--file", "/nonexistent/x"}).exit_code == 2);
}

TEST_CASE("budget overruns exit 3") {
  const auto path = temp_file("big.txt", "field N=8\ncode n=4 k=2\nrow 1 2 4 8\nrow 1 4 10 40\n");
  auto r = run_command({"--max-enum-bits", "8", "code", "analyze", "--file", path});
  std::filesystem::remove(path);
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify suites") {
  auto r = run_command({"verify", "--suite", "circulant"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}
