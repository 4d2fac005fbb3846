#include "rankcode/code_io.hpp"
#include "rankcode/mrd.hpp"
#include "rankcode/error.hpp"

#include <doctest.h>

#include <string>

using namespace rankcode;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_code_text(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("code text round trip") {
  auto F = FieldContext::make(4);
  const auto C = gabidulin_code(F, 4, 2);
  const auto text = format_code(C);
  const auto back = parse_code_text(text);
  CHECK(back.same_code(C));
  CHECK(format_code(back) == text);
}

TEST_CASE("comments, blank lines and explicit modulus") {
  const auto C = parse_code_text(
      "# a repetition code\n"
      "\n"
      "field N=3 poly=0xb\n"
      "code n=2 k=1   # trailing comment\n"
      "row 1 1\n");
  CHECK(C.n() == 2);
  CHECK(C.k() == 1);
  CHECK(C.field()->modulus() == 0xb);
}

TEST_CASE("malformed code files report the line") {
  CHECK(parse_error("field N=4\ncode n=4 k=1\nrow 1 2\n").find("line 3") != std::string::npos);
  CHECK(parse_error("field N=4\ncode n=4 k=1\nrow 1 2\n").find("row has 2 entries, expected 4") != std::string::npos);
  CHECK(parse_error("field N=4\ncode n=4 k=2\nrow 1 2 3 4\n").find("unexpected end of input") != std::string::npos);
  CHECK_FALSE(parse_error("field N=4\ncode n=2 k=1\nrow 1 16\n").empty());
  CHECK_FALSE(parse_error("field N=4 poly=0x10\ncode n=2 k=1\nrow 1 1\n").empty());
  CHECK_FALSE(parse_error("code n=2 k=1\nrow 1 1\n").empty());
  CHECK_FALSE(parse_error("field N=2\ncode n=2 k=2\nrow 1 1\nrow 1 1\n").empty());  // dependent rows
  CHECK_FALSE(parse_error("").empty());
}

TEST_CASE("ensemble round trip") {
  const std::string text =
      "field N=4\ncode n=4 k=2\nrow 1 2 4 8\nrow 1 4 3 c\n"
      "---\n"
      "circulant N=5\nbasis 1+x\n"
      "---\n"
      "field N=2\ncode n=2 k=1\nrow 1 1\n";
  const auto E = parse_ensemble_text(text);
  REQUIRE(E.m() == 3);
  CHECK(E[0].is_linear());
  CHECK_FALSE(E[1].is_linear());
  CHECK(E[1].circulant().length() == 5);
  const auto again = parse_ensemble_text(format_ensemble(E));
  REQUIRE(again.m() == 3);
  CHECK(again[0].linear().same_code(E[0].linear()));
  CHECK(again[1].circulant().dimension() == 1);
  CHECK(format_ensemble(again) == format_ensemble(E));
}

TEST_CASE("ensemble errors") {
  CHECK_THROWS_AS(parse_ensemble_text(""), ParseError);
  CHECK_THROWS_AS(parse_ensemble_text("circulant N=4\n"), ParseError);
  // Nested components.
  CHECK_THROWS_AS(parse_ensemble_text("field N=2\ncode n=2 k=1\nrow 1 1\n---\nfield N=2\ncode n=2 k=1\nrow 1 1\n"),
                  ParseError);
}

TEST_CASE("missing files") {
  CHECK_THROWS(load_code("/nonexistent/code.txt"));
}
