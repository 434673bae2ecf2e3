#include <string>

#include "doctest.h"
#include "io.hpp"

using namespace effnum::cli;

namespace {

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("state files") {
  const StateData s = parse_state(R"({"n": 2, "amplitudes": [[0.6, 0], [0, 0.8]]})", "s.json");
  CHECK(s.n == 2);
  CHECK(s.re_im == std::vector<double>{0.6, 0, 0, 0.8});
  CHECK(parse_state(R"({"n": 2, "amplitudes": [0.6, 0.8]})", "s").re_im == std::vector<double>{0.6, 0, 0.8, 0});

  CHECK(message_of([] { parse_state("{\n\"n\": 2,\n\"amplitudes\": [[1,0],]\n}", "s.json"); }).rfind("s.json:3:", 0) == 0);
  CHECK(message_of([] { parse_state("{\"n\": 3,\n\"amplitudes\": [[1,0]]}", "s.json"); }) ==
        "s.json:2: \"amplitudes\" must hold 3 entries");
  CHECK(message_of([] { parse_state("{\"amplitudes\": []}", "s.json"); }) == "s.json: missing key \"n\"");
  CHECK(message_of([] { parse_state("{\"n\": 0, \"amplitudes\": []}", "s.json"); }) ==
        "s.json:1: \"n\" must be a positive integer");
  CHECK(message_of([] { parse_state("{\"n\": 1, \"amplitudes\": [[1, 2, 3]]}", "s.json"); }).find("[re, im]") !=
        std::string::npos);
  CHECK(message_of([] { parse_state("[1, 2]", "s.json"); }) == "s.json:1: expected a JSON object");
}

TEST_CASE("observable and basis files") {
  const MatrixData o = parse_observable(R"({"n": 2, "matrix": [[1, [0, -1]], [[0, 1], 2]]})", "o");
  CHECK(o.re_im == std::vector<double>{1, 0, 0, -1, 0, 1, 2, 0});
  CHECK(message_of([] { parse_observable(R"({"n": 2, "matrix": [[1, 0]]})", "o.json"); }) ==
        "o.json:1: \"matrix\" must hold 2 rows");
  CHECK(message_of([] { parse_observable(R"({"n": 2, "matrix": [[1, 0], [0]]})", "o.json"); }) ==
        "o.json:1: row 1 of \"matrix\" must hold 2 entries");
  CHECK(parse_basis(R"({"n": 1, "rows": [[1]]})", "b").re_im == std::vector<double>{1, 0});
}

TEST_CASE("single-file grids") {
  const GridData g = parse_grid(R"({"dims": [2], "spacing": [0.5], "origin": [-1], "samples": [1, [1, 0]]})", "g");
  CHECK(g.dims == std::vector<std::size_t>{2});
  CHECK(g.spacing == std::vector<double>{0.5});
  CHECK(g.origin == std::vector<double>{-1});
  CHECK(g.re_im == std::vector<double>{1, 0, 1, 0});
  CHECK(parse_grid(R"({"dims": [1], "spacing": [1], "samples": [1]})", "g").origin.empty());
  CHECK(message_of([] { parse_grid(R"({"dims": [2, 2], "spacing": [1], "samples": []})", "g.json"); }) ==
        "g.json:1: \"spacing\" must hold 2 numbers");
  CHECK(message_of([] { parse_grid(R"({"dims": [0], "spacing": [1], "samples": []})", "g.json"); }) ==
        "g.json:1: \"dims\" entries must be positive integers");
}

TEST_CASE("header plus csv grids") {
  const std::string text =
      "# comment\n"
      "{\"dims\": [1, 3], \"spacing\": [1, 0.5]}\n"
      "re,im\n"
      "0.5, 0\n"
      "\n"
      "-1e-3,+2.5\r\n"
      "0.25\n";
  const GridData g = parse_grid(text, "g.csv");
  CHECK(g.dims == std::vector<std::size_t>{1, 3});
  CHECK(g.re_im == std::vector<double>{0.5, 0, -1e-3, 2.5, 0.25, 0});

  CHECK(message_of([] { parse_grid("{\"dims\": [2], \"spacing\": [1]}\n1,0\n1,x\n", "g.csv"); }) ==
        "g.csv:3: expected \"re,im\", got \"1,x\"");
  CHECK(message_of([] { parse_grid("{\"dims\": [2], \"spacing\": [1]}\n1,0\n1,0,0\n", "g.csv"); }) ==
        "g.csv:3: expected \"re,im\", got \"1,0,0\"");
  CHECK(message_of([] { parse_grid("{\"dims\": [3], \"spacing\": [1]}\n1,0\n", "g.csv"); }) ==
        "g.csv:1: header declares 3 cells but the file has 1 rows");
  CHECK(message_of([] { parse_grid("\n\n{\"dims\": [3], \"spacing\": [1]\n1,0\n", "g.csv"); }).rfind("g.csv:3:", 0) == 0);
  CHECK(message_of([] { parse_grid("# only a comment\n", "g.csv"); }) == "g.csv: grid file has no header line");
}

TEST_CASE("state files round-trip exactly") {
  StateData s;
  s.n = 3;
  s.re_im = {0.1, 1.0 / 3, -2.0 / 7, 1e-300, 0.7071067811865476, -0.0};
  const StateData back = parse_state(write_state(s), "rt");
  CHECK(back.n == 3);
  CHECK(back.re_im == s.re_im);
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.5) == "2.5");
  CHECK(format_double(1.0 / 3) == "0.3333333333333333");
  CHECK(std::stod(format_double(5.8000000000000007)) == 5.8000000000000007);
}
