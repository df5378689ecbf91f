#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "clasp/cli.hpp"
#include "clasp/word.hpp"

using namespace clasp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* const kBorromean =
    "components 3\nclasp p 1 2 +\nclasp q 1 2 -\nclasp r 1 3 +\nclasp s 1 3 -\n"
    "order 1 s p r q\norder 2 q p\norder 3 s r\n";

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("clasp_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

}  // namespace

TEST_SUITE("cli_frontend") {
  TEST_CASE("eij") {
    CHECK(run({"eij", "x1 x2 x1^-1 x2^-1", "1", "2"}).out == "1\n");
    CHECK(run({"eij", "", "1", "2"}).out == "0\n");
    CHECK(run({"eij", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2"}).out == "3\n");
    CHECK(run({"eij", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2", "--method=integral"}).out == "3\n");
    CHECK(run({"eij", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2", "--method=both"}).out == "sum = 3\nintegral = 3\n");
    CHECK(run({"eij", "-", "2", "3"}, "# from stdin\nx3^-1 x2 x3 x2^-1\n").out == "1\n");
  }

  TEST_CASE("eij errors") {
    auto bad = run({"eij", "x1 x0", "1", "2"});
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("offset 4") != std::string::npos);
    CHECK(run({"eij", "x1", "2", "2"}).code == cli::kInputError);
    CHECK(run({"eij", "x1", "1", "2", "--method=guess"}).code == cli::kInputError);
    CHECK(run({"eij", "x1"}).code == cli::kInputError);
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
  }

  TEST_CASE("mu, lk, words, validate") {
    auto mu = run({"mu", "-", "1", "2", "3"}, kBorromean);
    CHECK(mu.code == 0);
    CHECK(mu.out == "mu = 1\ne_12(w3) = 0\ne_23(w1) = 1\ne_31(w2) = 0\nWELL-DEFINED\n");

    auto brn = run({"gen-brn", "3"});
    REQUIRE(brn.code == 0);
    CHECK(run({"mu", "-", "1", "2", "3"}, brn.out).out.rfind("mu = 9\n", 0) == 0);
    CHECK(run({"mu", "-", "1", "2", "3"}, "components 3\n").out.rfind("mu = 0\n", 0) == 0);

    CHECK(run({"lk", "-", "1", "2"}, kBorromean).out == "0\n");
    CHECK(run({"words", "-"}, kBorromean).out == "w1 = x3^-1 x2 x3 x2^-1\nw2 = x1^-1 x1\nw3 = x1^-1 x1\n");
    CHECK(run({"words", "-"}, "components 1\n").out == "w1 =\n");
    CHECK(run({"validate", "-"}, kBorromean).out == "valid\n");

    auto broken = run({"validate", "-"}, "components 2\nclasp a 1 1 +\norder 1 a\n");
    CHECK(broken.code == cli::kInputError);
    CHECK(broken.out.find("self-clasp") != std::string::npos);

    auto refused = run({"mu", "-", "1", "2", "3"}, "components 3\nclasp a 1 2 +\norder 1 a\n");
    CHECK(refused.code == cli::kInputError);
    CHECK(refused.err.find("order incomplete") != std::string::npos);

    CHECK(run({"mu", "-", "1", "2", "3"}, "components 3\nclasp a 1 2 +\n").code == cli::kInputError);
    CHECK(run({"mu", "-", "1", "1", "3"}, kBorromean).code == cli::kInputError);
    CHECK(run({"mu", "/nonexistent/file.cc", "1", "2", "3"}).code == cli::kIoError);
    CHECK(run({"gen-brn", "0"}).code == cli::kInputError);
  }

  TEST_CASE("bounds") {
    CHECK(run({"bounds", "-"}, kBorromean).out.find("C = 4 (exact)\n") != std::string::npos);
    CHECK(run({"bounds", "-"}, run({"gen-brn", "2"}).out).out.find("6 <= C <= 8\n") != std::string::npos);
    auto fig3 = run({"bounds", "-"},
                    "components 2\nclasp a 1 2 +\nclasp b 1 2 +\nclasp c 1 2 -\norder 1 a b c\norder 2 c a b\n");
    CHECK(fig3.out.find("C = 1 (exact); this complex has 3\n") != std::string::npos);
    CHECK(run({"bounds", "-"}, "components 4\n").code == cli::kInputError);
    CHECK(run({"bounds", "-"}, "components 1\n").code == cli::kInputError);
  }

  TEST_CASE("curve writes an SVG and reports the shape") {
    auto path = temp_path("staircase.svg");
    auto r = run({"curve", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2", "--out", path, "--grid"});
    CHECK(r.code == 0);
    CHECK(r.out == "length=8 closed simple area=3 integral=3\n");
    auto svg = slurp(path);
    auto poly = svg.find("<polyline");
    REQUIRE(poly != std::string::npos);
    auto points = svg.substr(svg.find("points=\"", poly) + 8);
    points = points.substr(0, points.find('"'));
    CHECK(std::count(points.begin(), points.end(), ',') == 9);
    CHECK(svg.find("<line") != std::string::npos);

    auto open = run({"curve", "x1 x2", "1", "2", "--out", path});
    CHECK(open.out == "length=2 open integral=1\n");
    CHECK(slurp(path).find("fill=\"none\"") != std::string::npos);
    CHECK(slurp(path).find("<line") == std::string::npos);

    auto empty = run({"curve", "", "1", "2", "--out", path});
    CHECK(empty.code == 0);
    CHECK(empty.out == "length=0 closed non-simple integral=0\n");
    CHECK(slurp(path).find("<circle") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(run({"curve", "x1", "1", "2", "--out", "/nonexistent/dir/out.svg"}).code == cli::kIoError);
    CHECK(run({"curve", "x1", "1", "2"}).code == cli::kInputError);
  }

  TEST_CASE("svg geometry") {
    auto svg = cli::render_curve_svg(build_curve(parse_word("x1 x2 x1^-1 x2^-1"), 1, 2), false);
    // Unit square plus a one-unit margin: 3x3 units at 40 px, y flipped.
    CHECK(svg.find("width=\"120\" height=\"120\"") != std::string::npos);
    CHECK(svg.find("points=\"40,80 80,80 80,40 40,40 40,80\"") != std::string::npos);
    CHECK(svg.find("<circle cx=\"40\" cy=\"80\"") != std::string::npos);
    CHECK(svg == cli::render_curve_svg(build_curve(parse_word("x1 x2 x1^-1 x2^-1"), 1, 2), false));
  }

  TEST_CASE("oracle subcommand") {
    auto poly = run({"oracle", "polyomino", "--max-area", "6"});
    CHECK(poly.code == 0);
    CHECK(poly.out.find("all agree") != std::string::npos);
    auto words = run({"oracle", "words", "--max-len", "8"});
    CHECK(words.code == 0);
    CHECK(words.out.find("word length counterexamples = 0") != std::string::npos);
    CHECK(run({"oracle", "polyomino", "--max-area", "0"}).code == cli::kInputError);
    CHECK(run({"oracle", "polyomino", "--max-area", "11"}).code == cli::kInputError);
    CHECK(run({"oracle", "polyomino", "--max-area", "11", "--cap", "11"}).code == 0);
    CHECK(run({"oracle", "words", "--max-len", "13"}).code == cli::kInputError);
    CHECK(run({"oracle", "tilings"}).code == cli::kInputError);
  }

  TEST_CASE("help exits cleanly") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gen-brn") != std::string::npos);
  }
}
