#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "hi028/cli.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> argv{"hi028"};
  argv.insert(argv.end(), args);
  std::ostringstream out, err;
  CliResult res;
  res.code = hi028::cli::run(argv, out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

bool err_starts_with(const CliResult& res, const std::string& name) {
  return res.err.rfind(name, 0) == 0;
}

}  // namespace

TEST_CASE("verify prints a full true report for the unit-double figure") {
  CliResult res = invoke({"verify", "1", "2"});
  REQUIRE(res.code == 0);
  CHECK(res.err.empty());
  auto rep = nlohmann::json::parse(res.out);
  CHECK(rep["command"] == "verify");
  CHECK(rep["inputs"]["r"] == "1");
  CHECK(rep["inputs"]["r_prime"] == "2");
  CHECK(rep["flags"].size() == 10);
  for (const auto& [name, value] : rep["flags"].items()) {
    CAPTURE(name);
    CHECK(value == true);
  }
  CHECK(rep["failures"].empty());
  CHECK(rep["version"] == "0.1.0");
  CHECK(rep["witnesses"]["points"]["I"]["x"]["exact"] == "-8/5");
  CHECK(rep["witnesses"]["points"]["J"]["y"]["exact"] == "18/5");
  CHECK(rep["witnesses"]["lines"]["IJ"]["b"]["exact"] == "-4/3");
  CHECK(rep["witnesses"]["circles"]["c"]["radius"]["exact"] == "1");
}

TEST_CASE("construct reports the exact coordinates with decimals") {
  CliResult res = invoke({"construct", "1", "2", "--digits", "6"});
  REQUIRE(res.code == 0);
  auto rep = nlohmann::json::parse(res.out);
  CHECK(rep["command"] == "construct");
  CHECK(rep["flags"].empty());
  CHECK(rep["witnesses"]["points"]["K"]["x"]["exact"] == "-2/5");
  CHECK(rep["witnesses"]["points"]["K"]["x"]["decimal"] == "-0.400000");
  CHECK(rep["witnesses"]["points"]["D"]["y"]["exact"] == "2");
  CHECK(rep["witnesses"]["lines"]["EF"]["b"]["exact"] == "-1/2");
}

TEST_CASE("reverse distinguishes criterion and off-criterion pairs by flags, not exit code") {
  CliResult on = invoke({"reverse", "1", "7", "10"});
  REQUIRE(on.code == 0);
  auto rep_on = nlohmann::json::parse(on.out);
  CHECK(rep_on["flags"]["collinear_quadruples"] == true);
  CHECK(rep_on["flags"]["tangent_pairs_perpendicular"] == true);
  CHECK(rep_on["flags"]["criterion_d2_eq_2r2"] == true);
  CHECK(rep_on["flags"]["lines_perpendicular_when_collinear"] == true);
  CHECK(rep_on["flags"]["consistent"] == true);
  CHECK(rep_on["inputs"]["d_squared"] == "100");
  CHECK(rep_on["inputs"]["scaled_frame"] == false);
  CHECK(rep_on["witnesses"]["quadruple_lines"].is_array());
  CHECK(rep_on["witnesses"]["external_tangents"].size() == 2);
  CHECK(rep_on["witnesses"]["internal_tangents"].size() == 2);

  CliResult off = invoke({"reverse", "1", "2", "10"});
  REQUIRE(off.code == 0);
  auto rep_off = nlohmann::json::parse(off.out);
  CHECK(rep_off["flags"]["collinear_quadruples"] == false);
  CHECK(rep_off["flags"]["criterion_d2_eq_2r2"] == false);
  CHECK(rep_off["flags"]["lines_perpendicular_when_collinear"].is_null());
  CHECK(rep_off["flags"]["consistent"] == true);
  CHECK(rep_off["witnesses"]["quadruple_lines"].is_null());
  CHECK(rep_off["failures"].empty());
}

TEST_CASE("reverse accepts an exact squared distance") {
  CliResult res = invoke({"reverse", "1", "2", "--d-squared", "10"});
  REQUIRE(res.code == 0);
  auto rep = nlohmann::json::parse(res.out);
  CHECK(rep["inputs"]["scaled_frame"] == true);
  CHECK(rep["flags"]["collinear_quadruples"] == true);
  CHECK(rep["flags"]["consistent"] == true);
}

TEST_CASE("reverse wants exactly one distance form") {
  CliResult neither = invoke({"reverse", "1", "2"});
  CHECK(neither.code == 2);
  CHECK(err_starts_with(neither, "INVALID_ARGUMENT"));
  CliResult both = invoke({"reverse", "1", "2", "10", "--d-squared", "10"});
  CHECK(both.code == 2);
  CHECK(err_starts_with(both, "INVALID_ARGUMENT"));
}

TEST_CASE("domain errors surface as named single-line diagnostics") {
  CliResult tangent = invoke({"reverse", "1", "2", "3"});
  CHECK(tangent.code == 2);
  CHECK(err_starts_with(tangent, "NOT_SEPARATE"));
  CHECK(tangent.out.empty());

  CliResult equal = invoke({"verify", "2", "2"});
  CHECK(equal.code == 2);
  CHECK(err_starts_with(equal, "EQUAL_RADII_DEGENERATE"));

  CliResult zero = invoke({"verify", "0", "2"});
  CHECK(zero.code == 2);
  CHECK(err_starts_with(zero, "NONPOSITIVE_RADIUS"));

  CliResult garbled = invoke({"verify", "1", "x"});
  CHECK(garbled.code == 2);
  CHECK(err_starts_with(garbled, "PARSE_ERROR"));

  CliResult div = invoke({"verify", "1", "1/0"});
  CHECK(div.code == 2);
  CHECK(err_starts_with(div, "DIVISION_BY_ZERO"));
}

TEST_CASE("sweep reports pass counts and reproduces bit for bit") {
  CliResult res = invoke({"sweep", "--mode", "forward", "--count", "25", "--seed", "7"});
  REQUIRE(res.code == 0);
  auto rep = nlohmann::json::parse(res.out);
  CHECK(rep["command"] == "sweep");
  CHECK(rep["inputs"]["mode"] == "forward");
  CHECK(rep["inputs"]["seed"] == 7);
  CHECK(rep["flags"]["all_passed"] == true);
  CHECK(rep["witnesses"]["passes"] == 25);
  CHECK(rep["witnesses"]["failures"] == 0);
  CHECK(rep["witnesses"]["first_counterexample"].is_null());

  CliResult again = invoke({"sweep", "--mode", "forward", "--count", "25", "--seed", "7"});
  CHECK(again.out == res.out);

  CliResult rev = invoke({"sweep", "--mode", "reverse", "--count", "12", "--seed", "3"});
  CHECK(rev.code == 0);
  auto rev_rep = nlohmann::json::parse(rev.out);
  CHECK(rev_rep["flags"]["all_passed"] == true);
}

TEST_CASE("sweep argument validation") {
  CliResult bad_mode = invoke({"sweep", "--mode", "sideways", "--count", "5"});
  CHECK(bad_mode.code == 2);
  CHECK(err_starts_with(bad_mode, "INVALID_ARGUMENT"));
  CliResult no_mode = invoke({"sweep", "--count", "5"});
  CHECK(no_mode.code == 2);
  CHECK(err_starts_with(no_mode, "INVALID_ARGUMENT"));
  CliResult neg = invoke({"sweep", "--mode", "forward", "--count", "-3"});
  CHECK(neg.code == 2);
  CHECK(err_starts_with(neg, "INVALID_ARGUMENT"));
}

TEST_CASE("render writes SVG to stdout or to a file") {
  CliResult raw = invoke({"render", "1", "2"});
  REQUIRE(raw.code == 0);
  CHECK(raw.out.rfind("<svg ", 0) == 0);
  CHECK(raw.out.find("</svg>") != std::string::npos);

  auto path = std::filesystem::temp_directory_path() / "hi028_cli_render_test.svg";
  std::filesystem::remove(path);
  CliResult filed = invoke({"render", "1", "2", "--out", path.string()});
  REQUIRE(filed.code == 0);
  REQUIRE(std::filesystem::exists(path));
  auto rep = nlohmann::json::parse(filed.out);
  CHECK(rep["command"] == "render");
  CHECK(rep["inputs"]["kind"] == "forward");
  CHECK(rep["witnesses"]["output"] == path.string());
  CHECK(rep["witnesses"]["bytes"] == std::filesystem::file_size(path));
  std::ifstream in(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == raw.out);
  std::filesystem::remove(path);
}

TEST_CASE("render handles pair inputs and option plumbing") {
  CliResult pair = invoke({"render", "1", "7", "10", "--no-labels", "--canvas", "400"});
  REQUIRE(pair.code == 0);
  CHECK(pair.out.find("width=\"400\"") != std::string::npos);
  CHECK(pair.out.find("<text ") == std::string::npos);

  CliResult scaled = invoke({"render", "1", "2", "--d-squared", "10"});
  REQUIRE(scaled.code == 0);
  CHECK(scaled.out.rfind("<svg ", 0) == 0);

  CliResult conflicted = invoke({"render", "1", "2", "3", "--d-squared", "10"});
  CHECK(conflicted.code == 2);
  CHECK(err_starts_with(conflicted, "INVALID_ARGUMENT"));

  CliResult bad_canvas = invoke({"render", "1", "2", "--canvas", "8"});
  CHECK(bad_canvas.code == 2);
  CHECK(err_starts_with(bad_canvas, "INVALID_RENDER_OPTIONS"));

  CliResult bad_margin = invoke({"render", "1", "2", "--margin", "3/4"});
  CHECK(bad_margin.code == 2);
  CHECK(err_starts_with(bad_margin, "INVALID_RENDER_OPTIONS"));

  CliResult garbled_margin = invoke({"render", "1", "2", "--margin", "wide"});
  CHECK(garbled_margin.code == 2);
  CHECK(err_starts_with(garbled_margin, "PARSE_ERROR"));
}

TEST_CASE("top-level plumbing: help, version, bad subcommands") {
  CliResult help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("construct") != std::string::npos);
  CHECK(help.out.find("reverse") != std::string::npos);

  CliResult version = invoke({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out == "0.1.0\n");

  CliResult sub_help = invoke({"render", "--help"});
  CHECK(sub_help.code == 0);
  CHECK(sub_help.out.find("--d-squared") != std::string::npos);

  CliResult none = invoke({});
  CHECK(none.code == 2);
  CHECK(err_starts_with(none, "INVALID_ARGUMENT"));

  CliResult unknown = invoke({"frobnicate", "1"});
  CHECK(unknown.code == 2);
  CHECK(err_starts_with(unknown, "INVALID_ARGUMENT"));

  CliResult missing = invoke({"verify", "1"});
  CHECK(missing.code == 2);
  CHECK(err_starts_with(missing, "INVALID_ARGUMENT"));
}

TEST_CASE("verify output is deterministic") {
  CliResult a = invoke({"verify", "3", "5", "--digits", "20"});
  CliResult b = invoke({"verify", "3", "5", "--digits", "20"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("named options are interchangeable with positionals") {
  CliResult pos = invoke({"verify", "1", "2"});
  CliResult named = invoke({"verify", "--r", "1", "--r-prime", "2"});
  REQUIRE(named.code == 0);
  CHECK(named.out == pos.out);

  CliResult rev_pos = invoke({"reverse", "1", "2", "10"});
  CliResult rev_named = invoke({"reverse", "--r1", "1", "--r2", "2", "--d", "10"});
  REQUIRE(rev_named.code == 0);
  CHECK(rev_named.out == rev_pos.out);

  CliResult svg_pos = invoke({"render", "1", "2"});
  CliResult svg_named = invoke({"render", "--r", "1", "--r-prime", "2"});
  REQUIRE(svg_named.code == 0);
  CHECK(svg_named.out == svg_pos.out);

  CliResult pair_pos = invoke({"render", "1", "2", "--d-squared", "10"});
  CliResult pair_named = invoke({"render", "--r1", "1", "--r2", "2", "--d-squared", "10"});
  REQUIRE(pair_named.code == 0);
  CHECK(pair_named.out == pair_pos.out);

  CliResult dup = invoke({"verify", "1", "2", "--r", "3"});
  CHECK(dup.code == 2);
  CHECK(err_starts_with(dup, "INVALID_ARGUMENT"));

  CliResult mixed = invoke({"render", "1", "2", "--r1", "3"});
  CHECK(mixed.code == 2);
  CHECK(err_starts_with(mixed, "INVALID_ARGUMENT"));

  CliResult cross = invoke({"render", "--r", "1", "--r-prime", "2", "--d-squared", "10"});
  CHECK(cross.code == 2);
  CHECK(err_starts_with(cross, "INVALID_ARGUMENT"));

  CliResult partial = invoke({"render", "--r1", "1"});
  CHECK(partial.code == 2);
  CHECK(err_starts_with(partial, "INVALID_ARGUMENT"));
}

TEST_CASE("construct --out writes the report to a file") {
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "hi028_construct_out.json";
  CliResult direct = invoke({"construct", "3", "4"});
  REQUIRE(direct.code == 0);
  CliResult to_file = invoke({"construct", "3", "4", "--out", path.string()});
  REQUIRE(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == direct.out);
  std::filesystem::remove(path);

  CliResult bad = invoke({"construct", "3", "4", "--out", "/nonexistent/dir/report.json"});
  CHECK(bad.code == 2);
  CHECK(err_starts_with(bad, "INVALID_ARGUMENT"));
}
