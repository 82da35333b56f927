#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cubicforge/cli.hpp"
#include "support.hpp"

using namespace cubicforge;
using cubicforge::testing::random_poly;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cubicforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(CUBICFORGE_TEST_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("cubicforge_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST(ParsePoly, Examples) {
  EXPECT_EQ(QuadForm::from_poly(parse_poly("m^2 - 9*m*n - n^2", {"m", "n"})), QuadForm(1, -9, -1));
  const auto h = parse_poly("-(A^2) + 9*A*B + B^2", {"A", "B"});
  EXPECT_EQ(h.to_string(), "-A^2 + 9*A*B + B^2");
  try {
    parse_poly("m++n", {"m", "n"});
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(ParsePoly, PrintParseRoundTrip) {
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(vars, 4, 50);
    EXPECT_EQ(parse_poly(print_poly(p), vars), p) << print_poly(p);
  }
}

TEST(Cli, PellEmitsConstantOrbitJson) {
  const auto r = run_cli({"pell", "--form", "m^2 - 2*n^2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("gfM").at("den"), nlohmann::json::parse("[1,-6,1]"));
  const auto orbit = orbit_from_json(j);
  EXPECT_EQ(orbit.kind, Pattern::Constant);
  EXPECT_EQ(orbit.target, 1);
}

TEST(Cli, PellAlternatingAndFailures) {
  const auto r = run_cli({"pell", "--form", "-m^2 + 9*m*n + n^2", "--kind", "alternating", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(1)/(1 - 9*t - t^2)"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli({"pell", "--form", "m^2 + n^2"}).code, 2);
  const auto bad = run_cli({"pell", "--form", "m++n"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("position 3"), std::string::npos) << bad.err;
}

TEST(Cli, VerifyRamanujan) {
  const auto r = run_cli({"verify", "--file", data_file("ramanujan.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "certified, depth 22\n");
}

TEST(Cli, VerifyRefutesPerturbedTheorem) {
  auto j = nlohmann::json::parse(cli::detail::read_file(data_file("ramanujan.json")));
  j["gfs"][0]["num"][0] = 2;
  const auto r = run_cli({"verify", "--file", temp_file("refuted.json", j.dump())});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("refuted at n = 0"), std::string::npos) << r.out;
}

TEST(Cli, VerifyRejectsMalformedInput) {
  EXPECT_EQ(run_cli({"verify", "--file", temp_file("broken.json", "{\"a\": 1,")}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--file", temp_file("nogfs.json", "{\"a\": 1, \"b\": 1, \"c\": 2}")}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--file", "/nonexistent/theorem.json"}).code, 2);
}

TEST(Cli, ForgeEmptySeedSet) {
  const auto r = run_cli({"forge", "--a", "1", "--b", "1", "--search-bound", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("EmptySeedSet"), std::string::npos) << r.err;
}

TEST(Cli, ForgeJsonRoundTripsThroughVerify) {
  const auto r = run_cli({"forge", "--a", "1", "--b", "-1", "--max-theorems", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto arr = nlohmann::json::parse(r.out);
  ASSERT_TRUE(arr.is_array());
  ASSERT_FALSE(arr.empty());
  const auto v = run_cli({"verify", "--file", temp_file("forged.json", r.out)});
  EXPECT_EQ(v.code, 0) << v.err;
  std::size_t lines = 0;
  for (char c : v.out) lines += c == '\n';
  EXPECT_EQ(lines, arr.size());
  EXPECT_EQ(v.out.find("refuted"), std::string::npos);
}

TEST(Cli, ForgeTextAndLatex) {
  const auto text = run_cli({"forge", "--a", "1", "--b", "-1", "--max-theorems", "1"});
  ASSERT_EQ(text.code, 0) << text.err;
  EXPECT_NE(text.out.find("Theorem."), std::string::npos);
  const auto latex = run_cli({"forge", "--a", "1", "--b", "-1", "--max-theorems", "1", "--format", "latex"});
  ASSERT_EQ(latex.code, 0);
  EXPECT_NE(latex.out.find("\\begin{theorem}"), std::string::npos);
}

TEST(Cli, ForgeSeedFile) {
  const auto seeds = temp_file("seeds.json", "[[3, 4, 5, -6]]");
  const auto r = run_cli({"forge", "--a", "1", "--b", "1", "--search-bound", "2", "--seed-file", seeds,
                          "--max-theorems", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run_cli({"forge", "--a", "1", "--b", "1", "--seed-file", temp_file("badseed.json", "[[1, 2, 3, 4]]")})
                .code,
            2);
}

TEST(Cli, EliminateAndTwist) {
  const auto e = run_cli({"eliminate", "--x", "m^2 - n^2", "--y", "2*m*n", "--z", "m^2 + n^2"});
  ASSERT_EQ(e.code, 0) << e.err;
  const auto S = parse_poly(e.out.substr(0, e.out.find(" = 0")), {"x", "y", "z"});
  EXPECT_TRUE(divide_exact(S, parse_poly("x^2 + y^2 - z^2", {"x", "y", "z"})).has_value());

  const auto t = run_cli({"twist", "--matrix", "6,7,-9;6,-5,4;-8,-3,3"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.out,
            "-80*x^3 - 360*x^2*y + 36*x^2*z + 1116*x*y^2 - 2556*x*y*z + 1530*x*z^2 + 191*y^3 - 942*y^2*z + "
            "1380*y*z^2 - 638*z^3 = 0\n");
  EXPECT_EQ(run_cli({"twist", "--matrix", "1,2,3;1,2,3;0,0,1"}).code, 2);
  EXPECT_EQ(run_cli({"twist", "--matrix", "1,2;3,4"}).code, 2);
}

TEST(Cli, FindForm) {
  const auto r = run_cli({"findform", "--degree", "2", "--target", "constant", "--gf", "1;1,-3,1", "--gf",
                          "0,1;1,-3,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto form = form_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(form.form, parse_poly("X^2 - 3*X*Y + Y^2", {"X", "Y"}));
  EXPECT_EQ(form.C, 1);

  const auto same = run_cli({"findform", "--degree", "2", "--gf", "1;1,-3,1", "--gf", "1;1,-3,1"});
  EXPECT_EQ(same.code, 1);
  EXPECT_NE(same.err.find("X^2 - X*Y"), std::string::npos) << same.err;
  EXPECT_EQ(run_cli({"findform", "--degree", "2", "--gf", "1;0,1", "--gf", "1;1,-3,1"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"forge", "--a", "1"}).code, 2);
  EXPECT_EQ(run_cli({"forge", "--a", "x", "--b", "1"}).code, 2);
  EXPECT_EQ(run_cli({"pell", "--form", "m^2 - 2*n^2", "--kind", "sometimes"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}
