#include <gtest/gtest.h>

#include <sstream>

#include "formal_rings/cli.hpp"
#include "formal_rings/json_io.hpp"

using namespace formal_rings;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExpandEulerJson) {
  const auto r = run_cli({"expand", "--ring", "euler", "--degree", "14", "--law", "psi", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json j = parse_json_text(r.out);
  bool found = false;
  for (const auto& t : j["components"][0]["terms"])
    if (t["exponents"] == json::array({5, 5})) found = t["coefficient"] == "-9/100";
  EXPECT_TRUE(found);
}

TEST(Cli, ExpandHumanReadable) {
  const auto r = run_cli({"expand", "--ring", "todd", "--degree", "4", "--law", "phi"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("x + y - x*y"), std::string::npos) << r.out;
}

TEST(Cli, VerifyRing) {
  const auto r = run_cli({"verify", "--ring", "todd", "--degree", "8"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("4 group identities + 5 ring identities OK"), std::string::npos);
  const auto p = run_cli({"verify", "--ring", "abel", "--param", "a=1", "--param", "b=1/2", "--degree", "5"});
  EXPECT_EQ(p.code, cli::kExitOk) << p.err;
}

TEST(Cli, VerifyFailureExitCode) {
  // Phi = x + y + x^2 as a group law: not associative.
  const std::string law =
      R"({"dim": 1, "law": {"num_vars": 2, "trunc_degree": 4, "parameters": [], "components": [{"terms": [)"
      R"({"exponents": [1,0], "coefficient": "1"}, {"exponents": [0,1], "coefficient": "1"}, )"
      R"({"exponents": [2,0], "coefficient": "1"}]}]}, "log": null})";
  const auto r = run_cli({"verify", "--log", "-", "--degree", "4"}, law);
  EXPECT_EQ(r.code, cli::kExitVerificationFailed) << r.err;
  EXPECT_NE(r.out.find("FAILED"), std::string::npos);
}

TEST(Cli, ExpandPipedIntoVerify) {
  for (const char* ring : {"euler", "c_genus", "abel"}) {
    const auto e = run_cli({"expand", "--ring", ring, "--degree", "6", "--json"});
    ASSERT_EQ(e.code, cli::kExitOk) << e.err;
    const auto piped = run_cli({"verify", "--log", "-", "--degree", "6"}, e.out);
    const auto direct = run_cli({"verify", "--ring", ring, "--degree", "6"});
    EXPECT_EQ(piped.code, direct.code) << ring << piped.err;
    EXPECT_EQ(piped.out, direct.out) << ring;
  }
}

TEST(Cli, Witt) {
  EXPECT_EQ(run_cli({"witt", "--ghosts", "p-typical", "--p", "2", "--n", "2", "add", "1,0", "1,0"}).out, "2,-1\n");
  EXPECT_EQ(run_cli({"witt", "--ghosts", "p-typical", "--p", "2", "--n", "2", "neg", "1,0"}).out, "-1,-1\n");
  EXPECT_EQ(run_cli({"witt", "--ghosts", "universal", "--n", "2", "ghost", "1,1"}).out, "1,3\n");
  EXPECT_EQ(run_cli({"witt", "--ghosts", "p-typical", "--p", "3", "--n", "2", "mul", "1,0", "2,5"}).out, "2,5\n");
  const auto bad = run_cli({"witt", "--ghosts", "p-typical", "--p", "4", "--n", "2", "add", "1,0", "1,0"});
  EXPECT_EQ(bad.code, cli::kExitInputError);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
}

TEST(Cli, WittLaws) {
  const auto r = run_cli({"witt-laws", "--ghosts", "p-typical", "--p", "2", "--n", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("2*x2*y2"), std::string::npos) << r.out;
}

TEST(Cli, InvertAndIso) {
  const auto inv = run_cli({"invert", "--ring", "euler", "--degree", "13"});
  ASSERT_EQ(inv.code, cli::kExitOk) << inv.err;
  EXPECT_NE(inv.out.find("- 11/15600*t^13"), std::string::npos) << inv.out;
  const auto iso = run_cli({"iso", "--ring", "todd", "--to", "additive", "--degree", "6"});
  EXPECT_EQ(iso.code, cli::kExitOk) << iso.err;
  EXPECT_NE(iso.out.find("1/2*x^2"), std::string::npos) << iso.out;
}

TEST(Cli, List) {
  const auto r = run_cli({"list"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("twodim_mult"), std::string::npos);
  const auto j = parse_json_text(run_cli({"list", "--json"}).out);
  EXPECT_EQ(j.size(), 11u);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"verify", "--ring", "todd", "--bogus"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"verify", "--ring", "nope"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"verify", "--ring", "todd", "--degree", "0"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"expand", "--ring", "abel", "--param", "a=1"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"verify", "--log", "-"}, "{]").code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}
