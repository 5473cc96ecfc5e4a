#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "naryd/cli.hpp"
#include "naryd/io.hpp"
#include "naryd/verify.hpp"
#include "support.hpp"

using namespace naryd;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("naryd_test_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST(AlgebraJson, RoundTrip) {
  std::mt19937_64 g(17);
  for (int k = 0; k < 10; ++k) {
    const auto a = test::random_algebra(g, 3, 5);
    EXPECT_EQ(algebra_from_json(json::parse(algebra_to_json(a).dump())), a);
  }
  const auto m8 = build_m8();
  EXPECT_EQ(algebra_from_json(algebra_to_json(m8)), m8);
}

TEST(AlgebraJson, LoaderRejectsBadInput) {
  const auto bad = [](const char* text) {
    EXPECT_THROW(algebra_from_json(json::parse(text)), std::invalid_argument) << text;
  };
  bad(R"({"arity": 2, "dim": 3, "products": [{"args": [1, 0], "value": {"0": "1"}}]})");
  bad(R"({"arity": 2, "dim": 3, "products": [{"args": [0, 3], "value": {"0": "1"}}]})");
  bad(R"({"arity": 2, "dim": 3, "products": [{"args": [0, 1], "value": {"5": "1"}}]})");
  bad(R"({"arity": 2, "dim": 3, "products": [{"args": [0, 1], "value": {"0": "x"}}]})");
  bad(R"({"arity": 2, "dim": 3, "products": [{"args": [0, 1], "value": {"0": 1}}]})");
  bad(R"({"arity": 2, "dim": 3, "products": [{"args": [0, 1]}]})");
  bad(R"({"arity": 2, "dim": 3, "products": [{"args": [0, 1], "value": {}}, {"args": [0, 1], "value": {}}]})");
  bad(R"({"arity": -2, "dim": 3})");
  bad(R"({"dim": 3})");
  bad(R"([1, 2])");
}

TEST(OctonionTable, HasAllOrderedPairs) {
  const auto t = octonion_table_json(build_octonions());
  EXPECT_EQ(t["products"].size(), 64U);
  EXPECT_EQ(t["basis"][7], "abc");
  EXPECT_EQ(t["products"][1 * 8 + 1]["value"], (json{{"0", "-1"}}));
}

TEST(Cli, DeriveSimpleDrAntiderivations) {
  const auto r = run({"derive", "--algebra", "Dr:n=3,r=4", "--delta", "-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["dimension"], 9);
  EXPECT_EQ(j["nontrivial"], true);
  EXPECT_EQ(j["basis"].size(), 9U);
  EXPECT_TRUE(j["witness"].is_array());
}

TEST(Cli, DeriveA1) {
  const auto r = run({"derive", "--algebra", "A1:n=3", "--delta", "7/5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["dimension"], 16);
  EXPECT_TRUE(json::parse(r.out)["witness"].is_null());
}

TEST(Cli, CheckM8) {
  const auto r = run({"check", "--algebra", "M8"});
  EXPECT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["filippov"]["pass"], false);
  EXPECT_TRUE(j["filippov"]["witness"].is_object());
  EXPECT_EQ(j["malcev"]["pass"], true);
  EXPECT_EQ(run({"check", "--algebra", "C2:n=3", "--beta", "3/2"}).code, 0);
}

TEST(Cli, ParameterOverrides) {
  const auto r = run({"show", "--algebra", "C1:n=3", "--alpha", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["products"].size(), 2U);
  EXPECT_EQ(run({"show", "--algebra", "B1:n=3", "--alpha", "2"}).code, 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"derive", "--algebra", "A1:n=3"}).code, 2);
  EXPECT_EQ(run({"derive", "--delta", "1"}).code, 2);
  EXPECT_EQ(run({"derive", "--algebra", "A1:n=3", "--delta", "1/0"}).code, 2);
  EXPECT_EQ(run({"check", "--algebra", "Dr:n=3,r=9"}).code, 2);
  EXPECT_EQ(run({"list", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"verify-paper", "--only", "nope"}).code, 2);
}

TEST(Cli, BadAlgebraFilesExitTwo) {
  const auto p1 = temp_file("broken.json", "{ not json");
  const auto p2 = temp_file("range.json", R"({"arity": 2, "dim": 2, "products": [{"args": [0, 2], "value": {"0": "1"}}]})");
  const auto r1 = run({"check", "--algebra", p1.string()});
  EXPECT_EQ(r1.code, 2);
  EXPECT_NE(r1.err.find("invalid JSON"), std::string::npos);
  const auto r2 = run({"check", "--algebra", p2.string()});
  EXPECT_EQ(r2.code, 2);
  EXPECT_NE(r2.err.find("out of range"), std::string::npos);
  EXPECT_EQ(run({"check", "--algebra", "/no/such/file.json"}).code, 2);
}

TEST(Cli, LoadsAlgebraFile) {
  const auto p = temp_file("d4.json", algebra_to_json(build_family(FamilySpec::parse("Dr:n=3,r=4"))).dump());
  const auto r = run({"derive", "--algebra", p.string(), "--delta", "-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["dimension"], 9);
}

TEST(Cli, OutWritesFile) {
  const auto p = std::filesystem::temp_directory_path() / "naryd_test_out.json";
  std::filesystem::remove(p);
  const auto r = run({"centroid", "--algebra", "M8", "--out", p.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(p);
  EXPECT_EQ(json::parse(in)["dimension"], 1);
}

TEST(Cli, TextFormatCarriesNoColorCodes) {
  const auto r = run({"check", "--algebra", "M8", "--format", "text"});
  EXPECT_EQ(r.out.find('\x1b'), std::string::npos);
  EXPECT_NE(r.out.find("malcev: PASS"), std::string::npos);
  std::ostringstream out, err;
  run_cli({"check", "--algebra", "M8", "--format", "text"}, out, err, true);
  EXPECT_NE(out.str().find('\x1b'), std::string::npos);
}

TEST(Cli, ScanReportsSchema) {
  const auto r = run({"scan", "--algebra", "C2:n=3,beta=3/2"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  for (const char* key : {"generic_dimension", "exceptional_candidates", "irrational_factors", "seed", "classifications"})
    EXPECT_TRUE(j.contains(key)) << key;
  const auto& c = j["exceptional_candidates"];
  EXPECT_NE(std::find(c.begin(), c.end(), "-1/4"), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), "-4"), c.end());
}

TEST(Cli, OnlyFilterRunsOneClaim) {
  const auto r = run({"verify-paper", "--only", "m8"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["claims"].size(), 1U);
  EXPECT_EQ(j["claims"][0]["id"], "m8");
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"scan", "--algebra", "Dr:n=4,r=3"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> v{"verify-paper", "--only", "c2-exceptional", "--only", "oracle"};
  EXPECT_EQ(run(v).out, run(v).out);
}

TEST(VerifyHook, CorruptedCatalogFailsIdentityClaim) {
  VerifyOptions o;
  o.only = {"identities"};
  o.builder = [](const FamilySpec& s) {
    NAryAlgebra a = build_family(s);
    if (s.family != Family::Dr || s.r != 3 || s.n != 3) return a;
    auto table = a.products();
    table.try_emplace({0, 1, 2}, Vector(4)).first->second[0] += Rational(1);
    return NAryAlgebra(a.arity(), a.dim(), a.basis_names(), table);
  };
  const auto rep = verify_paper(o);
  ASSERT_EQ(rep.claims.size(), 1U);
  EXPECT_FALSE(rep.claims[0].pass);
  ASSERT_FALSE(rep.claims[0].failures.empty());
  EXPECT_NE(rep.claims[0].failures[0].find("Dr:n=3,r=3"), std::string::npos);

  o.builder = build_family;
  EXPECT_TRUE(verify_paper(o).pass());
}
