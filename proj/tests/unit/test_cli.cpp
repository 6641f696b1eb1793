#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "mackey/cli.hpp"

using namespace mackey;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MACKEY_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Marks) {
  const auto r = run_cli({"marks", "--json", "\"S3\""});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("G/H3    1   1   1   1"), std::string::npos) << r.out;
}

TEST(Cli, MarksAsJson) {
  const auto r = run_cli({"marks", "--json", "\"C2\"", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"marks\""), std::string::npos) << r.out;
}

TEST(Cli, BurnsideRingAndCompose) {
  EXPECT_EQ(run_cli({"burnside-ring", "--input", data("c2.json")}).code, 0);
  EXPECT_EQ(run_cli({"span-compose", "--input", data("compose_c2.json")}).code, 0);
  EXPECT_EQ(run_cli({"basis", "--input", data("basis_s3.json")}).code, 0);
}

TEST(Cli, DoubleCosetsListsBurnsideRank) {
  const auto r = run_cli({"double-cosets", "--json", "\"S3\"", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("H1,H1,2,3"), std::string::npos) << r.out;
}

TEST(Cli, MackeyValidateExitCodes) {
  EXPECT_EQ(run_cli({"mackey-validate", "--input", data("sign_z4_c2.json")}).code, 0);
  const auto bad = run_cli({"mackey-validate", "--input", data("bad_transfer_c2.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("double-coset"), std::string::npos);
}

TEST(Cli, RoundTripChecks) {
  const auto em = run_cli({"em-check", "--input", data("constant_z2_s3.json")});
  EXPECT_EQ(em.code, 0) << em.err;
  const auto su = run_cli({"susp-check", "--input", data("susp_s3_orbit.json")});
  EXPECT_EQ(su.code, 0) << su.err;
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli({"marks", "--json", "{not json"}).code, 2);
  EXPECT_EQ(run_cli({"marks", "--json", "\"NoSuchGroup\""}).code, 2);
  EXPECT_EQ(run_cli({"marks", "--input", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}

TEST(Cli, ResourceCapExitsTwo) {
  const auto r = run_cli({"em-check", "--input", data("sign_z4_c2.json"), "--cap", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("resource cap exceeded"), std::string::npos) << r.err;
}

TEST(Cli, OutputIsDeterministic) {
  for (auto cmd : {"marks", "burnside-ring", "double-cosets"}) {
    const auto a = run_cli({cmd, "--json", "\"D4\"", "--format", "json"});
    const auto b = run_cli({cmd, "--json", "\"D4\"", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
  }
  const auto a = run_cli({"mackey-validate", "--input", data("constant_z2_s3.json"), "--seed", "5"});
  const auto b = run_cli({"mackey-validate", "--input", data("constant_z2_s3.json"), "--seed", "5"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SpanJsonForms) {
  // pt <- C2/e -> pt in the full form, composed with itself.
  const std::string free = R"({"n": 2, "action": [[2, 1]]})";
  const std::string leg = R"({"source": )" + free + R"(, "target": "point", "images": [1, 1]})";
  const std::string span = R"({"left": )" + leg + R"(, "right": )" + leg + "}";
  const auto r = run_cli({"span-compose", "--json", R"({"group": "C2", "spans": [)" + span + "," + span + "]}",
                          "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["class"], nlohmann::json::parse(R"([{"L":0,"a":1,"b":1},{"L":0,"a":1,"b":1}])"));
  EXPECT_EQ(j["span"]["left"]["source"]["n"], 4);
}
