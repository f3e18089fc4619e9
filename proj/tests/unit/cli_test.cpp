#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cli/commands.hpp"

namespace sfrey::cli {
namespace {

using io::Json;

CommandResult run(const std::string& command, const Json& raw) {
  std::ostringstream log;
  return execute(command, raw, log);
}

const Json kSumOfCubes = Json::array({1, 0, 0, 1});
const Json kTwoCubes = Json::array({1, 0, 0, -2});

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sfrey_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Cli, CoerceFlag) {
  EXPECT_EQ(coerce_flag("7"), Json("7"));
  EXPECT_EQ(coerce_flag("1,0"), Json::array({"1", "0"}));
  EXPECT_EQ(coerce_flag("[[1,2],3]"), Json::parse("[[1,2],3]"));
  EXPECT_EQ(coerce_flag("Q"), Json("Q"));
}

TEST(Cli, Covariants) {
  const CommandResult r = run("covariants", Json{{"form", kSumOfCubes}});
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report["schema"], 1);
  EXPECT_EQ(r.report["hessian"]["coeffs"], Json::parse(R"([["0","0"],["9","0"],["0","0"]])"));
  EXPECT_EQ(r.report["covariant_G"]["coeffs"], Json::parse(R"([["27","0"],["0","0"],["0","0"],["-27","0"]])"));
  EXPECT_EQ(r.report["discriminant"], Json::parse(R"(["-27","0"])"));
  EXPECT_EQ(r.report["status"], "PASS");
  EXPECT_EQ(r.report["checks"][0]["name"], "syzygy");
  EXPECT_TRUE(r.report["checks"][0]["pass"].get<bool>());

  const CommandResult degenerate = run("covariants", Json{{"form", Json::array({1, 0, 0, 0})}});
  EXPECT_EQ(degenerate.exit_code, kOk);
  EXPECT_TRUE(degenerate.report["degenerate"].get<bool>());
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("covariants", Json{{"form", Json::array({1, 0, 1})}}).exit_code, kInputError);
  EXPECT_EQ(run("covariants", Json::object()).exit_code, kInputError);
  EXPECT_EQ(run("covariants", Json{{"form", kSumOfCubes}, {"colour", 1}}).exit_code, kInputError);
  EXPECT_EQ(run("bogus", Json{{"form", kSumOfCubes}}).exit_code, kInputError);
  EXPECT_EQ(run("covariants", Json{{"form", kSumOfCubes}, {"field", 12}}).exit_code, kInputError);
  EXPECT_EQ(run("covariants", Json{{"form", Json::array({1, Json::array({0, 1}), 0, 1})}}).exit_code, kInputError);
  EXPECT_EQ(run("frey", Json{{"form", kSumOfCubes}}).exit_code, kInputError);
  EXPECT_EQ(run("frey", Json{{"form", kSumOfCubes}, {"point", Json::array({1, -1})}}).exit_code, kInputError);
  EXPECT_EQ(run("tm-search", Json{{"form", kTwoCubes}, {"height", 0}}).exit_code, kInputError);
  const CommandResult err = run("covariants", Json{{"form", Json::array({1, 0, 1})}});
  EXPECT_EQ(err.report["status"], "ERROR");
  EXPECT_TRUE(err.report["error"].contains("message"));
}

TEST(Cli, Frey) {
  const CommandResult r = run("frey", Json{{"form", kSumOfCubes}, {"point", Json::array({1, 0})}});
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report["curve"], Json::parse(R"({"a2":["0","0"],"a4":["0","0"],"a6":["1","0"]})"));
  EXPECT_EQ(r.report["invariants"]["c6"], Json::parse(R"(["-864","0"])"));
  EXPECT_EQ(r.report["invariants"]["delta"], Json::parse(R"(["-432","0"])"));
}

TEST(Cli, SfSetAndHypotheses) {
  const CommandResult sf = run("sf-set", Json{{"field", -5}, {"form", Json::array({1, 0, 1, 1})}});
  EXPECT_EQ(sf.exit_code, kOk);
  EXPECT_EQ(sf.report["class_group"]["h"], 2);
  const CommandResult holds = run("check-hypotheses", Json{{"form", Json::array({1, 1, 0, 1})}});
  EXPECT_EQ(holds.exit_code, kOk);
  EXPECT_EQ(holds.report["status"], "HOLDS");
  const CommandResult fails = run("check-hypotheses", Json{{"form", kTwoCubes}});
  EXPECT_EQ(fails.exit_code, kViolation);
  EXPECT_EQ(fails.report["status"], "FAILS");
}

TEST(Cli, TmSearchContainsTrivialSolution) {
  const CommandResult r = run("tm-search", Json{{"form", kTwoCubes}, {"height", 10}});
  EXPECT_EQ(r.exit_code, kOk);
  bool found = false;
  for (const Json& s : r.report["solutions"]) {
    found = found || (s["x"] == Json::parse(R"(["1","0"])") && s["y"] == Json::parse(R"(["0","0"])"));
  }
  EXPECT_TRUE(found);
  const CommandResult none = run("tm-search", Json{{"form", Json::array({-3, -5, -2, -3})}, {"height", 5}});
  EXPECT_EQ(none.exit_code, kViolation);
  EXPECT_EQ(none.report["note"], "no solution up to height 5");
}

TEST(Cli, ReportsAreDeterministicAndReparse) {
  const Json raw{{"field", -1}, {"form", Json::array({1, 1, -2, 1})}, {"height", 5}};
  const std::string a = render(run("tm-search", raw).report);
  Json workers = raw;
  workers["workers"] = 3;
  const std::string b = render(run("tm-search", workers).report);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, render(run("tm-search", raw).report));
  const Json parsed = Json::parse(a);
  EXPECT_EQ(parsed["schema"], 1);
  EXPECT_TRUE(parsed["checks"].is_array());
  for (const Json& c : parsed["checks"]) {
    for (const char* key : {"name", "expected", "actual", "pass"}) EXPECT_TRUE(c.contains(key));
  }
}

TEST(Cli, ResumeMatchesUninterruptedRun) {
  const auto cp = temp_path("tm.json");
  std::filesystem::remove(cp);
  const Json base{{"field", -5}, {"form", Json::array({1, 0, 1, 1})}};
  Json partial = base;
  partial["height"] = 3;
  partial["resume"] = cp.string();
  EXPECT_EQ(run("tm-search", partial).exit_code, kOk);
  ASSERT_TRUE(std::filesystem::exists(cp));
  Json resumed = base;
  resumed["height"] = 6;
  resumed["resume"] = cp.string();
  std::ostringstream log;
  const CommandResult r = execute("tm-search", resumed, log);
  EXPECT_NE(log.str().find("resuming after height 3"), std::string::npos);
  Json fresh = base;
  fresh["height"] = 6;
  EXPECT_EQ(r.report["solutions"], run("tm-search", fresh).report["solutions"]);

  Json other = base;
  other["form"] = kSumOfCubes;
  other["resume"] = cp.string();
  EXPECT_EQ(run("tm-search", other).exit_code, kInputError);
  std::filesystem::remove(cp);
}

TEST(Cli, DistinguishResumeAndExitCodes) {
  const auto cp = temp_path("dist.json");
  std::filesystem::remove(cp);
  const Json same{{"curve1", Json::array({0, 0, -2})}, {"curve2", Json::array({0, 0, -2})}, {"norm_bound", 400}};
  Json with_cp = same;
  with_cp["resume"] = cp.string();
  const CommandResult nf = run("distinguish", with_cp);
  EXPECT_EQ(nf.exit_code, kViolation);
  EXPECT_EQ(nf.report["status"], "NOT_FOUND");
  EXPECT_EQ(render(nf.report), render(run("distinguish", same).report));
  std::filesystem::remove(cp);

  const CommandResult hit = run("distinguish", Json{{"curve1", Json::array({0, 0, -2})},
                                                    {"curve2", Json::array({0, -1, 0})},
                                                    {"avoid", Json::array({2, 3})}});
  EXPECT_EQ(hit.exit_code, kOk);
  EXPECT_EQ(hit.report["status"], "FOUND");
}

TEST(Cli, AuditExitCodes) {
  const Json base{{"form", Json::array({1, 1, 0, 1})}, {"point", Json::array({1, 0})}, {"l", 29}, {"q", 31}};
  Json ok = base;
  ok["z"] = 1;
  const CommandResult good = run("audit", ok);
  EXPECT_EQ(good.exit_code, kOk);
  EXPECT_EQ(good.report["status"], "CONSISTENT");

  // scale by 31: F(31, 0) = 31^3 is not a 29th power, and 31 | z
  Json bad = base;
  bad["point"] = Json::array({31, 0});
  bad["z"] = 31;
  const CommandResult v = run("audit", bad);
  EXPECT_EQ(v.exit_code, kViolation);
  EXPECT_EQ(v.report["status"], "VIOLATION");
  bool q_flag = false;
  for (const Json& c : v.report["checks"]) {
    if (c["name"] == "q_not_dividing_z") q_flag = !c["pass"].get<bool>();
  }
  EXPECT_TRUE(q_flag);

  Json small_l = ok;
  small_l["l"] = 4;
  EXPECT_EQ(run("audit", small_l).exit_code, kInputError);
  Json bad_q = ok;
  bad_q["q"] = 5;
  EXPECT_EQ(run("audit", bad_q).exit_code, kInputError);
}

}  // namespace
}  // namespace sfrey::cli
