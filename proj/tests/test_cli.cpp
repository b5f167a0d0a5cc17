#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

using parkhanoi::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = parkhanoi::cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliPark, ParkingFunction) {
  const CliRun r = run({"park", "3,1,1,3,2"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["assignment"], json({3, 1, 2, 4, 5}));
  EXPECT_EQ(j["total_displacement"], 5);
  EXPECT_EQ(j["lucky_count"], 2);
  EXPECT_TRUE(j["failed_car"].is_null());
}

TEST(CliPark, NotAParkingFunction) {
  const CliRun r = run({"park", "3,4,2,3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["failed_car"], 4);
}

TEST(CliPark, SingleCarAndJsonInput) {
  const json one = json::parse(run({"park", "1"}).out);
  EXPECT_EQ(one["assignment"], json({1}));
  EXPECT_EQ(one["total_displacement"], 0);
  EXPECT_EQ(json::parse(run({"park", "[1,2,2]"}).out)["total_displacement"], 1);
}

TEST(CliPark, ValidationErrors) {
  EXPECT_EQ(run({"park", "1,x"}).code, 2);
  EXPECT_EQ(run({"park", "0,1"}).code, 2);
  EXPECT_EQ(run({"park", "[1,"}).code, 2);
  EXPECT_EQ(run({"park"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliPark, OtherFormats) {
  const CliRun l = run({"--format", "lines", "park", "1,2,1"});
  EXPECT_EQ(lines(l.out), (std::vector<std::string>{"assignment 1,2,3", "displacements 0,0,2",
                                                    "total_displacement 2", "lucky_count 2"}));
  const CliRun t = run({"--format", "table", "park", "1,2,1"});
  EXPECT_NE(t.out.find("total displacement 2"), std::string::npos);
}

TEST(CliEnumerate, IdealThree) {
  const CliRun r = run({"enumerate", "ideal", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"1,1,2,0", "1,2,1,0", "1,2,2,0", "2,1,1,0",
                                                    "2,1,2,0", "2,2,1,0"}));
  EXPECT_EQ(r.err, "count: 6\n");
}

TEST(CliEnumerate, Pf1AndPf) {
  EXPECT_EQ(run({"enumerate", "pf1", "2"}).out, "1,1\n");
  EXPECT_EQ(lines(run({"enumerate", "pf", "--n", "2"}).out).size(), 3u);
  const json j = json::parse(run({"--format", "json", "enumerate", "pf1", "3"}).out);
  EXPECT_EQ(j.size(), 6u);
}

TEST(CliEnumerate, BudgetExceeded) {
  EXPECT_EQ(run({"enumerate", "pf", "8"}).code, 3);
  EXPECT_EQ(run({"--budget-n", "3", "enumerate", "pf1", "4"}).code, 3);
  EXPECT_EQ(run({"enumerate", "ideal", "1"}).code, 2);
  EXPECT_EQ(run({"enumerate", "bogus", "3"}).code, 2);
}

TEST(CliEnumerate, TableAndDot) {
  const CliRun t = run({"--format", "table", "enumerate", "ideal", "2"});
  EXPECT_EQ(t.out,
            "(1,1,0)\n"
            "   |       |       |\n"
            "   |       =       |\n"
            " =====    ===      |\n"
            "------- ------- -------\n"
            "   0       1       2\n");
  for (const auto& line : lines(t.out)) {
    EXPECT_TRUE(line.empty() || line.back() != ' ');
  }
  const CliRun d = run({"enumerate", "ideal", "3", "--dot"});
  EXPECT_EQ(d.out.rfind("digraph", 0), 0u);
  EXPECT_NE(d.out.find("\"(2,2,1,0)\", shape=box"), std::string::npos);
}

TEST(CliMap, BothDirections) {
  EXPECT_EQ(run({"map", "th2pf", "2,2,1,0"}).out, "2,2,1\n");
  EXPECT_EQ(run({"map", "pf2th", "1,3,1"}).out, "1,2,1,0\n");
  const json rec = json::parse(run({"--format", "json", "map", "th2pf", "1,2,1,0"}).out);
  EXPECT_EQ(rec, json({{"n", 3}, {"ideal", {1, 2, 1, 0}}, {"pf", {1, 3, 1}}, {"j", 1}}));
}

TEST(CliMap, DomainErrorNamesCondition) {
  const CliRun r = run({"map", "th2pf", "0,0,0,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("condition 1"), std::string::npos);
  const CliRun p = run({"map", "pf2th", "1,2,1"});
  EXPECT_EQ(p.code, 1);
  EXPECT_NE(p.err.find("condition 2"), std::string::npos);
}

TEST(CliVerify, PassesForSmallN) {
  for (const char* n : {"1", "2", "3", "4", "5"}) {
    const CliRun r = run({"verify", n});
    EXPECT_EQ(r.code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_TRUE(j["diff"].empty());
  }
  const json three = json::parse(run({"verify", "3"}).out);
  EXPECT_EQ(three["hanoi"]["min_win_moves"], 9);
  EXPECT_EQ(three["hanoi"]["ideal_at_level"], 4);
  EXPECT_EQ(three["hanoi"]["ideal_count"], 6);
  EXPECT_EQ(three["hanoi"]["flags"], json({{"a", true}, {"b", true}, {"c", true}}));
  EXPECT_EQ(three["bijection"]["pf1_count"], 6);
  EXPECT_EQ(json::parse(run({"verify", "2"}).out)["hanoi"]["min_win_moves"], 7);
  EXPECT_TRUE(json::parse(run({"verify", "1"}).out)["hanoi"].is_null());
}

TEST(CliVerify, BudgetExceeded) {
  EXPECT_EQ(run({"--budget-states", "100", "verify", "3"}).code, 3);
}

TEST(CliSolve, Strategies) {
  const json three = json::parse(run({"solve", "3"}).out);
  EXPECT_EQ(three["moves"].size(), 9u);
  EXPECT_EQ(three["ideal_move"], 4);
  EXPECT_TRUE(three["ideal_verified"].get<bool>());
  EXPECT_EQ(three["moves"][0], json({{"disk", 0}, {"from", 0}, {"to", 1}}));
  EXPECT_EQ(json::parse(run({"solve", "2"}).out)["moves"].size(), 7u);
  EXPECT_EQ(run({"solve", "1"}).code, 2);

  const auto l = lines(run({"--format", "lines", "solve", "3"}).out);
  ASSERT_EQ(l.size(), 10u);
  EXPECT_EQ(l[0], "move 0 (0,0,0,0)");
  EXPECT_NE(l[4].find(" ideal"), std::string::npos);
}

TEST(CliCount, Json) {
  const CliRun r = run({"count", "3"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["closed_form"], 16);
  EXPECT_EQ(j[1]["brute_force"], 6);
  EXPECT_EQ(j[2]["match"], true);
  const json big = json::parse(run({"count", "30"}).out);
  EXPECT_EQ(big[0]["closed_form"], "17761887753093897979823770061456102763834271");
  EXPECT_TRUE(big[0]["brute_force"].is_null());
}

TEST(CliConfig, EnvironmentVariables) {
  ::setenv("PARKHANOI_FORMAT", "json", 1);
  const CliRun r = run({"enumerate", "pf1", "2"});
  ::unsetenv("PARKHANOI_FORMAT");
  EXPECT_EQ(json::parse(r.out), json::array({json::array({1, 1})}));

  ::setenv("PARKHANOI_BUDGET_N", "2", 1);
  const CliRun b = run({"enumerate", "pf", "3"});
  ::unsetenv("PARKHANOI_BUDGET_N");
  EXPECT_EQ(b.code, 3);
}

}  // namespace
