#include "knotproj/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using knotproj::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = knotproj::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json json(std::vector<std::string> args) {
  args.push_back("--json");
  const Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

/// The record minus its timing block, for comparing runs.
Json stable(Json j) {
  j.erase("timing");
  return j;
}

}  // namespace

TEST(Cli, DbarJson) {
  const Json j = json({"dbar", "3", "11"});
  EXPECT_EQ(j["command"], "dbar");
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["argmins"], Json::parse("[[1,3]]"));
  EXPECT_EQ(j["certified"], true);
  EXPECT_TRUE(j.contains("witnesses"));
  EXPECT_TRUE(j["timing"].contains("ms"));
}

TEST(Cli, BallText) {
  const Result r = run({"ball", "15"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5 7 13 17 29 31 45\n");
}

TEST(Cli, SigTextJsonCsv) {
  const Result t = run({"sig", "T(2,3)"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("T(2,3)"), std::string::npos);
  const Json j = json({"sig", "T(2,3)"});
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["signature"]["breakpoints"], Json::parse(R"(["1/3"])"));
  const Result c = run({"sig", "T(2,3)", "--csv"});
  EXPECT_EQ(c.out, "t_lo,t_hi,value\n0,1/3,0\n1/3,1,1\n");
}

TEST(Cli, SigSvgWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "knotproj_sig_test.svg";
  std::filesystem::remove(path);
  EXPECT_EQ(run({"sig", "T(2,13) - 4*T(2,3)", "--svg", path.string()}).code, 0);
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_NE(body.str().find("<svg"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, DbarCsv) {
  const Result r = run({"dbar", "3", "11", "--csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "b,a,lower,upper,exact");
  EXPECT_NE(r.out.find("\n1,3,2,2,true\n"), std::string::npos);
}

TEST(Cli, ParseErrorShowsCaret) {
  const Result r = run({"sig", "T(2,4)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("T(2,4)\n    ^"), std::string::npos) << r.err;
  EXPECT_EQ(run({"proj", "Z2 + Q", "(1)"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"dbar", "3"}).code, 2);
}

TEST(Cli, PreconditionErrorsExitThree) {
  EXPECT_EQ(run({"dbar", "5", "3"}).code, 3);
  EXPECT_EQ(run({"ball", "4"}).code, 3);
  EXPECT_EQ(run({"delta", "2*T(2,3)", "T(2,5)"}).code, 3);
  EXPECT_EQ(run({"g4", "W(2)"}).code, 3);
  EXPECT_EQ(run({"g4", "T(2,3)", "--csv"}).code, 3);
}

TEST(Cli, JsonRoundTripThroughArgv) {
  const Json a = json({"delta", "T(2,3)", "T(2,13)"});
  EXPECT_EQ(a["value"], 2);
  std::vector<std::string> argv = a["argv"].get<std::vector<std::string>>();
  const Result again = run(argv);
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(stable(Json::parse(again.out)), stable(a));
}

TEST(Cli, ParallelInvariance) {
  for (std::vector<std::string> cmd : {std::vector<std::string>{"dbar", "20", "45"}, {"big-delta", "T(2,41)", "T(2,91)", "--universe", "T(2,61)"},
                                       {"rips", "--torus", "3..15"}}) {
    Json one = stable(json(cmd));
    cmd.push_back("--parallel");
    cmd.push_back("4");
    Json four = stable(json(cmd));
    one.erase("argv");
    four.erase("argv");
    EXPECT_EQ(one, four) << cmd.front();
  }
}

TEST(Cli, BigDelta) {
  const Json j = json({"big-delta", "T(2,41)", "T(2,91)", "--universe", "T(2,61)"});
  EXPECT_EQ(j["lower"], 2);
  EXPECT_EQ(j["upper"], 4);
  EXPECT_EQ(j["witnesses"]["chain"].size(), 3u);
}

TEST(Cli, Rips) {
  const Json t = json({"rips", "--twist", "1..11"});
  EXPECT_EQ(t["value"], 10);
  const auto path = std::filesystem::temp_directory_path() / "knotproj_rips_test.txt";
  {
    std::ofstream f(path);
    f << "# example\nT(2,3)\nT(2,5)\nT(2,7)\nT(2,3) + T(2,5)\n";
  }
  const Json c = json({"rips", "--combos", path.string()});
  EXPECT_EQ(c["value"], 3);
  EXPECT_EQ(c["complex"]["maximal_simplices"].size(), 1u);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"rips", "--torus", "3,5", "--twist", "1,2"}).code, 2);
}

TEST(Cli, Proj) {
  const Json a = json({"proj", "Z + Z2", "(2;0)", "(1;1)"});
  EXPECT_EQ(a["value"], true);
  EXPECT_EQ(a["witnesses"]["common_multiple"], Json::parse("[1,2]"));
  const Json b = json({"proj", "Z6", "(2)", "(3)"});
  EXPECT_EQ(b["value"], true);
  EXPECT_EQ(b["related_one_step"], true);
  EXPECT_FALSE(b["witnesses"].contains("common_multiple"));
  EXPECT_EQ(b["class_count"], 1);
  EXPECT_EQ(json({"proj", "Z2 + Z2 + Z2", "(1,1,0)"})["class_count"], 7);
}

TEST(Cli, ZZ) {
  EXPECT_EQ(json({"zz", "delta", "2,3", "1,1"})["value"], 1);
  const Json c = json({"zz", "chain", "8,15", "1,1"});
  EXPECT_LE(c["upper"].get<int>(), 3);
  EXPECT_EQ(c["witnesses"]["chain"].front(), Json::parse("[8,15]"));
  EXPECT_EQ(json({"zz", "delta", "(-2,3)", "(1,1)"})["inputs"]["x"], "(-2,3)");
}

TEST(Cli, PropsAreSeeded) {
  const Json a = stable(json({"props", "--count", "10", "--seed", "7"}));
  const Json b = stable(json({"props", "--count", "10", "--seed", "7"}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["value"], true);
}

TEST(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dbar"), std::string::npos);
}
