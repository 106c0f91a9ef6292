#include "pisys/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = pisys::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("pisys_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, MultA1ppInE10) {
  Result r = run({"mult", "A1++", "E10", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("{\n  \"value\": 2,", 0), 0u) << r.out;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["method"], "a1pp");
  ASSERT_EQ(j["certificate"].size(), 1u);
  EXPECT_EQ(j["certificate"][0]["type"], "E8++");
}

TEST(Cli, ClassifyFig2) {
  Result r = run({"classify", "hyp:fig2:1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "indefinite, hyperbolic, not Ext");
}

TEST(Cli, ClassifyExt) {
  Result r = run({"classify", "E10"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "indefinite, hyperbolic, Ext");
  Json j = run_json({"classify", "A3~"});
  EXPECT_EQ(j["kind"], "affine");
  EXPECT_EQ(j["ext"], false);
  EXPECT_EQ(j["components"][0]["delta"], Json::parse("[1,1,1,1]"));
}

TEST(Cli, CheckReportsDifferenceIsRoot) {
  Result r = run({"check", "--ambient", "A2", "[[1,0],[0,1],[1,1]]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("DifferenceIsRoot"), std::string::npos) << r.err;
  Result j = run({"check", "--ambient", "A2", "[[1,0],[0,1],[1,1]]", "--json"});
  EXPECT_EQ(j.code, 1);
  EXPECT_EQ(Json::parse(j.err)["error"], "DifferenceIsRoot");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "A1", "A2"}).code, 2);
  EXPECT_EQ(run({"check", "--ambient", "A2", "[[1,0"}).code, 2);
  EXPECT_EQ(run({"check", "[[1,0]]"}).code, 2);
  EXPECT_EQ(run({"mult", "A1++", "E10", "--threads", "0"}).code, 2);
}

TEST(Cli, DomainErrors) {
  Result r = run({"classify", "Q7"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("UnknownName"), std::string::npos);
  EXPECT_EQ(run({"mult", "A1++", "C3~"}).code, 1);
  EXPECT_EQ(run({"canonicalize", "--ambient", "A2", "[[1,0]]"}).code, 1);
}

TEST(Cli, Help) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("canonicalize"), std::string::npos);
}

TEST(Cli, CheckRoundTrip) {
  Result first = run({"check", "--ambient", "E10", "[[2,3,4,6,5,4,3,2,0,0],[0,0,0,0,0,0,0,0,1,0],[0,0,0,0,0,0,0,0,0,1]]", "--json"});
  ASSERT_EQ(first.code, 0) << first.err;
  Json j = Json::parse(first.out);
  EXPECT_EQ(j["type"], "A1++");
  Result second = run({"check", first.out, "--json"});
  ASSERT_EQ(second.code, 0) << second.err;
  EXPECT_EQ(second.out, first.out);
}

TEST(Cli, CanonicalizeRoundTrip) {
  Json start = run_json({"check", "--ambient", "E10", "[[2,3,4,6,5,4,3,2,0,0],[0,0,0,0,0,0,0,0,1,0],[0,0,0,0,0,0,0,0,0,1]]"});
  Result first = run({"canonicalize", start.dump(), "--json"});
  ASSERT_EQ(first.code, 0) << first.err;
  Json a = Json::parse(first.out);
  EXPECT_EQ(a["sign"], "positive");
  EXPECT_EQ(a["ext_subdiagram"], Json::parse("[0,1,2,3,4,5,6,7,8,9]"));
  Result second = run({"canonicalize", first.out, "--json"});
  ASSERT_EQ(second.code, 0) << second.err;
  Json b = Json::parse(second.out);
  EXPECT_EQ(b["ext_subdiagram"], a["ext_subdiagram"]);
  EXPECT_EQ(b["finite_rep"], a["finite_rep"]);
  EXPECT_EQ(b["roots"], a["roots"]);

  Json neg = run_json({"canonicalize", "--ambient", "E10",
                       "[[-2,-3,-4,-6,-5,-4,-3,-2,0,0],[0,0,0,0,0,0,0,0,-1,0],[0,0,0,0,0,0,0,0,0,-1]]"});
  EXPECT_EQ(neg["sign"], "negative");
  Json again = run_json({"canonicalize", neg.dump()});
  EXPECT_EQ(again["sign"], "negative");
  EXPECT_EQ(again["finite_rep"], neg["finite_rep"]);
}

TEST(Cli, MultAgreesWithCrossCheck) {
  const std::vector<std::pair<std::string, std::string>> fixtures = {
      {"A1++", "A1++"}, {"A1++", "A2++"}, {"A1++", "A3++"}, {"A2++", "A2++"}, {"A2++", "A3++"},
      {"A1++", "hyp:fig2:1"}, {"A1++", "hyp:fig2:5"}, {"A1++", "hyp:fig2:7"}, {"A1++", "A4"},
  };
  for (const auto& [k, x] : fixtures) {
    Json plain = run_json({"mult", k, x});
    Json checked = run_json({"mult", k, x, "--cross-check", "--height", "5"});
    EXPECT_EQ(plain["value"], checked["value"]) << k << " in " << x;
    EXPECT_EQ(checked["cross_check"]["agrees"], true) << k << " in " << x << ": " << checked["cross_check"].dump();
  }
}

TEST(Cli, CrossCheckSkippedAboveRankFive) {
  Json j = run_json({"mult", "A1++", "E10", "--cross-check"});
  EXPECT_EQ(j["value"], 2);
  EXPECT_TRUE(j["cross_check"].contains("skipped"));
}

TEST(Cli, AffineMultIsInfinite) {
  Json j = run_json({"mult", "A1~", "A1++", "--height", "4"});
  EXPECT_EQ(j["value"], "infinite");
  EXPECT_EQ(j["witness"]["family_k"].size(), 4u);
  EXPECT_EQ(run({"mult", "A1~", "A3", "--height", "3"}).code, 1);
}

TEST(Cli, DiagramFromFile) {
  Json e10 = run_json({"catalog", "E10"});
  std::string path = temp_file("e10.json", e10["diagram"].dump());
  Json a = run_json({"classify", "@" + path});
  Json b = run_json({"classify", "E10"});
  EXPECT_EQ(a, b);
  Json m = run_json({"mult", "A1++", "@" + path});
  EXPECT_EQ(m["value"], 2);
  std::string roots = temp_file("roots.json", "[[1,0],[0,1]]");
  Json c = run_json({"check", "--ambient", "A2", "@" + roots});
  EXPECT_EQ(c["type"], "A2") << c.dump();
  std::remove(path.c_str());
  std::remove(roots.c_str());
}

TEST(Cli, InlineMatrixDiagram) {
  Json j = run_json({"classify", "[[2,-3],[-3,2]]"});
  EXPECT_EQ(j["kind"], "indefinite");
  EXPECT_EQ(j["hyperbolic"], true);
}

TEST(Cli, OutputIndependentOfThreads) {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"subdiagrams", "--ext", "A8++"}, std::vector<std::string>{"enumerate", "A1++", "A2++", "--height", "5"},
        std::vector<std::string>{"mult", "A2++", "E11"}}) {
    auto one = cmd, many = cmd;
    one.insert(one.end(), {"--threads", "1", "--json"});
    many.insert(many.end(), {"--threads", "3", "--json"});
    Result a = run(one), b = run(many);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, EnumerateA1InA2) {
  Json j = run_json({"enumerate", "A1", "A2", "--height", "2"});
  EXPECT_EQ(j["count"], 6);
}

TEST(Cli, Subdiagrams) {
  Json j = run_json({"subdiagrams", "--ext", "A8++"});
  EXPECT_EQ(j["count"], 3);
  Result t = run({"subdiagrams", "E11"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("E8++"), std::string::npos);
}

TEST(Cli, NormalizeAndSupport) {
  Json n = run_json({"normalize", "--ambient", "A1++", "[[-1,0,0],[0,-1,0]]"});
  EXPECT_EQ(n["sign"], "negative");
  Json s = run_json({"support", "--ambient", "A1++", "[[1,0,0],[0,1,0]]"});
  EXPECT_EQ(s["k"], 1);
  EXPECT_EQ(s["support"], Json::parse("[0,1]"));
  EXPECT_EQ(run({"support", "--ambient", "A2", "[[1,0]]"}).code, 1);
}

TEST(Cli, TypeCommand) {
  Json j = run_json({"type", "--ambient", "A1++", "[[1,0,0],[0,1,0],[0,0,1]]"});
  EXPECT_EQ(j["type"], "A1++");
  EXPECT_EQ(j["ext"], true);
}

TEST(Cli, Catalog) {
  Json j = run_json({"catalog"});
  EXPECT_EQ(j["entries"].size(), 23u);
  Result t = run({"catalog"});
  EXPECT_NE(t.out.find("hyp:fig2:8"), std::string::npos);
}

TEST(Cli, TextOutputForEveryCommand) {
  EXPECT_EQ(run({"mult", "A1++", "A8++"}).code, 0);
  EXPECT_EQ(run({"mult", "A1++", "A2++", "--cross-check"}).code, 0);
  EXPECT_EQ(run({"mult", "A1~", "A1++", "--height", "3"}).code, 0);
  EXPECT_EQ(run({"enumerate", "A1++", "A1++", "--height", "3"}).code, 0);
  EXPECT_EQ(run({"canonicalize", "--ambient", "A1++", "[[-1,0,0],[2,1,0],[0,0,1]]"}).code, 0);
  EXPECT_EQ(run({"check", "--ambient", "A2", "[[1,0],[0,1]]"}).code, 0);
  EXPECT_EQ(run({"type", "--ambient", "A2", "[[1,0],[0,1]]"}).code, 0);
  EXPECT_EQ(run({"normalize", "--ambient", "A2", "[[-1,0],[0,-1]]"}).code, 0);
  EXPECT_EQ(run({"support", "--ambient", "A1~", "[[1,0],[0,1]]"}).code, 0);
}

TEST(Cli, TableFromEnvironment) {
  std::string bad = temp_file("bad.jsonl", "{\"k\":\"A2\",\"z\":\"A3\",\"value\":5,\"oracle\":\"hand\"}\n");
  ::setenv("PISYS_TABLE", bad.c_str(), 1);
  Result r = run({"mult", "A2", "A3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("TableConflict"), std::string::npos) << r.err;
  std::string good = temp_file("good.jsonl", "{\"k\":\"A2\",\"z\":\"A3\",\"value\":1,\"oracle\":\"hand\"}\n");
  ::setenv("PISYS_TABLE", good.c_str(), 1);
  EXPECT_EQ(run({"mult", "A2", "A3"}).code, 0);
  ::setenv("PISYS_TABLE", "/nonexistent/table.jsonl", 1);
  EXPECT_EQ(run({"mult", "A2", "A3"}).code, 1);
  ::unsetenv("PISYS_TABLE");
  std::remove(bad.c_str());
  std::remove(good.c_str());
}
