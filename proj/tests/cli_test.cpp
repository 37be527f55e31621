#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "msq/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "msq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = msq::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"table", "--family", "L5", "--rows", "plain", "--cols", "plain"}).code, 2);
  EXPECT_EQ(run({"table", "--family", "L3", "--rows", "plain"}).code, 2);
  EXPECT_EQ(run({"embed", "--family", "L12", "--cols", "plain", "--col", "O", "--step", "4"}).code, 2);
  const auto r = run({"embed", "--family", "L12", "--cols", "plain", "--col", "O_S", "--step", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "usage error"));
  EXPECT_EQ(run({"identify", "--sc", "/nonexistent/x.json"}).code, 2);
}

TEST(Cli, TableFormats) {
  const auto text = run({"table", "--family", "L3", "--rows", "split", "--cols", "plain"});
  EXPECT_EQ(text.code, 0);
  EXPECT_TRUE(contains(text.out, "su*(6)"));
  EXPECT_TRUE(contains(text.out, "e8(-24)"));
  const auto csv = run({"table", "--family", "L3", "--rows", "split", "--cols", "plain", "--format", "csv"});
  EXPECT_TRUE(contains(csv.out, "row,R,C,H,O"));
  const auto md = run({"table", "--family", "L12", "--rows", "plain", "--cols", "plain", "--format", "markdown"});
  EXPECT_TRUE(contains(md.out, "| f4(-20) |"));
  const auto js = run({"table", "--family", "L12", "--rows", "plain", "--cols", "plain", "--format", "json"});
  EXPECT_EQ(js.code, 0);
  EXPECT_EQ(js.out.front(), '{');
}

TEST(Cli, CellEmitAndIdentify) {
  const auto path = (std::filesystem::path(MSQ_TEST_TMP) / "cli" / "f4.json").string();
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  const auto c = run({"cell", "--family", "L12", "--row", "R", "--col", "O", "--emit-sc", path});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "f4(-20)"));
  const auto id = run({"identify", "--sc", path});
  EXPECT_EQ(id.code, 0);
  EXPECT_TRUE(contains(id.out, "dim 52, chi -20"));
}

TEST(Cli, EmbedAgainstExpectation) {
  const auto r = run({"embed", "--family", "L12", "--cols", "plain", "--col", "O", "--step", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "commutant  dim 3, chi -3"));
  EXPECT_TRUE(contains(r.out, "(match)"));
}

TEST(Cli, GoldenCheck) {
  const auto r = run({"golden-check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "20/20 tables match"));
}

TEST(Cli, NoCacheGivesSameTable) {
  const auto a = run({"table", "--family", "L3", "--rows", "tilde", "--cols", "hat", "--format", "json"});
  const auto b = run({"--no-cache", "table", "--family", "L3", "--rows", "tilde", "--cols", "hat", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
