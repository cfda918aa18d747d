#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hiveweb/cli.hpp"

namespace hiveweb {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hiveweb_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, Web2HiveOnASingleTriangle) {
  const Result r = run({"web2hive", "--coords", "3,2,1,1,1,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json values = r.doc()["values"];
  EXPECT_EQ(values["c:0"]["thirds"], 19);
  std::vector<std::int64_t> all;
  for (const auto& [key, v] : values.items()) all.push_back(v["thirds"]);
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, (std::vector<std::int64_t>{9, 10, 11, 12, 13, 14, 19}));
}

TEST_F(CliTest, ValidateZeroHiveIsCanonical) {
  const Result tri = run({"polygon", "--vertices", "3", "--out", path("tri.json")});
  ASSERT_EQ(tri.code, 0) << tri.err;
  Json hive{{"triangulation", "tri.json"}, {"values", Json::object()}};
  for (const char* key : {"c:0", "e:0:0", "e:0:1", "e:1:0", "e:1:1", "e:2:0", "e:2:1"})
    hive["values"][key] = {{"thirds", 0}};
  write("zero.json", hive.dump());
  const Result r = run({"validate", "--hive", path("zero.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"valid\":true,\"violations\":[]}\n");
}

TEST_F(CliTest, ValidateReportsViolations) {
  const Result w = run({"web2hive", "--coords", "0,0,0,0,0,0,0", "--out", path("h.json")});
  ASSERT_EQ(w.code, 0);
  Json doc = Json::parse(std::ifstream(path("h.json")));
  doc["values"]["c:0"]["thirds"] = 3;
  write("bad.json", doc.dump());
  const Result r = run({"validate", "--hive", path("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.doc()["valid"].get<bool>());
  EXPECT_FALSE(r.doc()["violations"].empty());
}

TEST_F(CliTest, GammaDist) {
  EXPECT_EQ(run({"gamma-dist", "--to=-1,0"}).out, "{\"thirds\":2}\n");
  EXPECT_EQ(run({"gamma-dist", "--to", "2,1"}).out, "{\"thirds\":3}\n");
  EXPECT_EQ(run({"gamma-dist", "--from", "1,1", "--to", "3,2"}).out, "{\"thirds\":3}\n");
}

TEST_F(CliTest, Fermat) {
  const Result r = run({"fermat", "--a", "0,0", "--b", "2,0", "--c", "0,2", "--window", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["closed_form"]["thirds"], 8);
  EXPECT_EQ(r.doc()["brute"]["value"]["thirds"], 8);
  EXPECT_EQ(run({"fermat", "--a", "0,0", "--b=-1,0", "--c=0,-1"}).code, 1);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"web2hive", "--coords", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"web2hive", "--coords", "0,0,0,-1,0,0,0"}).code, 1);
  EXPECT_EQ(run({"hive2web", "--hive", path("missing.json")}).code, 2);
  write("garbage.json", "{not json");
  const Result r = run({"hive2web", "--hive", path("garbage.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.doc().contains("error"));
}

TEST_F(CliTest, RoundTripThroughFiles) {
  ASSERT_EQ(run({"polygon", "--vertices", "5", "--diagonals", "0-2,0-3", "--out", path("pent.json")}).code, 0);
  ASSERT_EQ(run({"sample", "--triangulation", path("pent.json"), "--seed", "7", "--bound", "3", "--out",
                 path("h.json")})
                .code,
            0);
  ASSERT_EQ(run({"hive2web", "--hive", path("h.json"), "--out", path("w.json")}).code, 0);
  ASSERT_EQ(run({"web2hive", "--web", path("w.json"), "--out", path("h2.json")}).code, 0);
  const Json a = Json::parse(std::ifstream(path("h.json")));
  const Json b = Json::parse(std::ifstream(path("h2.json")));
  EXPECT_EQ(a["values"], b["values"]);
}

TEST_F(CliTest, FlipTwiceRestoresTheHive) {
  ASSERT_EQ(run({"polygon", "--vertices", "4", "--diagonals", "0-2", "--out", path("quad.json")}).code, 0);
  ASSERT_EQ(run({"sample", "--triangulation", path("quad.json"), "--seed", "3", "--out", path("h.json")}).code, 0);
  ASSERT_EQ(run({"flip", "--hive", path("h.json"), "--edge", "4", "--out", path("f.json")}).code, 0);
  ASSERT_EQ(run({"flip", "--hive", path("f.json"), "--edge", "4", "--out", path("ff.json")}).code, 0);
  const Json a = Json::parse(std::ifstream(path("h.json")));
  const Json b = Json::parse(std::ifstream(path("ff.json")));
  EXPECT_EQ(a["values"], b["values"]);
  EXPECT_EQ(run({"flip", "--triangulation", path("quad.json"), "--edge", "0"}).code, 1);
}

TEST_F(CliTest, PotentialAndCone) {
  ASSERT_EQ(run({"web2hive", "--coords", "3,2,1,1,1,1,1", "--out", path("h.json")}).code, 0);
  EXPECT_EQ(run({"potential", "--hive", path("h.json")}).out, "{\"thirds\":-3}\n");
  EXPECT_EQ(run({"cone", "--hive", path("h.json")}).out, "{\"in_positive_cone\":true}\n");
}

TEST_F(CliTest, Oracle) {
  const Result one = run({"oracle", "--coords", "-2,0,1,0,2,0,0"});
  EXPECT_EQ(one.code, 0);
  EXPECT_TRUE(one.doc()["match"].get<bool>());
  const Result sweep = run({"oracle", "--sweep", "--count", "50", "--seed", "1"});
  EXPECT_EQ(sweep.code, 0);
  EXPECT_EQ(sweep.doc()["instances"], 50);
}

TEST_F(CliTest, Dist) {
  write("g.json", R"({"vertices":["u","v","w"],"arcs":[["u","v"],["v","w"],["w","u"]]})");
  EXPECT_EQ(run({"dist", "--graph", path("g.json"), "--from", "u", "--to", "w"}).out, "{\"thirds\":2}\n");
  EXPECT_EQ(run({"dist", "--graph", path("g.json"), "--from", "u", "--to", "x"}).code, 2);
}

TEST_F(CliTest, InputCap) {
  ::setenv("HIVEWEB_MAX_THIRDS", "30", 1);
  EXPECT_EQ(run({"web2hive", "--coords", "20,0,0,0,0,0,0"}).code, 2);
  EXPECT_EQ(run({"web2hive", "--coords", "2,0,0,0,0,0,0"}).code, 0);
  ::setenv("HIVEWEB_MAX_THIRDS", "zero", 1);
  EXPECT_EQ(run({"web2hive", "--coords", "2,0,0,0,0,0,0"}).code, 2);
  ::unsetenv("HIVEWEB_MAX_THIRDS");
}

#ifdef HIVEWEB_CLI_PATH
TEST_F(CliTest, BinaryExitStatus) {
  const std::string cmd = std::string(HIVEWEB_CLI_PATH) + " gamma-dist --to 2,1 > " + path("o.txt");
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(path("o.txt"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "{\"thirds\":3}");
  const std::string bad = std::string(HIVEWEB_CLI_PATH) + " nope 2> /dev/null > /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
}
#endif

}  // namespace
}  // namespace hiveweb
