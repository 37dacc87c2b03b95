#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ununfold/io.hpp"

namespace fs = std::filesystem;
using namespace ununfold;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result runCli(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"ununfold"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ununfold_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("UNUNFOLD_PRECISION");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenerateAndVerifyAcuteHat) {
  ASSERT_EQ(runCli({"generate", "acute-hat", "--out", path("hat.obj")}).code, cli::kExitOk);
  const Result r = runCli({"verify-hat", path("hat.obj"), "--report", path("r.json")});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("conclusion true (certified)"), std::string::npos) << r.out;
  std::string error;
  EXPECT_TRUE(validateReportJson(readTextFile(path("r.json")), &error)) << error;
}

TEST_F(CliTest, FlatControlExitsWithConclusionFalse) {
  ASSERT_EQ(runCli({"generate", "flat-control", "--out", path("flat.obj")}).code, cli::kExitOk);
  EXPECT_EQ(runCli({"verify-hat", path("flat.obj"), "--mode", "float"}).code, cli::kExitConclusionFalse);
}

TEST_F(CliTest, LowerBound) {
  Result r = runCli({"lower-bound", "subdivided", "--k", "3"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "18\n");
  r = runCli({"lower-bound", "stacked", "--k", "0"});
  EXPECT_EQ(r.out, "2\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(runCli({}).code, cli::kExitUsage);
  EXPECT_EQ(runCli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(runCli({"generate", "stacked", "--out", path("s.obj")}).code, cli::kExitUsage);
  EXPECT_EQ(runCli({"generate", "dodecahedron", "--out", path("d.obj")}).code, cli::kExitUsage);
  EXPECT_EQ(runCli({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, MissingFileIsAnError) {
  const Result r = runCli({"curvature", path("nope.obj")});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("IoError"), std::string::npos) << r.err;
}

TEST_F(CliTest, PrecisionFromEnvironment) {
  ASSERT_EQ(runCli({"generate", "acute-hat", "--out", path("hat.obj")}).code, cli::kExitOk);
  setenv("UNUNFOLD_PRECISION", "float", 1);
  Result r = runCli({"verify-hat", path("hat.obj")});
  EXPECT_NE(r.out.find("mode float"), std::string::npos) << r.out;
  r = runCli({"verify-hat", path("hat.obj"), "--mode", "interval"});
  EXPECT_NE(r.out.find("mode interval"), std::string::npos) << r.out;
  setenv("UNUNFOLD_PRECISION", "exact", 1);
  EXPECT_EQ(runCli({"verify-hat", path("hat.obj")}).code, cli::kExitUsage);
  unsetenv("UNUNFOLD_PRECISION");
}

TEST_F(CliTest, EnumeratePathsAndCurvature) {
  ASSERT_EQ(runCli({"generate", "acute-hat", "--out", path("hat.obj")}).code, cli::kExitOk);
  Result r = runCli({"enumerate-paths", path("hat.obj")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("paths 12 classes 2"), std::string::npos) << r.out;
  r = runCli({"curvature", path("hat.obj")});
  EXPECT_NE(r.out.find("negative 3 positive 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, SearchAuditAndUnfold) {
  ASSERT_EQ(runCli({"generate", "caltrop", "--out", path("c.obj")}).code, cli::kExitOk);
  Result r = runCli({"search", path("c.obj"), "--restarts", "1", "--out-cuts", path("c.cuts")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  r = runCli({"audit", path("c.obj"), "--cuts", path("c.cuts"), "--mode", "float", "--report", path("a.json"),
              "--svg", path("a.svg")});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("valid true"), std::string::npos) << r.out;
  EXPECT_TRUE(validateReportJson(readTextFile(path("a.json"))));
  r = runCli({"unfold", path("c.obj"), "--cuts", path("c.cuts"), "--svg", path("u.svg")});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("overlap_pairs 0"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(path("u.svg")));
}
