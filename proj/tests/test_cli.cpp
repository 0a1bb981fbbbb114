#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(QCONCEPT_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qconcept_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

constexpr const char* kSmall =
    "pair_id,item,connective,mu_a,mu_b,mu_combo\n"
    "hobbies,Discus Throwing,disj,1,0.75,0.7\n"
    "hobbies,Gardening,disj,0.5,0.5,0.75\n"
    "vehicles,Sailboat,conj,0.5641,0.8,0.4211\n";

TEST_F(Cli, ClassifyCsv) {
  const Result r = run("classify --input " + write("d.csv", kSmall));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"delta_nonclassical\""), std::string::npos);
  EXPECT_EQ(r.out.find("\"model\""), std::string::npos);
}

TEST_F(Cli, OutputFile) {
  const fs::path out = dir_ / "out.json";
  const Result r = run("classify --input " + write("d.csv", kSmall) + " --output " + out.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_GT(fs::file_size(out), 0u);
}

TEST_F(Cli, FitAnglesIsDeterministicAcrossJobs) {
  const std::string in = write("d.csv", kSmall);
  const Result a = run("fit-angles --input " + in + " --jobs 1");
  const Result b = run("fit-angles --input " + in + " --jobs 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"r8\""), std::string::npos);
}

TEST_F(Cli, ItemErrorExitsWithOne) {
  const std::string in = write("d.csv",
                               "pair_id,item,connective,mu_a,mu_b,mu_combo\n"
                               "p,Wall-Hanging,disj,0.9,0.4,0.95\n");
  EXPECT_EQ(run("model --input " + in).status, 1);
}

TEST_F(Cli, ConfigErrorsExitWithTwo) {
  EXPECT_EQ(run("classify").status, 2);
  EXPECT_EQ(run("classify --embedded --input " + write("d.csv", kSmall)).status, 2);
  EXPECT_EQ(run("classify --input " + (dir_ / "missing.csv").string()).status, 2);
  EXPECT_EQ(run("model --embedded --kind quantum").status, 2);
  EXPECT_EQ(run("report --embedded --tolerance -1").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST_F(Cli, MalformedCsvExitsWithTwo) {
  const std::string in = write("bad.csv",
                               "pair_id,item,connective,mu_a,mu_b,mu_combo\n"
                               "p,x,conj,1.5,0.5,0.5\n");
  EXPECT_EQ(run("classify --input " + in).status, 2);
}

TEST_F(Cli, EmbeddedClassify) {
  const Result r = run("classify --embedded");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"Ashtray\""), std::string::npos);
}

}  // namespace
