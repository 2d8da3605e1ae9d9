#include "swapbribery/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace swapbribery {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swapbribery_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                 ->current_test_info()
                                                 ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "swapbribery");
    return run_cli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char kPlurality[] =
    "candidates p a b\npreferred p\nrule plurality\nbudget 3\nvote a p b\n"
    "swapprices 1\n- 1 1\n3 - 1\n1 1 -\n";

TEST_F(CliTest, Winners) {
  EXPECT_EQ(Run({"winners", Write("i.txt", kPlurality)}), kExitOk);
  EXPECT_NE(out_.str().find("winners a"), std::string::npos) << out_.str();
}

TEST_F(CliTest, SolveAndCheck) {
  const std::string instance = Write("i.txt", kPlurality);
  ASSERT_EQ(Run({"solve", instance, "--method", "plurality-veto"}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("cost 3"), std::string::npos);
  const std::string solution = Write("s.txt", out_.str());
  EXPECT_EQ(Run({"check", instance, solution}), kExitOk) << err_.str();
  EXPECT_EQ(Run({"solve", instance}), kExitOk);
  EXPECT_EQ(Run({"solve", instance, "--method", "fixed-candidates"}), kExitOk);
}

TEST_F(CliTest, Infeasible) {
  std::string text = kPlurality;
  text.replace(text.find("budget 3"), 8, "budget 2");
  EXPECT_EQ(Run({"solve", Write("i.txt", text)}), kExitInfeasible);
}

TEST_F(CliTest, CheckRejectsWrongCost) {
  const std::string instance = Write("i.txt", kPlurality);
  ASSERT_EQ(Run({"solve", instance}), kExitOk);
  std::string doc = out_.str();
  doc.replace(doc.find("cost 3"), 6, "cost 1");
  EXPECT_EQ(Run({"check", instance, Write("s.txt", doc)}), kExitInfeasible);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(Run({"solve", Write("bad.txt", "candidates p p\n")}), kExitInputError);
  EXPECT_EQ(Run({"solve", (dir_ / "missing.txt").string()}), kExitInputError);
  EXPECT_EQ(Run({"frobnicate"}), kExitInputError);
  EXPECT_EQ(Run({"solve", Write("i.txt", kPlurality), "--method", "kapproval-shift"}),
            kExitInputError);
}

TEST_F(CliTest, Capacity) {
  const std::string instance = Write("i.txt", kPlurality);
  EXPECT_EQ(Run({"solve", instance, "--max-orders", "1"}), kExitCapacity) << err_.str();
}

TEST_F(CliTest, GenerateThenSolve) {
  ASSERT_EQ(Run({"gen", "--reduction", "x3c-borda-shift", "--seed", "3", "--plant"}), kExitOk);
  EXPECT_NE(out_.str().find("# expected yes"), std::string::npos);
  const std::string instance = Write("g.txt", out_.str());
  EXPECT_EQ(Run({"solve", instance}), kExitOk) << err_.str();
  const int approx = Run({"approx", instance, "--algorithm", "borda-shift-2approx"});
  EXPECT_TRUE(approx == kExitOk || approx == kExitInconclusive);

  ASSERT_EQ(Run({"gen", "--reduction", "bb-kapproval", "--input",
                 Write("bb.txt", "bb 2 1\nedge 1 2\n")}),
            kExitOk);
  EXPECT_EQ(Run({"solve", Write("b.txt", out_.str()), "--method", "fixed-voters"}), kExitOk);
}

TEST_F(CliTest, PossibleWinner) {
  const std::string pw = Write(
      "pw.txt", "candidates p a b\npreferred p\nrule plurality\npartial a>p\npartial\n");
  ASSERT_EQ(Run({"reduce-pw", pw}), kExitOk) << err_.str();
  EXPECT_EQ(Run({"solve", Write("i.txt", out_.str())}), kExitOk);
}

}  // namespace
}  // namespace swapbribery
