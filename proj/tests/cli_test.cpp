#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "equipart/generate.hpp"
#include "equipart/io.hpp"
#include "support/test_graphs.hpp"

namespace equipart {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("equipart_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv("EQUIPART_SEED");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("EQUIPART_SEED");
  }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string write_graph(const std::string& name, const Graph& g) {
    return write(name, serialize_edge_list(document_from_graph(g)));
  }
  static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, PartitionPetersen) {
  const auto input = write_graph("petersen.txt", testing::petersen());
  ASSERT_EQ(run({"partition", "--input", input, "--k", "3"}), cli::kSuccess) << err_.str();
  const auto doc = json::parse(out_.str());
  EXPECT_EQ(doc["case"], "DiracSplit");
  EXPECT_EQ(doc["valid"], true);
  EXPECT_EQ(doc["class_sizes"], json({4, 3, 3}));
  EXPECT_EQ(doc["classes"].size(), 3u);
}

TEST_F(CliTest, PartitionBelowTheBound) {
  const auto input = write_graph("k4.txt", testing::complete(4));
  EXPECT_EQ(run({"partition", "--input", input, "--k", "1"}), cli::kNegative);
  EXPECT_NE(err_.str().find("need k >= 2"), std::string::npos) << err_.str();
}

TEST_F(CliTest, OracleOnK99ForestMode) {
  const auto input = write_graph("k99.txt", testing::complete_bipartite(9, 9));
  EXPECT_EQ(run({"oracle", "--input", input, "--k", "3", "--mode", "forest"}), cli::kNegative);
  EXPECT_EQ(json::parse(out_.str())["found"], false);
  EXPECT_EQ(run({"oracle", "--input", input, "--threshold-k", "--mode", "forest"}), cli::kSuccess);
  EXPECT_EQ(json::parse(out_.str())["threshold_k"], 4);
}

TEST_F(CliTest, OracleBudgetExitCode) {
  const auto input = write_graph("k99.txt", testing::complete_bipartite(9, 9));
  EXPECT_EQ(run({"oracle", "--input", input, "--k", "3", "--budget", "5"}), cli::kBudgetExceeded);
  EXPECT_EQ(run({"oracle", "--input", input}), cli::kInputError);
}

TEST_F(CliTest, VerifyRoundTrip) {
  const auto input = write("c5.txt", "a b\nb c\nc d\nd e\ne a\n");
  const auto out = (dir_ / "p.json").string();
  ASSERT_EQ(run({"partition", "--input", input, "--k", "2", "--json", out}), cli::kSuccess);
  EXPECT_EQ(run({"verify", "--input", input, "--partition", out}), cli::kSuccess);
  EXPECT_EQ(json::parse(out_.str())["valid"], true);

  const auto bad = write("bad.json", R"({"classes": [["a", "b", "c", "d"], ["e"]]})");
  EXPECT_EQ(run({"verify", "--input", input, "--partition", bad}), cli::kNegative);
  EXPECT_EQ(json::parse(out_.str())["valid"], false);
}

TEST_F(CliTest, DimacsInputAndDot) {
  const auto input = write("p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
  const auto dot = (dir_ / "p.dot").string();
  ASSERT_EQ(run({"partition", "--input", input, "--format", "dimacs", "--k", "2", "--dot", dot}),
            cli::kSuccess);
  EXPECT_NE(slurp(dot).find("\"1\" -- \"2\""), std::string::npos);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"partition", "--input", (dir_ / "missing.txt").string(), "--k", "2"}), cli::kInputError);
  const auto loop = write("loop.txt", "0 0\n");
  EXPECT_EQ(run({"partition", "--input", loop, "--k", "2"}), cli::kInputError);
  EXPECT_EQ(run({"partition", "--k", "2"}), cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}), cli::kInputError);
}

TEST_F(CliTest, GenIsSeededAndEnvironmentOverrides) {
  const auto a = (dir_ / "a.txt").string(), b = (dir_ / "b.txt").string(), c = (dir_ / "c.txt").string();
  ASSERT_EQ(run({"gen", "--model", "gnp", "--n", "30", "--p", "0.3", "--seed", "5", "--out", a}), cli::kSuccess);
  ASSERT_EQ(run({"gen", "--model", "gnp", "--n", "30", "--p", "0.3", "--seed", "6", "--out", b}), cli::kSuccess);
  setenv("EQUIPART_SEED", "5", 1);
  ASSERT_EQ(run({"gen", "--model", "gnp", "--n", "30", "--p", "0.3", "--seed", "6", "--out", c}), cli::kSuccess);
  EXPECT_EQ(slurp(a), slurp(c));
  EXPECT_NE(slurp(a), slurp(b));
  EXPECT_EQ(parse_edge_list(slurp(a)).graph, generate(GraphModel::Gnp, {.n = 30, .p = 0.3}, 5));
}

TEST_F(CliTest, GenToStdout) {
  ASSERT_EQ(run({"gen", "--model", "complete", "--n", "3", "--out", "-"}), cli::kSuccess);
  EXPECT_EQ(parse_edge_list(out_.str()).graph, testing::complete(3));
  EXPECT_EQ(run({"gen", "--model", "hypercube", "--n", "3", "--out", "-"}), cli::kInputError);
}

TEST_F(CliTest, BenchSmallSizes) {
  ASSERT_EQ(run({"bench", "--sizes", "20,100", "--seed", "3"}), cli::kSuccess) << out_.str();
  EXPECT_NE(out_.str().find("gnp-0.5"), std::string::npos);
  EXPECT_EQ(out_.str().find("false"), std::string::npos);
}

}  // namespace
}  // namespace equipart
