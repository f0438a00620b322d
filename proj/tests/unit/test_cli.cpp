#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "szegedy/circuit_io.hpp"
#include "szegedy/pagerank.hpp"
#include "szegedy/synth.hpp"

namespace szegedy {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "szegedy");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("szegedy_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, VerifyCycle) {
  const Result r = run({"verify", "--graph", "cycle", "--n", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"pass\":true"), std::string::npos) << r.out;
}

TEST_F(CliTest, SynthK2RoundTrips) {
  const Result r = run({"synth", "--graph", "k2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Circuit c = parse_circuit(r.out);
  EXPECT_EQ(c, synth_k2());
  EXPECT_TRUE(verify(c, complete_graph(2)).passed);
  std::ofstream(path("k2.txt")) << r.out;
  EXPECT_EQ(run({"verify", "--graph", "k2", "--circuit", path("k2.txt")}).code, 0);
}

TEST_F(CliTest, VerifyFailureExitsOne) {
  Circuit c = synth_k2();
  c.append(Gate::global_phase(-1));
  std::ofstream(path("bad.txt")) << to_text(c);
  const Result r = run({"verify", "--graph", "k2", "--circuit", path("bad.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"pass\":false"), std::string::npos);
}

TEST_F(CliTest, VerifyToleranceOverride) {
  Circuit c(6);
  const Circuit exact = synth_circulant(CirculantGraph::Complete, 3);
  for (Gate g : exact.gates()) {
    if (g.kind == GateKind::RyRotation) g.angle += 1e-6;
    c.append(g);
  }
  std::ofstream(path("near.txt")) << to_text(c);
  EXPECT_EQ(run({"verify", "--graph", "complete", "--n", "8", "--circuit", path("near.txt")}).code, 1);
  EXPECT_EQ(run({"verify", "--graph", "complete", "--n", "8", "--circuit", path("near.txt"),
                 "--tol", "1e-4"})
                .code,
            0);
  EXPECT_EQ(run({"verify", "--graph", "k2", "--tol", "0"}).code, 2);
}

TEST_F(CliTest, PagerankWheelRanksHubFirst) {
  const Result r = run({"pagerank", "--graph", "wheel", "--n", "8", "--alpha", "0.85", "--steps",
                        "1000", "--out", path("pr")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rank,vertex,avg_Q\n1,8,"), std::string::npos) << r.out;
  const PagerankSeries s = read_series_csv(dir_ / "pr" / "pagerank_series.csv");
  EXPECT_EQ(s.n_vertices, 9U);
  EXPECT_EQ(s.steps, 1000U);
  for (const char* f : {"pagerank_summary.csv", "pagerank_summary.json", "pagerank_plot.gp"}) {
    EXPECT_TRUE(fs::exists(dir_ / "pr" / f)) << f;
  }
}

TEST_F(CliTest, PagerankIsDeterministic) {
  for (const char* sub : {"a", "b"}) {
    ASSERT_EQ(run({"pagerank", "--graph", "directed8", "--steps", "50", "--out", path(sub)}).code, 0);
  }
  std::stringstream a;
  std::stringstream b;
  a << std::ifstream(dir_ / "a" / "pagerank_series.csv").rdbuf();
  b << std::ifstream(dir_ / "b" / "pagerank_series.csv").rdbuf();
  EXPECT_EQ(a.str(), b.str());
  EXPECT_FALSE(a.str().empty());
}

TEST_F(CliTest, PagerankOracleBackend) {
  const Result r = run({"pagerank", "--graph", "wheel", "--m", "2", "--directed", "--steps", "20",
                        "--backend", "oracle", "--out", path("o")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("wheel_directed(4"), std::string::npos);
}

TEST_F(CliTest, SimulateWritesStatevector) {
  const Result r = run({"simulate", "--graph", "bipartite", "--n1", "2", "--n2", "2", "--steps", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# szegedy-statevector v1", 0), 0U);
  const Result a = run({"simulate", "--graph", "k2", "--initial", "random", "--seed", "4"});
  const Result b = run({"simulate", "--graph", "k2", "--initial", "random", "--seed", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"simulate", "--graph", "k2", "--initial", "bogus"}).code, 2);
}

TEST_F(CliTest, GatecountTable) {
  const Result r = run({"gatecount", "--graph", "cycle", "--from", "3", "--to", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("class,k,vertices,register_qubits,gates,decomposed,gates_per_n3"),
            std::string::npos);
  EXPECT_NE(r.out.find("\ncycle,5,32,5,"), std::string::npos) << r.out;
}

TEST_F(CliTest, SpecFile) {
  std::ofstream(path("spec.json")) << R"({"type": "crown", "params": {"n": 4}})";
  EXPECT_EQ(run({"verify", "--spec", path("spec.json")}).code, 0);
  std::ofstream(path("bad.json")) << R"({"type": "crown", "params": {"n": 6}})";
  EXPECT_EQ(run({"verify", "--spec", path("bad.json")}).code, 2);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--graph", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--graph", "cycle", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"verify", "--spec", path("missing.json")}).code, 3);
  EXPECT_EQ(run({"synth", "--graph", "k2", "--out", path("no/such/dir/c.txt")}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace szegedy
