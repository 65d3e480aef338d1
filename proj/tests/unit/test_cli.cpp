#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pyrolace/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "pyrolace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = pyrolace::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp_file(const std::string& name, const std::string& content = "") {
  const fs::path p = fs::temp_directory_path() / ("pyrolace_cli_" + name);
  if (!content.empty()) std::ofstream(p, std::ios::binary) << content;
  return p;
}

}  // namespace

TEST(Cli, Burn) {
  Outcome r = run({"burn", "--graph", "fig3.g"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "b = 3, witness v1 v6 v5\n");
  r = run({"burn", "--graph", "fig3.g", "--redundant"});
  EXPECT_NE(r.out.find("redundant last source: yes, witness v2 v1 v5"), std::string::npos);
  r = run({"burn", "--graph", "fig7_H.g"});
  EXPECT_EQ(r.out.substr(0, 6), "b = 3,");
  r = run({"burn", "--graph", "fig3.g", "--sequence", "v2,v5 v8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("burning sequence: yes"), std::string::npos);
  r = run({"burn", "--hypergraph", "fig1.h"});
  EXPECT_EQ(r.out, "b = 2, witness v4 v1\n");
}

TEST(Cli, LazyAndForce) {
  EXPECT_EQ(run({"lazy", "--hypergraph", "fig1.h"}).out, "b_L = 1, witness v2\n");
  EXPECT_EQ(run({"lazy", "--hypergraph", "fig5.h"}).out.substr(0, 8), "b_L = 5,");
  const Outcome trace = run({"lazy", "--hypergraph", "fig1.h", "--set", "v2"});
  EXPECT_NE(trace.out.find("lazy burning set: yes"), std::string::npos);
  EXPECT_EQ(run({"force", "--hypergraph", "fig1.h"}).out.substr(0, 6), "Z = 2,");
  EXPECT_EQ(run({"force", "--hypergraph", "fig6.h"}).out.substr(0, 6), "Z = 3,");
  const Outcome stalled = run({"force", "--graph", "fig3.g", "--set", "v1"});
  EXPECT_NE(stalled.out.find("zero forcing set: no"), std::string::npos);
}

TEST(Cli, SpectrumProductCospectral) {
  Outcome r = run({"spectrum", "--graph", "fig7_G.g"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p(x) = x^6 - 7x^4 - 4x^3 + 7x^2 + 4x - 1"), std::string::npos);
  r = run({"cospectral", "--pair", "fig7_G.g", "fig7_H.g"});
  EXPECT_NE(r.out.find("cospectral = true"), std::string::npos);
  EXPECT_NE(r.out.find("isomorphic = false"), std::string::npos);
  r = run({"product", "--graph", "fig7_G.g", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 9), "graph 12\n");
  r = run({"product", "--graph", "fig7_G.g", "--with", "fig7_H.g", "--kind", "cartesian"});
  EXPECT_EQ(r.out.substr(0, 9), "graph 36\n");
}

TEST(Cli, VerifyClaims) {
  Outcome r = run({"verify", "--claim", "improved_bound", "--hypergraph", "fig5.h"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5 ≤ 5 (slack 0)\n");
  r = run({"verify", "--claim", "forcing_bound", "--hypergraph", "fig1.h"});
  EXPECT_EQ(r.out, "2 ≤ 4 (slack 2)\n");
  EXPECT_EQ(run({"verify", "--claim", "equality_family", "--sizes", "3", "4"}).code, 0);
  EXPECT_EQ(run({"verify", "--claim", "cospectral_pair", "--n", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "--claim", "burning_preservation", "--graph", "fig3.g", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "--name", "fig6_hypergraph"}).code, 0);
  EXPECT_EQ(run({"verify", "--claim", "strong_product_spectrum", "--pair", "fig7_G.g", "fig3.g"}).code, 0);
}

TEST(Cli, VerifyViolatedExitsOne) {
  // a zero tolerance cannot absorb rounding in the predicted spectrum
  const Outcome r =
      run({"verify", "--claim", "strong_product_spectrum", "--pair", "fig7_G.g", "fig7_H.g", "--tol", "1e-300"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violates"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"burn"}).code, 2);
  EXPECT_EQ(run({"burn", "--graph", "missing.g"}).code, 2);
  EXPECT_EQ(run({"burn", "--graph", "fig3.g", "--mode", "strict"}).code, 2);
  EXPECT_EQ(run({"burn", "--graph", "fig3.g", "--sequence", "zz"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "improved_bound"}).code, 2);
  EXPECT_EQ(run({"verify", "--name", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "equality_family", "--sizes", "1"}).code, 2);
  EXPECT_EQ(run({"product", "--graph", "fig3.g"}).code, 2);
  const fs::path bad = temp_file("bad.g", "graph 2\ne a a\n");
  const Outcome r = run({"burn", "--graph", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SolverErrorExitsThree) {
  EXPECT_EQ(run({"spectrum", "--graph", "fig3.g", "--max-sweeps", "0"}).code, 3);
  EXPECT_EQ(run({"spectrum", "--graph", "fig3.g", "--max-sweeps", "-1"}).code, 2);
}

TEST(Cli, ReportsAreDeterministicWithoutTiming) {
  const fs::path a = temp_file("a.jsonl");
  const fs::path b = temp_file("b.jsonl");
  const std::vector<std::string> base{"verify", "--all", "--seed", "3", "--sweeps", "10", "--no-timing"};
  auto with = [&](const fs::path& p, const char* threads) {
    auto args = base;
    args.insert(args.end(), {"--report", p.string(), "--threads", threads});
    return run(args);
  };
  const Outcome one = with(a, "1");
  const Outcome many = with(b, "3");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
  EXPECT_NE(one.out.find(" holds, 0 violated, "), std::string::npos);
  const std::string text = slurp(a);
  EXPECT_FALSE(text.empty());
  EXPECT_EQ(text, slurp(b));
  std::size_t records = 0, zeroed = 0;
  for (std::size_t at = 0; (at = text.find('\n', at)) != std::string::npos; ++at) ++records;
  for (std::size_t at = 0; (at = text.find("\"elapsed_ms\":0.0", at)) != std::string::npos; ++at) ++zeroed;
  EXPECT_EQ(records, zeroed);
}

TEST(Cli, FixtureDirectoryOverride) {
  const fs::path dir = fs::temp_directory_path() / "pyrolace_cli_fixtures";
  fs::create_directories(dir);
  std::ofstream(dir / "tiny.g") << "graph 2\ne x y\n";
  ::setenv("PYROLACE_FIXTURE_DIR", dir.c_str(), 1);
  const Outcome r = run({"burn", "--graph", "tiny.g"});
  ::unsetenv("PYROLACE_FIXTURE_DIR");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "b = 2,");
  EXPECT_EQ(run({"burn", "--graph", "tiny.g"}).code, 2);
}

TEST(Cli, FixturesListing) {
  const Outcome r = run({"fixtures"});
  EXPECT_NE(r.out.find("fig5_hypergraph hypergraph"), std::string::npos);
  EXPECT_EQ(run({"fixtures", "--name", "fig3_graph"}).out.substr(0, 8), "graph 8\n");
}
