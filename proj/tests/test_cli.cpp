#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "comb/cli.hpp"
#include "comb/dsl/bundled.hpp"
#include "comb/serialize.hpp"

namespace comb::test {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("combs-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

const char* kGates = R"(backend finfn;
set B = {t, f};
gen n : B -> B = table { t -> f, f -> t };
gen a : B*B -> B = table { (t,t) -> t, (t,f) -> f, (f,t) -> f, (f,f) -> f };
gen o : B*B -> B = table { (t,t) -> t, (t,f) -> t, (f,t) -> t, (f,f) -> f };
comb copy_and : B -> B = stages { 0: B, copy[B]; 1: I, a; tail(2): I, id[B] };
comb slid : B -> B = stages { 0: B, (n * id[B]) . copy[B]; 1: I, a . (n * id[B]); tail(2): I, id[B] };
comb copy_or : B -> B = stages { 0: B, copy[B]; 1: I, o; tail(2): I, id[B] };
)";

TEST_F(Cli, RunFibonacciAsJson) {
  const auto r = run({"run", "fibonacci", "--depth", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  std::vector<long> values;
  for (std::size_t n = 0; n < j.size(); ++n) {
    EXPECT_EQ(j[n]["stage"], n);
    EXPECT_EQ(j[n].begin().key(), "stage");
    values.push_back(j[n]["value"].get<long>());
  }
  EXPECT_EQ(values, (std::vector<long>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34}));
}

TEST_F(Cli, RunFibonacciAsCsv) {
  const auto r = run({"run", "fibonacci", "--depth", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "stage,wire,value\n0,0,0\n1,0,1\n2,0,1\n3,0,2\n");
}

TEST_F(Cli, BundledCircuitsAlsoResolveAsFiles) {
  const auto path = write("fib.comb", std::string(*dsl::bundled_source("fibonacci")));
  const auto r = run({"run", path, "--comb", "unrolled", "--depth", "4", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "stage,wire,value\n0,0,0\n1,0,1\n2,0,1\n3,0,2\n4,0,3\n");
}

TEST_F(Cli, LotkaIsJsonOnly) {
  const auto r = run({"run", "lotka", "--depth", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j[0].begin().key(), "stage");
  EXPECT_EQ(j[0]["support"][0][0], Json::array({"r0", "f0"}));
  EXPECT_EQ(j[0]["support"][0][1], Json({{"num", "1"}, {"den", "1"}}));
  EXPECT_EQ(run({"run", "lotka", "--depth", "1", "--format", "csv"}).code, cli::kUnsupported);
}

TEST_F(Cli, NormalizeIsCartesianOnly) {
  EXPECT_EQ(run({"normalize", "lotka", "--depth", "2"}).code, cli::kUnsupported);
  const auto r = run({"normalize", write("g.comb", kGates), "--comb", "copy_and", "--depth", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["stages"].size(), 2u);
  // h_1 = AND on (x_0, x_1).
  EXPECT_EQ(j["stages"][1]["map"]["table"].size(), 4u);
}

TEST_F(Cli, EqAcceptsASlidVariant) {
  const auto path = write("g.comb", kGates);
  const auto r = run({"eq", path, "--comb", "copy_and", "--comb", "slid", "--depth", "5"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST_F(Cli, EqReportsTheFirstDifference) {
  const auto path = write("g.comb", kGates);
  const auto r = run({"eq", path, "--comb", "copy_and", "--comb", "copy_or", "--depth", "5"});
  EXPECT_EQ(r.code, cli::kUnequal);
  EXPECT_NE(r.out.find("stage 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(t,f)"), std::string::npos) << r.out;
}

TEST_F(Cli, EqOnFibonacciVariants) {
  EXPECT_EQ(run({"eq", "fibonacci", "--comb", "fibonacci", "--comb", "unrolled", "--depth", "12"})
                .code,
            0);
}

TEST_F(Cli, TraceForCombsWithInputs) {
  const auto r = run({"run", write("g.comb", kGates), "--comb", "copy_and", "--depth", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  // Stage 0 has two input prefixes, stage 1 four; outputs are Y_n.
  EXPECT_EQ(j.size(), 6u);
  EXPECT_EQ(j[0].begin().key(), "stage");
  EXPECT_EQ(j[5]["inputs"], Json::array({"f", "f"}));
  EXPECT_EQ(j[5]["outputs"], Json::array({"f"}));
}

TEST_F(Cli, BigFnTracesAreUnsupported) {
  const auto path =
      write("t.comb", "backend bigfn;\ngen s : Z -> Z = builtin succ;\ncomb t : Z -> Z = lift [s];\n");
  EXPECT_EQ(run({"run", path, "--depth", "2"}).code, cli::kUnsupported);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({"run", write("x.comb", "backend finfn;\nset B = {t f};"), "--depth", "1"}).code,
            cli::kSyntax);
  EXPECT_EQ(run({"run", write("y.comb", "backend finfn;\nset B = {t};\ncomb c : B -> B = lift [copy[B]];"),
                 "--depth", "1"})
                .code,
            cli::kType);
  EXPECT_EQ(run({"run", "no-such-file.comb", "--depth", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"run", "fibonacci"}).code, cli::kUsage);
  EXPECT_EQ(run({"run", "fibonacci", "--comb", "nope", "--depth", "1"}).code, cli::kType);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, SyntaxErrorsCarryTheSpan) {
  const auto path = write("u.comb", "backend finfn;\nset B = {t, f};\ncomb c : B -> B =\n  feedback [B (lift [id[B]]);\n");
  const auto r = run({"run", path, "--depth", "1"});
  EXPECT_EQ(r.code, cli::kSyntax);
  EXPECT_NE(r.err.find(":4:3"), std::string::npos) << r.err;
}

TEST_F(Cli, ParseChecksSyntaxOnly) {
  const auto path = write("y.comb", "backend finfn;\nset B = {t};\ncomb c : B -> B = lift [copy[B]];");
  const auto r = run({"parse", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "backend finfn;\nset B = {t};\ncomb c : B -> B =\n    lift [copy[B]];\n");
}

TEST_F(Cli, ExamplesPrintTheBundledSource) {
  const auto r = run({"examples", "lotka"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::string(*dsl::bundled_source("lotka")));
  EXPECT_EQ(run({"examples", "nope"}).code, cli::kUsage);
}

TEST_F(Cli, UnfoldShowsTheOpenComb) {
  const auto r = run({"unfold", "fibonacci", "--depth", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["comb"], "fibonacci");
  EXPECT_EQ(j["unfolded"]["pieces"].size(), 3u);
  EXPECT_EQ(j["unfolded"]["open"], true);
}

TEST_F(Cli, LawsHonorTheSeedOverride) {
  auto r = run({"laws", "--cases", "3", "--depth", "3", "--seed", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS slide invariance"), std::string::npos);
  EXPECT_NE(r.out.find("seed 5"), std::string::npos);
  ::setenv("COMB_SEED", "7", 1);
  r = run({"laws", "--cases", "3", "--depth", "3", "--seed", "5"});
  ::unsetenv("COMB_SEED");
  EXPECT_NE(r.out.find("seed 7"), std::string::npos) << r.out;
  ::setenv("COMB_SEED", "x", 1);
  r = run({"laws", "--cases", "3"});
  ::unsetenv("COMB_SEED");
  EXPECT_EQ(r.code, cli::kUsage);
}

TEST_F(Cli, LawsOnOtherBackends) {
  const auto r = run({"laws", "--backend", "finstoch", "--cases", "3", "--depth", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("causal"), std::string::npos);
  EXPECT_EQ(run({"laws", "--backend", "bigfn", "--cases", "3", "--depth", "3"}).code, 0);
}

}  // namespace
}  // namespace comb::test
