#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "nilsol/catalog.hpp"
#include "nilsol/cli.hpp"
#include "nilsol/io.hpp"

using namespace nilsol;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const CliEnvironment* env = nullptr) {
  std::ostringstream out, err;
  const int code = env ? run_cli(args, out, err, *env) : run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NILSOL_TEST_DATA) + "/" + name; }

Json json_of(const Run& r) { return Json::parse(r.out); }

}  // namespace

TEST(Cli, CertifyHeisenberg) {
  const auto r = run({"certify", data("heis3.alg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CERTIFIED_STANDARD(R1)"), std::string::npos) << r.out;
  const auto j = json_of(run({"certify", data("heis3.alg"), "--json"}));
  EXPECT_EQ(j["results"]["phi"], Json::parse(R"(["2/3", "2/3", "4/3"])"));
  EXPECT_EQ(j["results"]["reverified"], "ok");
}

TEST(Cli, NilsolitonJson) {
  const auto r = run({"nilsoliton", data("dim7_p2.alg"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["command"], "nilsoliton");
  EXPECT_LT(Scalar::parse(j["results"]["certificate"]["c"].get<std::string>()).sign(), 0);
}

TEST(Cli, SplitOnlyExitsThree) {
  const auto r = run({"certify", "g550"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("SPLIT_STANDARD_ONLY"), std::string::npos);
  EXPECT_EQ(run({"nilsoliton", "g220"}).code, 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"certify", data("jacobi_bad.alg")}).code, 2);
  EXPECT_EQ(run({"check", "no_such_file_or_name"}).code, 1);
  const auto tmp = std::filesystem::temp_directory_path() / "nilsol_cli_bad.alg";
  write_text_file(tmp.string(), "algebra x\ndim 2\nbracket [e1,e2] = 2e2\n");
  const auto r = run({"check", tmp.string(), "--json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(json_of(r)["status"], "error");
  // solvable but not nilpotent
  write_text_file(tmp.string(), "algebra aff\ndim 2\nbracket [e1,e2] = e2\n");
  EXPECT_EQ(run({"certify", tmp.string()}).code, 2);
  EXPECT_EQ(run({"ricci", tmp.string()}).code, 0);
  std::filesystem::remove(tmp);
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"ricci", "rigid35", "--json"},
        std::vector<std::string>{"opq-density", "2", "4", "5", "--seed", "3", "--json"},
        std::vector<std::string>{"twostep", "nonsingular", "nf25_1", "--seed", "9"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, TextAndJsonAgree) {
  const auto j = json_of(run({"ricci", "type25_a", "--json"}));
  const std::string text = run({"ricci", "type25_a"}).out;
  for (const auto& row : j["results"]["ric"]) {
    for (const auto& x : row) EXPECT_NE(text.find(x.get<std::string>()), std::string::npos);
  }
}

TEST(Cli, ConstructionsEmitFiles) {
  const auto cat = run({"catalog", "heis3"});
  EXPECT_EQ(cat.out, emit_algebra_file(make_algebra_file("heis3", catalog("heis3").algebra,
                                                         Matrix::identity(3))));
  EXPECT_EQ(parse_algebra_file(run({"free", "2", "3"}).out).algebra.dim(), 5u);
  const auto g = json_of(run({"graph", "gnn0", "5", "--json"}));
  EXPECT_EQ(g["results"]["weight"], "-1/11");
  EXPECT_EQ(parse_algebra_file(run({"graph", "3", "1-2", "2-3"}).out).algebra.dim(), 5u);
  EXPECT_EQ(run({"graph", "3", "1-x"}).code, 1);

  const auto tmp = std::filesystem::temp_directory_path() / "nilsol_cli_dm.alg";
  const auto r = run({"twostep", "dminus1", "3", "1", "--out", tmp.string(), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["results"]["mu_b1"], "3");
  EXPECT_EQ(j["results"]["c"], "-4");
  const auto f = parse_algebra_file(read_text_file(tmp.string()));
  EXPECT_EQ(f.metric, MetricKind::Orthonormal);
  EXPECT_EQ(run({"nilsoliton", tmp.string()}).code, 0);
  EXPECT_EQ(run({"extend", tmp.string()}).code, 0);
  std::filesystem::remove(tmp);
}

TEST(Cli, TwoStepCommands) {
  const auto j = json_of(run({"twostep", "opq", data("quat34.tsp"), "--json"}));
  EXPECT_EQ(j["results"]["member"], true);
  EXPECT_EQ(j["results"]["mu"], "5/8");
  const auto n = json_of(run({"twostep", "opq", "nf25_2", "--json"}));
  EXPECT_EQ(n["results"]["member"], false);
  EXPECT_EQ(n["results"]["witness_trace"], "0");
  EXPECT_EQ(json_of(run({"twostep", "nonsingular", data("quat34.tsp"), "--json"}))["results"]["status"],
            "nonsingular");
  const auto dual = run({"twostep", "dual", data("quat34.tsp")});
  EXPECT_EQ(parse_twostep_file(dual.out).presentation.p(), 3u);
  EXPECT_EQ(run({"twostep", "opq", "free23"}).code, 2);
}

TEST(Cli, DensitySpotCheck) {
  const auto j = json_of(run({"opq-density", "1", "2", "20", "--seed", "1", "--json"}));
  EXPECT_EQ(j["results"]["fraction"], "1");
  EXPECT_EQ(json_of(run({"opq-density", "1", "3", "20", "--json"}))["results"]["fraction"], "0");
  EXPECT_EQ(j["inputs"]["seed"], 1);
  EXPECT_EQ(json_of(run({"opq-density", "2", "5", "10", "--json"}))["results"]["fraction"], "0");
}

TEST(Cli, SuiteNamesCorruptedEntry) {
  CliEnvironment env{[](const std::string& name) {
    if (name != "heis3") return catalog(name);
    // [e1,e2] = 2 e3 is isomorphic to h3 but breaks the orthonormal constants
    return MetricLieAlgebra::orthonormal(LieAlgebra::build(3, {{0, 1, 2, Scalar(2)}}));
  }};
  const auto r = run({"paper-suite", "--json"}, &env);
  EXPECT_EQ(r.code, 3);
  const auto failures = json_of(r)["results"]["failures"];
  EXPECT_EQ(failures, Json::parse(R"(["heis3.end_to_end"])")) << failures.dump();
}
