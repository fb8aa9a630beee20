#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "csupp/cli.hpp"
#include "csupp/io.hpp"

using namespace csupp;
using io::Json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string catalog_doc(const std::string& name, std::uint32_t p) {
  return io::to_json(catalog::make(name, p)).dump();
}

}  // namespace

TEST(AlgebraDocument, RoundTrip) {
  for (const auto& name : catalog::names()) {
    for (std::uint32_t p : {2U, 3U, 5U}) {
      const LieAlgebra L = catalog::make(name, p);
      const LieAlgebra back = io::parse_algebra(io::to_json(L).dump());
      EXPECT_EQ(back, L) << name;
      EXPECT_EQ(back.names(), L.names());
    }
  }
}

TEST(AlgebraDocument, ReducesCoefficients) {
  const LieAlgebra L = io::parse_algebra(
      R"({"field":{"prime":3},"dim":2,"brackets":[{"i":0,"j":1,"coeffs":{"1":-2}}]})");
  EXPECT_EQ(L, catalog::nonabelian2(PrimeField(3)));
}

TEST(AlgebraDocument, Rejections) {
  const std::vector<std::string> bad{
      "not json",
      R"({"dim":2})",
      R"({"field":{"prime":4},"dim":2})",
      R"({"field":{"prime":2},"dim":-1})",
      R"({"field":{"prime":2},"dim":2,"basis":["x"]})",
      R"({"field":{"prime":2},"dim":2,"brackets":[{"i":1,"j":0,"coeffs":{"0":1}}]})",
      R"({"field":{"prime":2},"dim":2,"brackets":[{"i":0,"j":0,"coeffs":{}}]})",
      R"({"field":{"prime":2},"dim":2,"brackets":[{"i":0,"j":2,"coeffs":{}}]})",
      R"({"field":{"prime":2},"dim":2,"brackets":[{"i":0,"j":1,"coeffs":{"2":1}}]})",
      R"({"field":{"prime":2},"dim":2,"brackets":[{"i":0,"j":1,"coeffs":{"x":1}}]})",
      R"({"field":{"prime":2},"dim":2,"brackets":[{"i":0,"j":1,"coeffs":{"0":1.5}}]})",
      R"({"field":{"prime":2},"dim":2,"brackets":[{"i":0,"j":1,"coeffs":{"1":1}},{"i":0,"j":1,"coeffs":{"1":1}}]})",
      R"({"field":{"prime":2},"dim":3,"brackets":[{"i":0,"j":1,"coeffs":{"0":1}},{"i":0,"j":2,"coeffs":{"1":1}}]})",
  };
  for (const auto& doc : bad) EXPECT_THROW(io::parse_algebra(doc), InvalidAlgebra) << doc;
}

TEST(AlgebraDocument, HashIgnoresNames) {
  const PrimeField F(3);
  const LieAlgebra a = catalog::heisenberg(F);
  const LieAlgebra b(F, 3, a.table(), {"p", "q", "r"});
  EXPECT_EQ(io::algebra_hash(a), io::algebra_hash(b));
  EXPECT_NE(io::algebra_hash(a), io::algebra_hash(catalog::abelian(F, 3)));
}

TEST(AlgebraDocument, SubspaceArgument) {
  const PrimeField F(3);
  const Subspace U = io::parse_subspace(F, 3, "1 1 0  0 2 2");
  EXPECT_EQ(U.dim(), 2U);
  EXPECT_THROW(io::parse_subspace(F, 3, "1 0"), DimensionMismatch);
  EXPECT_THROW(io::parse_subspace(F, 3, "1 a 0"), InvalidAlgebra);
}

TEST(Report, StableApartFromTiming) {
  const LieAlgebra L = catalog::counterexample_double(PrimeField(2));
  const Json a = io::to_json(classify(build_lattice(L)), L);
  const Json b = io::to_json(classify(build_lattice(L, {.workers = 3}), {.workers = 3}), L);
  EXPECT_EQ(io::without_timing(a), io::without_timing(b));
  std::vector<std::string> keys;
  for (const auto& [k, v] : a.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"tool", "algebra", "degenerate", "predicates", "phi_dim", "witnesses",
                                            "lattice", "timing"}));
  EXPECT_EQ(a["witnesses"]["c_supplemented_failing"], Json::parse("[[0,0,1,0,0,1]]"));
}

TEST(Cli, CatalogThenClassify) {
  const CliRun cat = run({"catalog", "heisenberg", "--field", "2"});
  ASSERT_EQ(cat.code, 0) << cat.err;
  const CliRun cls = run({"classify"}, cat.out);
  ASSERT_EQ(cls.code, 0) << cls.err;
  const Json r = Json::parse(cls.out);
  EXPECT_TRUE(r["predicates"]["c_supplemented"].get<bool>());
  EXPECT_EQ(r["phi_dim"].get<int>(), 1);
  // The emitted document validates and reclassifies to the same report.
  const CliRun again = run({"classify"}, io::to_json(io::parse_algebra(cat.out)).dump());
  EXPECT_EQ(io::without_timing(Json::parse(again.out)), io::without_timing(r));
  EXPECT_EQ(run({"validate", "-"}, cat.out).code, 0);
}

TEST(Cli, CheckCounterexampleDouble) {
  const std::string doc = catalog_doc("counterexample_double", 2);
  const CliRun r = run({"check", "--property", "c-supplemented"}, doc);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["failing"], Json::parse("[[0,0,1,0,0,1]]"));
  const CliRun sub = run({"check", "--property", "c-supplemented", "--subspace", "0 0 1 0 0 1"}, doc);
  EXPECT_EQ(sub.code, 1);
  const CliRun ok = run({"check", "--property", "c-supplemented", "--subspace", "1 0 0 1 0 0"}, doc);
  EXPECT_EQ(ok.code, 0) << ok.out;
  const CliRun notsub = run({"check", "--property", "c-supplemented", "--subspace", "1 0 0 0 0 0  0 1 0 1 0 0"}, doc);
  EXPECT_EQ(notsub.code, 2);
  EXPECT_EQ(run({"check", "--property", "ideal", "--subspace", "0 0 1 0 0 0"}, doc).code, 0);
  EXPECT_EQ(run({"check", "--property", "solvable"}, doc).code, 0);
  EXPECT_EQ(run({"check", "--property", "main-decomposition"}, doc).code, 1);
  EXPECT_EQ(run({"check", "--property", "frobnicate"}, doc).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"classify", "--bogus"}).code, 2);
  EXPECT_EQ(run({"validate"}, "{").code, 2);
  EXPECT_EQ(run({"validate", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"catalog", "unknown"}).code, 2);
  EXPECT_EQ(run({"catalog", "sl2", "--field", "4"}).code, 2);
  EXPECT_EQ(run({"classify", "--cap", "10"}, catalog_doc("heisenberg", 2)).code, 3);
  EXPECT_EQ(run({"census", "--field", "2", "--dim", "4"}).code, 3);
  EXPECT_EQ(run({"census", "--exhaustive", "--samples", "5"}).code, 2);
  EXPECT_EQ(run({"census", "--min-dim", "3", "--dim", "2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyAndCensus) {
  const CliRun v = run({"verify", "tsolv", "--dim", "3", "--p", "2", "--exhaustive"});
  EXPECT_EQ(v.code, 0) << v.err;
  const Json log = Json::parse(v.out);
  EXPECT_EQ(log["examined"].get<int>(), 125);
  EXPECT_TRUE(log["counterexamples"].empty());
  EXPECT_TRUE(log["confirmed"].get<bool>());

  const CliRun c = run({"census", "--field", "3", "--dim", "2", "--list"});
  ASSERT_EQ(c.code, 0) << c.err;
  const Json s = Json::parse(c.out);
  EXPECT_EQ(s["counts"]["algebras"].get<int>(), 10);
  EXPECT_EQ(s["algebras"].size(), 10U);

  const CliRun r1 = run({"census", "--field", "3", "--dim", "3", "--samples", "50", "--seed", "8"});
  const CliRun r2 = run({"census", "--field", "3", "--dim", "3", "--samples", "50", "--seed", "8"});
  EXPECT_EQ(io::without_timing(Json::parse(r1.out)), io::without_timing(Json::parse(r2.out)));
}

TEST(Cli, OutFlag) {
  const std::string path = ::testing::TempDir() + "csupp_out_test.json";
  const CliRun r = run({"catalog", "sl2", "--field", "3", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(io::parse_algebra(ss.str()), catalog::sl2(PrimeField(3)));
  std::remove(path.c_str());
}
