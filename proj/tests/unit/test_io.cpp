#include <gtest/gtest.h>

#include "generators.hpp"
#include "nilsol/catalog.hpp"
#include "nilsol/io.hpp"
#include "nilsol/report.hpp"

using namespace nilsol;

namespace {

std::string data(const std::string& name) {
  return read_text_file(std::string(NILSOL_TEST_DATA) + "/" + name);
}

std::size_t error_line(const std::string& text) {
  try {
    parse_algebra_file(text);
  } catch (const FileError& e) {
    return e.line;
  }
  return 999;
}

}  // namespace

TEST(AlgebraFile, Heisenberg) {
  const auto f = parse_algebra_file("algebra heis3\ndim 3\nbracket [e1,e2] = e3\n");
  EXPECT_EQ(f.name, "heis3");
  EXPECT_EQ(f.algebra, nilsol::testing::heisenberg());
  EXPECT_EQ(f.metric, MetricKind::None);
  EXPECT_FALSE(f.gram_or_none());
  EXPECT_EQ(parse_algebra_file(data("heis3.alg")).algebra, f.algebra);
}

TEST(AlgebraFile, RadicalConstants) {
  const auto f = parse_algebra_file(data("dim7_p2.alg"));
  EXPECT_EQ(f.algebra, catalog("dim7_p2").algebra);
  EXPECT_EQ(f.metric, MetricKind::Orthonormal);
  const auto g = parse_algebra_file(
      "algebra t\ndim 3\nbracket [e2,e1] = -3/2*sqrt(12)*e3 + (1 + sqrt(2))*e3\n");
  EXPECT_EQ(g.algebra.bracket_basis(0, 1),
            (SparseVector{{2, Scalar(3) * Scalar::sqrt_of(3) - Scalar(1) - Scalar::sqrt_of(2)}}));
}

TEST(AlgebraFile, JacobiViolationNamesTriple) {
  try {
    parse_algebra_file(data("jacobi_bad.alg"));
    FAIL() << "accepted a Jacobi violation";
  } catch (const InvalidAlgebra& e) {
    ASSERT_TRUE(e.violation);
    EXPECT_NE(std::string(e.what()).find("(e1, e2, e3)"), std::string::npos) << e.what();
  }
}

TEST(AlgebraFile, SyntaxErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("algebra a\ndim 2\n\nbracket [e1,e3] = e2\n"), 4u);
  EXPECT_EQ(error_line("algebra a\ndim 2\nbracket [e1,e2] = 1/0*e2\n"), 3u);
  EXPECT_EQ(error_line("algebra a\ndim 2\nbracket [e1,e2] = sqrt(-2)*e2\n"), 3u);
  EXPECT_EQ(error_line("algebra a\ndim x\n"), 2u);
  EXPECT_EQ(error_line("algebra a\n# note\nfoo 3\n"), 3u);
  EXPECT_EQ(error_line("algebra a\ndim 2\nbasis x\n"), 3u);
  EXPECT_EQ(error_line("algebra a\ndim 2\nbracket [e1,e2] = e2\nbracket [e2,e1] = e1\n"), 4u);
  EXPECT_EQ(error_line("dim 2\n"), 0u);
  EXPECT_EQ(error_line("algebra a\ndim 2\nmetric gram\n1 0\n"), 3u);
}

TEST(AlgebraFile, BadGramRejected) {
  EXPECT_THROW(parse_algebra_file("algebra a\ndim 2\nmetric gram\n1 2\n2 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_algebra_file("algebra a\ndim 2\nmetric gram\n1 1\n0 1\n"), std::invalid_argument);
}

TEST(AlgebraFile, CatalogRoundTrip) {
  for (const auto& name : catalog_names()) {
    const auto m = catalog(name);
    const auto f = make_algebra_file(name, m.algebra, m.gram);
    const std::string text = emit_algebra_file(f);
    const auto back = parse_algebra_file(text);
    EXPECT_EQ(back.algebra, m.algebra) << name;
    EXPECT_EQ(back.algebra.labels(), m.algebra.labels()) << name;
    EXPECT_EQ(emit_algebra_file(back), text) << name;
  }
}

TEST(AlgebraFile, RandomBasisChangeRoundTrip) {
  std::mt19937_64 rng(41);
  int done = 0;
  for (int trial = 0; trial < 40 && done < 12; ++trial) {
    const auto m = catalog(catalog_names()[rng() % 6]);
    const Matrix p = nilsol::testing::random_square(rng, m.dim());
    if (determinant(p).is_zero()) continue;
    const LieAlgebra l = change_basis(m.algebra, p * Scalar::sqrt_of(2));
    Matrix gram = p.transpose() * p + Matrix::identity(m.dim());
    const auto f = make_algebra_file("rnd", l, gram);
    const std::string text = emit_algebra_file(f);
    const auto back = parse_algebra_file(text);
    EXPECT_EQ(back.algebra, l);
    EXPECT_EQ(back.gram, gram);
    EXPECT_EQ(emit_algebra_file(back), text);
    ++done;
  }
  EXPECT_EQ(done, 12);
}

TEST(TwoStepFile, RoundTripAndErrors) {
  const auto f = parse_twostep_file(data("quat34.tsp"));
  EXPECT_EQ(f.name, "quat34");
  EXPECT_EQ(f.presentation.algebra(), catalog("quat34").algebra);
  EXPECT_EQ(parse_twostep_file(emit_twostep_file(f)).presentation.matrices(), f.presentation.matrices());
  EXPECT_THROW(parse_twostep_file("q 2\nJ\n0 1\n1 0\n"), FileError);  // not skew
  EXPECT_THROW(parse_twostep_file("q 2\nJ\n0 1\n-1 0\nJ\n0 2\n-2 0\n"), FileError);  // dependent
  EXPECT_THROW(parse_twostep_file("J\n"), FileError);
}

TEST(Report, TextAndJsonShareScalars) {
  Report r;
  r.command = "demo";
  r.results["x"] = to_json(Scalar(1) + Scalar::sqrt_of(2));
  r.results["m"] = to_json(Matrix::diagonal({Scalar::rational(-1, 2), Scalar(3)}));
  const std::string json = r.to_json().dump();
  const std::string text = r.to_text();
  for (const char* s : {"1 + sqrt(2)", "-1/2", "3"}) {
    EXPECT_NE(json.find(s), std::string::npos) << s;
    EXPECT_NE(text.find(s), std::string::npos) << s;
  }
}
