#include <gtest/gtest.h>

#include "poz/errors.hpp"
#include "poz/generators.hpp"
#include "poz/io.hpp"
#include "poz/json_io.hpp"
#include "poz/poly_ops.hpp"
#include "suites.hpp"

using namespace poz;

namespace {

std::string parse_error(const char* text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(Parser, Grammar) {
  EXPECT_EQ(parse("-(z[1] - 2)^2/4"), parse("-1/4*z[1]^2 + z[1] - 1"));
  EXPECT_EQ(parse("z[2,1]*xi[1] + t[2]"),
            Polynomial::variable(z(2, 1)) * Polynomial::variable(Variable::offset(1)) +
                Polynomial::variable(Variable::scratch(2)));
  EXPECT_EQ(parse("  z[1]\n * z[1]"), parse("z[1]^2"));
  EXPECT_EQ(parse("0"), Polynomial());
}

TEST(Parser, Errors) {
  EXPECT_EQ(parse_error("z[1]^-1"), "1:6: negative exponent");
  EXPECT_EQ(parse_error("2 z[1]"), "1:3: implicit multiplication is not allowed");
  EXPECT_EQ(parse_error("z[1]/0"), "1:6: zero denominator");
  EXPECT_NE(parse_error("z[1"), "");
  EXPECT_NE(parse_error("z[0]"), "");
  EXPECT_NE(parse_error("(z[1]"), "");
  EXPECT_NE(parse_error("z[1]/z[2]"), "");
  EXPECT_NE(parse_error("y"), "");
  EXPECT_EQ(parse_error("z[1] +\n  @"), "2:3: unexpected character '@'");
}

TEST(Printer, CanonicalText) {
  EXPECT_EQ(to_string(cubic_counterexample()).substr(0, 12), "2/27*z[1]^3 ");
  EXPECT_EQ(to_string(Polynomial()), "0");
  EXPECT_EQ(to_string(parse("z[2] - z[1]")), "-z[1] + z[2]");
  EXPECT_EQ(to_string(ratio(-6, 4)), "-3/2");
}

TEST(Printer, RoundTrip) {
  suites::Gen g(53);
  const std::vector<Variable> vars{z(1), z(3, 2), Variable::offset(1)};
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = g.polynomial(vars, 5, 4).scaled(ratio(g.coefficient(), g.between(1, 6)));
    ASSERT_EQ(parse(to_string(p)), p) << to_string(p);
  }
}

TEST(Json, Rationals) {
  const Json j = rational_json(ratio(-7, 3));
  EXPECT_EQ(j["num"], "-7");
  EXPECT_EQ(j["den"], "3");
  EXPECT_EQ(rational_from_json(j), ratio(-7, 3));
  EXPECT_EQ(rational_from_json(Json{{"num", "4"}, {"den", "-6"}}), ratio(-2, 3));
  EXPECT_THROW(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), Error);
  EXPECT_THROW(rational_from_json(Json{{"num", 1}}), Error);
}

TEST(Json, Patterns) {
  const PatternOfZeros pat{2, 2, {0, 1}};
  EXPECT_EQ(pattern_from_json(pattern_to_json(pat)), pat);
  EXPECT_THROW(pattern_from_json(Json{{"n", 2}, {"m", 2}, {"S", {0}}}), PreconditionError);
}

TEST(Json, PolynomialDigestIsStable) {
  const Json a = polynomial_json(laughlin(3, 1)), b = polynomial_json(parse(to_string(laughlin(3, 1))));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["terms"], 6);
  EXPECT_EQ(digest("abc").size(), 16u);
  EXPECT_FALSE(polynomial_json(laughlin(4, 2), 10).contains("text"));
}

TEST(Json, EnvelopeTiming) {
  ReportEnvelope env;
  env.command = "demo";
  env.elapsed_ms = 12.5;
  AnalysisReport r;
  r.subject = "x";
  r.add("ok", true);
  r.add("guess", false, {}, "conjectural");
  env.add(r);
  const Json doc = env.to_json();
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_EQ(doc["tool"]["name"], kToolName);
  EXPECT_EQ(doc["timing"]["elapsed_ms"], 12.5);
  EXPECT_FALSE(strip_timing(doc).contains("timing"));
  AnalysisReport bad;
  bad.add("broken", false);
  env.add(bad);
  EXPECT_FALSE(env.pass);
}

TEST(Generators, FamilySpecs) {
  EXPECT_EQ(generate(family_from_json(Json::parse(R"({"kind":"laughlin","N":3,"m":2})"))), laughlin(3, 2));
  const FamilySpec spec = family_from_json(Json::parse(R"({"kind":"random_ti_symmetric","N":3,"degree_cap":4,"seed":9})"));
  EXPECT_EQ(generate(spec), generate(spec));
  EXPECT_EQ(family_from_json(family_to_json(spec)).seed, 9u);
  EXPECT_THROW(family_from_json(Json::parse(R"({"kind":"laughlin","N":3,"bogus":1})")), PreconditionError);
  EXPECT_THROW(generate({"nope", 3, 1, 0, 0}), PreconditionError);
  EXPECT_THROW(laughlin(1, 2), PreconditionError);
  for (const auto& kind : family_kinds()) EXPECT_FALSE(kind.empty());
}

TEST(Generators, RandomFamiliesAreSymmetricAndInvariant) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Polynomial p = random_ti_symmetric(4, 5, seed);
    ASSERT_FALSE(p.is_zero());
    ASSERT_TRUE(is_symmetric(p));
    ASSERT_TRUE(is_translation_invariant(p));
  }
}

TEST(Generators, NamedExamples) {
  EXPECT_EQ(laughlin(2, 3), parse("(z[1] - z[2])^3"));
  EXPECT_EQ(nonhomog_counterexample(), parse("(z[3] - (z[1] + z[2])/2)^3 + (z[1] - z[2])^2"));
  EXPECT_EQ(ulc_counterexample().leading().monomial.total_degree(), 10u);
  EXPECT_TRUE(is_symmetric(symm_product(nonhomog_counterexample())));
  EXPECT_THROW(symm_product(parse("z[1]*z[2]")), PreconditionError);
}

} // namespace
