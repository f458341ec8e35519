#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "garsia/cli/config.hpp"
#include "garsia/cli/emit.hpp"

using namespace garsia;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TransitionOptions quick() {
  TransitionOptions o;
  o.workers = 1;
  return o;
}

}  // namespace

TEST(BetaSpec, DecimalsAndFractionsAreNumeric) {
  BetaSpec s = parse_beta_spec("1.85");
  ASSERT_TRUE(s.rational);
  EXPECT_EQ(*s.rational, Rational(37, 20));
  EXPECT_FALSE(s.polynomial_rooted());
  EXPECT_EQ(make_context(s, RunConfig{}).mode(), Mode::numeric);
  EXPECT_EQ(*parse_beta_spec("7/4").rational, Rational(7, 4));
}

TEST(BetaSpec, PolynomialRootsAreSymbolicInAutoMode) {
  BetaSpec s = parse_beta_spec("poly:x^5-2x^4+x^3-x^2+x-1@(1.6,1.7)");
  ASSERT_TRUE(s.polynomial_rooted());
  EXPECT_NEAR(s.algebraic->approx(), 1.6737, 1e-4);
  RunConfig cfg;
  EXPECT_EQ(make_context(s, cfg).mode(), Mode::symbolic);
  cfg.mode = ModeChoice::numeric;
  EXPECT_EQ(make_context(s, cfg).mode(), Mode::numeric);
  cfg.mode = ModeChoice::symbolic;
  EXPECT_THROW(make_context(parse_beta_spec("1.5"), cfg), std::invalid_argument);
}

TEST(BetaSpec, RootIsNormalized) {
  // tau times cyclotomic and repeated factors and a factor x
  IntPolynomial t = parse_polynomial("x^2-x-1");
  IntPolynomial p = t * t * parse_polynomial("x^2+1") * IntPolynomial::x();
  BetaSpec s = parse_beta_spec("poly:" + p.to_string() + "@(1.5,1.7)");
  EXPECT_EQ(s.algebraic->polynomial(), parse_polynomial("x^2-x-1"));
}

TEST(BetaSpec, RejectsMalformedInput) {
  EXPECT_THROW(parse_beta_spec("poly:x^2-2"), ParseError);
  EXPECT_THROW(parse_beta_spec("poly:x^2-2@[1,2]"), ParseError);
  EXPECT_THROW(parse_beta_spec("poly:x^2-2@(2,1)"), ParseError);
  EXPECT_THROW(parse_beta_spec("poly:x^2-2@(-2,2)"), ParseError);  // two roots
  EXPECT_THROW(parse_beta_spec("poly:x^2-2@(1.5,2)"), ParseError);  // none
  EXPECT_THROW(parse_beta_spec("one point five"), ParseError);
}

TEST(RunConfig, ValidationAndEnvironment) {
  RunConfig c;
  EXPECT_EQ(c.precision_digits, 50);
  EXPECT_EQ(c.cap, 8);
  EXPECT_GE(c.workers, 1u);
  EXPECT_NO_THROW(c.validate());
  c.precision_digits = 14;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.precision_digits = 30;
  c.workers = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);

  ::setenv("GARSIA_PRECISION", "77", 1);
  ::setenv("GARSIA_WORKERS", "3", 1);
  RunConfig e = RunConfig::from_env();
  EXPECT_EQ(e.precision_digits, 77);
  EXPECT_EQ(e.workers, 3u);
  ::setenv("GARSIA_WORKERS", "many", 1);
  EXPECT_THROW(RunConfig::from_env(), std::invalid_argument);
  ::unsetenv("GARSIA_PRECISION");
  ::unsetenv("GARSIA_WORKERS");

  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_EQ(parse_mode("auto"), ModeChoice::automatic);
  EXPECT_THROW(parse_format("xml"), ParseError);
  EXPECT_THROW(parse_mode("fast"), ParseError);
}

TEST(Emit, CertifiedDecimalDropsUncertainDigits) {
  const mpfr_prec_t bits = 128;
  EXPECT_EQ(certified_decimal(Interval(Rational(1, 3), bits), 6), "0.333333");
  // both ends round differently at 3 places, agree at 2
  EXPECT_EQ(certified_decimal(Interval(Rational(12344, 10000), Rational(12346, 10000), bits), 3), "1.23");
}

TEST(Emit, CsvFieldQuoting) {
  EXPECT_EQ(csv_field("abc"), "abc");
  EXPECT_EQ(csv_field("(0,1)_L"), "\"(0,1)_L\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("a,\"b\""), "\"a,\"\"b\"\"\"");
}

TEST(Emit, ProfileCsvSchema) {
  auto ctx = BetaContext::numeric(parse_rational("1.85"));
  auto prof = max_overlap(ctx, 3);
  auto rows = lines(profile_csv(prof, ctx, 12));
  EXPECT_EQ(rows.front(), "left,right,count,left_word,right_word");
  EXPECT_EQ(rows.size(), prof.segments() + 1);

  auto sym = BetaContext::symbolic(*parse_beta_spec("poly:x^2-x-1@(1.5,1.7)").algebraic);
  auto sprof = max_overlap(sym, 2);
  auto srows = lines(profile_csv(sprof, sym, 12));
  EXPECT_EQ(srows.front(), "left,right,count,left_word,right_word,left_exact,right_exact");
  EXPECT_EQ(srows.size(), sprof.segments() + 1);
  EXPECT_NE(srows[1].find("beta"), std::string::npos);
}

TEST(Emit, TransitionsJsonSchema) {
  auto j = json::parse(transitions_json(transitions(2, Rational(1), Rational(2), quick()), 15));
  ASSERT_EQ(j.size(), 2u);
  for (const auto& p : j) {
    for (const char* key : {"polynomial", "isolating_interval", "approx_value", "pisot", "sources_count"})
      EXPECT_TRUE(p.contains(key)) << key;
    EXPECT_EQ(p["isolating_interval"].size(), 2u);
  }
  EXPECT_EQ(j[0]["polynomial"], "x^2-2");
  EXPECT_EQ(j[0]["pisot"], "false");
  EXPECT_EQ(j[1]["approx_value"], "1.618033988749895");
  EXPECT_EQ(j[1]["pisot"], "true");
}

TEST(Emit, SweepCsvSchema) {
  TransitionOptions o = quick();
  o.classify = false;
  auto rows = lines(sweep_csv(sweep_report(2, Rational(1), Rational(2), o), 10));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "left,right,midpoint,m_n,bound_left,bound_right,bound_min");
  EXPECT_EQ(rows[1].substr(0, rows[1].find(',')), "1.0000000000");
  EXPECT_NE(rows[1].find(",inf,"), std::string::npos);
  EXPECT_NE(rows[3].find(",2,0.7202100452,"), std::string::npos);
}

TEST(Emit, BoundJsonSchema) {
  auto ctx = BetaContext::symbolic(*parse_beta_spec("poly:x^2-x-1@(1.5,1.7)").algebraic);
  json j = bound_json(compute_bound(ctx, 2), 7);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["m_n"], 2);
  EXPECT_EQ(j["bound_lower_certified"], "0.7202100");
  EXPECT_EQ(j["mode"], "symbolic");
  EXPECT_TRUE(j.contains("growth_upper"));
  EXPECT_TRUE(j.contains("beta"));
}
