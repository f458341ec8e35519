#include <cmath>

#include <gtest/gtest.h>

#include "garsia/entropy/bounds.hpp"
#include "garsia/expansion/value_set.hpp"
#include "oracles.hpp"

using namespace garsia;

namespace {

AlgebraicReal tau() { return isolate_real_roots(parse_polynomial("x^2-x-1"), Rational(1), Rational(2)).at(0); }

double phi() { return (1 + std::sqrt(5.0)) / 2; }

}  // namespace

TEST(Bound, ZeroWhenEveryWordOverlaps) {
  const mpfr_prec_t bits = bits_for_digits(50);
  for (int n = 1; n <= 10; ++n) {
    Interval b = bound_value(Interval(Rational(3, 2), bits), n, std::uint64_t{1} << n);
    EXPECT_EQ(b.sign(), std::optional<int>(0));
  }
}

TEST(Bound, MatchesClosedFormAndDecreasesInM) {
  const mpfr_prec_t bits = bits_for_digits(50);
  const Rational beta(17, 10);
  for (int n = 2; n <= 8; ++n) {
    Interval prev = bound_value(Interval(beta, bits), n, 1);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      Interval b = bound_value(Interval(beta, bits), n, m);
      const double want = (std::log(2.0) - std::log(static_cast<double>(m)) / n) / std::log(1.7);
      EXPECT_NEAR(b.mid_double(), want, 1e-12);
      EXPECT_LT(b.width_exponent(), -150);
      if (m > 1) {
        EXPECT_TRUE(b.certainly_less(prev));
      }
      prev = b;
    }
  }
  EXPECT_THROW(bound_value(Interval(beta, bits), 3, 0), std::invalid_argument);
}

TEST(Bound, GoldenRatioLengthTwo) {
  BoundResult r = compute_bound(BetaContext::symbolic(tau()), 2);
  EXPECT_EQ(r.m_n, 2u);
  EXPECT_EQ(r.bound_lower(7), "0.7202100");
  EXPECT_NEAR(r.bound.mid_double(), std::log(2.0) / (2 * std::log(phi())), 1e-15);
  EXPECT_EQ(r.growth_upper_decimal(6), "1.414214");
  EXPECT_EQ(r.mode, Mode::symbolic);
}

TEST(Bound, RationalBaseUsesBruteForceCount) {
  for (const char* s : {"1.3", "1.55", "1.77", "1.95"}) {
    Rational beta = parse_rational(s);
    for (int n = 2; n <= 7; ++n) {
      BoundResult r = compute_bound(BetaContext::numeric(beta), n);
      EXPECT_EQ(r.m_n, oracle::max_open(beta, n)) << s << " n=" << n;
    }
  }
}

TEST(Multinacci, ClosedFormsAndIdentity) {
  const std::vector<std::string> want{"0.9404", "0.8531", "0.8450", "0.8545"};
  for (unsigned m = 2; m <= 5; ++m) {
    Interval b = multinacci_bound(m);
    EXPECT_EQ(b.mid_decimal(4), want[m - 2]) << m;
    EXPECT_LT(b.upper_double(), reference_entropy(m));
  }
  for (unsigned m = 2; m <= 12; ++m) {
    Interval a = multinacci_bound(m), b = multinacci_bound_from_growth(m);
    EXPECT_EQ(a.mid_decimal(30), b.mid_decimal(30)) << m;
    EXPECT_TRUE(a.overlaps(b));
  }
  EXPECT_NEAR(multinacci(3).approx(), 1.839286755214161, 1e-14);
  EXPECT_THROW(multinacci(1), std::invalid_argument);
  EXPECT_THROW(reference_entropy(9), std::out_of_range);
}

TEST(EntropyEstimate, HandComputedValuesAtTheGoldenRatio) {
  BetaContext ctx = BetaContext::symbolic(tau());
  const double log_tau_2 = std::log(2.0) / std::log(phi());
  EXPECT_NEAR(entropy_estimate(ctx, 2).mid_double(), log_tau_2, 1e-14);
  EXPECT_NEAR(entropy_estimate(ctx, 3).mid_double(), (22.0 / 8) * std::log(2.0) / (3 * std::log(phi())), 1e-14);
  double prev = 10;
  for (int n = 2; n <= 14; ++n) {
    double v = entropy_estimate(ctx, n).mid_double();
    EXPECT_LE(v, log_tau_2 + 1e-12);
    EXPECT_GE(v, 0.9957 - 1e-4);
    EXPECT_LE(v, prev + 1e-12);
    prev = v;
  }
}

TEST(EntropyEstimate, MatchesBruteForceMultiplicities) {
  for (const char* s : {"1.5", "1.75", "1.2"}) {
    Rational beta = parse_rational(s);
    BetaContext ctx = BetaContext::numeric(beta);
    for (int n = 1; n <= 9; ++n) {
      double sum = 0;
      for (const auto& [v, p] : oracle::value_multiplicities(beta, n)) sum += p * std::log(static_cast<double>(p));
      const double h = n * std::log(2.0) - sum / std::ldexp(1.0, n);
      EXPECT_NEAR(entropy_estimate(ctx, n).mid_double(), h / (n * std::log(to_double(beta))), 1e-12) << s << " " << n;
    }
  }
}
