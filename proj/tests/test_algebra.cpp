#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "garsia/algebra/algebraic_real.hpp"
#include "garsia/algebra/cyclotomic.hpp"
#include "garsia/algebra/number_field.hpp"

using namespace garsia;

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

}  // namespace

TEST(Rational, ParsesDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("1.85"), Rational(37, 20));
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_THROW(parse_rational("1.2.3"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
}

TEST(Rational, DecimalRounding) {
  EXPECT_EQ(to_decimal(Rational(2, 3), 4), "0.6667");
  EXPECT_EQ(to_decimal(Rational(2, 3), 4, Rounding::down), "0.6666");
  EXPECT_EQ(to_decimal(Rational(1, 3), 2, Rounding::up), "0.34");
  EXPECT_EQ(to_decimal(Rational(-1, 8), 2, Rounding::down), "-0.13");
}

TEST(Polynomial, ParseAndPrintRoundTrip) {
  for (const char* s : {"x^5-2*x^4+x^3-x^2+x-1", "x^2-x-1", "3*x^3-x+7", "x", "-4"}) {
    IntPolynomial p = P(s);
    EXPECT_EQ(P(p.to_string().c_str()), p) << s;
  }
  EXPECT_EQ(P("x^5-2x^4+x^3-x^2+x-1"), P("x^5-2*x^4+x^3-x^2+x-1"));
  EXPECT_EQ(P("x^2-x-1"), P("[-1,-1,1]"));
  EXPECT_THROW(P("x^^2"), ParseError);
}

TEST(Polynomial, ArithmeticMatchesEvaluation) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto random_poly = [&](int deg) {
    std::vector<Integer> c;
    for (int i = 0; i <= deg; ++i) c.push_back(coef(rng));
    c.back() = 1;
    return IntPolynomial(std::move(c));
  };
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial a = random_poly(trial % 5 + 1), b = random_poly(trial % 3 + 1);
    for (long x = -3; x <= 3; ++x) {
      Integer xi(x);
      EXPECT_EQ((a * b).eval(xi), a.eval(xi) * b.eval(xi));
      EXPECT_EQ((a + b).eval(xi), a.eval(xi) + b.eval(xi));
      EXPECT_EQ((a - b).eval(xi), a.eval(xi) - b.eval(xi));
    }
    auto q = (a * b).exact_quotient(b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
}

TEST(Polynomial, GcdAndSquareFreePart) {
  IntPolynomial f = P("x^2-x-1"), g = P("x^2-2");
  EXPECT_EQ(gcd(f * g, f * P("x+3")), f);
  EXPECT_EQ((f * f * g).square_free_part(), f * g);
  EXPECT_EQ(gcd(f, g).degree(), 0);
  EXPECT_TRUE(P("x^4-x^3-x^2-x+1").is_reciprocal());
  EXPECT_FALSE(f.is_reciprocal());
}

TEST(Sturm, CountsMatchKnownRoots) {
  // (x - 1/2)(x - 3/2)(x - 5/2) scaled
  IntPolynomial p = P("8*x^3-36*x^2+46*x-15");
  SturmSequence s(p);
  EXPECT_EQ(s.count_open(Rational(0), Rational(3)), 3);
  EXPECT_EQ(s.count_open(Rational(1, 2), Rational(3, 2)), 0);
  EXPECT_EQ(s.count_closed(Rational(1, 2), Rational(3, 2)), 2);
  EXPECT_EQ(s.count_half_open(Rational(1, 2), Rational(3, 2)), 1);
}

TEST(AlgebraicReal, IsolationAgreesWithFloatingRoots) {
  IntPolynomial p = P("x^5-2*x^4+x^3-x^2+x-1");
  auto roots = real_roots(p);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].approx(), 1.6737, 1e-4);
  auto sq = isolate_real_roots(P("x^2-2"), Rational(-2), Rational(2));
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_NEAR(sq[0].approx(), -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(sq[1].approx(), std::sqrt(2.0), 1e-12);
}

TEST(AlgebraicReal, RootOnIntervalEndpointIsHandled) {
  // 1 is a root of x^3 - 2x^2 + 1 = (x-1)(x^2-x-1)
  auto roots = isolate_real_roots(P("x^3-2*x^2+1"), Rational(1), Rational(2));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].approx(), (1 + std::sqrt(5.0)) / 2, 1e-12);
}

TEST(AlgebraicReal, ExactComparisonAcrossPolynomials) {
  AlgebraicReal a = isolate_real_roots(P("x^2-2"), Rational(1), Rational(2)).at(0);
  AlgebraicReal b = isolate_real_roots(P("x^4-4"), Rational(1), Rational(2)).at(0);
  AlgebraicReal c = isolate_real_roots(P("x^2-x-1"), Rational(1), Rational(2)).at(0);
  EXPECT_EQ(compare(a, b), std::strong_ordering::equal);
  EXPECT_EQ(compare(a, c), std::strong_ordering::less);
  EXPECT_EQ(compare(c, AlgebraicReal::from_rational(Rational(8, 5))), std::strong_ordering::greater);
  EXPECT_TRUE(a.is_root_of(P("x^6-8")));
  EXPECT_FALSE(a.is_root_of(P("x^3-2")));
}

TEST(AlgebraicReal, CertifyRejectsNonIsolatingIntervals) {
  EXPECT_THROW(AlgebraicReal::certify(P("x^2-2"), Rational(-2), Rational(2)), std::invalid_argument);
  EXPECT_THROW(AlgebraicReal::certify(P("x^2-2"), Rational(0), Rational(1)), std::invalid_argument);
  EXPECT_NO_THROW(AlgebraicReal::certify(P("x^2-2"), Rational(1), Rational(2)));
}

TEST(AlgebraicReal, EnclosureContainsValue) {
  AlgebraicReal a = isolate_real_roots(P("x^3-x-1"), Rational(1), Rational(2)).at(0);
  for (int digits : {20, 60, 200}) {
    Interval e = a.enclosure(bits_for_digits(digits));
    EXPECT_FALSE(e.contains(Rational(13247179572447, 10000000000000)));
    EXPECT_LT(e.width_exponent(), -3 * digits);
    EXPECT_EQ(e.lower_decimal(12), "1.324717957244");
  }
}

TEST(Interval, OperationsEncloseExactResults) {
  const mpfr_prec_t bits = bits_for_digits(40);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(1, 10000);
  for (int i = 0; i < 100; ++i) {
    Rational a(d(rng), d(rng)), b(d(rng), d(rng));
    a.canonicalize();
    b.canonicalize();
    Interval ia(a, bits), ib(b, bits);
    EXPECT_TRUE((ia + ib).contains(a + b));
    EXPECT_TRUE((ia - ib).contains(a - b));
    EXPECT_TRUE((ia * ib).contains(a * b));
    EXPECT_TRUE((ia / ib).contains(a / b));
  }
  Interval l2 = Interval::log2_const(bits);
  EXPECT_LT(l2.lower_double(), std::log(2.0) + 1e-15);
  EXPECT_GT(l2.upper_double(), std::log(2.0) - 1e-15);
}

TEST(Cyclotomic, PolynomialsAndPhi) {
  EXPECT_EQ(cyclotomic(1), P("x-1"));
  EXPECT_EQ(cyclotomic(4), P("x^2+1"));
  EXPECT_EQ(cyclotomic(6), P("x^2-x+1"));
  EXPECT_EQ(cyclotomic(12), P("x^4-x^2+1"));
  for (unsigned long k = 1; k <= 30; ++k) EXPECT_EQ(cyclotomic(k).degree(), static_cast<int>(euler_phi(k))) << k;
  // x^n - 1 is the product of Phi_d over d | n
  for (unsigned long n = 1; n <= 24; ++n) {
    IntPolynomial prod{1};
    for (unsigned long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, IntPolynomial::monomial(1, n) - IntPolynomial{1}) << n;
  }
}

TEST(Cyclotomic, StripRemovesExactlyTheCyclotomicFactors) {
  IntPolynomial core = P("x^3-x-1");
  IntPolynomial p = core * cyclotomic(4) * cyclotomic(4) * cyclotomic(9) * cyclotomic(1);
  auto s = cyclotomic_strip_detailed(p);
  EXPECT_EQ(s.cofactor, core);
  EXPECT_EQ(cyclotomic_strip(P("x^4-x^3-x^2-x+1")), P("x^4-x^3-x^2-x+1"));  // Salem, no roots of unity
  EXPECT_EQ(cyclotomic_strip(P("x^6-1")).degree(), 0);
}

TEST(NumberField, ArithmeticModuloMinimalPolynomial) {
  NumberField f(P("x^3-x-1"));
  FieldElement b = f.generator();
  EXPECT_EQ(f.pow(b, 3), f.add(b, f.one()));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int i = 0; i < 40; ++i) {
    FieldElement e = f.reduce(IntPolynomial{c(rng), c(rng), c(rng)});
    if (e.is_zero()) continue;
    EXPECT_EQ(f.mul(e, f.inverse(e)), f.one());
    EXPECT_EQ(f.div(f.mul(e, b), b), e);
  }
}

TEST(NumberField, SignAgreesWithNumericValue) {
  AlgebraicReal tau = isolate_real_roots(P("x^2-x-1"), Rational(1), Rational(2)).at(0);
  NumberField f(tau.polynomial());
  FieldElement zero_exact = f.sub(f.pow(f.generator(), 2), f.add(f.generator(), f.one()));
  EXPECT_TRUE(zero_exact.is_zero());
  EXPECT_EQ(element_sign(f.sub(f.generator(), f.from_rational(Rational(8, 5))), f, tau), 1);
  EXPECT_EQ(element_sign(f.sub(f.generator(), f.from_rational(Rational(13, 8))), f, tau), -1);
}
