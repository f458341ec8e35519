#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "garsia/algebra/families.hpp"
#include "garsia/algebra/pisot.hpp"
#include "garsia/entropy/bounds.hpp"

using namespace garsia;

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

AlgebraicReal root_in(const char* poly, const char* lo, const char* hi) {
  auto r = isolate_real_roots(P(poly), parse_rational(lo), parse_rational(hi));
  if (r.size() != 1) throw std::logic_error("bad test interval");
  return r.front();
}

using cplx = std::complex<long double>;

// Durand-Kerner in long double, independent of the library's root finder.
std::vector<cplx> numeric_roots(const IntPolynomial& p) {
  const int n = p.degree();
  std::vector<long double> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = p[static_cast<std::size_t>(k)].get_d() / p.leading().get_d();
  auto eval = [&](cplx z) {
    cplx v = 0;
    for (int k = n; k >= 0; --k) v = v * z + c[k];
    return v;
  };
  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::pow(cplx(0.4L, 0.9L), i);
  for (int it = 0; it < 2000; ++it) {
    for (int i = 0; i < n; ++i) {
      cplx d = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) d *= z[i] - z[j];
      z[i] -= eval(z[i]) / d;
    }
  }
  return z;
}

// Pisot test on a square-free, cyclotomic-free monic cofactor; nullopt when
// some root is too close to the unit circle to call numerically.
std::optional<bool> numeric_pisot(const IntPolynomial& q) {
  if (!q.is_monic()) return false;
  int outside = 0;
  bool real_outside = false;
  for (cplx z : numeric_roots(q)) {
    long double m = std::abs(z);
    if (std::fabs(m - 1) < 1e-6L) return false;  // a root on the circle (Salem-type)
    if (m > 1) {
      ++outside;
      real_outside = std::fabs(z.imag()) < 1e-9L && z.real() > 1;
    }
  }
  return outside == 1 && real_outside;
}

}  // namespace

TEST(Pisot, KnownPisotNumbers) {
  for (const char* s : {"x^2-x-1", "x^3-x-1", "x^3-x^2-1", "x^3-x^2-x-1", "x^4-x^3-1", "x^5-x^4-x^3+x^2-1",
                        "x^5-2*x^4+x^3-x^2+x-1", "x^2-2*x-1"}) {
    PisotResult r = is_pisot(P(s));
    EXPECT_EQ(r.verdict, Verdict::yes) << s << ": " << r.reason;
    ASSERT_TRUE(r.root.has_value()) << s;
    EXPECT_GT(r.root->approx(), 1.0);
  }
}

TEST(Pisot, NonPisotPolynomials) {
  EXPECT_EQ(is_pisot(P("x^2-2")).verdict, Verdict::no);               // -sqrt 2 is outside
  EXPECT_EQ(is_pisot(P("2*x^2-3*x-1")).verdict, Verdict::no);         // not monic
  EXPECT_EQ(is_pisot(P("x^4-x^3-x^2-x+1")).verdict, Verdict::no);     // Salem
  EXPECT_EQ(is_pisot(P("x^3-2*x^2-2*x+2")).verdict, Verdict::no);     // two roots outside
  EXPECT_EQ(is_pisot(P("x^4-1")).verdict, Verdict::no);               // only roots of unity
  EXPECT_EQ(is_pisot(IntPolynomial{}).verdict, Verdict::no);
}

TEST(Pisot, CyclotomicFactorsAreStrippedAndReported) {
  IntPolynomial p = P("x^2-x-1") * cyclotomic(4) * cyclotomic(3);
  PisotResult r = is_pisot(p);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(r.stripped, P("x^2-x-1"));
  EXPECT_EQ(r.cyclotomic.size(), 2u);
  // repeated factors are removed first
  EXPECT_EQ(is_pisot(P("x^3-x-1") * P("x^3-x-1")).verdict, Verdict::yes);
}

TEST(Pisot, RootLevelVerdictFollowsTheMinimalPolynomial) {
  IntPolynomial prod = P("x^2-x-1") * P("x^2-2");
  auto tau = isolate_real_roots(prod, Rational(3, 2), Rational(17, 10)).at(0);
  auto sqrt2 = isolate_real_roots(prod, Rational(13, 10), Rational(3, 2)).at(0);
  EXPECT_EQ(is_pisot(tau).verdict, Verdict::yes);
  EXPECT_EQ(is_pisot(sqrt2).verdict, Verdict::no);
  EXPECT_EQ(is_pisot(root_in("x^4-x^3-x^2-x+1", "1.5", "2")).verdict, Verdict::no);
  EXPECT_EQ(is_pisot(root_in("x^3-x-1", "1", "2")).verdict, Verdict::yes);
}

TEST(Pisot, AgreesWithNumericRootsOnSmallPolynomials) {
  // every monic polynomial of degree 2..6 with coefficients in {-1,0,1} and a root > 1
  int checked = 0;
  for (int deg = 2; deg <= 6; ++deg) {
    const int count = static_cast<int>(std::pow(3, deg));
    for (int code = 0; code < count; ++code) {
      std::vector<Integer> c(deg + 1);
      int k = code;
      for (int i = 0; i < deg; ++i, k /= 3) c[i] = k % 3 - 1;
      c[deg] = 1;
      IntPolynomial p(std::move(c));
      if (p[0] == 0) continue;
      PisotResult r = is_pisot(p);
      IntPolynomial q = cyclotomic_strip(p.primitive()).square_free_part();
      if (q.degree() < 1 || isolate_real_roots(q, Rational(1), root_bound(q)).empty()) {
        EXPECT_NE(r.verdict, Verdict::yes) << p.to_string();
        continue;
      }
      auto want = numeric_pisot(q);
      if (!want) continue;
      EXPECT_EQ(r.verdict, *want ? Verdict::yes : Verdict::no) << p.to_string() << " " << r.reason;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Pisot, MultinacciAndLimitFamilies) {
  for (unsigned m = 2; m <= 8; ++m) EXPECT_TRUE(is_pisot(multinacci(m)).is_pisot()) << m;
  for (unsigned r = 1; r <= 4; ++r) {
    EXPECT_TRUE(is_pisot(amara_limit_poly(LimitFamily::phi, r)).is_pisot()) << "phi " << r;
    EXPECT_TRUE(is_pisot(amara_limit_poly(LimitFamily::psi, r)).is_pisot()) << "psi " << r;
  }
  EXPECT_TRUE(is_pisot(amara_limit_poly(LimitFamily::chi)).is_pisot());
}

TEST(Pisot, RegularFamilyMembersConvergeToTheirLimit) {
  // for large n the family polynomial has a Pisot root close to the limit's root
  for (auto kind : {LimitFamily::phi, LimitFamily::psi}) {
    AlgebraicReal limit = real_roots(amara_limit_poly(kind, 2)).back();
    for (int sign : {1, -1}) {
      IntPolynomial p = regular_pisot_poly(kind, 2, 1, 20, sign);
      PisotResult r = is_pisot(p);
      ASSERT_TRUE(r.root.has_value());
      EXPECT_NEAR(r.root->approx(), limit.approx(), 1e-3);
    }
  }
}
