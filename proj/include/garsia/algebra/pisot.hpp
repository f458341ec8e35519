#pragma once

// Pisot classification: cyclotomic stripping, then certified complex root
// inclusion disks checked in exact rational arithmetic.

#include <bit>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garsia/algebra/algebraic_real.hpp"
#include "garsia/algebra/cyclotomic.hpp"
#include "garsia/algebra/int_polynomial.hpp"
#include "garsia/algebra/interval.hpp"
#include "garsia/algebra/precision.hpp"

namespace garsia {

enum class Verdict { no, yes, indeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "?";
}

struct PisotResult {
  Verdict verdict = Verdict::no;
  IntPolynomial stripped;                 // cyclotomic-free cofactor, the certificate
  std::vector<unsigned long> cyclotomic;  // removed Phi_k indices
  std::optional<AlgebraicReal> root;      // the designated real root > 1, if any
  std::string reason;

  bool is_pisot() const { return verdict == Verdict::yes; }
};

namespace detail {

struct Complex {
  Real re, im;
};

inline Complex cadd(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex csub(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex cmul(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex cdiv(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

struct ExactComplex {
  Rational re, im;
};

inline ExactComplex emul(const ExactComplex& a, const ExactComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Rational enorm2(const ExactComplex& a) { return a.re * a.re + a.im * a.im; }

/// Simultaneous Aberth iteration for all complex roots of a square-free p.
inline std::vector<Complex> aberth(const IntPolynomial& p, std::vector<Complex> z, mpfr_prec_t bits) {
  const int d = p.degree();
  std::vector<Real> c;
  std::vector<Real> dc;
  for (int i = 0; i <= d; ++i) c.emplace_back(p[static_cast<std::size_t>(i)], bits);
  IntPolynomial dp = p.derivative();
  for (int i = 0; i < d; ++i) dc.emplace_back(dp[static_cast<std::size_t>(i)], bits);
  auto horner = [&](const std::vector<Real>& coef, const Complex& x) {
    Complex acc{Real(bits), Real(bits)};
    for (std::size_t i = coef.size(); i-- > 0;) {
      acc = cmul(acc, x);
      acc.re += coef[i];
    }
    return acc;
  };
  for (auto& w : z) {
    Real re(bits), im(bits);
    mpfr_set(re.get(), w.re.get(), MPFR_RNDN);
    mpfr_set(im.get(), w.im.get(), MPFR_RNDN);
    w = {re, im};
  }
  const double tol = std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(bits - 8, 1000)));
  for (int iter = 0; iter < 100 + 20 * static_cast<int>(bits / 64) * d; ++iter) {
    double biggest = 0;
    for (int i = 0; i < d; ++i) {
      Complex num = horner(c, z[static_cast<std::size_t>(i)]);
      Complex der = horner(dc, z[static_cast<std::size_t>(i)]);
      if (mpfr_zero_p(num.re.get()) && mpfr_zero_p(num.im.get())) continue;
      Complex ratio = cdiv(num, der);
      Complex sum{Real(bits), Real(bits)};
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        Complex diff = csub(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
        Complex one{Real(1.0, bits), Real(bits)};
        sum = cadd(sum, cdiv(one, diff));
      }
      Complex one{Real(1.0, bits), Real(bits)};
      Complex step = cdiv(ratio, csub(one, cmul(ratio, sum)));
      z[static_cast<std::size_t>(i)] = csub(z[static_cast<std::size_t>(i)], step);
      Real mag2 = step.re * step.re + step.im * step.im;
      Real zmag2 = z[static_cast<std::size_t>(i)].re * z[static_cast<std::size_t>(i)].re +
                   z[static_cast<std::size_t>(i)].im * z[static_cast<std::size_t>(i)].im;
      double rel = std::sqrt(mpfr_get_d(mag2.get(), MPFR_RNDN) / std::max(1e-300, mpfr_get_d(zmag2.get(), MPFR_RNDN)));
      biggest = std::max(biggest, rel);
    }
    if (biggest < tol) break;
  }
  return z;
}

inline std::vector<Complex> initial_points(const IntPolynomial& p, mpfr_prec_t bits) {
  const int d = p.degree();
  const double radius = root_bound(p).get_d();
  std::vector<Complex> z;
  for (int k = 0; k < d; ++k) {
    double angle = 2 * M_PI * k / d + 0.4;
    z.push_back({Real(radius * std::cos(angle), bits), Real(radius * std::sin(angle), bits)});
  }
  return z;
}

/// Squared inclusion radii r_i^2 = d^2 |p(z_i)|^2 / (lc^2 prod_{j != i} |z_i - z_j|^2).
/// The union of the disks contains every root; a component made of k disks holds k roots.
inline std::optional<std::vector<Rational>> inclusion_radii2(const IntPolynomial& p, const std::vector<ExactComplex>& z) {
  const std::size_t d = z.size();
  std::vector<Rational> r2(d);
  for (std::size_t i = 0; i < d; ++i) {
    ExactComplex acc{Rational(0), Rational(0)};
    for (std::size_t k = static_cast<std::size_t>(p.degree()) + 1; k-- > 0;) {
      acc = emul(acc, z[i]);
      acc.re += p[k];
    }
    Rational prod = 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      prod *= enorm2({z[i].re - z[j].re, z[i].im - z[j].im});
    }
    if (prod == 0) return std::nullopt;
    Rational lc(p.leading());
    r2[i] = Rational(static_cast<long>(d * d)) * enorm2(acc) / (lc * lc * prod);
  }
  return r2;
}

// |z| + r < 1 with m = |z|^2, s = r^2
inline bool strictly_inside_unit(const Rational& m, const Rational& s) {
  if (m >= 1) return false;
  Rational rhs = 1 + m - s;
  return rhs > 0 && 4 * m < rhs * rhs;
}

// |z| - r > 1
inline bool strictly_outside_unit(const Rational& m, const Rational& s) {
  Rational lhs = m - 1 - s;
  return lhs > 0 && lhs * lhs > 4 * s;
}

// |a - b| > r_a + r_b
inline bool disjoint(const ExactComplex& a, const ExactComplex& b, const Rational& sa, const Rational& sb) {
  Rational dist2 = enorm2({a.re - b.re, a.im - b.im});
  Rational lhs = dist2 - sa - sb;
  return lhs > 0 && lhs * lhs > 4 * sa * sb;
}

}  // namespace detail

namespace detail {

struct Disks {
  std::vector<ExactComplex> centers;
  std::vector<Rational> radius2;
  std::vector<int> side;  // -1 strictly inside the unit disk, +1 strictly outside
};

/// Certified pairwise-disjoint inclusion disks, each classified against the
/// unit circle, escalating precision. With allow_straddle, disjoint disks
/// that still meet the circle at the last level are returned with side 0.
/// nullopt when the budget runs out.
inline std::optional<Disks> certified_disks(const IntPolynomial& q, const PrecisionContext& prec,
                                            bool allow_straddle = false) {
  std::vector<Complex> z = initial_points(q, prec.bits(0));
  std::optional<Disks> fallback;
  for (int level = 0; level <= prec.max_escalations; ++level) {
    z = aberth(q, std::move(z), prec.bits(level));
    Disks disks;
    for (const auto& w : z) disks.centers.push_back({w.re.to_rational(), w.im.to_rational()});
    auto r2 = inclusion_radii2(q, disks.centers);
    if (!r2) continue;
    disks.radius2 = std::move(*r2);
    const std::size_t d = disks.centers.size();
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = i + 1; j < d && ok; ++j)
        ok = disjoint(disks.centers[i], disks.centers[j], disks.radius2[i], disks.radius2[j]);
    if (!ok) continue;
    bool classified = true;
    for (std::size_t i = 0; i < d; ++i) {
      Rational m = enorm2(disks.centers[i]);
      if (strictly_inside_unit(m, disks.radius2[i])) {
        disks.side.push_back(-1);
      } else if (strictly_outside_unit(m, disks.radius2[i])) {
        disks.side.push_back(1);
      } else {
        disks.side.push_back(0);
        classified = false;
      }
    }
    if (classified) return disks;
    fallback = std::move(disks);
  }
  if (allow_straddle) return fallback;
  return std::nullopt;
}

struct BoxComplex {
  Interval re, im;
};

inline BoxComplex disk_box(const ExactComplex& c, const Rational& r2, mpfr_prec_t bits) {
  Interval r = sqrt(Interval(r2, bits));
  Rational up = r.upper_rational();
  return {Interval(c.re - up, c.re + up, bits), Interval(c.im - up, c.im + up, bits)};
}

enum class SubsetOutcome { excluded, candidate, unresolved };

/// Encloses the coefficients of prod (x - root) over the boxes and checks
/// whether they can be integers; on success writes the unique candidate.
inline SubsetOutcome integer_candidate(const std::vector<BoxComplex>& roots, mpfr_prec_t bits, IntPolynomial& out) {
  std::vector<BoxComplex> c{{Interval(Rational(1), bits), Interval(Rational(0), bits)}};
  for (const auto& z : roots) {
    std::vector<BoxComplex> next(c.size() + 1, {Interval(Rational(0), bits), Interval(Rational(0), bits)});
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1].re = next[k + 1].re + c[k].re;
      next[k + 1].im = next[k + 1].im + c[k].im;
      next[k].re = next[k].re - (z.re * c[k].re - z.im * c[k].im);
      next[k].im = next[k].im - (z.re * c[k].im + z.im * c[k].re);
    }
    c = std::move(next);
  }
  std::vector<Integer> coeffs;
  bool unique = true;
  for (const auto& v : c) {
    if (!v.im.contains_zero()) return SubsetOutcome::excluded;
    Integer lo, hi;
    Rational a = v.re.lower_rational(), b = v.re.upper_rational();
    mpz_cdiv_q(lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    if (lo > hi) return SubsetOutcome::excluded;
    if (lo != hi) unique = false;
    coeffs.push_back(lo);
  }
  if (!unique) return SubsetOutcome::unresolved;
  out = IntPolynomial(std::move(coeffs));
  return SubsetOutcome::candidate;
}

}  // namespace detail

/// Decides whether the cyclotomic-free part of p is the minimal-polynomial
/// shape of a Pisot number: monic, exactly one root of modulus > 1 (real and
/// > 1), all others certified strictly inside the unit disk. Repeated factors
/// are removed first.
inline PisotResult is_pisot(const IntPolynomial& p, const PrecisionContext& prec = {}) {
  PisotResult out;
  if (p.is_zero()) {
    out.reason = "zero polynomial";
    return out;
  }
  CyclotomicStrip strip = cyclotomic_strip_detailed(p.primitive());
  out.cyclotomic = strip.removed;
  IntPolynomial q = strip.cofactor.square_free_part();
  out.stripped = q;
  if (q.degree() < 1) {
    out.reason = "no non-cyclotomic factor";
    return out;
  }
  const Rational bound = root_bound(q);
  auto big = isolate_real_roots(q, Rational(1), bound);
  if (big.empty()) {
    out.reason = "no real root > 1";
    return out;
  }
  out.root = big.back();
  if (big.size() > 1) {
    out.reason = "more than one real root > 1";
    return out;
  }
  if (!q.is_monic()) {
    out.reason = "not monic, so the root is not an algebraic integer";
    return out;
  }
  if (q.degree() == 1) {
    out.verdict = Verdict::yes;
    out.reason = "integer > 1";
    return out;
  }
  if (q.degree() > 2 && q.is_reciprocal()) {
    out.reason = "reciprocal of degree > 2, so 1/beta and a second root of modulus >= 1 are conjugates";
    return out;
  }
  if (!isolate_real_roots(q, -bound, Rational(-1)).empty() || q.sign_at(Rational(-1)) == 0) {
    out.reason = "real root <= -1";
    return out;
  }

  auto disks = detail::certified_disks(q, prec);
  if (!disks) {
    out.verdict = Verdict::indeterminate;
    out.reason = "root disks not separated from the unit circle within the precision budget";
    return out;
  }
  int outside = 0;
  for (int side : disks->side) outside += side > 0 ? 1 : 0;
  const int inside = static_cast<int>(disks->side.size()) - outside;
  if (outside == 1) {
    out.verdict = Verdict::yes;
    out.reason = "one root outside the unit disk, " + std::to_string(inside) + " certified inside";
  } else {
    out.reason = std::to_string(outside) + " roots certified outside the unit disk";
  }
  return out;
}

/// Pisot test for a specific real number a > 1. Its defining polynomial may
/// be reducible, so when other roots lie outside the unit disk the monic
/// integer factors made of a and roots inside the disk are searched
/// exhaustively; each subset is either excluded by a certified enclosure of
/// its coefficients or confirmed by exact division.
inline PisotResult is_pisot(const AlgebraicReal& a, const PrecisionContext& prec = {},
                            std::size_t max_inside_roots = 16) {
  PisotResult out;
  CyclotomicStrip strip = cyclotomic_strip_detailed(a.polynomial());
  out.cyclotomic = strip.removed;
  IntPolynomial q = strip.cofactor.square_free_part();
  out.stripped = q;
  if (compare(a, AlgebraicReal::from_rational(Rational(1))) <= 0) {
    out.reason = "not > 1";
    return out;
  }
  if (q.degree() < 1 || !a.is_root_of(q)) {
    out.reason = "no non-cyclotomic factor vanishes at the number";
    return out;
  }
  out.root = AlgebraicReal::certify(q, a.lo(), a.hi());
  if (auto r = a.as_rational()) {
    out.verdict = r->get_den() == 1 ? Verdict::yes : Verdict::no;
    out.reason = out.verdict == Verdict::yes ? "integer > 1" : "rational non-integer";
    if (out.verdict == Verdict::yes) out.stripped = IntPolynomial(std::vector<Integer>{-r->get_num(), 1});
    return out;
  }
  auto disks = detail::certified_disks(q, prec, true);
  if (!disks) {
    out.verdict = Verdict::indeterminate;
    out.reason = "root disks not isolated within the precision budget";
    return out;
  }
  // locate the disk holding a: the only one meeting a tight enclosure of it
  std::optional<std::size_t> home;
  Rational eps(Integer(1), pow2(64));
  for (int round = 0; round < 64; ++round, eps /= pow2(64)) {
    AlgebraicReal t = a.refined(eps);
    int hits = 0;
    for (std::size_t i = 0; i < disks->centers.size(); ++i) {
      const auto& c = disks->centers[i];
      Rational dx(0);
      if (c.re < t.lo()) dx = t.lo() - c.re;
      if (c.re > t.hi()) dx = c.re - t.hi();
      if (dx * dx + c.im * c.im <= disks->radius2[i]) {
        home = i;
        ++hits;
      }
    }
    if (hits == 1) break;
    home.reset();
  }
  if (!home || disks->side[*home] != 1) {
    out.verdict = Verdict::indeterminate;
    out.reason = "could not match the number to a root disk";
    return out;
  }
  std::vector<std::size_t> others;  // roots not certified outside
  bool any_outside = false;
  for (std::size_t i = 0; i < disks->centers.size(); ++i) {
    if (i == *home) continue;
    if (disks->side[i] > 0) {
      any_outside = true;
    } else {
      others.push_back(i);
    }
  }
  auto all_inside = [&](std::size_t mask) {
    for (std::size_t k = 0; k < others.size(); ++k)
      if ((mask >> k & 1U) && disks->side[others[k]] != -1) return false;
    return true;
  };
  if (!any_outside && q.is_monic() && all_inside((std::size_t{1} << others.size()) - 1)) {
    out.verdict = Verdict::yes;
    out.reason = "all " + std::to_string(others.size()) + " other roots certified inside the unit disk";
    return out;
  }
  if (others.size() > max_inside_roots) {
    out.verdict = Verdict::indeterminate;
    out.reason = "too many roots for the factor search";
    return out;
  }
  // The minimal polynomial of a is the smallest monic integer factor through
  // a. Subsets of the roots not certified outside are tried by size, so the
  // first factor found is the minimal polynomial; if none exists, some
  // conjugate of a lies outside the unit disk.
  const std::size_t k = others.size();
  for (std::size_t size = 0; size <= k; ++size) {
    std::vector<std::size_t> pending;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask)
      if (static_cast<std::size_t>(std::popcount(mask)) == size) pending.push_back(mask);
    std::optional<std::size_t> found_mask;
    IntPolynomial found;
    for (int level = 0; level <= prec.max_escalations && !pending.empty() && !found_mask; ++level) {
      const mpfr_prec_t lbits = prec.bits(level);
      std::vector<detail::BoxComplex> boxes;
      for (std::size_t i : others) boxes.push_back(detail::disk_box(disks->centers[i], disks->radius2[i], lbits));
      AlgebraicReal tight = a.refined(Rational(Integer(1), pow2(static_cast<unsigned long>(lbits))));
      detail::BoxComplex self{Interval(tight.lo(), tight.hi(), lbits), Interval(Rational(0), lbits)};
      std::vector<std::size_t> still;
      for (std::size_t mask : pending) {
        std::vector<detail::BoxComplex> roots{self};
        for (std::size_t b = 0; b < k; ++b)
          if (mask >> b & 1U) roots.push_back(boxes[b]);
        IntPolynomial cand;
        auto outcome = detail::integer_candidate(roots, lbits, cand);
        if (outcome == detail::SubsetOutcome::unresolved) still.push_back(mask);
        if (outcome != detail::SubsetOutcome::candidate) continue;
        if (!q.exact_quotient(cand) || !a.is_root_of(cand)) continue;
        found_mask = mask;
        found = std::move(cand);
        break;
      }
      pending = std::move(still);
    }
    if (found_mask) {
      out.stripped = found;
      out.root = AlgebraicReal::certify(found, a.lo(), a.hi());
      if (all_inside(*found_mask)) {
        out.verdict = Verdict::yes;
        out.reason = "minimal polynomial " + found.to_string() + " has all other roots inside the unit disk";
      } else if (found.degree() > 2 && found.is_reciprocal()) {
        out.reason = "minimal polynomial " + found.to_string() + " is reciprocal of degree > 2";
      } else {
        out.verdict = Verdict::indeterminate;
        out.reason = "minimal polynomial " + found.to_string() + " has roots not separated from the unit circle";
      }
      return out;
    }
    if (!pending.empty()) {
      out.verdict = Verdict::indeterminate;
      out.reason = "factor search could not exclude every candidate";
      return out;
    }
  }
  out.reason = "the minimal polynomial has a root certified outside the unit disk";
  return out;
}

}  // namespace garsia
