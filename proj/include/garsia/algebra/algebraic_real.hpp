#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "garsia/algebra/int_polynomial.hpp"
#include "garsia/algebra/interval.hpp"
#include "garsia/algebra/sturm.hpp"

namespace garsia {

/// A real algebraic number: a square-free primitive integer polynomial with
/// positive leading coefficient, and a rational interval [lo, hi] that holds
/// exactly one of its real roots. Either lo < hi and neither endpoint is a
/// root, or lo == hi and the root is that rational.
///
/// Values are immutable; refinement produces a new value whose interval is
/// nested inside the old one.
class AlgebraicReal {
 public:
  /// Trusted constructor. The caller guarantees the isolation invariant;
  /// use certify() when that has not already been established.
  AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi)
      : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  static AlgebraicReal from_rational(const Rational& q) {
    IntPolynomial p(std::vector<Integer>{-Integer(q.get_num()), Integer(q.get_den())});
    return AlgebraicReal(p.primitive(), q, q);
  }

  /// Checks that [lo, hi] isolates exactly one root of the square-free part
  /// of `poly`, and shrinks the interval so neither endpoint is a root (or
  /// collapses it onto a rational root).
  static AlgebraicReal certify(const IntPolynomial& poly, const Rational& lo, const Rational& hi) {
    if (poly.degree() < 1) throw std::invalid_argument("algebraic number needs a nonconstant polynomial");
    if (lo > hi) throw std::invalid_argument("isolating interval with lo > hi");
    IntPolynomial sf = poly.square_free_part();
    if (lo == hi) {
      if (sf.sign_at(lo) != 0) throw std::invalid_argument("point interval is not a root");
      return AlgebraicReal(std::move(sf), lo, hi);
    }
    SturmSequence sturm(sf);
    if (sturm.count_closed(lo, hi) != 1)
      throw std::invalid_argument("interval [" + to_string(lo) + ", " + to_string(hi) + "] does not isolate exactly one root of " +
                                  sf.to_string());
    return tighten(sf, sturm, lo, hi);
  }

  const IntPolynomial& polynomial() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }
  std::optional<Rational> as_rational() const {
    if (is_rational()) return lo_;
    if (poly_.degree() == 1) {
      Rational r(-poly_[0], poly_[1]);
      r.canonicalize();
      return r;
    }
    return std::nullopt;
  }

  /// Bisects until the enclosure has width <= eps. Deterministic, so
  /// enclosures returned for smaller eps are nested in those for larger eps.
  AlgebraicReal refined(const Rational& eps) const {
    if (is_rational() || hi_ - lo_ <= eps) return *this;
    if (auto q = as_rational()) return from_rational(*q);
    Rational lo = lo_, hi = hi_;
    const int sign_lo = poly_.sign_at(lo);
    while (hi - lo > eps) {
      Rational mid = (lo + hi) / 2;
      int s = poly_.sign_at(mid);
      if (s == 0) return AlgebraicReal(poly_, mid, mid);
      if (s == sign_lo) {
        lo = std::move(mid);
      } else {
        hi = std::move(mid);
      }
    }
    return AlgebraicReal(poly_, std::move(lo), std::move(hi));
  }

  std::pair<Rational, Rational> refine(const Rational& eps) const {
    AlgebraicReal r = refined(eps);
    return {r.lo_, r.hi_};
  }

  /// Enclosure with width at most 2^-bits, rounded outward to `bits` precision.
  Interval enclosure(mpfr_prec_t bits) const {
    Rational eps(Integer(1), pow2(static_cast<unsigned long>(bits)));
    AlgebraicReal r = refined(eps);
    return Interval(r.lo_, r.hi_, bits + 8);
  }

  /// Exact sign of f at this number.
  int sign_of(const IntPolynomial& f) const {
    if (f.is_zero()) return 0;
    if (auto q = as_rational()) return f.sign_at(*q);
    if (f.degree() == 0) return sgn(f.leading());
    IntPolynomial g = gcd(f, poly_);
    if (g.degree() >= 1 && SturmSequence(g).count_closed(lo_, hi_) >= 1) return 0;
    // f(self) != 0, so interval evaluation eventually separates it from zero
    mpfr_prec_t bits = 64;
    AlgebraicReal cur = *this;
    for (;;) {
      cur = cur.refined(Rational(Integer(1), pow2(static_cast<unsigned long>(bits))));
      if (auto q = cur.as_rational()) return f.sign_at(*q);
      Interval v = f.eval(Interval(cur.lo_, cur.hi_, bits + 16));
      if (auto s = v.sign(); s && *s != 0) return *s;
      bits *= 2;
    }
  }

  bool is_root_of(const IntPolynomial& f) const { return sign_of(f) == 0; }

  /// Exact order. Equality is decided by a common-root test on the gcd of the
  /// defining polynomials, never by numeric closeness.
  friend std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.hi_ < b.lo_) return std::strong_ordering::less;
    if (b.hi_ < a.lo_) return std::strong_ordering::greater;
    if (a.is_rational() && b.is_rational()) {
      if (a.lo_ == b.lo_) return std::strong_ordering::equal;
      return a.lo_ < b.lo_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.is_rational()) {
      int s = b.sign_of(a.poly_);
      if (s == 0) return std::strong_ordering::equal;
    } else if (b.is_rational()) {
      int s = a.sign_of(b.poly_);
      if (s == 0) return std::strong_ordering::equal;
    } else if (shares_root(a, b)) {
      return std::strong_ordering::equal;
    }
    // distinct: refine both until the enclosures separate
    AlgebraicReal x = a, y = b;
    Rational eps = (std::max(a.hi_ - a.lo_, b.hi_ - b.lo_)) / 4;
    for (;;) {
      x = x.refined(eps);
      y = y.refined(eps);
      if (x.hi_ < y.lo_) return std::strong_ordering::less;
      if (y.hi_ < x.lo_) return std::strong_ordering::greater;
      eps /= 4;
    }
  }

  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b); }

  /// Decimal approximation with `digits` places, from an enclosure fine enough
  /// to make the rounding honest up to the last place.
  std::string decimal(int digits) const {
    Rational eps(Integer(1), pow(Integer(10), static_cast<unsigned long>(digits + 2)));
    AlgebraicReal r = refined(eps);
    return to_decimal((r.lo_ + r.hi_) / 2, digits);
  }

  double approx() const {
    AlgebraicReal r = refined(Rational(Integer(1), pow2(60)));
    return Rational((r.lo_ + r.hi_) / 2).get_d();
  }

 private:
  static bool shares_root(const AlgebraicReal& a, const AlgebraicReal& b) {
    Rational lo = std::max(a.lo_, b.lo_);
    Rational hi = std::min(a.hi_, b.hi_);
    if (lo > hi) return false;
    IntPolynomial g = a.poly_ == b.poly_ ? a.poly_ : gcd(a.poly_, b.poly_);
    if (g.degree() < 1) return false;
    // g divides both; a root of g in the overlap is the unique root of each
    return SturmSequence(g).count_closed(lo, hi) >= 1;
  }

  static AlgebraicReal tighten(const IntPolynomial& p, const SturmSequence&, Rational lo, Rational hi) {
    // exactly one root in [lo, hi], so a root endpoint is that root
    if (p.sign_at(lo) == 0) return AlgebraicReal(p, lo, lo);
    if (p.sign_at(hi) == 0) return AlgebraicReal(p, hi, hi);
    return AlgebraicReal(p, std::move(lo), std::move(hi));
  }

  friend std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);

  IntPolynomial poly_;
  Rational lo_;
  Rational hi_;
};

namespace detail {

inline void isolate_recursive(const IntPolynomial& p, const SturmSequence& sturm, const Rational& a, const Rational& b,
                              int count, std::vector<AlgebraicReal>& out) {
  if (count <= 0) return;
  // an endpoint that is itself a root must be bisected away first
  if (count == 1 && p.sign_at(a) != 0 && p.sign_at(b) != 0) {
    out.push_back(AlgebraicReal::certify(p, a, b));
    return;
  }
  Rational mid = (a + b) / 2;
  if (p.sign_at(mid) == 0) {
    isolate_recursive(p, sturm, a, mid, sturm.count_open(a, mid), out);
    out.push_back(AlgebraicReal(p, mid, mid));
    isolate_recursive(p, sturm, mid, b, sturm.count_open(mid, b), out);
    return;
  }
  int left = sturm.count_open(a, mid);
  isolate_recursive(p, sturm, a, mid, left, out);
  isolate_recursive(p, sturm, mid, b, count - left, out);
}

}  // namespace detail

/// One AlgebraicReal per distinct real root of p in the open interval
/// (lo, hi), ascending. Works on the square-free part of p.
inline std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<AlgebraicReal> out;
  if (p.degree() < 1 || lo >= hi) return out;
  IntPolynomial sf = p.square_free_part();
  SturmSequence sturm(sf);
  int count = sturm.count_open(lo, hi);
  detail::isolate_recursive(sf, sturm, lo, hi, count, out);
  return out;
}

/// Cauchy bound: every complex root has modulus < 1 + max|a_i / a_d|.
inline Rational root_bound(const IntPolynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r(abs(p[static_cast<std::size_t>(i)]), abs(p.leading()));
    r.canonicalize();
    if (r > m) m = r;
  }
  return m + 1;
}

/// All real roots, ascending.
inline std::vector<AlgebraicReal> real_roots(const IntPolynomial& p) {
  Rational b = root_bound(p);
  return isolate_real_roots(p, -b, b);
}

}  // namespace garsia
