#pragma once

// Outward-rounded interval arithmetic on MPFR, and a round-to-nearest MPFR
// scalar used by the complex root finder.

#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "garsia/algebra/rational.hpp"

namespace garsia {

inline mpfr_prec_t bits_for_digits(int decimal_digits) {
  // log2(10) ~ 3.3219; a few guard bits for accumulated rounding
  return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873623) + 16;
}

namespace detail {

inline Rational mpfr_to_rational(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) throw std::domain_error("non-finite MPFR value");
  if (mpfr_zero_p(x)) return Rational(0);
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rational q(mant);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

inline std::string mpfr_fixed(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(x)) return "nan";
  mpfr_t scaled;
  mpfr_init2(scaled, mpfr_get_prec(x) + 64);
  Integer ten_pow = pow(Integer(10), static_cast<unsigned long>(digits));
  mpfr_mul_z(scaled, x, ten_pow.get_mpz_t(), rnd);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), scaled, rnd);
  mpfr_clear(scaled);
  Rational q(z, ten_pow);
  q.canonicalize();
  return to_decimal(q, digits, Rounding::nearest);
}

}  // namespace detail

class IntervalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
/// lower endpoint down and the upper endpoint up, so the true value of any
/// expression evaluated on enclosures stays enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  Interval(const Rational& q, mpfr_prec_t prec) : Interval(q, q, prec) {}

  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
    if (mpfr_greater_p(lo_, hi_)) throw IntervalError("interval with lo > hi");
  }

  static Interval from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Interval log2_const(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_log2(r.lo_, MPFR_RNDD);
    mpfr_const_log2(r.hi_, MPFR_RNDU);
    return r;
  }

  Interval(const Interval& other) {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }

  Interval(Interval&& other) noexcept {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }

  Interval& operator=(Interval other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
  }

  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t precision() const { return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_)); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

  /// Sign of every point of the interval, or nullopt when it straddles zero.
  /// A degenerate [0,0] interval reports 0.
  std::optional<int> sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return std::nullopt;
  }

  bool certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_) != 0; }
  bool overlaps(const Interval& other) const {
    return !certainly_less(other) && !other.certainly_less(*this);
  }
  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
  }

  Rational lower_rational() const { return detail::mpfr_to_rational(lo_); }
  Rational upper_rational() const { return detail::mpfr_to_rational(hi_); }

  double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
  }

  /// Decimal rendering of the endpoints, rounded outward.
  std::string lower_decimal(int digits) const { return detail::mpfr_fixed(lo_, digits, MPFR_RNDD); }
  std::string upper_decimal(int digits) const { return detail::mpfr_fixed(hi_, digits, MPFR_RNDU); }
  std::string mid_decimal(int digits) const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    std::string s = detail::mpfr_fixed(m, digits, MPFR_RNDN);
    mpfr_clear(m);
    return s;
  }

  /// log2 of the width; very negative for tight enclosures.
  long width_exponent() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    long e = mpfr_zero_p(w) ? -1000000L : static_cast<long>(mpfr_get_exp(w));
    mpfr_clear(w);
    return e;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval r(prec);
    if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
      mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
      mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
      return r;
    }
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (auto x : as) {
      for (auto y : bs) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
      }
    }
    mpfr_clear(t);
    return r;
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw IntervalError("interval division by an interval containing zero");
    mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (auto x : as) {
      for (auto y : bs) {
        mpfr_div(t, x, y, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, x, y, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
      }
    }
    mpfr_clear(t);
    return r;
  }

  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }

  friend Interval scale(const Interval& a, const Integer& k) {
    Interval r(a.precision());
    if (sgn(k) >= 0) {
      mpfr_mul_z(r.lo_, a.lo_, k.get_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(r.hi_, a.hi_, k.get_mpz_t(), MPFR_RNDU);
    } else {
      mpfr_mul_z(r.lo_, a.hi_, k.get_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(r.hi_, a.lo_, k.get_mpz_t(), MPFR_RNDU);
    }
    return r;
  }

  friend Interval div_ui(const Interval& a, unsigned long k) {
    Interval r(a.precision());
    mpfr_div_ui(r.lo_, a.lo_, k, MPFR_RNDD);
    mpfr_div_ui(r.hi_, a.hi_, k, MPFR_RNDU);
    return r;
  }

  friend Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw IntervalError("log of an interval reaching below zero");
    Interval r(a.precision());
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw IntervalError("sqrt of an interval reaching below zero");
    Interval r(a.precision());
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  /// a^(1/k) for a >= 0.
  friend Interval root(const Interval& a, unsigned long k) {
    if (mpfr_sgn(a.lo_) < 0) throw IntervalError("root of an interval reaching below zero");
    Interval r(a.precision());
    mpfr_rootn_ui(r.lo_, a.lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, a.hi_, k, MPFR_RNDU);
    return r;
  }

  /// Hull of two intervals.
  friend Interval hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  /// Pointwise minimum {min(x, y) : x in a, y in b}.
  friend Interval min(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  /// Compares lower endpoints; used to order enclosures before clustering.
  friend int compare_lower(const Interval& a, const Interval& b) { return mpfr_cmp(a.lo_, b.lo_); }

  void set_lower_zero() { mpfr_set_zero(lo_, 1); }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Round-to-nearest MPFR scalar.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  Real(const Integer& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rational to_rational() const { return detail::mpfr_to_rational(v_); }

#define GARSIA_REAL_BINOP(op, fn)                                      \
  friend Real operator op(const Real& a, const Real& b) {              \
    Real r(std::max(a.precision(), b.precision()));                    \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                   \
    return r;                                                          \
  }                                                                    \
  Real& operator op##=(const Real& b) { return *this = *this op b; }
  GARSIA_REAL_BINOP(+, mpfr_add)
  GARSIA_REAL_BINOP(-, mpfr_sub)
  GARSIA_REAL_BINOP(*, mpfr_mul)
  GARSIA_REAL_BINOP(/, mpfr_div)
#undef GARSIA_REAL_BINOP

  friend Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

}  // namespace garsia
