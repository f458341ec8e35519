#pragma once

// m_n as a step function of beta: the transition points cut the range into
// open subintervals on which m_n is constant.

#include <cstdint>
#include <optional>
#include <vector>

#include "garsia/entropy/bounds.hpp"
#include "garsia/transitions/transitions.hpp"

namespace garsia {

struct Subinterval {
  AlgebraicReal left;
  AlgebraicReal right;
  Rational midpoint;  // short decimal strictly inside
};

/// The shortest decimal truncation of the midpoint of separated enclosures
/// of a < b that still lies strictly between them.
inline Rational short_decimal_between(const AlgebraicReal& a, const AlgebraicReal& b) {
  Rational eps = (b.hi() - a.lo()) / 4;
  Rational ahi, blo;
  for (;;) {
    ahi = a.refine(eps).second;
    blo = b.refine(eps).first;
    if (ahi < blo) break;
    eps /= 16;
  }
  const Rational mid = (ahi + blo) / 2;
  Integer scale = 1;
  for (;;) {
    Integer num;
    Rational scaled = mid * Rational(scale);
    mpz_fdiv_q(num.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational c(num, scale);
    c.canonicalize();
    if (ahi < c && c < blo) return c;
    scale *= 10;
  }
}

/// Subintervals of (lo, hi) cut at the given ascending points.
inline std::vector<Subinterval> partition(const std::vector<TransitionPoint>& cuts, const Rational& lo,
                                          const Rational& hi) {
  std::vector<AlgebraicReal> ends{AlgebraicReal::from_rational(lo)};
  for (const auto& c : cuts) ends.push_back(c.value);
  ends.push_back(AlgebraicReal::from_rational(hi));
  std::vector<Subinterval> out;
  for (std::size_t i = 0; i + 1 < ends.size(); ++i)
    out.push_back({ends[i], ends[i + 1], short_decimal_between(ends[i], ends[i + 1])});
  return out;
}

struct SweepRow {
  Subinterval interval;
  std::uint64_t m_n = 0;
  std::optional<Interval> bound_left;  // nullopt means +infinity (beta = 1)
  std::optional<Interval> bound_right;
  std::optional<Interval> bound_min;
};

struct SweepReport {
  int n = 0;
  std::vector<TransitionPoint> cuts;
  std::vector<SweepRow> rows;
  std::optional<Interval> bound_min;  // smallest row minimum
  std::size_t argmin = 0;
};

namespace detail {

inline std::optional<Interval> endpoint_bound(const AlgebraicReal& beta, int n, std::uint64_t m, mpfr_prec_t bits) {
  if (auto q = beta.as_rational(); q && *q == 1) return std::nullopt;
  return bound_value(beta.enclosure(bits), n, m);
}

inline std::optional<Interval> smaller(const std::optional<Interval>& a, const std::optional<Interval>& b) {
  if (!a) return b;
  if (!b) return a;
  return compare_lower(*a, *b) <= 0 ? *a : *b;
}

}  // namespace detail

/// m_n at each subinterval midpoint (rational beta, exact), and the lower
/// bound evaluated at both endpoints with that m_n.
inline SweepReport sweep_report(int n, const Rational& lo = Rational(1), const Rational& hi = Rational(2),
                                const TransitionOptions& options = {}) {
  SweepReport rep;
  rep.n = n;
  rep.cuts = transitions(n, lo, hi, options);
  auto parts = partition(rep.cuts, lo, hi);
  const mpfr_prec_t bits = options.precision.bits(0);
  rep.rows = parallel_map<SweepRow>(parts.size(), options.workers, [&](std::size_t i) {
    SweepRow row{parts[i], 0, std::nullopt, std::nullopt, std::nullopt};
    row.m_n = max_overlap(BetaContext::numeric(parts[i].midpoint, options.precision), n).m;
    row.bound_left = detail::endpoint_bound(parts[i].left, n, row.m_n, bits);
    row.bound_right = detail::endpoint_bound(parts[i].right, n, row.m_n, bits);
    row.bound_min = detail::smaller(row.bound_left, row.bound_right);
    return row;
  });
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& b = rep.rows[i].bound_min;
    if (b && (!rep.bound_min || compare_lower(*b, *rep.bound_min) < 0)) {
      rep.bound_min = b;
      rep.argmin = i;
    }
  }
  return rep;
}

}  // namespace garsia
