#pragma once

// Lower bounds H_beta >= log_beta(2 / m_n^{1/n}) and the multinacci closed
// forms they are checked against.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "garsia/algebra/algebraic_real.hpp"
#include "garsia/expansion/beta_context.hpp"
#include "garsia/expansion/overlap.hpp"

namespace garsia {

struct BoundResult {
  std::string beta;
  int n = 0;
  std::uint64_t m_n = 0;
  Interval bound;         // its lower endpoint is the certified lower bound
  Interval growth_upper;  // m_n^{1/n}; its upper endpoint bounds M_beta
  Mode mode = Mode::numeric;

  std::string bound_lower(int digits) const { return bound.lower_decimal(digits); }
  std::string growth_upper_decimal(int digits) const { return growth_upper.upper_decimal(digits); }
};

/// (log 2 - log(m)/n) / log beta for an enclosure of beta > 1. Exactly 0
/// when m = 2^n.
inline Interval bound_value(const Interval& beta, int n, std::uint64_t m) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (m < 1) throw std::invalid_argument("m_n must be positive");
  const mpfr_prec_t bits = beta.precision();
  if (Integer(static_cast<unsigned long>(m)) == pow2(static_cast<unsigned long>(n))) return Interval(Rational(0), bits);
  const Interval mi(Rational(Integer(static_cast<unsigned long>(m))), bits);
  Interval num = Interval::log2_const(bits) - div_ui(log(mi), static_cast<unsigned long>(n));
  return num / log(beta);
}

inline BoundResult lower_bound(const BetaContext& ctx, int n, std::uint64_t m_n) {
  const Interval beta = ctx.beta(0);
  BoundResult r;
  r.beta = ctx.describe();
  r.n = n;
  r.m_n = m_n;
  r.mode = ctx.mode();
  r.bound = bound_value(beta, n, m_n);
  r.growth_upper = root(Interval(Rational(Integer(static_cast<unsigned long>(m_n))), beta.precision()),
                        static_cast<unsigned long>(n));
  return r;
}

/// m_n from the sweep, then the bound.
inline BoundResult compute_bound(const BetaContext& ctx, int n) {
  return lower_bound(ctx, n, max_overlap(ctx, n).m);
}

/// tau_m: the root in (1,2) of x^m - x^{m-1} - ... - 1.
inline AlgebraicReal multinacci(unsigned m) {
  if (m < 2) throw std::invalid_argument("multinacci index must be >= 2");
  std::vector<Integer> c(m + 1, -1);
  c[m] = 1;
  return isolate_real_roots(IntPolynomial(std::move(c)), Rational(1), Rational(2)).at(0);
}

struct MultinacciGrowth {
  std::string exact;  // closed form
  Interval value;
};

/// M_{tau_m}: sqrt(tau) for m = 2, 2^{1/(m+1)} for m >= 3.
inline MultinacciGrowth multinacci_growth(unsigned m, mpfr_prec_t bits = bits_for_digits(50)) {
  if (m < 2) throw std::invalid_argument("multinacci index must be >= 2");
  if (m == 2) return {"sqrt(tau)", sqrt(multinacci(2).enclosure(bits))};
  return {"2^(1/" + std::to_string(m + 1) + ")", root(Interval(Rational(2), bits), m + 1)};
}

/// Infimum of the local dimension at tau_m: log_tau 2 - 1/2 for m = 2,
/// (m/(m+1)) log_{tau_m} 2 for m >= 3.
inline Interval multinacci_bound(unsigned m, mpfr_prec_t bits = bits_for_digits(50)) {
  if (m < 2) throw std::invalid_argument("multinacci index must be >= 2");
  Interval log_tau = log(multinacci(m).enclosure(bits));
  Interval log_base2 = Interval::log2_const(bits) / log_tau;
  if (m == 2) return log_base2 - Interval(Rational(1, 2), bits);
  return scale(div_ui(log_base2, m + 1), Integer(m));
}

/// log_{tau_m}(2 / M_{tau_m}), the same quantity from the growth exponent.
inline Interval multinacci_bound_from_growth(unsigned m, mpfr_prec_t bits = bits_for_digits(50)) {
  Interval log_tau = log(multinacci(m).enclosure(bits));
  Interval growth = multinacci_growth(m, bits).value;
  return (Interval::log2_const(bits) - log(growth)) / log_tau;
}

/// Published values of H_{tau_m}, kept as external comparison constants.
inline double reference_entropy(unsigned m) {
  static const std::map<unsigned, double> table{{2, 0.9957}, {3, 0.9804}, {4, 0.9869}, {5, 0.9926}};
  auto it = table.find(m);
  if (it == table.end()) throw std::out_of_range("no reference entropy for m = " + std::to_string(m));
  return it->second;
}

}  // namespace garsia
