#pragma once

// Points given by eventually periodic expansions, and the growth of
// #E_n(x; beta) at such points.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

#include "garsia/expansion/beta_context.hpp"
#include "garsia/expansion/overlap.hpp"
#include "garsia/expansion/word.hpp"

namespace garsia {

/// The exact value of preperiod followed by period repeated forever:
/// (s_pre + s_per / (beta^l - 1)) beta^-m with s_pre = sum a_k beta^{m-k},
/// s_per = sum b_k beta^{l-k}. Symbolic mode.
inline FieldElement value_of_periodic(const Word& preperiod, const Word& period, const BetaContext& ctx) {
  if (!ctx.is_symbolic()) throw std::invalid_argument("periodic values need symbolic mode");
  if (period.empty()) throw std::invalid_argument("period must be nonempty");
  const NumberField& f = ctx.field();
  const auto l = static_cast<unsigned long>(period.length());
  const auto m = static_cast<unsigned long>(preperiod.length());
  FieldElement s_per = f.reduce(period.scaled_polynomial());
  FieldElement denom = f.sub(f.pow(f.generator(), l), f.one());
  FieldElement tail = f.div(s_per, denom);
  FieldElement s_pre = preperiod.empty() ? f.zero() : f.reduce(preperiod.scaled_polynomial());
  return f.div(f.add(s_pre, tail), f.pow(f.generator(), m));
}

/// #E_n(x; beta) for n = 1..n_max, closed containment. Tracks the scaled
/// remainders y_n = beta^n (x - L_n), which follow y' = beta y - a and stay
/// in [0, 1/(beta - 1)]; equal remainders are merged with their counts.
inline std::vector<std::uint64_t> growth_profile(const Point& x, const BetaContext& ctx, int n_max) {
  if (!ctx.is_symbolic()) throw std::invalid_argument("growth profiles need symbolic mode");
  const NumberField& f = ctx.field();
  FieldElement start;
  if (auto q = std::get_if<Rational>(&x)) {
    start = f.from_rational(*q);
  } else if (auto e = std::get_if<FieldElement>(&x)) {
    start = *e;
  } else {
    throw std::invalid_argument("growth profiles need an exact point");
  }
  const FieldElement one = f.one();
  const FieldElement beta_minus_one = f.sub(f.generator(), one);
  if (ctx.sign(start) < 0 || ctx.sign(f.sub(one, f.mul(start, beta_minus_one))) < 0)
    throw std::invalid_argument("point lies outside I_beta");
  std::unordered_map<FieldElement, std::uint64_t, FieldElementHash> level{{start, 1}};
  std::vector<std::uint64_t> counts;
  for (int n = 1; n <= n_max; ++n) {
    std::unordered_map<FieldElement, std::uint64_t, FieldElementHash> next;
    for (const auto& [y, c] : level) {
      FieldElement by = f.mul_x(y);
      for (int a = 0; a <= 1; ++a) {
        FieldElement z = a ? f.sub(by, one) : by;
        if (ctx.sign(z) < 0) continue;
        if (ctx.sign(f.sub(one, f.mul(z, beta_minus_one))) < 0) continue;
        next[z] += c;
      }
    }
    level = std::move(next);
    std::uint64_t total = 0;
    for (const auto& kv : level) total += kv.second;
    counts.push_back(total);
  }
  return counts;
}

}  // namespace garsia
