#pragma once

// Limit points of the Pisot numbers in (1,2) and the regular Pisot families
// accumulating at them.

#include <stdexcept>
#include <string>

#include "garsia/algebra/int_polynomial.hpp"

namespace garsia {

enum class LimitFamily { phi, psi, chi };

/// Phi_r = x^{r+1} - 2x^r + x - 1, Psi_r = x^{r+1} - x^r - ... - 1,
/// chi = x^4 - x^3 - 2x^2 + 1 (r is ignored for chi).
inline IntPolynomial amara_limit_poly(LimitFamily kind, unsigned r = 1) {
  if (kind != LimitFamily::chi && r < 1) throw std::invalid_argument("limit family index r must be >= 1");
  switch (kind) {
    case LimitFamily::phi:
      return IntPolynomial::monomial(1, r + 1) - IntPolynomial::monomial(2, r) + IntPolynomial{-1, 1};
    case LimitFamily::psi: {
      std::vector<Integer> c(r + 2, -1);
      c[r + 1] = 1;
      return IntPolynomial(std::move(c));
    }
    case LimitFamily::chi:
      return IntPolynomial{1, 0, -2, -1, 1};
  }
  throw std::invalid_argument("unknown limit family");
}

/// Number of defining-polynomial rows for a family.
inline int regular_variant_count(LimitFamily kind) { return kind == LimitFamily::phi ? 3 : 2; }

/// The correction term added (sign +1) or subtracted (sign -1) from
/// limit(x) * x^n in row `variant` (1-based) of the family.
inline IntPolynomial regular_correction(LimitFamily kind, unsigned r, int variant) {
  auto xr = [](unsigned k) { return IntPolynomial::monomial(1, k); };
  switch (kind) {
    case LimitFamily::phi:
      if (variant == 1) return xr(r) - xr(r - 1) + IntPolynomial{1};
      if (variant == 2) return xr(r) - IntPolynomial{0, 1} + IntPolynomial{1};
      if (variant == 3) return (xr(r) + IntPolynomial{1}) * IntPolynomial{-1, 1};
      break;
    case LimitFamily::psi:
      if (variant == 1) return xr(r + 1) - IntPolynomial{1};
      if (variant == 2) {
        // (x^r - 1)/(x - 1) = 1 + x + ... + x^{r-1}
        return IntPolynomial(std::vector<Integer>(r, 1));
      }
      break;
    case LimitFamily::chi:
      if (variant == 1) return IntPolynomial{-1, -1, 1, 1};
      if (variant == 2) return IntPolynomial{1, 0, -1, 0, 1};
      break;
  }
  throw std::invalid_argument("no regular Pisot variant " + std::to_string(variant) + " for this family");
}

/// limit(x) x^n + sign * correction(x). May carry cyclotomic factors and is
/// only guaranteed to have a Pisot root for large n.
inline IntPolynomial regular_pisot_poly(LimitFamily kind, unsigned r, int variant, unsigned n, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  IntPolynomial base = amara_limit_poly(kind, r).shifted(n);
  IntPolynomial corr = regular_correction(kind, r, variant);
  return sign > 0 ? base + corr : base - corr;
}

}  // namespace garsia
