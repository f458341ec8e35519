#pragma once

#include <stdexcept>

#include "garsia/algebra/interval.hpp"

namespace garsia {

struct PrecisionContext {
  int decimal_digits = 50;
  int max_escalations = 4;

  PrecisionContext() = default;
  PrecisionContext(int digits, int escalations) : decimal_digits(digits), max_escalations(escalations) {
    if (decimal_digits < 15) throw std::invalid_argument("precision must be at least 15 decimal digits");
    if (max_escalations < 0) throw std::invalid_argument("max_escalations must be nonnegative");
  }

  /// Working precision in bits at escalation `level` (level 0 is the base).
  mpfr_prec_t bits(int level) const { return bits_for_digits(decimal_digits) << level; }
};

}  // namespace garsia
