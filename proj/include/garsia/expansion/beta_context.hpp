#pragma once

// Evaluation context for a fixed base beta in (1,2).

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "garsia/algebra/algebraic_real.hpp"
#include "garsia/algebra/number_field.hpp"
#include "garsia/algebra/precision.hpp"

namespace garsia {

/// Raised when interval enclosures cannot order two quantities and no exact
/// description of beta is available to settle it.
class IndeterminateOrdering : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { numeric, symbolic };

inline const char* to_string(Mode m) { return m == Mode::numeric ? "numeric" : "symbolic"; }

/// Numeric mode works with interval enclosures of beta, tightened on demand
/// by escalation level. When beta is known exactly (rational or algebraic),
/// ties the intervals cannot break are settled by exact sign evaluation.
/// Symbolic mode additionally carries Q[x]/(p) for the monic minimal
/// polynomial p of beta, so values are compared by canonical form.
///
/// Copies share one enclosure cache; all methods are safe to call
/// concurrently.
class BetaContext {
 public:
  static BetaContext numeric(const Rational& beta, PrecisionContext prec = {}) {
    if (beta <= 1 || beta >= 2) throw std::invalid_argument("beta must lie in (1,2), got " + to_string(beta));
    BetaContext ctx(Mode::numeric, prec);
    ctx.exact_ = beta;
    return ctx;
  }

  static BetaContext numeric(const AlgebraicReal& beta, PrecisionContext prec = {}) {
    if (auto q = beta.as_rational()) return numeric(*q, prec);
    check_range(beta);
    BetaContext ctx(Mode::numeric, prec);
    ctx.exact_ = beta;
    return ctx;
  }

  /// Enclosure only: no exact tie-breaking, so overlaps that survive are
  /// reported as IndeterminateOrdering.
  static BetaContext numeric(const Interval& beta, PrecisionContext prec = {}) {
    if (!(mpfr_cmp_ui(beta.lo(), 1) > 0 && mpfr_cmp_ui(beta.hi(), 2) < 0))
      throw std::invalid_argument("beta enclosure must lie inside (1,2)");
    BetaContext ctx(Mode::numeric, prec);
    ctx.exact_ = beta;
    return ctx;
  }

  /// beta's defining polynomial (primitive, square-free) must be monic, and
  /// should be its minimal polynomial for full class compression.
  static BetaContext symbolic(const AlgebraicReal& beta, PrecisionContext prec = {}) {
    check_range(beta);
    const IntPolynomial& p = beta.polynomial();
    if (!p.is_monic())
      throw std::invalid_argument("symbolic mode needs a monic defining polynomial, got " + p.to_string());
    if (p[0] == 0) throw std::invalid_argument("defining polynomial " + p.to_string() + " has the factor x");
    BetaContext ctx(Mode::symbolic, prec);
    ctx.exact_ = beta;
    ctx.field_ = std::make_shared<NumberField>(p);
    return ctx;
  }

  Mode mode() const { return mode_; }
  bool is_symbolic() const { return mode_ == Mode::symbolic; }
  const PrecisionContext& precision() const { return prec_; }
  int max_level() const { return prec_.max_escalations; }

  std::optional<Rational> rational() const {
    if (auto q = std::get_if<Rational>(&exact_)) return *q;
    return std::nullopt;
  }
  std::optional<AlgebraicReal> algebraic() const {
    if (auto a = std::get_if<AlgebraicReal>(&exact_)) return *a;
    if (auto q = std::get_if<Rational>(&exact_)) return AlgebraicReal::from_rational(*q);
    return std::nullopt;
  }
  bool is_exact() const { return !std::holds_alternative<Interval>(exact_); }

  const NumberField& field() const {
    if (!field_) throw std::logic_error("number field requested outside symbolic mode");
    return *field_;
  }

  /// Enclosure of beta at escalation `level`.
  Interval beta(int level = 0) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->beta.find(level);
    if (it != cache_->beta.end()) return it->second;
    Interval b = compute_beta(level);
    cache_->beta.emplace(level, b);
    return b;
  }

  /// Enclosure of 1/(beta - 1), the right end of I_beta.
  Interval tail_constant(int level = 0) const {
    Interval b = beta(level);
    return Interval(Rational(1), b.precision()) / (b - Interval(Rational(1), b.precision()));
  }

  /// Enclosure of beta^-k.
  Interval inverse_power(int k, int level = 0) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->inverse_powers.find({level, k});
      if (it != cache_->inverse_powers.end()) return it->second;
    }
    Interval b = beta(level);
    Interval r(Rational(1), b.precision());
    Interval inv = r / b;
    for (int i = 0; i < k; ++i) r = r * inv;
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->inverse_powers.emplace(std::make_pair(level, k), r);
    return r;
  }

  /// Exact sign of f(beta), or nullopt when only an enclosure is known and it
  /// does not decide.
  std::optional<int> exact_sign(const IntPolynomial& f) const {
    if (auto q = std::get_if<Rational>(&exact_)) return f.sign_at(*q);
    if (auto a = std::get_if<AlgebraicReal>(&exact_)) return a->sign_of(f);
    Interval v = f.eval(std::get<Interval>(exact_));
    return v.sign();
  }

  /// Exact sign of a field element at beta (symbolic mode).
  int sign(const FieldElement& e) const {
    if (e.is_zero()) return 0;
    for (int level = 0; level <= max_level(); ++level) {
      if (auto s = e.eval(beta(level)).sign()) return *s;
    }
    return std::get<AlgebraicReal>(exact_).sign_of(e.numerator());
  }

  /// "3/2", "1.85" style for rationals, "root of p in (lo, hi)" otherwise.
  std::string describe() const {
    if (auto q = std::get_if<Rational>(&exact_)) return to_string(*q);
    if (auto a = std::get_if<AlgebraicReal>(&exact_))
      return "root of " + a->polynomial().to_string() + " in [" + to_string(a->lo()) + ", " + to_string(a->hi()) + "]";
    const auto& iv = std::get<Interval>(exact_);
    return "[" + iv.lower_decimal(prec_.decimal_digits) + ", " + iv.upper_decimal(prec_.decimal_digits) + "]";
  }

  std::string decimal(int digits) const {
    if (auto q = std::get_if<Rational>(&exact_)) return to_decimal(*q, digits);
    if (auto a = std::get_if<AlgebraicReal>(&exact_)) return a->decimal(digits);
    return std::get<Interval>(exact_).mid_decimal(digits);
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, Interval> beta;
    std::map<std::pair<int, int>, Interval> inverse_powers;
  };

  BetaContext(Mode mode, PrecisionContext prec) : mode_(mode), prec_(prec), cache_(std::make_shared<Cache>()) {}

  static void check_range(const AlgebraicReal& beta) {
    if (compare(beta, AlgebraicReal::from_rational(Rational(1))) <= 0 ||
        compare(beta, AlgebraicReal::from_rational(Rational(2))) >= 0)
      throw std::invalid_argument("beta must lie in (1,2)");
  }

  Interval compute_beta(int level) const {
    const mpfr_prec_t bits = prec_.bits(level);
    if (auto q = std::get_if<Rational>(&exact_)) return Interval(*q, bits);
    if (auto a = std::get_if<AlgebraicReal>(&exact_)) return a->enclosure(bits);
    return std::get<Interval>(exact_);
  }

  Mode mode_;
  PrecisionContext prec_;
  std::variant<Rational, AlgebraicReal, Interval> exact_;
  std::shared_ptr<const NumberField> field_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace garsia
