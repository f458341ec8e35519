#pragma once

// Cyclotomic polynomials and trial-division stripping.

#include <map>
#include <mutex>
#include <vector>

#include "garsia/algebra/int_polynomial.hpp"

namespace garsia {

inline unsigned long euler_phi(unsigned long k) {
  unsigned long result = k;
  for (unsigned long p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

/// Phi_k, computed as (x^k - 1) divided by Phi_d for every proper divisor d.
inline IntPolynomial cyclotomic(unsigned long k) {
  static std::mutex mutex;
  static std::map<unsigned long, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  IntPolynomial p = IntPolynomial::monomial(1, k) - IntPolynomial{1};
  for (unsigned long d = 1; d < k; ++d) {
    if (k % d == 0) p = *p.exact_quotient(cyclotomic(d));
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(k, p);
  return p;
}

struct CyclotomicStrip {
  IntPolynomial cofactor;
  std::vector<unsigned long> removed;  // indices k, with repetition
};

/// Divides out every Phi_k with phi(k) <= deg p, as often as it divides.
inline CyclotomicStrip cyclotomic_strip_detailed(const IntPolynomial& p) {
  CyclotomicStrip out{p, {}};
  if (p.degree() < 1) return out;
  // phi(k) >= sqrt(k / 2), so phi(k) <= D forces k <= 2 D^2
  const auto max_k = 2UL * static_cast<unsigned long>(p.degree()) * static_cast<unsigned long>(p.degree());
  for (unsigned long k = 1; k <= max_k && out.cofactor.degree() >= 1; ++k) {
    if (euler_phi(k) > static_cast<unsigned long>(out.cofactor.degree())) continue;
    const IntPolynomial phi = cyclotomic(k);
    while (out.cofactor.degree() >= phi.degree()) {
      auto q = out.cofactor.exact_quotient(phi);
      if (!q) break;
      out.cofactor = std::move(*q);
      out.removed.push_back(k);
    }
  }
  return out;
}

inline IntPolynomial cyclotomic_strip(const IntPolynomial& p) { return cyclotomic_strip_detailed(p).cofactor; }

}  // namespace garsia
