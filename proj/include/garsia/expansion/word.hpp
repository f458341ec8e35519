#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garsia/algebra/int_polynomial.hpp"

namespace garsia {

/// A 0-1 word (a_1, ..., a_n) with 1 <= n <= 63, packed so that a_1 is the
/// most significant bit. Lexicographic order of equal-length words is the
/// numeric order of `bits`.
class Word {
 public:
  static constexpr int max_length = 63;

  Word() = default;
  Word(std::uint64_t bits, int length) : bits_(bits), length_(length) {
    if (length < 0 || length > max_length) throw std::invalid_argument("word length out of range");
    if (length < 64 && (bits >> length) != 0) throw std::invalid_argument("word bits exceed its length");
  }

  /// "0110", "(0,1,1,0)" or "0,1,1,0".
  static Word parse(std::string_view text) {
    std::uint64_t bits = 0;
    int n = 0;
    for (char c : text) {
      if (c == '0' || c == '1') {
        if (n == max_length) throw ParseError("word longer than 63 digits");
        bits = bits << 1 | static_cast<std::uint64_t>(c - '0');
        ++n;
      } else if (c != '(' && c != ')' && c != ',' && c != ' ') {
        throw ParseError("bad digit '" + std::string(1, c) + "' in word");
      }
    }
    return Word(bits, n);
  }

  static Word from_digits(const std::vector<int>& digits) {
    std::uint64_t bits = 0;
    for (int d : digits) {
      if (d != 0 && d != 1) throw std::invalid_argument("digits must be 0 or 1");
      bits = bits << 1 | static_cast<std::uint64_t>(d);
    }
    return Word(bits, static_cast<int>(digits.size()));
  }

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool empty() const { return length_ == 0; }

  /// a_k for 1 <= k <= n.
  int digit(int k) const { return static_cast<int>(bits_ >> (length_ - k) & 1U); }

  Word appended(int a) const { return Word(bits_ << 1 | static_cast<std::uint64_t>(a), length_ + 1); }

  Word concat(const Word& w) const { return Word(bits_ << w.length_ | w.bits_, length_ + w.length_); }

  int ones() const { return __builtin_popcountll(bits_); }

  /// sum_k a_k x^{n-k}; its coefficients are the bits of the word.
  IntPolynomial scaled_polynomial() const {
    std::vector<Integer> c(static_cast<std::size_t>(length_));
    for (int j = 0; j < length_; ++j) c[static_cast<std::size_t>(j)] = static_cast<long>(bits_ >> j & 1U);
    return IntPolynomial(std::move(c));
  }

  std::string to_string() const {
    std::string out = "(";
    for (int k = 1; k <= length_; ++k) {
      if (k > 1) out += ',';
      out += static_cast<char>('0' + digit(k));
    }
    return out + ")";
  }

  std::string compact() const {
    std::string out;
    for (int k = 1; k <= length_; ++k) out += static_cast<char>('0' + digit(k));
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

enum class Side { L, U };

inline const char* to_string(Side s) { return s == Side::L ? "L" : "U"; }

}  // namespace garsia
