#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ordtop/error.hpp"

namespace ordtop {

// Exact rational with normalized sign and gcd-reduced terms.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }
  explicit Rational(int64_t n) : num(n), den(1) {}

  void normalize() {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline int rat_cmp(const Rational& a, const Rational& b) {
  // a.num/a.den vs b.num/b.den with positive denominators.
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline bool operator==(const Rational& a, const Rational& b) { return rat_cmp(a, b) == 0; }
inline bool operator!=(const Rational& a, const Rational& b) { return rat_cmp(a, b) != 0; }
inline bool operator<(const Rational& a, const Rational& b) { return rat_cmp(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return rat_cmp(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return rat_cmp(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return rat_cmp(a, b) >= 0; }

inline Rational rat_add(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline Rational rat_sub(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational parse_rational(const std::string& text);

}  // namespace ordtop
