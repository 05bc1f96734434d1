#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace loosehc {

/// Exact fraction with canonical sign/reduction. Densities stay tiny
/// (numerators and denominators bounded by edge/vertex counts), so
/// 64-bit components with 128-bit cross multiplication are plenty.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace loosehc
