#ifndef BORELSUM_RATIONAL_HPP
#define BORELSUM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace borelsum {

// Exact rational arithmetic for the small quantities derived from (p, q):
// the summability index k = p/(q-p), the Gevrey order s = (q-p)/p and the
// kernel exponents alpha = q/p, beta = q/(q-p).  Denominators stay tiny, so
// int64 never overflows in practice; normalize() keeps gcd(num,den) = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_integer() const { return den == 1; }
  bool is_nonpositive_integer() const { return den == 1 && num <= 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  long double value_ld() const {
    return static_cast<long double>(num) / static_cast<long double>(den);
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

}  // namespace borelsum

#endif
