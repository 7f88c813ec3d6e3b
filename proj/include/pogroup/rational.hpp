#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "pogroup/errors.hpp"

namespace pogroup {

// Exact rational over 64-bit integers. All intermediates go through
// __int128 and narrowing is checked, so results are either exact or an
// Overflow error; nothing ever wraps silently.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorCode::Overflow, "rational division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  struct unchecked {};
  Rational(unchecked, long long n, long long d) : num_(n), den_(d) {}

  static __int128 i128(long long v) { return static_cast<__int128>(v); }

  static long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::Overflow, "rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) fail(ErrorCode::Overflow, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    __int128 g = gcd128(n, d);
    return Rational(unchecked{}, narrow(n / g), narrow(d / g));
  }

  void normalize() {
    Rational r = from_i128(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  long long num_;
  long long den_;  // > 0, gcd(num, den) == 1
};

}  // namespace pogroup
