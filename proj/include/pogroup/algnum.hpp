#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pogroup/rational.hpp"

namespace pogroup {

// Element of Q(sqrt(d1), ..., sqrt(dk)) for squarefree positive integers di.
// Canonical form: terms sorted by radicand (radicand 1 is the rational
// part), coefficients reduced, zero coefficients dropped. Since square
// roots of distinct squarefree integers are linearly independent over Q,
// the zero test is syntactic and sign determination always terminates.
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(long long v);
  AlgNum(const Rational& v);

  // s * sqrt(n) with the square part of n extracted, e.g. sqrt(12) = 2*sqrt(3).
  static AlgNum sqrt_of(long long n, const Rational& scale = Rational(1));

  const std::vector<std::pair<long long, Rational>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;

  int sign() const;

  AlgNum operator-() const;
  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  AlgNum inv() const;
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inv(); }

  friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }
  friend bool operator<(const AlgNum& a, const AlgNum& b) { return (a - b).sign() < 0; }
  friend bool operator>(const AlgNum& a, const AlgNum& b) { return b < a; }

  AlgNum scaled(const Rational& q) const;

  // Canonical literal, e.g. "3/2 + 1/1*sqrt(2)".
  std::string str() const;

 private:
  void add_term(long long rad, const Rational& coeff);

  std::vector<std::pair<long long, Rational>> terms_;
};

}  // namespace pogroup
