#include "pogroup/algnum.hpp"

#include <algorithm>
#include <numeric>

#include "pogroup/intlat.hpp"

namespace pogroup {

namespace {

long long isqrt128(__int128 v) {
  if (v < 0) fail(ErrorCode::Validation, "isqrt of negative");
  if (v == 0) return 0;
  __int128 lo = 0, hi = 1;
  while (hi * hi <= v) hi <<= 1;
  while (lo + 1 < hi) {
    __int128 mid = (lo + hi) / 2;
    if (mid * mid <= v)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<long long>(lo);
}

// squarefree factorization n = square * free
void extract_square(long long n, long long& sq, long long& sfree) {
  sq = 1;
  sfree = 1;
  for (long long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) sq = checked_mul(sq, p);
    if (e % 2 == 1) sfree = checked_mul(sfree, p);
  }
  sfree = checked_mul(sfree, n);
}

long long smallest_prime_factor(long long n) {
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

}  // namespace

AlgNum::AlgNum(long long v) {
  if (v != 0) terms_.push_back({1, Rational(v)});
}

AlgNum::AlgNum(const Rational& v) {
  if (!v.is_zero()) terms_.push_back({1, v});
}

AlgNum AlgNum::sqrt_of(long long n, const Rational& scale) {
  if (n < 0) fail(ErrorCode::Validation, "sqrt of negative integer");
  AlgNum r;
  if (n == 0 || scale.is_zero()) return r;
  long long sq, sfree;
  extract_square(n, sq, sfree);
  r.add_term(sfree, scale * Rational(sq));
  return r;
}

bool AlgNum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

Rational AlgNum::rational_part() const {
  for (auto& [rad, c] : terms_)
    if (rad == 1) return c;
  return Rational(0);
}

void AlgNum::add_term(long long rad, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), rad,
                             [](const auto& t, long long r) { return t.first < r; });
  if (it != terms_.end() && it->first == rad) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {rad, coeff});
  }
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (auto& [rad, c] : r.terms_) c = -c;
  return r;
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  AlgNum r = a;
  for (auto& [rad, c] : b.terms_) r.add_term(rad, c);
  return r;
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  AlgNum r;
  for (auto& [m, qa] : a.terms_) {
    for (auto& [n, qb] : b.terms_) {
      long long g = std::gcd(m, n);
      long long rad = checked_mul(m / g, n / g);
      r.add_term(rad, qa * qb * Rational(g));
    }
  }
  return r;
}

AlgNum AlgNum::scaled(const Rational& q) const {
  AlgNum r;
  for (auto& [rad, c] : terms_) r.add_term(rad, c * q);
  return r;
}

int AlgNum::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_[0].second.sign();

  // fast path: shrinking rational intervals around each sqrt
  for (int k = 10; k <= 40; k += 10) {
    try {
      Rational lo(0), hi(0);
      long long denom = 1LL << k;
      for (auto& [rad, c] : terms_) {
        Rational rlo, rhi;
        if (rad == 1) {
          rlo = rhi = Rational(1);
        } else {
          long long s = isqrt128(__int128(rad) << (2 * k));
          rlo = Rational(s, denom);
          rhi = Rational(s + 1, denom);
        }
        if (c.sign() >= 0) {
          lo += c * rlo;
          hi += c * rhi;
        } else {
          lo += c * rhi;
          hi += c * rlo;
        }
      }
      if (lo.sign() > 0) return 1;
      if (hi.sign() < 0) return -1;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Overflow) throw;
      break;
    }
  }

  // exact path: split off one prime, x = A + sqrt(p) * B, recurse
  long long p = 0;
  for (auto& [rad, c] : terms_)
    if (rad > 1) {
      p = smallest_prime_factor(rad);
      break;
    }
  AlgNum a, b;
  for (auto& [rad, c] : terms_) {
    if (rad % p == 0)
      b.add_term(rad / p, c);
    else
      a.add_term(rad, c);
  }
  int sa = a.sign(), sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  AlgNum discr = a * a - AlgNum(Rational(p)) * b * b;
  return sa * discr.sign();
}

AlgNum AlgNum::inv() const {
  if (terms_.empty()) fail(ErrorCode::Overflow, "inverse of zero");
  if (is_rational()) return AlgNum(Rational(1) / terms_[0].second);
  long long p = 0;
  for (auto& [rad, c] : terms_)
    if (rad > 1) {
      p = smallest_prime_factor(rad);
      break;
    }
  AlgNum a, b;
  for (auto& [rad, c] : terms_) {
    if (rad % p == 0)
      b.add_term(rad / p, c);
    else
      a.add_term(rad, c);
  }
  // 1/(A + sqrt(p) B) = (A - sqrt(p) B) / (A^2 - p B^2); the denominator is
  // nonzero because sqrt(p) is irrational over the subfield.
  AlgNum sqrtp = AlgNum::sqrt_of(p);
  AlgNum conj = a - sqrtp * b;
  AlgNum discr = a * a - AlgNum(Rational(p)) * b * b;
  return conj * discr.inv();
}

std::string AlgNum::str() const {
  if (terms_.empty()) return "0/1";
  std::string out;
  bool first = true;
  for (auto& [rad, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        out += "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
      coeff = coeff.abs();
    }
    out += std::to_string(coeff.num()) + "/" + std::to_string(coeff.den());
    if (rad != 1) out += "*sqrt(" + std::to_string(rad) + ")";
  }
  return out;
}

}  // namespace pogroup
