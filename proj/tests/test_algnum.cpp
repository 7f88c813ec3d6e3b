#include <cmath>
#include <random>

#include "doctest.h"
#include "pogroup/algnum.hpp"

using namespace pogroup;

namespace {

double to_double(const AlgNum& x) {
  double s = 0;
  for (auto& [rad, c] : x.terms())
    s += (double)c.num() / (double)c.den() * std::sqrt((double)rad);
  return s;
}

AlgNum random_algnum(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-6, 6), den(1, 4);
  static const long long rads[] = {1, 2, 3, 5};
  AlgNum x;
  for (long long r : rads) {
    int c = coeff(rng);
    if (c != 0) x = x + AlgNum::sqrt_of(r, Rational(c, den(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-3, 2).str() == "-3/2");
}

TEST_CASE("sqrt normalization") {
  CHECK(AlgNum::sqrt_of(12).str() == "2/1*sqrt(3)");
  CHECK(AlgNum::sqrt_of(4).str() == "2/1");
  CHECK(AlgNum::sqrt_of(1) == AlgNum(1));
  CHECK((AlgNum::sqrt_of(2) * AlgNum::sqrt_of(2)) == AlgNum(2));
  CHECK((AlgNum::sqrt_of(2) * AlgNum::sqrt_of(3)) == AlgNum::sqrt_of(6));
  CHECK((AlgNum::sqrt_of(6) * AlgNum::sqrt_of(10)) == AlgNum::sqrt_of(15, Rational(2)));
}

TEST_CASE("sign: pinned cases") {
  // sqrt(2) - 1 > 0 since 2 > 1
  CHECK((AlgNum::sqrt_of(2) - AlgNum(1)).sign() == 1);
  CHECK(AlgNum().sign() == 0);
  // 3 - 2 sqrt(2): squaring oracle compares 9 with 8
  CHECK((AlgNum(3) - AlgNum::sqrt_of(2, Rational(2))).sign() == 1);
  CHECK((AlgNum::sqrt_of(2, Rational(2)) - AlgNum(3)).sign() == -1);
  // tight: 7/5 < sqrt(2) < 17/12
  CHECK((AlgNum::sqrt_of(2) - AlgNum(Rational(7, 5))).sign() == 1);
  CHECK((AlgNum::sqrt_of(2) - AlgNum(Rational(17, 12))).sign() == -1);
  // multi-radical zero: sqrt(2)+sqrt(3)-sqrt(3)-sqrt(2) == 0
  AlgNum z = AlgNum::sqrt_of(2) + AlgNum::sqrt_of(3) - AlgNum::sqrt_of(3) - AlgNum::sqrt_of(2);
  CHECK(z.is_zero());
  // sqrt(2)+sqrt(3) vs sqrt(10): 5+2sqrt(6) vs 10 -> sqrt(6) vs 5/2 -> 24 < 25
  CHECK((AlgNum::sqrt_of(2) + AlgNum::sqrt_of(3) - AlgNum::sqrt_of(10)).sign() == -1);
  // sqrt(3) - (2/5) sqrt(2) > 0: 3 > 8/25
  CHECK((AlgNum::sqrt_of(2) + AlgNum::sqrt_of(3) - AlgNum::sqrt_of(2, Rational(7, 5))).sign() == 1);
}

TEST_CASE("sign matches double evaluation when well separated") {
  std::mt19937 rng(23);
  for (int i = 0; i < 2000; ++i) {
    AlgNum x = random_algnum(rng);
    double d = to_double(x);
    if (std::abs(d) < 1e-6) continue;
    CHECK(x.sign() == (d > 0 ? 1 : -1));
  }
}

TEST_CASE("field axioms and sign morphism on random samples") {
  std::mt19937 rng(29);
  for (int i = 0; i < 500; ++i) {
    AlgNum x = random_algnum(rng), y = random_algnum(rng), z = random_algnum(rng);
    CHECK((x + y) == (y + x));
    CHECK((x * y) == (y * x));
    CHECK(((x + y) + z) == (x + (y + z)));
    CHECK(((x * y) * z) == (x * (y * z)));
    CHECK((x * (y + z)) == (x * y + x * z));
    CHECK((x - x).is_zero());
    CHECK((x * y).sign() == x.sign() * y.sign());
    CHECK((-x).sign() == -x.sign());
    if (!x.is_zero()) {
      CHECK((x * x.inv()) == AlgNum(1));
    }
  }
}

TEST_CASE("comparison is a strict total order") {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    AlgNum x = random_algnum(rng), y = random_algnum(rng);
    int lt = x < y, gt = y < x, eq = x == y;
    CHECK(lt + gt + eq == 1);
  }
}

TEST_CASE("canonical literal printing") {
  AlgNum x = AlgNum(Rational(3, 2)) + AlgNum::sqrt_of(2);
  CHECK(x.str() == "3/2 + 1/1*sqrt(2)");
  AlgNum y = AlgNum::sqrt_of(3, Rational(-1, 2));
  CHECK(y.str() == "-1/2*sqrt(3)");
  CHECK(AlgNum().str() == "0/1");
}
