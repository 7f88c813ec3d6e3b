#include <random>

#include "doctest.h"
#include "pogroup/intlat.hpp"

using namespace pogroup;

namespace {

IntMat mat(int cols, std::vector<IntVec> rows) { return IntMat(cols, std::move(rows)); }

// brute-force membership: b in row lattice iff b is a bounded integer
// combination of the rows (valid on small instances when bounds cover the
// coefficient range of the HNF solution)
bool brute_contains(const IntMat& a, const IntVec& b, int bound) {
  int m = a.nrows();
  std::vector<long long> c(m, -bound);
  while (true) {
    IntVec acc(a.cols, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < a.cols; ++j) acc[j] += c[i] * a.rows[i][j];
    if (acc == b) return true;
    int pos = 0;
    while (pos < m && ++c[pos] > bound) c[pos++] = -bound;
    if (pos == m) return false;
  }
}

}  // namespace

TEST_CASE("hnf basics") {
  IntMat a = mat(2, {{2, 0}, {0, 1}});
  HnfResult r = hermite_normal_form(a);
  CHECK(r.rank == 2);
  CHECK(r.h.rows == std::vector<IntVec>{{2, 0}, {0, 1}});

  IntMat b = mat(2, {{2, 4}, {1, 2}});
  HnfResult rb = hermite_normal_form(b);
  CHECK(rb.rank == 1);
  CHECK(rb.h.rows == std::vector<IntVec>{{1, 2}});
}

TEST_CASE("hnf transform invariant U*A = H") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int iter = 0; iter < 200; ++iter) {
    int m = 1 + iter % 4, n = 1 + (iter / 4) % 4;
    IntMat a(n);
    for (int i = 0; i < m; ++i) {
      IntVec row(n);
      for (auto& v : row) v = d(rng);
      a.rows.push_back(row);
    }
    HnfResult r = hermite_normal_form(a);
    // u rows applied to a reproduce h (first rank rows) and zero after
    for (int i = 0; i < m; ++i) {
      IntVec acc(n, 0);
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k) acc[k] += r.u.rows[i][j] * a.rows[j][k];
      if (i < r.rank)
        CHECK(acc == r.h.rows[i]);
      else
        CHECK(vec_is_zero(acc));
    }
  }
}

TEST_CASE("lattice membership vs brute force") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int iter = 0; iter < 150; ++iter) {
    int m = 1 + iter % 3, n = 2 + iter % 2;
    IntMat a(n);
    for (int i = 0; i < m; ++i) {
      IntVec row(n);
      for (auto& v : row) v = d(rng);
      a.rows.push_back(row);
    }
    IntVec b(n);
    for (auto& v : b) v = d(rng);
    IntVec coeffs;
    bool got = lattice_contains(a, b, &coeffs);
    // The brute force only explores bounded coefficients, so it can miss
    // members whose solution is large; a positive brute-force answer must be
    // found, and every positive answer is verified by its coefficients.
    if (brute_contains(a, b, 12)) CHECK(got);
    if (got) {
      IntVec acc(n, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) acc[j] += coeffs[i] * a.rows[i][j];
      CHECK(acc == b);
    }
  }
}

TEST_CASE("left kernel annihilates") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int iter = 0; iter < 100; ++iter) {
    int m = 1 + iter % 4, n = 1 + (iter / 3) % 3;
    IntMat a(n);
    for (int i = 0; i < m; ++i) {
      IntVec row(n);
      for (auto& v : row) v = d(rng);
      a.rows.push_back(row);
    }
    IntMat k = left_kernel(a);
    CHECK(k.nrows() == m - hermite_normal_form(a).rank);
    for (auto& t : k.rows) {
      IntVec acc(n, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) acc[j] += t[i] * a.rows[i][j];
      CHECK(vec_is_zero(acc));
    }
  }
}

TEST_CASE("smith divisors") {
  CHECK(smith_divisors(mat(2, {{2, 0}})) == std::vector<long long>{2});
  CHECK(smith_divisors(mat(2, {{1, 0}, {0, 1}})) == std::vector<long long>{1, 1});
  CHECK(smith_divisors(mat(2, {{2, 0}, {0, 3}})) == std::vector<long long>{1, 6});
  // gcd of entries 2, gcd of 2x2 minors 4, |det| 624 -> divisors 2, 2, 156
  CHECK(smith_divisors(mat(3, {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}})) ==
        std::vector<long long>{2, 2, 156});
  CHECK(quotient_torsion_free(mat(2, {{1, 2}})));
  CHECK_FALSE(quotient_torsion_free(mat(2, {{2, 0}})));
}

TEST_CASE("saturation") {
  IntMat a = mat(2, {{2, 4}});
  IntMat s = saturate(a);
  CHECK(lattice_equal(s, mat(2, {{1, 2}})));
  // saturating a saturated lattice is the identity
  CHECK(lattice_equal(saturate(s), s));
  IntMat b = mat(3, {{2, 0, 2}, {0, 3, 3}});
  IntMat sb = saturate(b);
  CHECK(hermite_normal_form(sb).rank == 2);
  CHECK(quotient_torsion_free(sb));  // saturated: Z^3 / sb is free
}

TEST_CASE("complement completes a saturated lattice to a basis") {
  for (auto rows : {std::vector<IntVec>{{1, 2}}, std::vector<IntVec>{{2, 3}},
                    std::vector<IntVec>{{1, 0, 0}, {0, 2, 1}}}) {
    IntMat a(static_cast<int>(rows[0].size()), rows);
    IntMat sat = saturate(a);
    IntMat comp = lattice_complement(sat);
    IntMat stacked(a.cols);
    for (auto& r : sat.rows) stacked.rows.push_back(r);
    for (auto& r : comp.rows) stacked.rows.push_back(r);
    CHECK(hermite_normal_form(stacked).rank == a.cols);
    CHECK(quotient_torsion_free(stacked));
  }
}
