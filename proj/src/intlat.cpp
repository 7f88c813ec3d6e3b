#include "pogroup/intlat.hpp"

#include <algorithm>
#include <cstdint>

namespace pogroup {

namespace {

long long narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::Overflow, "integer matrix overflow");
  return static_cast<long long>(v);
}

// floor division, needed for reduction above pivots
long long fdiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void IntMat::add_row(IntVec r) {
  if (static_cast<int>(r.size()) != cols) fail(ErrorCode::Validation, "row size mismatch");
  rows.push_back(std::move(r));
}

long long checked_add(long long a, long long b) { return narrow(__int128(a) + b); }
long long checked_mul(long long a, long long b) { return narrow(__int128(a) * b); }

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = narrow(__int128(a[i]) - b[i]);
  return r;
}

IntVec vec_scale(const IntVec& a, long long k) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

bool vec_is_zero(const IntVec& a) {
  for (long long v : a)
    if (v != 0) return false;
  return true;
}

IntMat transpose(const IntMat& a) {
  IntMat t(a.nrows());
  t.rows.assign(a.cols, IntVec(a.nrows(), 0));
  for (int i = 0; i < a.nrows(); ++i)
    for (int j = 0; j < a.cols; ++j) t.rows[j][i] = a.rows[i][j];
  return t;
}

HnfResult hermite_normal_form(const IntMat& a) {
  int m = a.nrows(), n = a.cols;
  std::vector<IntVec> h = a.rows;
  std::vector<IntVec> u(m, IntVec(m, 0));
  for (int i = 0; i < m; ++i) u[i][i] = 1;

  auto row_sub = [&](int dst, int src, long long k) {
    // h[dst] -= k*h[src], same for u
    for (int j = 0; j < n; ++j) h[dst][j] = narrow(__int128(h[dst][j]) - __int128(k) * h[src][j]);
    for (int j = 0; j < m; ++j) u[dst][j] = narrow(__int128(u[dst][j]) - __int128(k) * u[src][j]);
  };
  auto row_neg = [&](int r) {
    for (auto& v : h[r]) v = -v;
    for (auto& v : u[r]) v = -v;
  };

  int pivot_row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < n && pivot_row < m; ++col) {
    // gcd-eliminate column below pivot_row
    while (true) {
      int best = -1;
      for (int r = pivot_row; r < m; ++r) {
        if (h[r][col] != 0 && (best < 0 || std::abs(h[r][col]) < std::abs(h[best][col]))) best = r;
      }
      if (best < 0) break;
      std::swap(h[pivot_row], h[best]);
      std::swap(u[pivot_row], u[best]);
      bool clean = true;
      for (int r = pivot_row + 1; r < m; ++r) {
        if (h[r][col] == 0) continue;
        long long q = h[r][col] / h[pivot_row][col];
        row_sub(r, pivot_row, q);
        if (h[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[pivot_row][col] == 0) continue;
    if (h[pivot_row][col] < 0) row_neg(pivot_row);
    // reduce entries above the pivot into [0, pivot)
    for (int r = 0; r < pivot_row; ++r) {
      if (h[r][col] != 0) row_sub(r, pivot_row, fdiv(h[r][col], h[pivot_row][col]));
    }
    pivots.push_back(col);
    ++pivot_row;
  }

  HnfResult res;
  res.rank = pivot_row;
  res.pivot_cols = pivots;
  res.h = IntMat(n);
  res.u = IntMat(m);
  for (int r = 0; r < pivot_row; ++r) res.h.rows.push_back(h[r]);
  for (int r = 0; r < m; ++r) res.u.rows.push_back(u[r]);
  return res;
}

IntMat left_kernel(const IntMat& a) {
  HnfResult r = hermite_normal_form(a);
  IntMat k(a.nrows());
  for (int i = r.rank; i < a.nrows(); ++i) k.rows.push_back(r.u.rows[i]);
  return k;
}

bool lattice_contains(const IntMat& a, const IntVec& b, IntVec* coeffs) {
  if (static_cast<int>(b.size()) != a.cols) fail(ErrorCode::Validation, "vector size mismatch");
  HnfResult r = hermite_normal_form(a);
  IntVec rem = b;
  IntVec c(a.nrows(), 0);
  for (int i = 0; i < r.rank; ++i) {
    int col = r.pivot_cols[i];
    if (rem[col] == 0) continue;
    if (rem[col] % r.h.rows[i][col] != 0) return false;
    long long q = rem[col] / r.h.rows[i][col];
    rem = vec_sub(rem, vec_scale(r.h.rows[i], q));
    if (coeffs) {
      for (int j = 0; j < a.nrows(); ++j)
        c[j] = checked_add(c[j], checked_mul(q, r.u.rows[i][j]));
    }
  }
  if (!vec_is_zero(rem)) return false;
  if (coeffs) *coeffs = c;
  return true;
}

std::vector<long long> smith_divisors(const IntMat& a) {
  int m = a.nrows(), n = a.cols;
  std::vector<IntVec> w = a.rows;

  auto at = [&](int i, int j) -> long long& { return w[i][j]; };
  std::vector<long long> divisors;
  int top = 0;
  while (true) {
    // find any nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = top; i < m && pi < 0; ++i)
      for (int j = top; j < n; ++j)
        if (at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(w[top], w[pi]);
    for (int i = top; i < m; ++i) std::swap(at(i, top), at(i, pj));

    bool again = true;
    while (again) {
      again = false;
      // clear column
      for (int i = top + 1; i < m; ++i) {
        while (at(i, top) != 0) {
          long long q = at(top, top) == 0 ? 0 : at(i, top) / at(top, top);
          for (int j = top; j < n; ++j)
            at(i, j) = narrow(__int128(at(i, j)) - __int128(q) * at(top, j));
          if (at(i, top) != 0) {
            std::swap(w[top], w[i]);
          }
        }
      }
      // clear row
      for (int j = top + 1; j < n; ++j) {
        while (at(top, j) != 0) {
          long long q = at(top, top) == 0 ? 0 : at(top, j) / at(top, top);
          for (int i = top; i < m; ++i)
            at(i, j) = narrow(__int128(at(i, j)) - __int128(q) * at(i, top));
          if (at(top, j) != 0) {
            for (int i = top; i < m; ++i) std::swap(at(i, top), at(i, j));
            again = true;  // column may be dirty again
          }
        }
      }
      if (!again) {
        // divisibility fix-up: pivot must divide the rest of the block
        long long p = at(top, top);
        bool fixed = true;
        for (int i = top + 1; i < m && fixed; ++i)
          for (int j = top + 1; j < n && fixed; ++j)
            if (at(i, j) % p != 0) {
              for (int jj = top; jj < n; ++jj)
                at(top, jj) = checked_add(at(top, jj), at(i, jj));
              fixed = false;
            }
        if (!fixed) again = true;
      }
    }
    divisors.push_back(std::abs(at(top, top)));
    ++top;
  }
  return divisors;
}

bool quotient_torsion_free(const IntMat& a) {
  for (long long d : smith_divisors(a))
    if (d != 1) return false;
  return true;
}

IntMat saturate(const IntMat& a) {
  IntMat right_ker = left_kernel(transpose(a));  // rows w with a * w^T = 0
  return left_kernel(transpose(right_ker));
}

IntMat lattice_canonical(const IntMat& a) { return hermite_normal_form(a).h; }

bool lattice_equal(const IntMat& a, const IntMat& b) {
  if (a.cols != b.cols) return false;
  IntMat ca = lattice_canonical(a), cb = lattice_canonical(b);
  return ca.rows == cb.rows;
}

IntMat lattice_complement(const IntMat& a) {
  if (!quotient_torsion_free(a)) fail(ErrorCode::Validation, "complement of non-saturated lattice");
  int n = a.cols;
  // Rows d with d * K^T = e_i, K a basis of the right kernel. Such d exist
  // because kernel lattices are saturated, and together with the rows of a
  // they form a basis of Z^n.
  IntMat right_ker = left_kernel(transpose(a));  // r' x n
  int rp = right_ker.nrows();
  IntMat comp(n);
  if (rp == 0) return comp;
  IntMat m_rows = transpose(right_ker);  // n rows of length r'
  for (int i = 0; i < rp; ++i) {
    IntVec e(rp, 0);
    e[i] = 1;
    IntVec d;
    if (!lattice_contains(m_rows, e, &d))
      fail(ErrorCode::Validation, "complement construction failed");
    comp.rows.push_back(d);
  }
  IntMat stacked(n);
  for (auto& row : a.rows) stacked.rows.push_back(row);
  for (auto& row : comp.rows) stacked.rows.push_back(row);
  if (!quotient_torsion_free(stacked) || hermite_normal_form(stacked).rank != n)
    fail(ErrorCode::Validation, "complement completion failed");
  return comp;
}

}  // namespace pogroup
