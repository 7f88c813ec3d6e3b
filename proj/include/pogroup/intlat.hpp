#pragma once

#include <optional>
#include <vector>

#include "pogroup/errors.hpp"

namespace pogroup {

using IntVec = std::vector<long long>;

// Integer matrix with explicit column count so empty row sets keep their
// ambient dimension. Rows span lattices; all normal forms are row-style.
struct IntMat {
  int cols = 0;
  std::vector<IntVec> rows;

  IntMat() = default;
  explicit IntMat(int c) : cols(c) {}
  IntMat(int c, std::vector<IntVec> r) : cols(c), rows(std::move(r)) {}

  int nrows() const { return static_cast<int>(rows.size()); }
  void add_row(IntVec r);
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const IntVec& a, long long k);
bool vec_is_zero(const IntVec& a);

IntMat transpose(const IntMat& a);

struct HnfResult {
  IntMat h;        // row HNF, zero rows dropped; pivots positive, entries above reduced
  IntMat u;        // unimodular, u_full * a = h_full; rows matching h come first
  int rank = 0;
  std::vector<int> pivot_cols;  // one per row of h, strictly increasing
};

HnfResult hermite_normal_form(const IntMat& a);

// Basis of { t : t * a = 0 } as rows (length = a.nrows()).
IntMat left_kernel(const IntMat& a);

// Membership of b in the row lattice of a; fills coeffs (c * a = b) when asked.
bool lattice_contains(const IntMat& a, const IntVec& b, IntVec* coeffs = nullptr);

// Nonzero Smith divisors d1 | d2 | ... of the row lattice.
std::vector<long long> smith_divisors(const IntMat& a);

// Z^cols / rowlattice torsion-free (all Smith divisors 1)?
bool quotient_torsion_free(const IntMat& a);

// Saturation {v in Z^n : k v in L for some k != 0} of the row lattice.
IntMat saturate(const IntMat& a);

// Canonical form (HNF rows) usable as a dedup key for row lattices.
IntMat lattice_canonical(const IntMat& a);

bool lattice_equal(const IntMat& a, const IntMat& b);

// Complement basis: rows extending the saturated lattice to a basis of Z^n.
// Only valid when Z^n / rowlattice(a) is torsion-free.
IntMat lattice_complement(const IntMat& a);

}  // namespace pogroup
