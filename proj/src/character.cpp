#include "pogroup/character.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pogroup {

Character make_character(const GroupRef& dom, std::vector<AlgNum> values) {
  if (static_cast<int>(values.size()) != dom->n_gens())
    fail(ErrorCode::Validation, "one value per generator required");
  Character c{dom, std::move(values)};
  if (!char_validate(c)) fail(ErrorCode::Validation, "character does not kill commutator relators");
  return c;
}

AlgNum char_apply(const Character& c, const Element& g) {
  if (!g.group->same_as(*c.dom)) fail(ErrorCode::GroupMismatch, "element not in character domain");
  AlgNum acc;
  if (c.dom->kind == GroupKind::Free) {
    IntVec sums = weight1_part(g);
    for (size_t i = 0; i < sums.size(); ++i)
      if (sums[i] != 0) acc = acc + c.values[i].scaled(Rational(sums[i]));
    return acc;
  }
  for (size_t i = 0; i < g.data.size(); ++i)
    if (g.data[i] != 0) acc = acc + c.values[i].scaled(Rational(g.data[i]));
  return acc;
}

bool char_validate(const Character& c) {
  if (c.dom->kind != GroupKind::NilpotentPc) return true;
  int m = c.dom->pc.n_weight1(), p = c.dom->pc.n_weight2();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const IntVec& cv = c.dom->pc.comm_vec(i, j);
      AlgNum acc;
      for (int t = 0; t < p; ++t)
        if (cv[t] != 0) acc = acc + c.values[m + t].scaled(Rational(cv[t]));
      if (!acc.is_zero()) return false;
    }
  return true;
}

bool char_is_zero(const Character& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const AlgNum& v) { return v.is_zero(); });
}

IntMat char_kernel_lattice(const std::vector<AlgNum>& values) {
  // columns indexed by the union of radicands; column scaling by denominator
  // lcms keeps the integer kernel unchanged
  std::map<long long, int> cols;
  for (auto& v : values)
    for (auto& [rad, coeff] : v.terms()) cols.emplace(rad, 0);
  int idx = 0;
  for (auto& [rad, i] : cols) i = idx++;
  int n = static_cast<int>(values.size());
  std::vector<std::vector<Rational>> rat(n, std::vector<Rational>(cols.size()));
  for (int i = 0; i < n; ++i)
    for (auto& [rad, coeff] : values[i].terms()) rat[i][cols[rad]] = coeff;
  IntMat m(static_cast<int>(cols.size()));
  for (int i = 0; i < n; ++i) m.rows.push_back(IntVec(cols.size(), 0));
  for (size_t j = 0; j < cols.size(); ++j) {
    long long l = 1;
    for (int i = 0; i < n; ++i) l = std::lcm(l, rat[i][j].den());
    for (int i = 0; i < n; ++i) {
      Rational scaled = rat[i][j] * Rational(l);
      if (scaled.den() != 1) fail(ErrorCode::Validation, "column scaling failed");
      m.rows[i][j] = scaled.num();
    }
  }
  return left_kernel(m);
}

Subgroup char_kernel_subgroup(const Character& c) {
  if (!c.dom->is_pc_like())
    fail(ErrorCode::Unsupported, "kernel subgroup of a character needs a pc-like domain");
  IntMat ker = char_kernel_lattice(c.values);
  Subgroup s{c.dom, {}};
  for (auto& row : ker.rows) s.gens.push_back(elem_from_exponents(c.dom, row));
  return s;
}

bool values_injective(const std::vector<AlgNum>& values) {
  return char_kernel_lattice(values).nrows() == 0;
}

std::vector<AlgNum> values_canonicalize(const std::vector<AlgNum>& values) {
  for (auto& v : values) {
    if (v.is_zero()) continue;
    AlgNum scale = (v.sign() > 0 ? v : -v).inv();
    std::vector<AlgNum> out;
    out.reserve(values.size());
    for (auto& w : values) out.push_back(w * scale);
    return out;
  }
  return values;
}

Character char_canonicalize(const Character& c) {
  return Character{c.dom, values_canonicalize(c.values)};
}

bool values_positively_proportional(const std::vector<AlgNum>& a, const std::vector<AlgNum>& b) {
  if (a.size() != b.size()) return false;
  AlgNum lambda;
  bool have = false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (!a[i].is_zero() && !have) {
      lambda = b[i] / a[i];
      have = true;
    }
  }
  if (!have) return true;  // both zero characters
  if (lambda.sign() <= 0) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] * lambda == b[i])) return false;
  return true;
}

std::string values_str(const std::vector<AlgNum>& values) {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + ")";
}

}  // namespace pogroup
