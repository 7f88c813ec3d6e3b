#include "pogroup/subgroup.hpp"

#include <algorithm>
#include <sstream>

namespace pogroup {

namespace {

void require_pc_like(const GroupRef& g, const char* what) {
  if (!g->is_pc_like()) fail(ErrorCode::Unsupported, std::string(what) + " needs a pc or abelian group");
  if (g->kind == GroupKind::NilpotentPc && g->pc.klass > 2)
    fail(ErrorCode::Unsupported, std::string(what) + " implemented for class <= 2 only");
}

Element product_of_powers(const GroupRef& g, const std::vector<Element>& els, const IntVec& exps) {
  Element acc = identity(g);
  for (size_t i = 0; i < els.size(); ++i) {
    if (exps[i] == 0) continue;
    acc = multiply(acc, power(els[i], exps[i]));
  }
  return acc;
}

}  // namespace

Subgroup trivial_subgroup(const GroupRef& g) { return Subgroup{g, {}}; }

Subgroup whole_group(const GroupRef& g) {
  Subgroup h{g, {}};
  for (int i = 0; i < g->n_gens(); ++i) h.gens.push_back(generator(g, i));
  return h;
}

Subgroup make_subgroup(const GroupRef& g, std::vector<Element> gens) {
  for (auto& e : gens)
    if (!e.group->same_as(*g)) fail(ErrorCode::GroupMismatch, "subgroup generator in wrong group");
  return Subgroup{g, std::move(gens)};
}

SubgroupLattice subgroup_lattice(const Subgroup& h) {
  require_pc_like(h.ambient, "subgroup lattice");
  int m = h.ambient->n_weight1();
  int p = h.ambient->n_weight2();
  int s = static_cast<int>(h.gens.size());

  IntMat x(m);
  for (auto& g : h.gens) x.rows.push_back(weight1_part(g));

  SubgroupLattice lat;
  HnfResult hx = hermite_normal_form(x);
  lat.w1 = hx.h;
  for (int r = 0; r < hx.rank; ++r)
    lat.lifts.push_back(product_of_powers(h.ambient, h.gens, hx.u.rows[r]));

  // central layer: generator commutators plus relation words
  IntMat w2(p);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      Element c = commutator(h.gens[i], h.gens[j]);
      if (!is_identity(c)) w2.rows.push_back(weight2_part(c));
    }
  IntMat ker = left_kernel(x);
  for (auto& t : ker.rows) {
    Element rel = product_of_powers(h.ambient, h.gens, t);
    if (!vec_is_zero(weight1_part(rel)))
      fail(ErrorCode::Validation, "relation word has nonzero weight-1 part");
    if (!is_identity(rel)) w2.rows.push_back(weight2_part(rel));
  }
  lat.w2 = lattice_canonical(w2);
  return lat;
}

bool subgroup_contains(const Subgroup& h, const Element& g) {
  if (!g.group->same_as(*h.ambient)) fail(ErrorCode::GroupMismatch, "element in wrong group");
  if (is_identity(g)) return true;
  SubgroupLattice lat = subgroup_lattice(h);
  IntVec x = weight1_part(g);
  IntVec c;
  if (!lattice_contains(lat.w1, x, &c)) return false;
  Element cand = identity(h.ambient);
  for (size_t i = 0; i < lat.lifts.size(); ++i)
    if (c[i] != 0) cand = multiply(cand, power(lat.lifts[i], c[i]));
  Element w = multiply(inverse(cand), g);
  if (!vec_is_zero(weight1_part(w))) fail(ErrorCode::Validation, "lift mismatch");
  return lattice_contains(lat.w2, weight2_part(w));
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
  if (!a.ambient->same_as(*b.ambient)) return false;
  for (auto& g : a.gens)
    if (!subgroup_contains(b, g)) return false;
  for (auto& g : b.gens)
    if (!subgroup_contains(a, g)) return false;
  return true;
}

bool subgroup_is_trivial(const Subgroup& h) {
  for (auto& g : h.gens)
    if (!is_identity(g)) return false;
  return true;
}

bool subgroup_is_normal(const Subgroup& h) {
  if (h.ambient->kind == GroupKind::FreeAbelian) return true;
  require_pc_like(h.ambient, "normality check");
  // Conjugating generators by generators reaches all conjugation in class <= 2
  // (conjugation by an inverse contributes the inverse central commutator).
  for (auto& g : h.gens) {
    for (int j = 0; j < h.ambient->n_gens(); ++j) {
      if (!subgroup_contains(h, conjugate(g, generator(h.ambient, j)))) return false;
    }
  }
  return true;
}

Subgroup center(const GroupRef& g) {
  if (g->kind == GroupKind::FreeAbelian) return whole_group(g);
  if (g->kind == GroupKind::Free) {
    if (g->rank == 1) return whole_group(g);
    fail(ErrorCode::Unsupported, "center of a nonabelian free group is trivial; not modeled");
  }
  require_pc_like(g, "center");
  int m = g->n_weight1(), p = g->n_weight2();
  // x central iff the bilinear commutator form vanishes against every generator
  IntMat cond(m * p);
  for (int i = 0; i < m; ++i) {
    IntVec row;
    row.reserve(m * p);
    IntVec ei(m, 0);
    ei[i] = 1;
    for (int j = 0; j < m; ++j) {
      IntVec ej(m, 0);
      ej[j] = 1;
      IntVec bij = comm_bilinear(g, ei, ej);
      row.insert(row.end(), bij.begin(), bij.end());
    }
    cond.rows.push_back(row);
  }
  IntMat ker = left_kernel(cond);
  Subgroup z{g, {}};
  for (auto& x : ker.rows) z.gens.push_back(elem_from_parts(g, x, IntVec(p, 0)));
  for (int t = 0; t < p; ++t) {
    IntVec w2(p, 0);
    w2[t] = 1;
    z.gens.push_back(elem_from_parts(g, IntVec(m, 0), w2));
  }
  return z;
}

std::vector<Subgroup> lower_central_series(const GroupRef& g) {
  if (g->kind == GroupKind::Free)
    fail(ErrorCode::Unsupported, "lower central series unsupported for free groups");
  require_pc_like(g, "lower central series");
  std::vector<Subgroup> series;
  series.push_back(whole_group(g));
  while (!subgroup_is_trivial(series.back())) {
    const Subgroup& prev = series.back();
    Subgroup next{g, {}};
    for (int i = 0; i < g->n_gens(); ++i) {
      Element gi = generator(g, i);
      for (auto& h : prev.gens) {
        Element c = commutator(gi, h);
        if (!is_identity(c)) next.gens.push_back(c);
      }
    }
    series.push_back(next);
    if (series.size() > 16) fail(ErrorCode::Validation, "lower central series did not terminate");
  }
  return series;
}

std::string subgroup_canonical_key(const Subgroup& h) {
  SubgroupLattice lat = subgroup_lattice(h);
  std::ostringstream os;
  auto dump = [&](const IntMat& m) {
    os << m.cols << ":";
    for (auto& r : m.rows) {
      for (long long v : r) os << v << ",";
      os << ";";
    }
  };
  dump(lat.w1);
  os << "|";
  dump(lat.w2);
  os << "|";
  // lifts reduced: central parts modulo L2 so the key is representative-free
  for (auto& l : lat.lifts) {
    IntVec w2 = weight2_part(l);
    // reduce against HNF rows of L2
    for (size_t i = 0; i < lat.w2.rows.size(); ++i) {
      const IntVec& row = lat.w2.rows[i];
      int pivot = 0;
      while (pivot < (int)row.size() && row[pivot] == 0) ++pivot;
      if (pivot == (int)row.size()) continue;
      long long q = w2[pivot] / row[pivot];
      if (w2[pivot] % row[pivot] != 0 && ((w2[pivot] < 0) != (row[pivot] < 0))) --q;
      w2 = vec_sub(w2, vec_scale(row, q));
    }
    for (long long v : w2) os << v << ",";
    os << ";";
  }
  return os.str();
}

}  // namespace pogroup
