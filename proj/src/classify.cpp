#include "pogroup/classify.hpp"

#include <algorithm>
#include <set>

#include "pogroup/order_props.hpp"

namespace pogroup {

namespace {

bool quotient_is_torsion_free(const GroupRef& g, const Subgroup& p) {
  try {
    quotient(g, p);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TorsionQuotient || e.code() == ErrorCode::Unsupported) return false;
    throw;
  }
}

bool group_is_abelian(const GroupRef& g) {
  if (g->kind == GroupKind::FreeAbelian) return true;
  if (g->kind != GroupKind::NilpotentPc) return false;
  for (auto& v : g->pc.comm)
    if (!vec_is_zero(v)) return false;
  return true;
}

}  // namespace

std::vector<Subgroup> enumerate_normal_torsionfree_quotients(const GroupRef& q,
                                                             const CensusBounds& b) {
  if (!q->is_pc_like()) fail(ErrorCode::Unsupported, "enumeration needs a pc-like group");
  if (q->kind == GroupKind::NilpotentPc && q->pc.klass > 2)
    fail(ErrorCode::Unsupported, "enumeration implemented for class <= 2");
  if (q->hirsch_length() > 4)
    fail(ErrorCode::Unsupported, "enumeration capped at Hirsch length 4");
  if (b.max_gens < 1 || b.max_exp < 1) fail(ErrorCode::Validation, "bounds must be positive");

  std::vector<Element> box = exponent_box(q, b.max_exp);
  std::sort(box.begin(), box.end(), [](const Element& a, const Element& c) {
    return elem_cmp(a, c) < 0;
  });

  std::vector<Subgroup> result;
  std::set<std::string> seen;
  std::set<std::string> accepted;

  Subgroup triv = trivial_subgroup(q);
  seen.insert(subgroup_canonical_key(triv));
  accepted.insert(subgroup_canonical_key(triv));
  result.push_back(triv);

  std::vector<Subgroup> frontier{triv};
  for (int depth = 0; depth < b.max_gens; ++depth) {
    std::vector<Subgroup> next;
    for (auto& base : frontier) {
      for (auto& e : box) {
        if (is_identity(e)) continue;
        Subgroup cand = base;
        cand.gens.push_back(e);
        std::string key = subgroup_canonical_key(cand);
        if (!seen.insert(key).second) continue;
        next.push_back(cand);
        if (!subgroup_is_normal(cand)) continue;
        if (!quotient_is_torsion_free(q, cand)) continue;
        if (accepted.insert(key).second) result.push_back(cand);
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& c) {
    return subgroup_canonical_key(a) < subgroup_canonical_key(c);
  });
  return result;
}

OrderCensus census(const GroupRef& q, const CensusBounds& b) {
  OrderCensus out;
  out.group = q;
  out.bounds = b;
  out.completeness_note =
      "complete relative to normal subgroups generated by <= " + std::to_string(b.max_gens) +
      " elements with exponents in [-" + std::to_string(b.max_exp) + ", " +
      std::to_string(b.max_exp) + "], Hirsch length <= 4, saturated lattices";

  // commutator elements of q, for the abelianization flag
  std::vector<Element> comm_elems;
  if (q->kind == GroupKind::NilpotentPc) {
    int m = q->n_weight1();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const IntVec& cv = q->pc.comm_vec(i, j);
        if (!vec_is_zero(cv)) comm_elems.push_back(elem_from_parts(q, IntVec(m, 0), cv));
      }
  }

  static const long long sample_rads[] = {1, 2, 3, 5};

  for (auto& p : enumerate_normal_torsionfree_quotients(q, b)) {
    QuotientResult qr = quotient(q, p);
    CenterBasis zb = center_basis(qr.group);
    int r = zb.rank();
    if (r == 0) continue;  // only the trivial order factors through a trivial center

    bool from_ab = true;
    for (auto& c : comm_elems)
      if (!subgroup_contains(p, c)) {
        from_ab = false;
        break;
      }
    bool total = group_is_abelian(q) && subgroup_is_trivial(p);

    if (r == 1) {
      for (int dir : {+1, -1}) {
        CensusEntry e;
        e.p = p;
        e.p_key = subgroup_canonical_key(p);
        e.center_rank = 1;
        e.iota_family = std::string("rank-1 center: two orders; this is the ") +
                        (dir > 0 ? "positive" : "negative") + " orientation";
        e.sample_iota = {AlgNum(dir)};
        e.order = order_classification(q, p, e.sample_iota);
        e.from_abelianization = from_ab;
        e.total = total;
        out.entries.push_back(std::move(e));
      }
    } else {
      if (r > 4) fail(ErrorCode::Unsupported, "center rank beyond sample basis");
      CensusEntry e;
      e.p = p;
      e.p_key = subgroup_canonical_key(p);
      e.center_rank = r;
      e.iota_family = "rank-" + std::to_string(r) + " center: projective (" +
                      std::to_string(r - 1) +
                      ")-parameter family of injective characters up to positive scaling";
      for (int i = 0; i < r; ++i) e.sample_iota.push_back(AlgNum::sqrt_of(sample_rads[i]));
      e.order = order_classification(q, p, e.sample_iota);
      e.from_abelianization = from_ab;
      e.total = total;
      out.entries.push_back(std::move(e));
    }
  }

  std::sort(out.entries.begin(), out.entries.end(), [](const CensusEntry& a, const CensusEntry& c) {
    if (a.p_key != c.p_key) return a.p_key < c.p_key;
    return values_str(a.sample_iota) < values_str(c.sample_iota);
  });
  return out;
}

}  // namespace pogroup
