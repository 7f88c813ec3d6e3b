#include "pogroup/order_props.hpp"

#include <algorithm>

namespace pogroup {

namespace {

// classification-shaped view: positivity is "psi(g) central and iota > 0"
struct ClassificationView {
  Homomorphism psi;  // group -> cls->quotient
  std::shared_ptr<const ClassificationData> cls;
};

std::optional<ClassificationView> classification_view(const OrderSpec& o) {
  if (o.kind == OrderKind::Classification) return ClassificationView{o.cls->proj, o.cls};
  if (o.kind == OrderKind::Pullback) {
    auto inner = classification_view(*o.pb_inner);
    if (!inner) return std::nullopt;
    return ClassificationView{hom_compose(inner->psi, *o.pb_hom), inner->cls};
  }
  return std::nullopt;
}

// the induced order on cls->quotient itself (central and iota-positive)
OrderRef quotient_classification_order(const std::shared_ptr<const ClassificationData>& cls) {
  auto o = std::make_shared<OrderSpec>();
  o->kind = OrderKind::Classification;
  o->group = cls->quotient;
  o->label = "";
  auto data = std::make_shared<ClassificationData>();
  data->p = trivial_subgroup(cls->quotient);
  data->quotient = cls->quotient;
  data->proj = identity_hom(cls->quotient);
  data->zbasis = cls->zbasis;
  data->iota = cls->iota;
  o->cls = data;
  return o;
}

bool order_is_nontrivial_char(const Character& c) { return !char_is_zero(c); }

}  // namespace

const char* verdict3_name(Verdict3 v) {
  switch (v) {
    case Verdict3::YesStructural: return "yes_structural";
    case Verdict3::NoWithWitness: return "no_with_witness";
    case Verdict3::Undetermined: return "undetermined";
  }
  return "?";
}

bool MaxAntichainSubgroup::contains(const Element& g) const {
  if (explicit_k) return subgroup_contains(*explicit_k, g);
  if (char_kernel) return char_apply(*char_kernel, g).sign() == 0;
  return is_identity(hom_apply(*psi, g));
}

bool MaxAntichainSubgroup::halfspace_contains(const Element& g) const {
  if (contains(g)) return true;
  if (char_kernel) return char_apply(*char_kernel, g).sign() > 0;
  return is_positive(*quot_order, hom_apply(*psi, g));
}

std::vector<MaxAntichainSubgroup> maximal_antichain_normal_subgroups(const OrderRef& o) {
  switch (o->kind) {
    case OrderKind::Trivial: {
      // every subset is an antichain; the whole group is the unique maximal one
      MaxAntichainSubgroup k;
      k.desc = "whole group (trivial order)";
      k.char_kernel = Character{o->group, std::vector<AlgNum>(o->group->n_gens())};
      if (o->group->is_pc_like()) k.gens = whole_group(o->group);
      return {k};
    }
    case OrderKind::Character: {
      MaxAntichainSubgroup k;
      k.desc = "ker of character " + values_str(o->chr->values);
      k.char_kernel = o->chr;
      if (o->group->is_pc_like()) k.gens = char_kernel_subgroup(*o->chr);
      return {k};
    }
    case OrderKind::Classification: {
      MaxAntichainSubgroup k;
      k.desc = "ker of projection onto the ordered quotient (= P)";
      k.psi = std::make_shared<Homomorphism>(o->cls->proj);
      k.quot_order = quotient_classification_order(o->cls);
      k.gens = kernel_generators(o->cls->proj);
      return {k};
    }
    case OrderKind::Pullback: {
      // if the inner order reduces to a character, compose it; otherwise
      // compose the classification projection
      if (auto chi = order_as_character(*o)) {
        MaxAntichainSubgroup k;
        k.desc = "ker of pulled-back character " + values_str(chi->values);
        k.char_kernel = chi;
        if (o->group->is_pc_like()) k.gens = char_kernel_subgroup(*chi);
        return {k};
      }
      auto view = classification_view(*o);
      if (!view)
        fail(ErrorCode::Unsupported,
             "maximal antichain subgroups known for character/classification kinds only");
      MaxAntichainSubgroup k;
      k.desc = "ker of composed projection onto the ordered quotient";
      k.psi = std::make_shared<Homomorphism>(view->psi);
      k.quot_order = quotient_classification_order(view->cls);
      if (o->group->is_pc_like()) k.gens = kernel_generators(view->psi);
      return {k};
    }
    case OrderKind::Lexicographic: {
      if (o->lex_push->pf_mode == PushforwardMode::EmptyCone)
        return maximal_antichain_normal_subgroups(o->lex_pull);
      fail(ErrorCode::Unsupported,
           "maximal antichain subgroups of lexicographic orders with nontrivial sub order "
           "are not characterized; bounded enumeration only");
    }
    case OrderKind::Pushforward:
      fail(ErrorCode::Unsupported,
           "maximal antichain subgroups not characterized for pushforward orders");
  }
  fail(ErrorCode::Unsupported, "unknown order kind");
}

AntichainVerdict is_antichain(const OrderRef& o, const Subgroup& h, int sample_radius) {
  if (!h.ambient->same_as(*o->group)) fail(ErrorCode::GroupMismatch, "subgroup of a different group");
  if (auto chi = order_as_character(*o)) {
    for (auto& g : h.gens)
      if (char_apply(*chi, g).sign() != 0) return {false, true};
    return {true, true};
  }
  if (auto view = classification_view(*o)) {
    if (o->group->is_pc_like()) {
      // H_c = elements of H with central psi-image; it is generated by the
      // kernel directions of the centrality conditions together with the
      // commutators of the generators, and iota . coords . psi is a
      // homomorphism H_c -> R. Antichain iff that homomorphism vanishes.
      const GroupRef& qbar = view->cls->quotient;
      int s = static_cast<int>(h.gens.size());
      int mq = qbar->n_weight1();
      IntMat stacked(mq);
      std::vector<Element> images;
      for (auto& hg : h.gens) {
        Element y = hom_apply(view->psi, hg);
        images.push_back(y);
        stacked.rows.push_back(weight1_part(y));
      }
      for (auto& row : view->cls->zbasis.w1_rows.rows) stacked.rows.push_back(row);
      IntMat sols = left_kernel(stacked);
      std::vector<Element> hc_gens;
      for (auto& sol : sols.rows) {
        Element prod = identity(o->group);
        bool nonzero = false;
        for (int i = 0; i < s; ++i)
          if (sol[i] != 0) {
            prod = multiply(prod, power(h.gens[i], sol[i]));
            nonzero = true;
          }
        if (nonzero) hc_gens.push_back(prod);
      }
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
          Element c = commutator(h.gens[i], h.gens[j]);
          if (!is_identity(c)) hc_gens.push_back(c);
        }
      for (auto& g : hc_gens) {
        Element y = hom_apply(view->psi, g);
        if (!is_central(y)) fail(ErrorCode::Validation, "H_c generator with non-central image");
        auto coords = center_coords(view->cls->zbasis, y);
        if (!coords) fail(ErrorCode::Validation, "central image without coordinates");
        AlgNum v;
        for (size_t t = 0; t < coords->size(); ++t)
          if ((*coords)[t] != 0) v = v + view->cls->iota[t].scaled(Rational((*coords)[t]));
        if (v.sign() != 0) return {false, true};
      }
      return {true, true};
    }
  }
  // sampled fallback: walk products of the generators
  std::vector<Element> layer{identity(o->group)};
  std::vector<Element> seen{identity(o->group)};
  for (int depth = 0; depth < sample_radius; ++depth) {
    std::vector<Element> next;
    for (auto& e : layer) {
      for (auto& g : h.gens) {
        for (int dir = -1; dir <= 1; dir += 2) {
          Element cand = multiply(e, dir > 0 ? g : inverse(g));
          bool dup = false;
          for (auto& s : seen)
            if (elem_equal(s, cand)) {
              dup = true;
              break;
            }
          if (dup) continue;
          if (is_positive(*o, cand)) return {false, true};
          seen.push_back(cand);
          next.push_back(cand);
        }
      }
    }
    layer = std::move(next);
  }
  return {true, false};
}

MaxAntichainSubgroup halfspace_predicate(const OrderRef& o, const Subgroup& k) {
  AntichainVerdict av = is_antichain(o, k);
  if (!av.antichain) fail(ErrorCode::NotAntichain, "K is not an antichain for this order");
  if (auto chi = order_as_character(*o)) {
    if (!o->group->is_pc_like())
      fail(ErrorCode::Unsupported,
           "half-space for explicit subgroups needs a pc-like group; use the computed kernels");
    MaxAntichainSubgroup hs;
    hs.desc = "half-space above explicit K";
    hs.char_kernel = chi;
    hs.explicit_k = k;
    hs.gens = k;
    return hs;
  }
  auto kernels = maximal_antichain_normal_subgroups(o);
  for (auto& ker : kernels) {
    if (ker.gens && subgroup_equal(*ker.gens, k)) return ker;
  }
  fail(ErrorCode::Unsupported,
       "half-space membership implemented for character orders and computed kernels");
}

std::vector<Element> exponent_box(const GroupRef& g, int radius) {
  if (!g->is_pc_like()) fail(ErrorCode::Unsupported, "exponent box needs a pc-like group");
  int n = g->n_gens();
  std::vector<Element> out;
  IntVec idx(n, -radius);
  while (true) {
    out.push_back(elem_from_exponents(g, idx));
    int pos = 0;
    while (pos < n && ++idx[pos] > radius) idx[pos++] = -radius;
    if (pos == n) break;
  }
  return out;
}

std::vector<Element> word_ball(const GroupRef& g, int radius) {
  if (g->kind != GroupKind::Free) fail(ErrorCode::Unsupported, "word ball needs a free group");
  std::vector<Element> out{identity(g)};
  size_t start = 0;
  for (int depth = 0; depth < radius; ++depth) {
    size_t end = out.size();
    for (size_t i = start; i < end; ++i) {
      for (int l = 1; l <= g->rank; ++l) {
        for (int dir = -1; dir <= 1; dir += 2) {
          std::vector<long long> w = out[i].data;
          if (!w.empty() && w.back() == -dir * l) continue;  // would cancel
          w.push_back(dir * l);
          out.push_back(Element{g, w});
        }
      }
    }
    start = end;
  }
  return out;
}

std::vector<Element> sample_elements(const GroupRef& g, int radius) {
  if (g->kind == GroupKind::Free) return word_ball(g, radius);
  int n = g->n_gens();
  int r = radius;
  // keep the box size manageable for larger Hirsch lengths
  while (n >= 4 && r > 2) --r;
  return exponent_box(g, r);
}

std::optional<Element> sample_positive(const OrderRef& o) {
  switch (o->kind) {
    case OrderKind::Trivial: return std::nullopt;
    case OrderKind::Character: {
      for (int i = 0; i < o->group->n_gens(); ++i) {
        int s = o->chr->values[i].sign();
        if (s > 0) return generator(o->group, i);
        if (s < 0) return inverse(generator(o->group, i));
      }
      return std::nullopt;
    }
    case OrderKind::Classification: {
      if (o->cls->zbasis.rank() == 0) return std::nullopt;
      // a preimage of the first center basis element, oriented positively
      const GroupRef& qbar = o->cls->quotient;
      Element z = o->cls->zbasis.w1_rows.nrows() > 0
                      ? o->cls->zbasis.lifts[0]
                      : elem_from_parts(qbar, IntVec(qbar->n_weight1(), 0), [&] {
                          IntVec u(qbar->n_weight2(), 0);
                          u[0] = 1;
                          return u;
                        }());
      auto pre = hom_preimage(o->cls->proj, z);
      if (!pre) return std::nullopt;
      Element cand = *pre;
      if (is_positive(*o, cand)) return cand;
      if (is_positive(*o, inverse(cand))) return inverse(cand);
      return std::nullopt;
    }
    case OrderKind::Pullback: {
      auto inner = sample_positive(o->pb_inner);
      if (!inner) return std::nullopt;
      bool dom_ok = o->pb_hom->dom->is_pc_like() ||
                    (o->pb_hom->dom->kind == GroupKind::Free && o->pb_hom->dom->rank == 1);
      if (dom_ok && o->pb_inner->group->is_pc_like()) {
        if (auto pre = hom_preimage(*o->pb_hom, *inner)) return pre;
      }
      // fall back to scanning generators and short products
      for (auto& g : sample_elements(o->group, 2))
        if (is_positive(*o, g)) return g;
      return std::nullopt;
    }
    case OrderKind::Pushforward: {
      if (o->pf_mode == PushforwardMode::EmptyCone) return std::nullopt;
      for (int i = 0; i < o->pf_iota->dom->n_gens(); ++i) {
        int s = char_apply(*o->pf_reduced, generator(o->pf_iota->dom, i)).sign();
        if (s > 0) return hom_apply(*o->pf_iota, generator(o->pf_iota->dom, i));
        if (s < 0) return hom_apply(*o->pf_iota, inverse(generator(o->pf_iota->dom, i)));
      }
      return std::nullopt;
    }
    case OrderKind::Lexicographic: {
      if (auto q = sample_positive(o->lex_pull)) return q;
      return sample_positive(o->lex_push);
    }
  }
  return std::nullopt;
}

PropertyVerdict is_archimedean(const OrderRef& o, int bound) {
  PropertyVerdict v;
  switch (o->kind) {
    case OrderKind::Trivial:
      v.verdict = Verdict3::YesStructural;
      v.note = "no positive elements";
      return v;
    case OrderKind::Character:
      v.verdict = Verdict3::YesStructural;
      v.note = "character values embed in (R, <)";
      return v;
    case OrderKind::Classification:
      v.verdict = Verdict3::YesStructural;
      v.note = "positive cone lies in a totally ordered center";
      return v;
    case OrderKind::Pushforward: {
      PropertyVerdict inner = is_archimedean(o->pf_inner, bound);
      if (inner.verdict == Verdict3::YesStructural) {
        v.verdict = Verdict3::YesStructural;
        v.note = "induced by an archimedean order";
        return v;
      }
      if (inner.verdict == Verdict3::NoWithWitness && inner.witness.size() == 2) {
        v.verdict = Verdict3::NoWithWitness;
        v.witness = {hom_apply(*o->pf_iota, inner.witness[0]),
                     hom_apply(*o->pf_iota, inner.witness[1])};
        v.note = "witness pushed forward";
        return v;
      }
      v.verdict = Verdict3::Undetermined;
      return v;
    }
    case OrderKind::Pullback: {
      PropertyVerdict inner = is_archimedean(o->pb_inner, bound);
      if (inner.verdict == Verdict3::YesStructural) {
        v.verdict = Verdict3::YesStructural;
        v.note = "pullback of an archimedean order";
        return v;
      }
      if (inner.verdict == Verdict3::NoWithWitness && inner.witness.size() == 2 &&
          o->pb_inner->group->is_pc_like()) {
        auto g0 = hom_preimage(*o->pb_hom, inner.witness[0]);
        auto h0 = hom_preimage(*o->pb_hom, inner.witness[1]);
        if (g0 && h0) {
          v.verdict = Verdict3::NoWithWitness;
          v.witness = {*g0, *h0};
          v.note = "witness lifted through the defining map";
          return v;
        }
      }
      v.verdict = Verdict3::Undetermined;
      return v;
    }
    case OrderKind::Lexicographic: {
      auto sub_pos = sample_positive(o->lex_push);
      auto quot_pos = sample_positive(o->lex_pull);
      if (sub_pos && quot_pos) {
        // ι(h) is infinitesimal with respect to any element with positive
        // projection: all its powers project trivially
        v.verdict = Verdict3::NoWithWitness;
        v.witness = {*sub_pos, *quot_pos};
        v.note = "positive kernel element is infinitesimal against a positive projection";
        return v;
      }
      if (!sub_pos) return is_archimedean(o->lex_pull, bound);
      return is_archimedean(o->lex_push, bound);
    }
  }
  v.verdict = Verdict3::Undetermined;
  (void)bound;
  return v;
}

std::optional<std::tuple<Element, Element, long long>> primitivity_counterexample(
    const GroupRef& g, const std::function<bool(const Element&)>& positive, int radius, int maxn) {
  std::vector<Element> ball = sample_elements(g, radius);
  for (auto& a : ball) {
    for (auto& b : ball) {
      if (elem_equal(a, b)) continue;
      // a < b already? then nothing to violate for this pair
      if (positive(multiply(inverse(a), b))) continue;
      for (long long n = 2; n <= maxn; ++n) {
        Element lhs = power(a, n), rhs = power(b, n);
        if (positive(multiply(inverse(lhs), rhs))) return std::make_tuple(a, b, n);
      }
    }
  }
  return std::nullopt;
}

PropertyVerdict is_primitive(const OrderRef& o, int bound) {
  PropertyVerdict v;
  if (order_as_character(*o)) {
    v.verdict = Verdict3::YesStructural;
    v.note = "character-type order";
    return v;
  }
  if (classification_view(*o)) {
    v.verdict = Verdict3::YesStructural;
    v.note = "classification-type order";
    return v;
  }
  auto ce = primitivity_counterexample(
      o->group, [&](const Element& e) { return is_positive(*o, e); }, bound, bound);
  if (ce) {
    v.verdict = Verdict3::NoWithWitness;
    v.witness = {std::get<0>(*ce), std::get<1>(*ce)};
    v.witness_n = std::get<2>(*ce);
    return v;
  }
  v.verdict = Verdict3::Undetermined;
  v.note = "no counterexample within bound " + std::to_string(bound);
  return v;
}

namespace {

// bounded enumeration of normal subgroups for factorizing checks
std::vector<Subgroup> enumerate_normal_subgroups_bounded(const GroupRef& g, int max_gens,
                                                         int max_exp) {
  std::vector<Subgroup> result;
  std::vector<std::string> keys;
  std::vector<Element> box = exponent_box(g, max_exp);
  std::vector<Subgroup> frontier{trivial_subgroup(g)};
  result.push_back(trivial_subgroup(g));
  keys.push_back(subgroup_canonical_key(trivial_subgroup(g)));
  for (int depth = 0; depth < max_gens; ++depth) {
    std::vector<Subgroup> next;
    for (auto& base : frontier) {
      for (auto& e : box) {
        if (is_identity(e)) continue;
        Subgroup cand = base;
        cand.gens.push_back(e);
        std::string key = subgroup_canonical_key(cand);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
        keys.push_back(key);
        next.push_back(cand);
        if (subgroup_is_normal(cand)) result.push_back(cand);
      }
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace

PropertyVerdict is_full(const OrderRef& o, int bound) {
  PropertyVerdict prim = is_primitive(o, bound);
  if (prim.verdict == Verdict3::NoWithWitness) {
    prim.note = "not primitive";
    return prim;
  }

  // factorizing side
  if (order_as_character(*o) || classification_view(*o)) {
    PropertyVerdict v;
    v.verdict = Verdict3::YesStructural;
    v.note = "positivity is constant on cosets of every antichain normal subgroup";
    return v;
  }
  if (o->kind == OrderKind::Pullback && o->pb_inner->group->is_pc_like() &&
      hom_is_surjective(*o->pb_hom)) {
    PropertyVerdict inner = is_full(o->pb_inner, bound);
    if (inner.verdict == Verdict3::YesStructural && prim.verdict == Verdict3::YesStructural)
      return inner;
  }
  PropertyVerdict v;
  if (!o->group->is_pc_like()) {
    v.verdict = Verdict3::Undetermined;
    v.note = "factorizing check needs a pc-like group";
    return v;
  }
  std::vector<Element> cone;
  for (auto& e : sample_elements(o->group, std::min(bound, 3)))
    if (is_positive(*o, e)) cone.push_back(e);
  for (auto& h : enumerate_normal_subgroups_bounded(o->group, 2, std::min(bound, 2))) {
    AntichainVerdict av = is_antichain(o, h);
    if (!av.antichain) continue;
    for (auto& p : cone) {
      for (auto& k : h.gens) {
        for (int dir = -1; dir <= 1; dir += 2) {
          Element moved = multiply(p, dir > 0 ? k : inverse(k));
          if (!is_positive(*o, moved)) {
            v.verdict = Verdict3::NoWithWitness;
            v.witness = {p, dir > 0 ? k : inverse(k)};
            v.note = "positivity not constant on cosets of an antichain normal subgroup";
            return v;
          }
        }
      }
    }
  }
  if (prim.verdict == Verdict3::YesStructural)
    v.note = "primitive; factorizing passed sampled checks only";
  else
    v.note = "primitivity and factorizing passed bounded checks only";
  v.verdict = Verdict3::Undetermined;
  return v;
}

Character extract_character(const OrderRef& o) {
  if (o->kind == OrderKind::Trivial)
    fail(ErrorCode::Validation, "character extraction needs a nontrivial order");
  auto chi = order_as_character(*o);
  if (!chi)
    fail(ErrorCode::Unsupported,
         "character extraction implemented for character-type orders (including classification "
         "orders with abelian quotient)");
  if (!order_is_nontrivial_char(*chi))
    fail(ErrorCode::Validation, "character extraction needs a nontrivial order");
  return char_canonicalize(*chi);
}

}  // namespace pogroup
