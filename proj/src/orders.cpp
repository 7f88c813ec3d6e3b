#include "pogroup/orders.hpp"

#include <algorithm>

namespace pogroup {

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::LessThan: return "LessThan";
    case Comparison::GreaterThan: return "GreaterThan";
    case Comparison::Equal: return "Equal";
    case Comparison::Incomparable: return "Incomparable";
  }
  return "?";
}

const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Trivial: return "trivial";
    case OrderKind::Character: return "character";
    case OrderKind::Pullback: return "pullback";
    case OrderKind::Pushforward: return "pushforward";
    case OrderKind::Lexicographic: return "lexicographic";
    case OrderKind::Classification: return "classification";
  }
  return "?";
}

CenterBasis center_basis(const GroupRef& g) {
  if (!g->is_pc_like()) fail(ErrorCode::Unsupported, "center basis needs a pc-like group");
  int m = g->n_weight1(), p = g->n_weight2();
  CenterBasis zb;
  zb.n_w2 = p;
  if (g->kind == GroupKind::FreeAbelian) {
    IntMat eye(m);
    for (int i = 0; i < m; ++i) {
      IntVec e(m, 0);
      e[i] = 1;
      eye.rows.push_back(e);
    }
    zb.w1_rows = eye;
    for (int i = 0; i < m; ++i) zb.lifts.push_back(generator(g, i));
    zb.n_w2 = 0;
    return zb;
  }
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
  zb.w1_rows = lattice_canonical(left_kernel(cond));
  zb.w1_rows.cols = m;
  for (auto& x : zb.w1_rows.rows) zb.lifts.push_back(elem_from_parts(g, x, IntVec(p, 0)));
  return zb;
}

bool is_central(const Element& e) {
  const GroupRef& g = e.group;
  if (g->kind == GroupKind::FreeAbelian) return true;
  if (g->kind == GroupKind::Free)
    return g->rank == 1 || is_identity(e);
  for (int j = 0; j < g->n_gens(); ++j)
    if (!is_identity(commutator(e, generator(g, j)))) return false;
  return true;
}

std::optional<IntVec> center_coords(const CenterBasis& zb, const Element& e) {
  const GroupRef& g = e.group;
  IntVec x = weight1_part(e);
  IntVec c;
  if (!lattice_contains(zb.w1_rows, x, &c)) return std::nullopt;
  Element acc = identity(g);
  for (size_t i = 0; i < zb.lifts.size(); ++i)
    if (c[i] != 0) acc = multiply(acc, power(zb.lifts[i], c[i]));
  Element rest = multiply(inverse(acc), e);
  if (!vec_is_zero(weight1_part(rest))) return std::nullopt;
  IntVec w = weight2_part(rest);
  IntVec coords = c;
  coords.insert(coords.end(), w.begin(), w.end());
  if (static_cast<int>(coords.size()) != zb.rank()) fail(ErrorCode::Validation, "coords rank");
  return coords;
}

namespace {

bool group_is_abelian(const GroupRef& g) {
  switch (g->kind) {
    case GroupKind::FreeAbelian: return true;
    case GroupKind::Free: return g->rank <= 1;
    case GroupKind::NilpotentPc:
      for (auto& v : g->pc.comm)
        if (!vec_is_zero(v)) return false;
      return true;
  }
  return false;
}

AlgNum iota_value(const std::vector<AlgNum>& iota, const IntVec& coords) {
  AlgNum acc;
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) acc = acc + iota[i].scaled(Rational(coords[i]));
  return acc;
}

std::shared_ptr<OrderSpec> blank(OrderKind k, const GroupRef& g, const std::string& label) {
  auto o = std::make_shared<OrderSpec>();
  o->kind = k;
  o->group = g;
  o->label = label;
  return o;
}

// rotation equality of cyclically reduced free words
bool is_rotation(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t shift = 0; shift < a.size(); ++shift) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i)
      if (a[(i + shift) % a.size()] != b[i]) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

OrderRef order_trivial(const GroupRef& g, const std::string& label) {
  return blank(OrderKind::Trivial, g, label);
}

OrderRef order_character(Character chi, const std::string& label) {
  if (!char_validate(chi)) fail(ErrorCode::Validation, "character not well-defined");
  auto o = blank(OrderKind::Character, chi.dom, label);
  o->chr = std::move(chi);
  return o;
}

OrderRef order_pullback(const Homomorphism& f, const OrderRef& inner, const std::string& label) {
  require_valid_hom(f);
  if (!f.cod->same_as(*inner->group)) fail(ErrorCode::GroupMismatch, "inner order not on codomain");
  if (inner->kind == OrderKind::Pullback) {
    // flatten: induced by the composed map
    return order_pullback(hom_compose(*inner->pb_hom, f), inner->pb_inner, label);
  }
  auto o = blank(OrderKind::Pullback, f.dom, label);
  o->pb_hom = std::make_shared<Homomorphism>(f);
  o->pb_inner = inner;
  return o;
}

OrderRef order_pushforward(const Homomorphism& iota, const OrderRef& inner,
                           const std::string& label) {
  require_valid_hom(iota);
  if (!iota.dom->same_as(*inner->group)) fail(ErrorCode::GroupMismatch, "inner order not on domain");
  auto o = blank(OrderKind::Pushforward, iota.cod, label);
  o->pf_iota = std::make_shared<Homomorphism>(iota);
  o->pf_inner = inner;

  std::optional<Character> reduced = order_as_character(*inner);
  if (!reduced)
    fail(ErrorCode::UnsupportedDecision,
         "pushforward needs a character-type order on the domain");
  o->pf_reduced = reduced;

  bool cone_empty = char_is_zero(*reduced);
  if (cone_empty) {
    o->pf_mode = PushforwardMode::EmptyCone;
    return o;
  }

  if (iota.cod->kind == GroupKind::Free) {
    if (iota.dom->n_gens() != 1)
      fail(ErrorCode::UnsupportedDecision, "pushforward into free groups needs a rank-1 domain");
    const Element& w = iota.images[0];
    if (is_identity(w))
      fail(ErrorCode::NotInducible, "positive elements map to the identity");
    o->pf_mode = PushforwardMode::FreeCyclic;
    return o;
  }

  if (!iota.cod->is_pc_like()) fail(ErrorCode::Unsupported, "unsupported pushforward codomain");

  if (iota.dom->kind == GroupKind::Free && iota.dom->rank > 1)
    fail(ErrorCode::UnsupportedDecision, "pushforward from free domains needs rank 1");

  bool all_central = std::all_of(iota.images.begin(), iota.images.end(),
                                 [](const Element& e) { return is_central(e); });
  if (all_central) {
    // the cone is the bare image of the positives; it is inverse-disjoint iff
    // the reduced character vanishes on the kernel of iota
    Subgroup ker = iota.dom->kind == GroupKind::Free
                       ? (is_identity(iota.images[0]) ? whole_group(iota.dom)
                                                      : trivial_subgroup(iota.dom))
                       : kernel_generators(iota);
    for (auto& k : ker.gens)
      if (char_apply(*reduced, k).sign() != 0)
        fail(ErrorCode::NotInducible, "conjugation closure of the image cone meets its inverses");
    o->pf_mode = PushforwardMode::CentralImage;
    return o;
  }

  if (iota.dom->n_gens() != 1)
    fail(ErrorCode::UnsupportedDecision,
         "pushforward with non-central images needs a rank-1 domain");
  // single generator with non-central image: powers have distinct nonzero
  // weight-1 parts, so the closure cannot meet its inverses
  o->pf_mode = PushforwardMode::RankOneNoncentral;
  return o;
}

OrderRef order_lexicographic(const Homomorphism& iota, const OrderRef& sub,
                             const Homomorphism& proj, const OrderRef& quot,
                             const std::string& label) {
  require_valid_hom(iota);
  require_valid_hom(proj);
  if (!iota.cod->same_as(*proj.dom)) fail(ErrorCode::GroupMismatch, "iota and proj do not chain");
  if (!sub->group->same_as(*iota.dom)) fail(ErrorCode::GroupMismatch, "sub order not on iota domain");
  if (!quot->group->same_as(*proj.cod)) fail(ErrorCode::GroupMismatch, "quot order not on proj codomain");
  const GroupRef& g = iota.cod;
  if (!g->is_pc_like())
    fail(ErrorCode::Unsupported, "lexicographic orders implemented for pc-like middle groups");
  if (!hom_is_surjective(proj)) fail(ErrorCode::NotExact, "projection not onto");
  if (!hom_is_injective(iota)) fail(ErrorCode::NotExact, "iota not injective");
  Subgroup image{g, iota.images};
  if (!subgroup_equal(image, kernel_generators(proj)))
    fail(ErrorCode::NotExact, "image of iota is not the kernel of the projection");

  OrderRef push = order_pushforward(iota, sub);  // NotInducible propagates
  OrderRef pull = order_pullback(proj, quot);

  auto o = blank(OrderKind::Lexicographic, g, label);
  o->lex_iota = std::make_shared<Homomorphism>(iota);
  o->lex_sub = sub;
  o->lex_proj = std::make_shared<Homomorphism>(proj);
  o->lex_quot = quot;
  o->lex_push = push;
  o->lex_pull = pull;
  return o;
}

OrderRef order_classification(const GroupRef& q, const Subgroup& p, std::vector<AlgNum> iota,
                              const std::string& label) {
  QuotientResult qr = quotient(q, p);  // NotNormal / TorsionQuotient propagate
  CenterBasis zb = center_basis(qr.group);
  if (static_cast<int>(iota.size()) != zb.rank())
    fail(ErrorCode::Validation, "one iota value per center basis element required (rank " +
                                    std::to_string(zb.rank()) + ")");
  if (!values_injective(iota))
    fail(ErrorCode::NotInjective, "iota not injective on the center of the quotient");
  auto o = blank(OrderKind::Classification, q, label);
  auto data = std::make_shared<ClassificationData>();
  data->p = p;
  data->quotient = qr.group;
  data->proj = qr.proj;
  data->zbasis = std::move(zb);
  data->iota = std::move(iota);
  o->cls = data;
  return o;
}

bool is_positive(const OrderSpec& o, const Element& g) {
  if (!g.group->same_as(*o.group)) fail(ErrorCode::GroupMismatch, "element not in ordered group");
  switch (o.kind) {
    case OrderKind::Trivial: return false;
    case OrderKind::Character: return char_apply(*o.chr, g).sign() > 0;
    case OrderKind::Pullback: return is_positive(*o.pb_inner, hom_apply(*o.pb_hom, g));
    case OrderKind::Lexicographic:
      return is_positive(*o.lex_pull, g) || is_positive(*o.lex_push, g);
    case OrderKind::Classification: {
      Element q = hom_apply(o.cls->proj, g);
      if (!is_central(q)) return false;
      auto coords = center_coords(o.cls->zbasis, q);
      if (!coords) fail(ErrorCode::Validation, "central element without center coordinates");
      return iota_value(o.cls->iota, *coords).sign() > 0;
    }
    case OrderKind::Pushforward: {
      const Homomorphism& iota = *o.pf_iota;
      const Character& psi = *o.pf_reduced;
      switch (o.pf_mode) {
        case PushforwardMode::EmptyCone: return false;
        case PushforwardMode::CentralImage: {
          auto pre = hom_preimage(iota, g);
          if (!pre) return false;
          return char_apply(psi, *pre).sign() > 0;
        }
        case PushforwardMode::RankOneNoncentral: {
          if (is_identity(g)) return false;
          const Element& w = iota.images[0];
          IntVec x0 = weight1_part(w), x = weight1_part(g);
          long long k = 0;
          for (size_t i = 0; i < x0.size(); ++i)
            if (x0[i] != 0) {
              if (x[i] % x0[i] != 0) return false;
              k = x[i] / x0[i];
              break;
            }
          if (k == 0) return false;
          if (x != vec_scale(x0, k)) return false;
          if (char_apply(psi, power(generator(iota.dom, 0), k)).sign() <= 0) return false;
          // conjugacy orbit of w^k: central translates by [x, G]
          Element wk = power(w, k);
          IntVec diff = vec_sub(weight2_part(g), weight2_part(wk));
          IntMat orbit(g.group->n_weight2());
          for (int j = 0; j < g.group->n_weight1(); ++j) {
            IntVec ej(g.group->n_weight1(), 0);
            ej[j] = 1;
            orbit.rows.push_back(comm_bilinear(g.group, x, ej));
          }
          return lattice_contains(orbit, diff);
        }
        case PushforwardMode::FreeCyclic: {
          if (is_identity(g)) return false;
          Element gc = cyclic_reduce(g);
          Element wc = cyclic_reduce(iota.images[0]);
          if (gc.data.size() % wc.data.size() != 0) return false;
          long long k = static_cast<long long>(gc.data.size() / wc.data.size());
          // orientation: positive power or negative power of w
          for (long long sign : {1LL, -1LL}) {
            long long kk = sign * k;
            if (char_apply(psi, power(generator(iota.dom, 0), kk)).sign() <= 0) continue;
            Element wk = power(wc, kk);
            if (is_rotation(wk.data, gc.data)) return true;
          }
          return false;
        }
      }
      return false;
    }
  }
  fail(ErrorCode::Unsupported, "unknown order kind");
}

bool is_negative(const OrderSpec& o, const Element& g) { return is_positive(o, inverse(g)); }

Comparison order_compare(const OrderSpec& o, const Element& a, const Element& b) {
  require_same_group(a, b);
  if (elem_equal(a, b)) return Comparison::Equal;
  if (is_positive(o, multiply(inverse(a), b))) return Comparison::LessThan;
  if (is_positive(o, multiply(inverse(b), a))) return Comparison::GreaterThan;
  return Comparison::Incomparable;
}

std::optional<Character> order_as_character(const OrderSpec& o) {
  switch (o.kind) {
    case OrderKind::Trivial: {
      std::vector<AlgNum> zeros(o.group->n_gens());
      return Character{o.group, std::move(zeros)};
    }
    case OrderKind::Character: return o.chr;
    case OrderKind::Pullback: {
      auto inner = order_as_character(*o.pb_inner);
      if (!inner) return std::nullopt;
      std::vector<AlgNum> vals;
      for (int i = 0; i < o.group->n_gens(); ++i)
        vals.push_back(char_apply(*inner, hom_apply(*o.pb_hom, generator(o.group, i))));
      return Character{o.group, std::move(vals)};
    }
    case OrderKind::Classification: {
      if (!group_is_abelian(o.cls->quotient)) return std::nullopt;
      std::vector<AlgNum> vals;
      for (int i = 0; i < o.group->n_gens(); ++i) {
        Element q = hom_apply(o.cls->proj, generator(o.group, i));
        auto coords = center_coords(o.cls->zbasis, q);
        if (!coords) return std::nullopt;
        vals.push_back(iota_value(o.cls->iota, *coords));
      }
      return Character{o.group, std::move(vals)};
    }
    default: return std::nullopt;
  }
}

std::string order_describe(const OrderSpec& o) {
  std::string base = o.label.empty() ? "" : o.label + ": ";
  switch (o.kind) {
    case OrderKind::Trivial: return base + "trivial on " + o.group->name;
    case OrderKind::Character:
      return base + "char" + values_str(o.chr->values) + " on " + o.group->name;
    case OrderKind::Pullback:
      return base + "pullback[" + order_describe(*o.pb_inner) + "] to " + o.group->name;
    case OrderKind::Pushforward:
      return base + "pushforward[" + order_describe(*o.pf_inner) + "] to " + o.group->name;
    case OrderKind::Lexicographic:
      return base + "lex[sub " + order_describe(*o.lex_sub) + "; quot " +
             order_describe(*o.lex_quot) + "] on " + o.group->name;
    case OrderKind::Classification: {
      std::string pstr = "<";
      for (size_t i = 0; i < o.cls->p.gens.size(); ++i) {
        if (i) pstr += ", ";
        pstr += elem_str(o.cls->p.gens[i]);
      }
      pstr += ">";
      return base + "classification(P=" + pstr + ", iota=" + values_str(o.cls->iota) + ") on " +
             o.group->name;
    }
  }
  return base + "?";
}

}  // namespace pogroup
