#include "pogroup/hom.hpp"

#include <algorithm>

namespace pogroup {

namespace {

void require_pc_like(const GroupRef& g, const char* what) {
  if (!g->is_pc_like()) fail(ErrorCode::Unsupported, std::string(what) + " needs a pc or abelian group");
  if (g->kind == GroupKind::NilpotentPc && g->pc.klass > 2)
    fail(ErrorCode::Unsupported, std::string(what) + " implemented for class <= 2 only");
}

// weight-1 parts of generator images, rows indexed by dom weight-1 generators
IntMat hom_t1(const Homomorphism& f) {
  IntMat t1(f.cod->n_weight1());
  for (int i = 0; i < f.dom->n_weight1(); ++i) t1.rows.push_back(weight1_part(f.images[i]));
  return t1;
}

// central parts of weight-2 generator images; validated homs map weight-2
// generators into the central layer
IntMat hom_t2(const Homomorphism& f) {
  int m = f.dom->n_weight1();
  IntMat t2(f.cod->n_weight2());
  for (int t = 0; t < f.dom->n_weight2(); ++t) {
    const Element& img = f.images[m + t];
    if (!vec_is_zero(weight1_part(img)))
      fail(ErrorCode::InvalidHom, "weight-2 generator image is not central");
    t2.rows.push_back(weight2_part(img));
  }
  return t2;
}

}  // namespace

Homomorphism make_hom(const GroupRef& dom, const GroupRef& cod, std::vector<Element> images) {
  if (static_cast<int>(images.size()) != dom->n_gens())
    fail(ErrorCode::Validation, "one image per domain generator required");
  for (auto& e : images)
    if (!e.group->same_as(*cod)) fail(ErrorCode::GroupMismatch, "image in wrong codomain");
  return Homomorphism{dom, cod, std::move(images)};
}

Homomorphism identity_hom(const GroupRef& g) {
  std::vector<Element> images;
  for (int i = 0; i < g->n_gens(); ++i) images.push_back(generator(g, i));
  return Homomorphism{g, g, std::move(images)};
}

Homomorphism hom_compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!inner.cod->same_as(*outer.dom)) fail(ErrorCode::GroupMismatch, "homs do not compose");
  std::vector<Element> images;
  for (auto& img : inner.images) images.push_back(hom_apply(outer, img));
  return Homomorphism{inner.dom, outer.cod, std::move(images)};
}

Element hom_apply(const Homomorphism& f, const Element& g) {
  if (!g.group->same_as(*f.dom)) fail(ErrorCode::GroupMismatch, "element not in hom domain");
  Element acc = identity(f.cod);
  if (f.dom->kind == GroupKind::Free) {
    for (long long l : g.data) {
      const Element& img = f.images[std::abs(l) - 1];
      acc = multiply(acc, l > 0 ? img : inverse(img));
    }
    return acc;
  }
  for (int i = 0; i < f.dom->n_gens(); ++i)
    if (g.data[i] != 0) acc = multiply(acc, power(f.images[i], g.data[i]));
  return acc;
}

bool hom_validate(const Homomorphism& f) {
  switch (f.dom->kind) {
    case GroupKind::Free:
      return true;  // no relations
    case GroupKind::FreeAbelian: {
      for (size_t i = 0; i < f.images.size(); ++i)
        for (size_t j = i + 1; j < f.images.size(); ++j)
          if (!is_identity(commutator(f.images[i], f.images[j]))) return false;
      return true;
    }
    case GroupKind::NilpotentPc: {
      if (f.dom->pc.klass > 2) fail(ErrorCode::Unsupported, "class <= 2 only");
      int n = f.dom->n_gens(), m = f.dom->n_weight1(), p = f.dom->n_weight2();
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          Element lhs = commutator(f.images[i], f.images[j]);
          Element rhs = identity(f.cod);
          if (i < m && j < m) {
            const IntVec& cv = f.dom->pc.comm_vec(i, j);
            for (int t = 0; t < p; ++t)
              if (cv[t] != 0) rhs = multiply(rhs, power(f.images[m + t], cv[t]));
          }
          if (!elem_equal(lhs, rhs)) return false;
        }
      }
      return true;
    }
  }
  return false;
}

void require_valid_hom(const Homomorphism& f) {
  if (!hom_validate(f)) fail(ErrorCode::InvalidHom, "map does not preserve relations");
}

Subgroup kernel_generators(const Homomorphism& f) {
  require_pc_like(f.dom, "kernel");
  require_pc_like(f.cod, "kernel");
  require_valid_hom(f);
  int m = f.dom->n_weight1(), p = f.dom->n_weight2();
  IntMat t1 = hom_t1(f);
  IntMat t2 = hom_t2(f);

  auto fval = [&](const IntVec& x) {  // central image of the pure weight-1 element
    Element e = elem_from_parts(f.dom, x, IntVec(p, 0));
    return weight2_part(hom_apply(f, e));
  };

  Subgroup ker{f.dom, {}};

  // weight-1 directions: x in ker T1 whose central defect is hit by T2
  IntMat k1 = left_kernel(t1);
  int r = k1.nrows();
  if (r > 0) {
    IntMat stacked(f.cod->n_weight2());
    for (auto& k : k1.rows) stacked.rows.push_back(fval(k));
    for (auto& row : t2.rows) stacked.rows.push_back(row);
    IntMat sols = left_kernel(stacked);
    // collect the t-parts; they form the weight-1 coordinate lattice of the kernel
    IntMat tparts(r);
    for (auto& s : sols.rows) tparts.rows.push_back(IntVec(s.begin(), s.begin() + r));
    for (auto& t : lattice_canonical(tparts).rows) {
      IntVec x(m, 0);
      for (int l = 0; l < r; ++l)
        if (t[l] != 0) x = vec_add(x, vec_scale(k1.rows[l], t[l]));
      IntVec defect = fval(x);
      for (auto& v : defect) v = -v;
      IntVec u;
      if (!lattice_contains(t2, defect, &u))
        fail(ErrorCode::Validation, "kernel defect not solvable");
      ker.gens.push_back(elem_from_parts(f.dom, x, u));
    }
  }
  // central directions
  for (auto& u : left_kernel(t2).rows)
    ker.gens.push_back(elem_from_parts(f.dom, IntVec(m, 0), u));
  return ker;
}

std::optional<Element> hom_preimage(const Homomorphism& f, const Element& target) {
  if (!target.group->same_as(*f.cod)) fail(ErrorCode::GroupMismatch, "target not in codomain");
  require_pc_like(f.cod, "preimage");
  if (f.dom->kind == GroupKind::Free) {
    if (f.dom->rank != 1) fail(ErrorCode::Unsupported, "free preimage only for rank 1");
    const Element& w = f.images[0];
    if (is_identity(w)) return is_identity(target) ? std::optional<Element>(identity(f.dom)) : std::nullopt;
    // target = w^k: read k off the first nonzero coordinate of w
    IntVec wx = weight1_part(w), tx = weight1_part(target);
    long long k = 0;
    bool found = false;
    for (size_t i = 0; i < wx.size() && !found; ++i)
      if (wx[i] != 0) {
        if (tx[i] % wx[i] != 0) return std::nullopt;
        k = tx[i] / wx[i];
        found = true;
      }
    if (!found) {
      IntVec wu = weight2_part(w), tu = weight2_part(target);
      for (size_t i = 0; i < wu.size() && !found; ++i)
        if (wu[i] != 0) {
          if (tu[i] % wu[i] != 0) return std::nullopt;
          k = tu[i] / wu[i];
          found = true;
        }
    }
    if (!found) return std::nullopt;
    if (!elem_equal(power(w, k), target)) return std::nullopt;
    std::vector<long long> letters(static_cast<size_t>(k >= 0 ? k : -k), k >= 0 ? 1 : -1);
    return elem_from_word(f.dom, letters);
  }
  require_pc_like(f.dom, "preimage");
  int m = f.dom->n_weight1(), p = f.dom->n_weight2();
  IntMat t1 = hom_t1(f);
  IntMat t2 = hom_t2(f);
  IntVec t;
  if (!lattice_contains(t1, weight1_part(target), &t)) return std::nullopt;
  IntVec x(m);
  std::copy(t.begin(), t.end(), x.begin());
  auto residual_of = [&](const IntVec& xx) {
    Element cand = hom_apply(f, elem_from_parts(f.dom, xx, IntVec(p, 0)));
    return multiply(inverse(cand), target);
  };
  Element res = residual_of(x);
  if (!vec_is_zero(weight1_part(res))) fail(ErrorCode::Validation, "preimage residue not central");
  IntVec u;
  if (lattice_contains(t2, weight2_part(res), &u))
    return elem_from_parts(f.dom, x, u);
  // adjust x along ker T1 so the residue falls into the T2 lattice
  IntMat k1 = left_kernel(t1);
  int r = k1.nrows();
  if (r == 0) return std::nullopt;
  IntMat stacked(f.cod->n_weight2());
  auto fval = [&](const IntVec& xx) {
    Element e = elem_from_parts(f.dom, xx, IntVec(p, 0));
    return weight2_part(hom_apply(f, e));
  };
  for (auto& k : k1.rows) stacked.rows.push_back(fval(k));
  for (auto& row : t2.rows) stacked.rows.push_back(row);
  IntVec coeff;
  if (!lattice_contains(stacked, weight2_part(res), &coeff)) return std::nullopt;
  for (int l = 0; l < r; ++l)
    if (coeff[l] != 0) x = vec_add(x, vec_scale(k1.rows[l], coeff[l]));
  res = residual_of(x);
  if (!lattice_contains(t2, weight2_part(res), &u)) return std::nullopt;
  return elem_from_parts(f.dom, x, u);
}

bool hom_is_surjective(const Homomorphism& f) {
  require_pc_like(f.cod, "surjectivity check");
  Subgroup image{f.cod, f.images};
  for (int j = 0; j < f.cod->n_gens(); ++j)
    if (!subgroup_contains(image, generator(f.cod, j))) return false;
  return true;
}

bool hom_is_injective(const Homomorphism& f) {
  if (f.dom->kind == GroupKind::Free) {
    // all supported codomains are torsion-free, so Z embeds iff the image is nontrivial
    if (f.dom->rank == 1) return !is_identity(f.images[0]);
    fail(ErrorCode::Unsupported, "injectivity undecidable here for free rank >= 2");
  }
  return subgroup_is_trivial(kernel_generators(f));
}

namespace {

// coordinates of v in the basis (latt rows | comp rows); latt+comp must be a
// basis of Z^n. Returns only the comp coordinates.
IntVec quotient_coords(const IntMat& latt, const IntMat& comp, const IntVec& v) {
  IntMat stacked(latt.cols);
  for (auto& r : latt.rows) stacked.rows.push_back(r);
  for (auto& r : comp.rows) stacked.rows.push_back(r);
  IntVec c;
  if (!lattice_contains(stacked, v, &c)) fail(ErrorCode::Validation, "not in spanning basis");
  return IntVec(c.begin() + latt.nrows(), c.end());
}

}  // namespace

QuotientResult quotient(const GroupRef& g, const Subgroup& p) {
  require_pc_like(g, "quotient");
  if (!p.ambient->same_as(*g)) fail(ErrorCode::GroupMismatch, "subgroup of a different group");
  if (!subgroup_is_normal(p)) fail(ErrorCode::NotNormal, "quotient by non-normal subgroup");
  int m = g->n_weight1(), pp = g->n_weight2();
  SubgroupLattice lat = subgroup_lattice(p);

  // torsion-freeness, central layer first
  if (!quotient_torsion_free(lat.w2)) fail(ErrorCode::TorsionQuotient, "central layer has torsion");

  auto lift_central = [&](const IntVec& y) {  // lambda(y) for y in L1
    IntVec c;
    if (!lattice_contains(lat.w1, y, &c)) fail(ErrorCode::Validation, "lift of non-lattice vector");
    Element e = identity(g);
    for (size_t i = 0; i < lat.lifts.size(); ++i)
      if (c[i] != 0) e = multiply(e, power(lat.lifts[i], c[i]));
    return weight2_part(e);
  };

  // weight-1 layer: enumerate torsion classes of Z^m / L1 and decide whether
  // any is realized by an actual torsion element of G/P
  IntMat sat1 = saturate(lat.w1);
  bool w1_saturated = lattice_equal(sat1, lat.w1);
  if (!w1_saturated) {
    // representatives of sat(L1)/L1: coefficients of L1 rows in the sat basis
    IntMat coords(sat1.nrows());
    for (auto& row : lat.w1.rows) {
      IntVec c;
      if (!lattice_contains(sat1, row, &c)) fail(ErrorCode::Validation, "saturation inconsistency");
      coords.rows.push_back(c);
    }
    HnfResult ch = hermite_normal_form(coords);
    // box enumeration over HNF pivots
    std::vector<long long> limits(sat1.nrows(), 1);
    for (int i = 0; i < ch.rank; ++i) limits[ch.pivot_cols[i]] = ch.h.rows[i][ch.pivot_cols[i]];
    std::vector<long long> idx(sat1.nrows(), 0);
    bool torsion_found = false;
    while (true) {
      // build representative x = sum idx_i * sat-basis row i
      IntVec x(m, 0);
      bool nonzero = false;
      for (int i = 0; i < sat1.nrows(); ++i)
        if (idx[i] != 0) {
          x = vec_add(x, vec_scale(sat1.rows[i], idx[i]));
          nonzero = true;
        }
      if (nonzero && !lattice_contains(lat.w1, x)) {
        long long k = 2;
        while (!lattice_contains(lat.w1, vec_scale(x, k))) {
          ++k;
          if (k > 4096) fail(ErrorCode::Validation, "torsion order runaway");
        }
        // minimal k with kx in L1; realizable iff gamma - lambda(kx) in L2 + k Z^p
        Element gk = power(elem_from_parts(g, x, IntVec(pp, 0)), k);
        IntVec gamma = weight2_part(gk);
        IntVec mu = lift_central(vec_scale(x, k));
        IntVec target = vec_sub(gamma, mu);
        IntMat modlat(pp);
        for (auto& r : lat.w2.rows) modlat.rows.push_back(r);
        for (int t = 0; t < pp; ++t) {
          IntVec e(pp, 0);
          e[t] = k;
          modlat.rows.push_back(e);
        }
        if (lattice_contains(modlat, target)) {
          torsion_found = true;
          break;
        }
      }
      // increment mixed-radix index
      int pos = 0;
      while (pos < sat1.nrows()) {
        if (++idx[pos] < limits[pos]) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == sat1.nrows()) break;
    }
    if (torsion_found) fail(ErrorCode::TorsionQuotient, "weight-1 layer has torsion");
    fail(ErrorCode::Unsupported,
         "quotient is torsion-free but absorbs torsion across pc layers; not supported");
  }

  // presentation of the quotient on complement bases
  IntMat u_basis = lattice_complement(lat.w1);   // new weight-1 directions
  IntMat c_basis = lattice_complement(lat.w2);   // new central directions
  int m2 = u_basis.nrows(), p2 = c_basis.nrows();

  auto central_coords = [&](const IntVec& v) { return quotient_coords(lat.w2, c_basis, v); };

  // commutator table of the images
  bool all_comm_zero = true;
  std::vector<IntVec> new_comm;
  for (int i = 0; i < m2; ++i)
    for (int j = i + 1; j < m2; ++j) {
      IntVec bij = comm_bilinear(g, u_basis.rows[i], u_basis.rows[j]);
      IntVec cc = central_coords(bij);
      if (!vec_is_zero(cc)) all_comm_zero = false;
      new_comm.push_back(cc);
    }

  GroupRef q;
  if (p2 == 0 && all_comm_zero) {
    q = GroupSpec::free_abelian(m2, g->name + "_mod_P");
  } else {
    PcPresentation pres;
    for (int i = 0; i < m2; ++i) pres.gen_names.push_back("q" + std::to_string(i + 1));
    for (int t = 0; t < p2; ++t) pres.gen_names.push_back("z" + std::to_string(t + 1));
    pres.weights.assign(m2, 1);
    pres.weights.insert(pres.weights.end(), p2, 2);
    pres.klass = 2;
    pres.comm = new_comm;
    q = GroupSpec::nilpotent_pc(std::move(pres), g->name + "_mod_P");
  }

  // projection on generators
  auto project = [&](const Element& e) {
    IntVec x = weight1_part(e);
    IntVec alpha;  // coords over (L1 | u_basis)
    IntMat stacked(m);
    for (auto& r : lat.w1.rows) stacked.rows.push_back(r);
    for (auto& r : u_basis.rows) stacked.rows.push_back(r);
    if (!lattice_contains(stacked, x, &alpha)) fail(ErrorCode::Validation, "projection solve failed");
    IntVec in_p(alpha.begin(), alpha.begin() + lat.w1.nrows());
    IntVec beta(alpha.begin() + lat.w1.nrows(), alpha.end());
    // residual central part after removing the P-component and the class part
    Element acc = identity(g);
    for (size_t i = 0; i < lat.lifts.size(); ++i)
      if (in_p[i] != 0) acc = multiply(acc, power(lat.lifts[i], in_p[i]));
    for (int i = 0; i < m2; ++i)
      if (beta[i] != 0)
        acc = multiply(acc, power(elem_from_parts(g, u_basis.rows[i], IntVec(pp, 0)), beta[i]));
    Element rest = multiply(inverse(acc), e);
    if (!vec_is_zero(weight1_part(rest))) fail(ErrorCode::Validation, "projection residue not central");
    IntVec delta = central_coords(weight2_part(rest));
    if (q->kind == GroupKind::FreeAbelian) return elem_from_exponents(q, beta);
    return elem_from_parts(q, beta, delta);
  };

  std::vector<Element> images;
  for (int i = 0; i < g->n_gens(); ++i) images.push_back(project(generator(g, i)));
  Homomorphism proj{g, q, std::move(images)};
  require_valid_hom(proj);
  return QuotientResult{q, std::move(proj)};
}

}  // namespace pogroup
