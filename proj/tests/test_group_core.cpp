#include <array>
#include <random>
#include <set>

#include "doctest.h"
#include "pogroup/hom.hpp"
#include "pogroup/subgroup.hpp"

using namespace pogroup;

namespace {

GroupRef heisenberg() {
  PcPresentation pc;
  pc.gen_names = {"a", "b", "c"};
  pc.weights = {1, 1, 2};
  pc.klass = 2;
  pc.comm = {{1}};  // [a, b] = c
  return GroupSpec::nilpotent_pc(pc, "H");
}

GroupRef free_nilpotent_2_3() {
  PcPresentation pc;
  pc.gen_names = {"a", "b", "c", "z1", "z2", "z3"};
  pc.weights = {1, 1, 1, 2, 2, 2};
  pc.klass = 2;
  // pairs (a,b), (a,c), (b,c)
  pc.comm = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return GroupSpec::nilpotent_pc(pc, "N23");
}

// Independent Heisenberg oracle: upper unitriangular 3x3 integer matrices,
// a = E12, b = E23. With [g,h] = g^-1 h^-1 g h one gets [a,b] = E13 and the
// normal form a^x b^y c^z corresponds to rows ((1, x, z + x y), (0, 1, y)).
struct Mat3 {
  std::array<std::array<long long, 3>, 3> v;
  static Mat3 eye() {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m.v[i][i] = 1;
    return m;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        long long s = 0;
        for (int k = 0; k < 3; ++k) s += a.v[i][k] * b.v[k][j];
        r.v[i][j] = s;
      }
    return r;
  }
  bool operator==(const Mat3&) const = default;
};

Mat3 mat_a(long long e) {
  Mat3 m = Mat3::eye();
  m.v[0][1] = e;
  return m;
}
Mat3 mat_b(long long e) {
  Mat3 m = Mat3::eye();
  m.v[1][2] = e;
  return m;
}
Mat3 mat_of(const Element& g) {
  Mat3 m = Mat3::eye();
  m.v[0][1] = g.data[0];
  m.v[1][2] = g.data[1];
  m.v[0][2] = g.data[2] + g.data[0] * g.data[1];
  return m;
}

// Letter-level collection oracle for class-2 pc groups: multiply two normal
// forms as words of single generator letters, then bubble-sort letters by
// generator index. Each swap u v -> v u [u, v] contributes one central
// commutator, [a_i^s, a_j^t] = (s t) [a_i, a_j] as a vector over the
// weight-2 generators.
IntVec collect_words(const GroupRef& g, const IntVec& lhs, const IntVec& rhs) {
  int n = g->n_gens(), m = g->pc.n_weight1(), p = g->pc.n_weight2();
  std::vector<int> word;  // letters +-(i+1)
  auto push_exps = [&](const IntVec& e) {
    for (int i = 0; i < n; ++i)
      for (long long k = 0; k < std::abs(e[i]); ++k) word.push_back(e[i] > 0 ? i + 1 : -(i + 1));
  };
  push_exps(lhs);
  push_exps(rhs);
  IntVec central(p, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < word.size(); ++k) {
      int u = word[k], v = word[k + 1];
      int gi = std::abs(u) - 1, gj = std::abs(v) - 1;
      if (gi <= gj) continue;
      std::swap(word[k], word[k + 1]);
      changed = true;
      if (gi < m && gj < m) {
        long long st = (long long)(u > 0 ? 1 : -1) * (v > 0 ? 1 : -1);
        // [a_gi, a_gj] with gi > gj is the inverse of the stored comm_vec(gj, gi)
        const IntVec& cv = g->pc.comm_vec(gj, gi);
        for (int t = 0; t < p; ++t) central[t] -= st * cv[t];
      }
    }
  }
  IntVec out(n, 0);
  for (int letter : word) out[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
  for (int t = 0; t < p; ++t) out[m + t] += central[t];
  return out;
}

Element rand_elem(const GroupRef& g, std::mt19937& rng, int bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  IntVec e(g->n_gens());
  for (auto& v : e) v = d(rng);
  return elem_from_exponents(g, e);
}

}  // namespace

TEST_CASE("heisenberg multiplication matches pinned collection identities") {
  GroupRef h = heisenberg();
  Element a = generator(h, 0), b = generator(h, 1), c = generator(h, 2);
  // b a = a b c^-1
  Element ba = multiply(b, a);
  CHECK(ba.data == IntVec{1, 1, -1});
  // (a b)^-1 = b^-1 a^-1 = a^-1 b^-1 c^-1
  CHECK(inverse(multiply(a, b)).data == IntVec{-1, -1, -1});
  CHECK(commutator(a, b).data == IntVec{0, 0, 1});
  CHECK(elem_equal(commutator(a, a), identity(h)));
  CHECK(is_identity(multiply(multiply(a, b), inverse(multiply(a, b)))));
  CHECK(elem_equal(multiply(identity(h), c), c));
}

TEST_CASE("heisenberg against the unitriangular matrix oracle") {
  GroupRef h = heisenberg();
  // the correspondence itself: a, b, c = [a,b]
  CHECK(mat_of(generator(h, 0)) == mat_a(1));
  CHECK(mat_of(generator(h, 1)) == mat_b(1));
  Mat3 mc = mat_of(generator(h, 2));
  CHECK(mc.v[0][2] == 1);
  CHECK(mc.v[0][1] == 0);
  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    Element x = rand_elem(h, rng, 4), y = rand_elem(h, rng, 4);
    CHECK(mat_of(multiply(x, y)) == mat_of(x) * mat_of(y));
  }
  for (int i = 0; i < 200; ++i) {
    Element x = rand_elem(h, rng, 4);
    CHECK(mat_of(inverse(x)) * mat_of(x) == Mat3::eye());
  }
}

TEST_CASE("normal-form soundness: collection agrees with the word oracle") {
  for (const GroupRef& g : {heisenberg(), free_nilpotent_2_3()}) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long long> d(-2, 2);
    for (int i = 0; i < 1000; ++i) {
      IntVec x(g->n_gens()), y(g->n_gens());
      for (auto& v : x) v = d(rng);
      for (auto& v : y) v = d(rng);
      Element ex = elem_from_exponents(g, x), ey = elem_from_exponents(g, y);
      CHECK(multiply(ex, ey).data == collect_words(g, x, y));
    }
  }
}

TEST_CASE("group axioms on random triples") {
  for (const GroupRef& g :
       {heisenberg(), free_nilpotent_2_3(), GroupSpec::free_abelian(2, "Z2")}) {
    std::mt19937 rng(19);
    for (int i = 0; i < 500; ++i) {
      Element x = rand_elem(g, rng, 5), y = rand_elem(g, rng, 5), z = rand_elem(g, rng, 5);
      CHECK(elem_equal(multiply(multiply(x, y), z), multiply(x, multiply(y, z))));
      CHECK(elem_equal(multiply(x, identity(g)), x));
      CHECK(is_identity(multiply(x, inverse(x))));
    }
  }
}

TEST_CASE("free group words") {
  GroupRef f = GroupSpec::free_group(2, "F2");
  Element x = elem_from_word(f, {1, 2, -2, -1, 1});  // a b b^-1 a^-1 a -> a
  CHECK(x.data == IntVec{1});
  Element w = elem_from_word(f, {1, -2});  // a b^-1
  CHECK(inverse(w).data == IntVec{2, -1});
  CHECK(is_identity(multiply(w, inverse(w))));
  CHECK(elem_str(w) == "a b^-1");
  Element cyc = elem_from_word(f, {1, 2, 1, -1, -2, -1});
  CHECK(is_identity(cyc));
  CHECK(cyclic_reduce(elem_from_word(f, {1, 2, -1})).data == IntVec{2});
  // abelian pair in Z^2; commutators vanish
  GroupRef z2 = GroupSpec::free_abelian(2, "Z2");
  CHECK(multiply(elem_from_exponents(z2, {1, 2}), elem_from_exponents(z2, {3, -1})).data ==
        IntVec{4, 1});
  CHECK(is_identity(commutator(elem_from_exponents(z2, {1, 2}), elem_from_exponents(z2, {3, -1}))));
}

TEST_CASE("element printing and comparison") {
  GroupRef h = heisenberg();
  CHECK(elem_str(elem_from_exponents(h, {2, -1, 0})) == "a^2 b^-1");
  CHECK(elem_str(identity(h)) == "1");
  CHECK(elem_cmp(identity(h), generator(h, 0)) < 0);
}

TEST_CASE("group mismatch is rejected") {
  GroupRef h = heisenberg();
  GroupRef z2 = GroupSpec::free_abelian(2, "Z2");
  try {
    multiply(generator(h, 0), generator(z2, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupMismatch);
  }
}

TEST_CASE("lower central series") {
  GroupRef h = heisenberg();
  auto series = lower_central_series(h);
  REQUIRE(series.size() == 3);
  CHECK(subgroup_equal(series[0], whole_group(h)));
  CHECK(subgroup_equal(series[1], make_subgroup(h, {generator(h, 2)})));
  CHECK(subgroup_is_trivial(series[2]));

  GroupRef z2 = GroupSpec::free_abelian(2, "Z2");
  auto az = lower_central_series(z2);
  REQUIRE(az.size() == 2);
  CHECK(subgroup_is_trivial(az[1]));

  GroupRef n23 = free_nilpotent_2_3();
  auto s23 = lower_central_series(n23);
  REQUIRE(s23.size() == 3);
  Subgroup g1 = make_subgroup(n23, {generator(n23, 3), generator(n23, 4), generator(n23, 5)});
  CHECK(subgroup_equal(s23[1], g1));

  CHECK_THROWS_AS(lower_central_series(GroupSpec::free_group(2, "F2")), Error);
}

TEST_CASE("center") {
  GroupRef h = heisenberg();
  CHECK(subgroup_equal(center(h), make_subgroup(h, {generator(h, 2)})));
  GroupRef z3 = GroupSpec::free_abelian(3, "Z3");
  CHECK(subgroup_equal(center(z3), whole_group(z3)));
  GroupRef n23 = free_nilpotent_2_3();
  Subgroup zc = center(n23);
  Subgroup g1 = make_subgroup(n23, {generator(n23, 3), generator(n23, 4), generator(n23, 5)});
  CHECK(subgroup_equal(zc, g1));
  CHECK_THROWS_AS(center(GroupSpec::free_group(2, "F2")), Error);
}

TEST_CASE("subgroup membership with pinned cases") {
  GroupRef z2 = GroupSpec::free_abelian(2, "Z2");
  Subgroup hsub = make_subgroup(z2, {elem_from_exponents(z2, {2, 0}), elem_from_exponents(z2, {0, 1})});
  CHECK(subgroup_contains(hsub, elem_from_exponents(z2, {4, 3})));
  CHECK_FALSE(subgroup_contains(hsub, elem_from_exponents(z2, {1, 0})));
  CHECK(subgroup_contains(hsub, identity(z2)));

  GroupRef h = heisenberg();
  Subgroup bc = make_subgroup(h, {generator(h, 1), generator(h, 2)});
  CHECK_FALSE(subgroup_contains(bc, generator(h, 0)));
  CHECK(subgroup_contains(bc, elem_from_exponents(h, {0, 3, -2})));
  // <a> does not contain the commutator with b
  Subgroup just_a = make_subgroup(h, {generator(h, 0)});
  CHECK_FALSE(subgroup_contains(just_a, generator(h, 2)));
  CHECK(subgroup_contains(just_a, elem_from_exponents(h, {5, 0, 0})));
}

TEST_CASE("subgroup membership vs brute-force enumeration") {
  // Heisenberg (Hirsch length 3) and Heisenberg x Z (Hirsch length 4)
  PcPresentation pc4;
  pc4.gen_names = {"a", "b", "d", "c"};
  pc4.weights = {1, 1, 1, 2};
  pc4.klass = 2;
  pc4.comm = {{1}, {0}, {0}};  // [a,b] = c, [a,d] = [b,d] = 1
  GroupRef hz = GroupSpec::nilpotent_pc(pc4, "HxZ");

  for (const GroupRef& h : {heisenberg(), hz}) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long long> d(-2, 2);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Element> gens;
    int ngens = 1 + trial % 3;
    for (int i = 0; i < ngens; ++i) gens.push_back(rand_elem(h, rng, 2));
    Subgroup sub = make_subgroup(h, gens);
    // all products of <= 4 generator powers with exponents in [-4, 4]
    std::set<IntVec> enumerated;
    std::vector<Element> layer{identity(h)};
    enumerated.insert(identity(h).data);
    for (int depth = 0; depth < 4; ++depth) {
      std::vector<Element> next;
      for (auto& e : layer) {
        for (auto& g : gens) {
          for (long long k = -4; k <= 4; ++k) {
            Element prod = multiply(e, power(g, k));
            if (enumerated.insert(prod.data).second) next.push_back(prod);
          }
        }
      }
      layer = std::move(next);
    }
    for (auto& data : enumerated) {
      CHECK(subgroup_contains(sub, Element{h, data}));
    }
  }
  }
}

TEST_CASE("normality") {
  GroupRef h = heisenberg();
  CHECK(subgroup_is_normal(make_subgroup(h, {generator(h, 2)})));
  CHECK_FALSE(subgroup_is_normal(make_subgroup(h, {generator(h, 0)})));
  CHECK(subgroup_is_normal(make_subgroup(h, {generator(h, 1), generator(h, 2)})));
  CHECK(subgroup_is_normal(trivial_subgroup(h)));
}

TEST_CASE("quotients") {
  GroupRef h = heisenberg();
  // H / <c> = Z^2 with projection dropping the central coordinate
  QuotientResult q = quotient(h, make_subgroup(h, {generator(h, 2)}));
  CHECK(q.group->kind == GroupKind::FreeAbelian);
  CHECK(q.group->n_gens() == 2);
  Element img = hom_apply(q.proj, elem_from_exponents(h, {2, -3, 7}));
  REQUIRE(img.data.size() == 2);
  // the projection is exactly (alpha, beta, gamma) -> (alpha, beta)
  CHECK(img.data == IntVec{2, -3});
  CHECK(is_identity(hom_apply(q.proj, generator(h, 2))));
  CHECK_FALSE(is_identity(hom_apply(q.proj, generator(h, 0))));
  CHECK(hom_validate(q.proj));
  Subgroup ker = kernel_generators(q.proj);
  CHECK(subgroup_equal(ker, make_subgroup(h, {generator(h, 2)})));

  // G / trivial = G
  QuotientResult qt = quotient(h, trivial_subgroup(h));
  CHECK(qt.group->kind == GroupKind::NilpotentPc);
  CHECK(qt.group->n_gens() == 3);
  CHECK(hom_validate(qt.proj));
  CHECK(subgroup_is_trivial(kernel_generators(qt.proj)));

  // Z^2 / <(2,0)> has torsion
  GroupRef z2 = GroupSpec::free_abelian(2, "Z2");
  CHECK_THROWS_AS(quotient(z2, make_subgroup(z2, {elem_from_exponents(z2, {2, 0})})), Error);
  try {
    quotient(z2, make_subgroup(z2, {elem_from_exponents(z2, {2, 0})}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TorsionQuotient);
  }
  // non-normal subgroup rejected
  GroupRef hh = heisenberg();
  try {
    quotient(hh, make_subgroup(hh, {generator(hh, 0)}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }
  // Z^2 / <(1,2)> = Z
  QuotientResult qz = quotient(z2, make_subgroup(z2, {elem_from_exponents(z2, {1, 2})}));
  CHECK(qz.group->kind == GroupKind::FreeAbelian);
  CHECK(qz.group->n_gens() == 1);
  CHECK(subgroup_equal(kernel_generators(qz.proj),
                       make_subgroup(z2, {elem_from_exponents(z2, {1, 2})})));
}

TEST_CASE("quotient projection kernel generates exactly P on random normal subgroups") {
  GroupRef h = heisenberg();
  std::mt19937 rng(43);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 12; ++trial) {
    std::vector<Element> gens;
    for (int i = 0; i < 1 + trial % 2; ++i) gens.push_back(rand_elem(h, rng, 2));
    Subgroup p = make_subgroup(h, gens);
    if (!subgroup_is_normal(p)) continue;
    QuotientResult q;
    try {
      q = quotient(h, p);
    } catch (const Error&) {
      continue;
    }
    ++tested;
    CHECK(hom_validate(q.proj));
    CHECK(subgroup_equal(kernel_generators(q.proj), p));
  }
  CHECK(tested >= 5);
}

TEST_CASE("homomorphisms: apply, validate, kernel") {
  GroupRef z2 = GroupSpec::free_abelian(2, "Z2");
  GroupRef z = GroupSpec::free_abelian(1, "Z");
  Homomorphism phi = make_hom(z2, z, {elem_from_exponents(z, {1}), elem_from_exponents(z, {0})});
  CHECK(hom_validate(phi));
  CHECK(hom_apply(phi, elem_from_exponents(z2, {3, 5})).data == IntVec{3});
  CHECK(subgroup_equal(kernel_generators(phi), make_subgroup(z2, {elem_from_exponents(z2, {0, 1})})));

  GroupRef h = heisenberg();
  Homomorphism psi = make_hom(h, z, {elem_from_exponents(z, {1}), elem_from_exponents(z, {0}),
                                     elem_from_exponents(z, {0})});
  CHECK(hom_validate(psi));
  Subgroup ker = kernel_generators(psi);
  CHECK(subgroup_equal(ker, make_subgroup(h, {generator(h, 1), generator(h, 2)})));
  CHECK(subgroup_is_normal(ker));

  // identity hom kernel is trivial
  CHECK(subgroup_is_trivial(kernel_generators(identity_hom(h))));

  // a map violating the commutator relation is invalid: send a, b to
  // commuting elements but c to a nonzero central element
  Homomorphism bad = make_hom(h, h, {generator(h, 0), generator(h, 0), generator(h, 2)});
  CHECK_FALSE(hom_validate(bad));

  // abelianization of H as a hom into Z^2
  QuotientResult ab = quotient(h, make_subgroup(h, {generator(h, 2)}));
  Homomorphism proj = ab.proj;
  CHECK(hom_is_surjective(proj));
  CHECK_FALSE(hom_is_injective(proj));
  CHECK(hom_is_injective(identity_hom(h)));
}

TEST_CASE("hom preimages") {
  GroupRef h = heisenberg();
  QuotientResult ab = quotient(h, make_subgroup(h, {generator(h, 2)}));
  Element target = elem_from_exponents(ab.group, {2, -1});
  auto pre = hom_preimage(ab.proj, target);
  REQUIRE(pre.has_value());
  CHECK(elem_equal(hom_apply(ab.proj, *pre), target));

  GroupRef z = GroupSpec::free_abelian(1, "Z");
  Homomorphism doubling = make_hom(z, z, {elem_from_exponents(z, {2})});
  CHECK(hom_preimage(doubling, elem_from_exponents(z, {4})).has_value());
  CHECK_FALSE(hom_preimage(doubling, elem_from_exponents(z, {3})).has_value());

  // free rank 1 into Heisenberg: k -> c^k
  GroupRef f1 = GroupSpec::free_group(1, "F1");
  Homomorphism iota = make_hom(f1, h, {generator(h, 2)});
  auto p2 = hom_preimage(iota, elem_from_exponents(h, {0, 0, -3}));
  REQUIRE(p2.has_value());
  CHECK(elem_equal(hom_apply(iota, *p2), elem_from_exponents(h, {0, 0, -3})));
  CHECK_FALSE(hom_preimage(iota, generator(h, 0)).has_value());
}

TEST_CASE("pc presentation validation") {
  PcPresentation bad;
  bad.gen_names = {"a", "c"};
  bad.weights = {1, 2};
  bad.klass = 2;
  bad.comm = {};  // no pairs since only one weight-1 generator
  // weight-2 generator not spanned by commutators -> rejected
  CHECK_THROWS_AS(GroupSpec::nilpotent_pc(bad, "bad"), Error);

  PcPresentation ok;
  ok.gen_names = {"a", "b"};
  ok.weights = {1, 1};
  ok.klass = 2;
  ok.comm = {{}};
  GroupRef g = GroupSpec::nilpotent_pc(ok, "Zsq");  // abelian-as-pc is fine
  CHECK(g->n_weight2() == 0);
  Element prod = multiply(generator(g, 0), generator(g, 1));
  CHECK(prod.data == IntVec{1, 1});
}
