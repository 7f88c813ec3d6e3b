#include "pogroup/group.hpp"

#include <algorithm>

namespace pogroup {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

std::string default_gen_name(int i, int total) {
  if (total <= 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i + 1);
}

}  // namespace

int PcPresentation::n_weight1() const {
  int m = 0;
  while (m < n_gens() && weights[m] == 1) ++m;
  return m;
}

int PcPresentation::pair_index(int i, int j) const {
  int m = n_weight1();
  // pairs (0,1), (0,2), ..., (0,m-1), (1,2), ...
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

const IntVec& PcPresentation::comm_vec(int i, int j) const { return comm[pair_index(i, j)]; }

GroupRef GroupSpec::free_group(int rank, const std::string& name) {
  if (rank < 1) fail(ErrorCode::Validation, "free group rank must be >= 1");
  auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
  g->kind = GroupKind::Free;
  g->rank = rank;
  g->name = name;
  return g;
}

GroupRef GroupSpec::free_abelian(int rank, const std::string& name) {
  if (rank < 0) fail(ErrorCode::Validation, "free abelian rank must be >= 0");
  auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
  g->kind = GroupKind::FreeAbelian;
  g->rank = rank;
  g->name = name;
  return g;
}

GroupRef GroupSpec::nilpotent_pc(PcPresentation pc, const std::string& name) {
  int n = pc.n_gens();
  if (static_cast<int>(pc.weights.size()) != n)
    fail(ErrorCode::Validation, "pc presentation: weights size mismatch");
  for (int i = 0; i < n; ++i)
    if (pc.weights[i] != 1 && pc.weights[i] != 2)
      fail(ErrorCode::Validation, "pc presentation: weights must be 1 or 2");
  for (int i = 0; i + 1 < n; ++i)
    if (pc.weights[i] > pc.weights[i + 1])
      fail(ErrorCode::Validation, "pc presentation: weight-1 generators must precede weight-2");
  int m = pc.n_weight1(), p = pc.n_weight2();
  int npairs = m * (m - 1) / 2;
  if (static_cast<int>(pc.comm.size()) != npairs)
    fail(ErrorCode::Validation, "pc presentation: commutator table size mismatch");
  for (auto& v : pc.comm)
    if (static_cast<int>(v.size()) != p)
      fail(ErrorCode::Validation, "pc presentation: commutator vector length mismatch");
  if (pc.klass < 1) fail(ErrorCode::Validation, "pc presentation: class must be >= 1");
  // Weight-2 generators must be rationally spanned by the commutator lattice,
  // otherwise they belong in weight 1 (they generate a free-abelian direct
  // factor and subgroup/quotient layer computations would be ambiguous).
  IntMat commlat(p);
  for (auto& v : pc.comm) commlat.rows.push_back(v);
  if (hermite_normal_form(commlat).rank != p)
    fail(ErrorCode::Validation,
         "pc presentation: weight-2 generators not spanned by commutators; declare them weight 1");
  auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
  g->kind = GroupKind::NilpotentPc;
  g->name = name;
  g->pc = std::move(pc);
  return g;
}

int GroupSpec::n_gens() const {
  switch (kind) {
    case GroupKind::Free:
    case GroupKind::FreeAbelian: return rank;
    case GroupKind::NilpotentPc: return pc.n_gens();
  }
  return 0;
}

int GroupSpec::n_weight1() const { return kind == GroupKind::NilpotentPc ? pc.n_weight1() : n_gens(); }
int GroupSpec::n_weight2() const { return kind == GroupKind::NilpotentPc ? pc.n_weight2() : 0; }

std::string GroupSpec::gen_name(int i) const {
  if (kind == GroupKind::NilpotentPc) return pc.gen_names[i];
  return default_gen_name(i, n_gens());
}

int GroupSpec::gen_index(const std::string& gname) const {
  for (int i = 0; i < n_gens(); ++i)
    if (gen_name(i) == gname) return i;
  return -1;
}

std::uint64_t GroupSpec::canonical_hash() const {
  std::uint64_t h = kFnvOffset;
  fnv(h, static_cast<std::uint64_t>(kind));
  fnv(h, static_cast<std::uint64_t>(n_gens()));
  if (kind == GroupKind::NilpotentPc) {
    for (int w : pc.weights) fnv(h, static_cast<std::uint64_t>(w));
    for (auto& v : pc.comm)
      for (long long x : v) fnv(h, static_cast<std::uint64_t>(x));
  }
  return h;
}

bool GroupSpec::same_as(const GroupSpec& o) const {
  if (kind != o.kind || n_gens() != o.n_gens()) return false;
  if (kind == GroupKind::NilpotentPc)
    return pc.weights == o.pc.weights && pc.comm == o.pc.comm;
  return true;
}

void require_same_group(const Element& a, const Element& b) {
  if (!a.group || !b.group || !a.group->same_as(*b.group))
    fail(ErrorCode::GroupMismatch, "elements live in different groups");
}

Element identity(const GroupRef& g) {
  if (g->kind == GroupKind::Free) return Element{g, {}};
  return Element{g, IntVec(g->n_gens(), 0)};
}

Element elem_from_exponents(const GroupRef& g, IntVec exps) {
  if (g->kind == GroupKind::Free) fail(ErrorCode::Unsupported, "exponent form needs a pc-like group");
  if (static_cast<int>(exps.size()) != g->n_gens())
    fail(ErrorCode::Validation, "exponent vector length mismatch");
  return Element{g, std::move(exps)};
}

std::vector<long long> free_reduce(std::vector<long long> word) {
  std::vector<long long> out;
  for (long long l : word) {
    if (l == 0) fail(ErrorCode::Validation, "zero letter");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Element elem_from_word(const GroupRef& g, const std::vector<long long>& letters) {
  for (long long l : letters) {
    long long idx = l > 0 ? l : -l;
    if (idx < 1 || idx > g->n_gens()) fail(ErrorCode::Validation, "letter out of range");
  }
  if (g->kind == GroupKind::Free) return Element{g, free_reduce(letters)};
  Element acc = identity(g);
  for (long long l : letters) {
    IntVec e(g->n_gens(), 0);
    e[std::abs(l) - 1] = l > 0 ? 1 : -1;
    acc = multiply(acc, Element{g, e});
  }
  return acc;
}

Element generator(const GroupRef& g, int i) {
  if (g->kind == GroupKind::Free) return Element{g, {i + 1}};
  IntVec e(g->n_gens(), 0);
  e[i] = 1;
  return Element{g, e};
}

bool is_identity(const Element& e) {
  if (e.group->kind == GroupKind::Free) return e.data.empty();
  return vec_is_zero(e.data);
}

bool elem_equal(const Element& a, const Element& b) {
  require_same_group(a, b);
  return a.data == b.data;
}

int elem_cmp(const Element& a, const Element& b) {
  require_same_group(a, b);
  if (a.group->kind == GroupKind::Free && a.data.size() != b.data.size())
    return a.data.size() < b.data.size() ? -1 : 1;
  if (a.data < b.data) return -1;
  if (b.data < a.data) return 1;
  return 0;
}

namespace {

void require_class2(const GroupRef& g) {
  if (g->kind == GroupKind::NilpotentPc && g->pc.klass > 2)
    fail(ErrorCode::Unsupported, "arithmetic implemented for class <= 2 only");
}

// a^x c^u * a^y c^v = a^(x+y) c^(u+v+q(x,y)), q(x,y) = -sum_{j<i} x_i y_j [a_j, a_i]
IntVec collection_correction(const GroupSpec& g, const IntVec& x, const IntVec& y) {
  int m = g.pc.n_weight1(), p = g.pc.n_weight2();
  IntVec q(p, 0);
  for (int j = 0; j < m; ++j) {
    if (y[j] == 0) continue;
    for (int i = j + 1; i < m; ++i) {
      if (x[i] == 0) continue;
      long long f = checked_mul(x[i], y[j]);
      const IntVec& cv = g.pc.comm_vec(j, i);
      for (int t = 0; t < p; ++t)
        q[t] = checked_add(q[t], checked_mul(-f, cv[t]));
    }
  }
  return q;
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  require_same_group(a, b);
  const GroupRef& g = a.group;
  switch (g->kind) {
    case GroupKind::Free: {
      std::vector<long long> w = a.data;
      w.insert(w.end(), b.data.begin(), b.data.end());
      return Element{g, free_reduce(w)};
    }
    case GroupKind::FreeAbelian:
      return Element{g, vec_add(a.data, b.data)};
    case GroupKind::NilpotentPc: {
      require_class2(g);
      int m = g->pc.n_weight1(), p = g->pc.n_weight2();
      IntVec out(m + p);
      IntVec q = collection_correction(*g, a.data, b.data);
      for (int i = 0; i < m; ++i) out[i] = checked_add(a.data[i], b.data[i]);
      for (int t = 0; t < p; ++t)
        out[m + t] = checked_add(checked_add(a.data[m + t], b.data[m + t]), q[t]);
      return Element{g, std::move(out)};
    }
  }
  fail(ErrorCode::Unsupported, "unknown group kind");
}

Element inverse(const Element& a) {
  const GroupRef& g = a.group;
  switch (g->kind) {
    case GroupKind::Free: {
      std::vector<long long> w(a.data.rbegin(), a.data.rend());
      for (auto& l : w) l = -l;
      return Element{g, std::move(w)};
    }
    case GroupKind::FreeAbelian: {
      IntVec v = a.data;
      for (auto& x : v) x = -x;
      return Element{g, std::move(v)};
    }
    case GroupKind::NilpotentPc: {
      require_class2(g);
      int m = g->pc.n_weight1(), p = g->pc.n_weight2();
      IntVec neg = a.data;
      for (auto& x : neg) x = -x;
      // (x,u)^-1 = (-x, -u - q(x, -x))
      IntVec q = collection_correction(*g, a.data, neg);
      IntVec out = neg;
      for (int t = 0; t < p; ++t) out[m + t] = checked_add(out[m + t], -q[t]);
      return Element{g, std::move(out)};
    }
  }
  fail(ErrorCode::Unsupported, "unknown group kind");
}

Element commutator(const Element& g, const Element& h) {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

Element conjugate(const Element& g, const Element& x) {
  return multiply(multiply(inverse(x), g), x);
}

Element power(const Element& a, long long k) {
  if (k == 0) return identity(a.group);
  Element base = k > 0 ? a : inverse(a);
  long long steps = k > 0 ? k : -k;
  if (a.group->is_pc_like()) {
    // closed form: (x,u)^k = (k x, k u + C(k,2) q(x,x)) via doubling-free path
    Element acc = identity(a.group);
    Element sq = base;
    while (steps > 0) {
      if (steps & 1) acc = multiply(acc, sq);
      steps >>= 1;
      if (steps) sq = multiply(sq, sq);
    }
    return acc;
  }
  Element acc = identity(a.group);
  for (long long i = 0; i < steps; ++i) acc = multiply(acc, base);
  return acc;
}

std::string elem_str(const Element& e) {
  const GroupRef& g = e.group;
  if (is_identity(e)) return "1";
  std::string out;
  auto append = [&](const std::string& name, long long exp) {
    if (exp == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
  };
  if (g->kind == GroupKind::Free) {
    // run-length collapse consecutive same letters
    size_t i = 0;
    while (i < e.data.size()) {
      size_t j = i;
      while (j < e.data.size() && e.data[j] == e.data[i]) ++j;
      long long letter = e.data[i];
      long long count = static_cast<long long>(j - i);
      append(g->gen_name(std::abs(letter) - 1), letter > 0 ? count : -count);
      i = j;
    }
    return out;
  }
  for (int i = 0; i < g->n_gens(); ++i) append(g->gen_name(i), e.data[i]);
  return out;
}

IntVec weight1_part(const Element& e) {
  const GroupRef& g = e.group;
  switch (g->kind) {
    case GroupKind::FreeAbelian: return e.data;
    case GroupKind::NilpotentPc:
      return IntVec(e.data.begin(), e.data.begin() + g->pc.n_weight1());
    case GroupKind::Free: {
      IntVec sums(g->rank, 0);
      for (long long l : e.data) sums[std::abs(l) - 1] += (l > 0 ? 1 : -1);
      return sums;
    }
  }
  fail(ErrorCode::Unsupported, "unknown group kind");
}

IntVec weight2_part(const Element& e) {
  const GroupRef& g = e.group;
  if (g->kind == GroupKind::NilpotentPc)
    return IntVec(e.data.begin() + g->pc.n_weight1(), e.data.end());
  return {};
}

Element elem_from_parts(const GroupRef& g, const IntVec& w1, const IntVec& w2) {
  if (g->kind == GroupKind::FreeAbelian) {
    if (!w2.empty()) fail(ErrorCode::Validation, "free abelian has no weight-2 part");
    return elem_from_exponents(g, w1);
  }
  if (g->kind != GroupKind::NilpotentPc) fail(ErrorCode::Unsupported, "needs pc-like group");
  IntVec full = w1;
  full.insert(full.end(), w2.begin(), w2.end());
  return elem_from_exponents(g, full);
}

IntVec comm_bilinear(const GroupRef& g, const IntVec& x, const IntVec& y) {
  if (g->kind == GroupKind::FreeAbelian) return {};
  int p = g->pc.n_weight2();
  IntVec zero(p, 0);
  Element gx = elem_from_parts(g, x, zero);
  Element gy = elem_from_parts(g, y, zero);
  return weight2_part(commutator(gx, gy));
}

Element cyclic_reduce(const Element& g) {
  if (g.group->kind != GroupKind::Free) fail(ErrorCode::Unsupported, "cyclic reduction is for free groups");
  std::vector<long long> w = g.data;
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return Element{g.group, std::move(w)};
}

}  // namespace pogroup
