#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pogroup/intlat.hpp"

namespace pogroup {

enum class GroupKind { Free, FreeAbelian, NilpotentPc };

// Polycyclic presentation of a torsion-free nilpotent group of class <= 2.
// Generators are listed weight-1 first, then weight-2; weight-2 generators
// are central and every commutator [a_i, a_j] of weight-1 generators is a
// vector over the weight-2 ones.
struct PcPresentation {
  std::vector<std::string> gen_names;
  std::vector<int> weights;        // nondecreasing, values in {1, 2}
  int klass = 2;
  std::vector<IntVec> comm;        // pair (i, j), i < j, both weight-1; length n_weight2

  int n_gens() const { return static_cast<int>(gen_names.size()); }
  int n_weight1() const;
  int n_weight2() const { return n_gens() - n_weight1(); }
  int pair_index(int i, int j) const;           // i < j < n_weight1
  const IntVec& comm_vec(int i, int j) const;   // exponents of [a_i, a_j]
};

class GroupSpec;
using GroupRef = std::shared_ptr<const GroupSpec>;

class GroupSpec {
 public:
  static GroupRef free_group(int rank, const std::string& name);
  static GroupRef free_abelian(int rank, const std::string& name);
  static GroupRef nilpotent_pc(PcPresentation pc, const std::string& name);

  GroupKind kind;
  std::string name;
  int rank = 0;          // Free / FreeAbelian
  PcPresentation pc;     // NilpotentPc

  bool is_pc_like() const { return kind != GroupKind::Free; }
  int n_gens() const;
  // Hirsch length for pc-like kinds (number of pc generators).
  int hirsch_length() const { return n_gens(); }
  int n_weight1() const;
  int n_weight2() const;
  std::string gen_name(int i) const;
  int gen_index(const std::string& name) const;  // -1 if absent

  std::uint64_t canonical_hash() const;
  bool same_as(const GroupSpec& other) const;

 private:
  GroupSpec() = default;
};

// Element in canonical normal form: exponent vector for pc-like groups,
// freely reduced word (letters +-(i+1)) for free groups.
struct Element {
  GroupRef group;
  IntVec data;
};

Element identity(const GroupRef& g);
Element elem_from_exponents(const GroupRef& g, IntVec exps);
Element elem_from_word(const GroupRef& g, const std::vector<long long>& letters);
Element generator(const GroupRef& g, int i);

bool is_identity(const Element& e);
bool elem_equal(const Element& a, const Element& b);
// Deterministic total order on normal forms (pc: exponent lex; free: length
// then lex). Used for ball ordering and reports.
int elem_cmp(const Element& a, const Element& b);

Element multiply(const Element& a, const Element& b);
Element inverse(const Element& a);
Element commutator(const Element& g, const Element& h);  // g^-1 h^-1 g h
Element conjugate(const Element& g, const Element& x);   // x^-1 g x
Element power(const Element& a, long long k);

std::string elem_str(const Element& e);

// pc-like helpers
IntVec weight1_part(const Element& e);
IntVec weight2_part(const Element& e);
Element elem_from_parts(const GroupRef& g, const IntVec& w1, const IntVec& w2);
// central part of [a^x, a^y] for pure weight-1 exponent vectors
IntVec comm_bilinear(const GroupRef& g, const IntVec& x, const IntVec& y);

// free-group helpers
std::vector<long long> free_reduce(std::vector<long long> word);
Element cyclic_reduce(const Element& g);

void require_same_group(const Element& a, const Element& b);

}  // namespace pogroup
