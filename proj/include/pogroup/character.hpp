#pragma once

#include "pogroup/algnum.hpp"
#include "pogroup/subgroup.hpp"

namespace pogroup {

// Homomorphism to (R, +), one exact value per generator. Well-defined iff it
// vanishes on the commutator relators, i.e. it factors through the
// abelianization.
struct Character {
  GroupRef dom;
  std::vector<AlgNum> values;
};

Character make_character(const GroupRef& dom, std::vector<AlgNum> values);

AlgNum char_apply(const Character& c, const Element& g);
bool char_validate(const Character& c);
bool char_is_zero(const Character& c);

// Integer kernel {x in Z^n : sum x_i v_i = 0} of the values, as a lattice.
IntMat char_kernel_lattice(const std::vector<AlgNum>& values);

// Kernel of the character as a subgroup (pc-like domains).
Subgroup char_kernel_subgroup(const Character& c);

// values injective on Z^r, i.e. trivial integer kernel
bool values_injective(const std::vector<AlgNum>& values);

// Scale so the first nonzero value becomes +-1, preserving the positive
// direction (the scalar is |v0|^-1 > 0).
Character char_canonicalize(const Character& c);
std::vector<AlgNum> values_canonicalize(const std::vector<AlgNum>& values);

// b == lambda * a for some lambda > 0?
bool values_positively_proportional(const std::vector<AlgNum>& a, const std::vector<AlgNum>& b);

std::string values_str(const std::vector<AlgNum>& values);

}  // namespace pogroup
