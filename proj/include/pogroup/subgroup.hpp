#pragma once

#include "pogroup/group.hpp"

namespace pogroup {

// Finitely generated subgroup, always by generator list (subgroups here are
// infinite; membership goes through the lattice data below).
struct Subgroup {
  GroupRef ambient;
  std::vector<Element> gens;
};

// Two-layer description of a subgroup H of a class <= 2 pc-like group:
//   w1       weight-1 image lattice L1 (HNF rows in Z^m)
//   lifts    one element of H per L1 basis row, with that weight-1 part
//   w2       H intersected with the central layer, as a lattice L2 in Z^p
// Every element of H is (a product of lifts) times an element of L2.
struct SubgroupLattice {
  IntMat w1;
  std::vector<Element> lifts;
  IntMat w2;
};

SubgroupLattice subgroup_lattice(const Subgroup& h);

Subgroup trivial_subgroup(const GroupRef& g);
Subgroup whole_group(const GroupRef& g);
Subgroup make_subgroup(const GroupRef& g, std::vector<Element> gens);

bool subgroup_contains(const Subgroup& h, const Element& g);
bool subgroup_equal(const Subgroup& a, const Subgroup& b);
bool subgroup_is_trivial(const Subgroup& h);
bool subgroup_is_normal(const Subgroup& h);

Subgroup center(const GroupRef& g);
std::vector<Subgroup> lower_central_series(const GroupRef& g);

// Canonical printable key for census dedup: HNF of both layers plus reduced lifts.
std::string subgroup_canonical_key(const Subgroup& h);

}  // namespace pogroup
