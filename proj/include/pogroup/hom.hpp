#pragma once

#include <optional>

#include "pogroup/subgroup.hpp"

namespace pogroup {

struct Homomorphism {
  GroupRef dom;
  GroupRef cod;
  std::vector<Element> images;  // one per dom generator
};

Homomorphism make_hom(const GroupRef& dom, const GroupRef& cod, std::vector<Element> images);
Homomorphism identity_hom(const GroupRef& g);
Homomorphism hom_compose(const Homomorphism& outer, const Homomorphism& inner);

Element hom_apply(const Homomorphism& f, const Element& g);
bool hom_validate(const Homomorphism& f);
void require_valid_hom(const Homomorphism& f);

// Finite generating set of ker f. Requires dom pc-like of class <= 2 and cod
// pc-like; the kernel of such a map is finitely generated since the domain is
// nilpotent.
Subgroup kernel_generators(const Homomorphism& f);

// Some preimage of target, if one exists. pc-like cod; dom pc-like or free of
// rank 1.
std::optional<Element> hom_preimage(const Homomorphism& f, const Element& target);

bool hom_is_surjective(const Homomorphism& f);  // pc-like cod
bool hom_is_injective(const Homomorphism& f);

struct QuotientResult {
  GroupRef group;
  Homomorphism proj;
};

// G/P for a normal subgroup P with torsion-free quotient. Errors: NotNormal,
// TorsionQuotient; Unsupported for quotients whose torsion is absorbed across
// pc layers (torsion-free but with non-saturated weight-1 image lattice).
QuotientResult quotient(const GroupRef& g, const Subgroup& p);

}  // namespace pogroup
