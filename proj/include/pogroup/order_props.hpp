#pragma once

#include <functional>
#include <tuple>

#include "pogroup/orders.hpp"

namespace pogroup {

// Maximal antichain normal subgroup of a structural order, with a membership
// test and the induced half-space K_succeq = { g : exists k in K, g >= k }.
// Represented either as the kernel of a character or as the kernel of a map
// onto a classification-ordered quotient; both stay evaluable on groups where
// the kernel has no finite generating set (free ambient groups).
struct MaxAntichainSubgroup {
  std::string desc;
  std::optional<Character> char_kernel;
  std::shared_ptr<const Homomorphism> psi;
  OrderRef quot_order;
  std::optional<Subgroup> gens;        // finite generators when the ambient is pc-like
  std::optional<Subgroup> explicit_k;  // a user-supplied antichain K (half-space of a smaller K)

  bool contains(const Element& g) const;
  bool halfspace_contains(const Element& g) const;
};

std::vector<MaxAntichainSubgroup> maximal_antichain_normal_subgroups(const OrderRef& o);

struct AntichainVerdict {
  bool antichain;
  bool exact;  // false when decided by sampling only
};
AntichainVerdict is_antichain(const OrderRef& o, const Subgroup& h, int sample_radius = 4);

// K_succeq membership for an antichain subgroup K (NotAntichain otherwise).
MaxAntichainSubgroup halfspace_predicate(const OrderRef& o, const Subgroup& k);

enum class Verdict3 { YesStructural, NoWithWitness, Undetermined };
const char* verdict3_name(Verdict3 v);

struct PropertyVerdict {
  Verdict3 verdict = Verdict3::Undetermined;
  std::vector<Element> witness;
  long long witness_n = 0;
  std::string note;
};

// No positive infinitesimals. Witness = (g, h) with g positive and g^i < h
// for all i (certified structurally, not by sampling).
PropertyVerdict is_archimedean(const OrderRef& o, int bound = 6);
// g^n < h^n implies g < h. Witness = (g, h) with witness_n the failing power.
PropertyVerdict is_primitive(const OrderRef& o, int bound = 4);
// primitive and factorizing. Factorizing witness = (p, k) with p positive,
// k in an antichain normal subgroup, p k not positive.
PropertyVerdict is_full(const OrderRef& o, int bound = 4);

std::optional<std::tuple<Element, Element, long long>> primitivity_counterexample(
    const GroupRef& g, const std::function<bool(const Element&)>& positive, int radius, int maxn);

// Character inducing a nontrivial character-type order, canonicalized so the
// first nonzero coefficient is +-1 with the positive direction preserved.
Character extract_character(const OrderRef& o);

std::optional<Element> sample_positive(const OrderRef& o);

// all exponent vectors with entries in [-radius, radius] (pc-like groups)
std::vector<Element> exponent_box(const GroupRef& g, int radius);
// all reduced words of length <= radius (free groups)
std::vector<Element> word_ball(const GroupRef& g, int radius);
std::vector<Element> sample_elements(const GroupRef& g, int radius);

}  // namespace pogroup
