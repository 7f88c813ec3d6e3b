#pragma once

#include "pogroup/orders.hpp"

namespace pogroup {

struct CensusBounds {
  int max_gens = 2;
  int max_exp = 2;
};

// All normal subgroups P generated by at most max_gens elements with
// exponents in [-max_exp, max_exp], deduplicated by the canonical lattice
// form, filtered to torsion-free quotients. Includes the trivial subgroup and
// (bounds permitting) the whole group.
std::vector<Subgroup> enumerate_normal_torsionfree_quotients(const GroupRef& q,
                                                             const CensusBounds& b);

struct CensusEntry {
  Subgroup p;
  std::string p_key;
  int center_rank = 0;
  std::string iota_family;
  std::vector<AlgNum> sample_iota;
  OrderRef order;
  bool from_abelianization = false;
  bool total = false;
};

struct OrderCensus {
  GroupRef group;
  CensusBounds bounds;
  std::vector<CensusEntry> entries;  // nontrivial full archimedean orders only
  std::string completeness_note;
};

// Census of full archimedean orders via classification data (P, iota).
// Rank-1 centers contribute their two orientations as separate entries; a
// center of rank r >= 2 contributes one entry carrying the (r-1)-parameter
// family descriptor and one exact sample.
OrderCensus census(const GroupRef& q, const CensusBounds& b);

}  // namespace pogroup
