#pragma once

#include <map>

#include "pogroup/orders.hpp"

namespace pogroup {

// Parsed declaration forms are kept verbatim (names and literals) so that
// serialization reproduces a canonical, stable spec text.
struct OrderDeclForm {
  OrderKind kind;
  std::string group;
  std::vector<AlgNum> values;           // char
  std::string hom, inner;               // pullback / pushforward
  std::string iota, sub, proj, quot;    // lex
  std::string psub;                     // classification
  std::vector<AlgNum> iota_values;      // classification
};

struct ExperimentDecl {
  enum class Kind { Census, Sigma, TheoremA };
  std::string name;
  Kind kind;
  std::string group, order, hom;
  std::vector<int> radii{4, 6, 8};
  std::vector<int> slacks{1, 2, 3};
  int bound = 2;
  int budget = 20;
};

struct SpecFile {
  std::vector<std::string> group_names;
  std::map<std::string, GroupRef> groups;
  std::vector<std::string> hom_names;
  std::map<std::string, Homomorphism> homs;
  std::vector<std::string> subgroup_names;
  std::map<std::string, Subgroup> subgroups;
  std::vector<std::string> order_names;
  std::map<std::string, OrderRef> orders;
  std::map<std::string, OrderDeclForm> order_decls;
  std::vector<ExperimentDecl> experiments;

  const GroupRef& group(const std::string& name) const;
  const Homomorphism& hom(const std::string& name) const;
  const Subgroup& subgroup(const std::string& name) const;
  const OrderRef& order(const std::string& name) const;
  const ExperimentDecl& experiment(const std::string& name) const;
};

// Parser with line/column diagnostics (ParseError), reference resolution
// (UnresolvedRef) and construction-time validation surfaced with the
// originating declaration. Grammar: docs/spec-format.md.
SpecFile parse_spec(const std::string& text);

// Canonical printing; parse(serialize(parse(x))) == serialize(parse(x)).
std::string serialize_spec(const SpecFile& spec);

// Element literal ("a b^-1", "1") over a group's generator names.
Element parse_word(const GroupRef& g, const std::string& text);
std::vector<AlgNum> parse_algnum_list(const std::string& text);

}  // namespace pogroup
