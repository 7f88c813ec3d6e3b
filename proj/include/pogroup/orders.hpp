#pragma once

#include "pogroup/character.hpp"
#include "pogroup/hom.hpp"

namespace pogroup {

enum class Comparison { LessThan, GreaterThan, Equal, Incomparable };
const char* comparison_name(Comparison c);

// Z-basis of the center of a pc-like group: pure weight-1 elements over the
// kernel of the commutator form, then the weight-2 unit vectors. Center
// coordinates solve the weight-1 part linearly and read the central residue
// off the group element, which makes the coordinate map a homomorphism even
// though exponent vectors of central elements are not additive.
struct CenterBasis {
  IntMat w1_rows;
  std::vector<Element> lifts;
  int n_w2 = 0;
  int rank() const { return w1_rows.nrows() + n_w2; }
};

CenterBasis center_basis(const GroupRef& g);
bool is_central(const Element& e);
std::optional<IntVec> center_coords(const CenterBasis& zb, const Element& e);

struct ClassificationData {
  Subgroup p;
  GroupRef quotient;
  Homomorphism proj;
  CenterBasis zbasis;
  std::vector<AlgNum> iota;  // injective on the center, one value per basis element
};

enum class OrderKind { Trivial, Character, Pullback, Pushforward, Lexicographic, Classification };
const char* order_kind_name(OrderKind k);

enum class PushforwardMode { EmptyCone, FreeCyclic, CentralImage, RankOneNoncentral };

struct OrderSpec {
  OrderKind kind;
  GroupRef group;
  std::string label;

  std::optional<Character> chr;

  std::shared_ptr<const Homomorphism> pb_hom;
  std::shared_ptr<const OrderSpec> pb_inner;

  std::shared_ptr<const Homomorphism> pf_iota;
  std::shared_ptr<const OrderSpec> pf_inner;
  PushforwardMode pf_mode = PushforwardMode::EmptyCone;
  std::optional<Character> pf_reduced;  // character equivalent of the inner order

  std::shared_ptr<const Homomorphism> lex_iota;
  std::shared_ptr<const OrderSpec> lex_sub;
  std::shared_ptr<const Homomorphism> lex_proj;
  std::shared_ptr<const OrderSpec> lex_quot;
  std::shared_ptr<const OrderSpec> lex_push;  // validated pushforward of the sub order
  std::shared_ptr<const OrderSpec> lex_pull;  // pullback of the quotient order

  std::shared_ptr<const ClassificationData> cls;
};

using OrderRef = std::shared_ptr<const OrderSpec>;

OrderRef order_trivial(const GroupRef& g, const std::string& label = "trivial");
OrderRef order_character(Character chi, const std::string& label = "");
// Pullback along f of an order on the codomain; pullback of a pullback is
// flattened to the composed map.
OrderRef order_pullback(const Homomorphism& f, const OrderRef& inner, const std::string& label = "");
// Order induced on the codomain of iota; validates that the conjugation
// closure of the image cone is disjoint from its inverses (NotInducible
// otherwise). Decision procedures cover: images central (any pc-like
// ambient), rank-1 domains with non-central image, and rank-1 domains into
// free groups.
OrderRef order_pushforward(const Homomorphism& iota, const OrderRef& inner,
                           const std::string& label = "");
OrderRef order_lexicographic(const Homomorphism& iota, const OrderRef& sub,
                             const Homomorphism& proj, const OrderRef& quot,
                             const std::string& label = "");
OrderRef order_classification(const GroupRef& q, const Subgroup& p, std::vector<AlgNum> iota,
                              const std::string& label = "");

bool is_positive(const OrderSpec& o, const Element& g);
inline bool is_positive(const OrderRef& o, const Element& g) { return is_positive(*o, g); }
bool is_negative(const OrderSpec& o, const Element& g);
inline bool is_negative(const OrderRef& o, const Element& g) { return is_negative(*o, g); }

Comparison order_compare(const OrderSpec& o, const Element& a, const Element& b);
inline Comparison order_compare(const OrderRef& o, const Element& a, const Element& b) {
  return order_compare(*o, a, b);
}

// Character chi with "positive iff chi > 0", when the order is of character
// type: Trivial, CharacterOrder, Classification with abelian quotient, and
// pullbacks of those.
std::optional<Character> order_as_character(const OrderSpec& o);

std::string order_describe(const OrderSpec& o);

}  // namespace pogroup
