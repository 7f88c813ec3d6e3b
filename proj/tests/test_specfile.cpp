#include "doctest.h"
#include "pogroup/figure.hpp"
#include "pogroup/report.hpp"
#include "pogroup/specfile.hpp"

using namespace pogroup;

namespace {

const char* kDemo = R"(
# demo spec
group Z = abelian(1);
group Z2 = abelian(2);
group H = nilpotent2 { gens a b c; comm a b = c };
hom phi : Z2 -> Z { a -> a, b -> 1 };
subgroup P0 of H = [];
subgroup L of Z2 = [b];
order std on Z = char(1);
order irr on Z2 = char(3/2 + 1/1*sqrt(2), 1);
order cen on H = classification(P0, (1));
order pull on Z2 = pullback(phi, std);
experiment e1 = census { group = Z; bound = 2; };
)";

}  // namespace

TEST_CASE("parse a representative spec") {
  SpecFile spec = parse_spec(kDemo);
  CHECK(spec.group_names.size() == 3);
  CHECK(spec.order_names.size() == 4);
  // the Heisenberg declaration produced the expected presentation
  const GroupRef& h = spec.group("H");
  REQUIRE(h->kind == GroupKind::NilpotentPc);
  CHECK(h->pc.weights == std::vector<int>{1, 1, 2});
  CHECK(h->pc.comm == std::vector<IntVec>{{1}});
  Element ba = multiply(generator(h, 1), generator(h, 0));
  CHECK(ba.data == IntVec{1, 1, -1});
  // radical literal parsed exactly
  const OrderDeclForm& irr = spec.order_decls.at("irr");
  CHECK(irr.values[0] == AlgNum(Rational(3, 2)) + AlgNum::sqrt_of(2));
  CHECK(irr.values[1] == AlgNum(1));
  // order evaluates
  CHECK(is_positive(spec.order("cen"), elem_from_exponents(h, {0, 0, 2})));
}

TEST_CASE("empty spec parses to an empty file") {
  SpecFile spec = parse_spec("");
  CHECK(spec.group_names.empty());
  CHECK(spec.orders.empty());
  CHECK(spec.experiments.empty());
}

TEST_CASE("round trip: serialize then parse is canonical") {
  SpecFile spec = parse_spec(kDemo);
  std::string canon = serialize_spec(spec);
  SpecFile spec2 = parse_spec(canon);
  CHECK(serialize_spec(spec2) == canon);
}

TEST_CASE("errors carry locations and missing names") {
  // syntax error with position
  try {
    parse_spec("group = abelian(1);");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  // dangling order reference names the missing group
  try {
    parse_spec("order o on Nope = trivial;");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnresolvedRef);
    CHECK(std::string(e.what()).find("Nope") != std::string::npos);
  }
  // validation failure surfaced with the originating declaration
  try {
    parse_spec(
        "group Z2 = abelian(2);\n"
        "subgroup S of Z2 = [a^2];\n"
        "order bad on Z2 = classification(S, (1));\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TorsionQuotient);
    CHECK(std::string(e.what()).find("bad") != std::string::npos);
  }
}

TEST_CASE("word parsing") {
  SpecFile spec = parse_spec("group H = nilpotent2 { gens a b c; comm a b = c };");
  const GroupRef& h = spec.group("H");
  CHECK(parse_word(h, "a b^-1 c^2").data == IntVec{1, -1, 2});
  CHECK(is_identity(parse_word(h, "1")));
  CHECK(parse_word(h, "b a").data == IntVec{1, 1, -1});
  CHECK_THROWS_AS(parse_word(h, "x"), Error);
}

TEST_CASE("figures") {
  SpecFile spec = parse_spec(
      "group Z2 = abelian(2);\n"
      "order xonly on Z2 = char(1, 0);\n");
  const OrderRef& o = spec.order("xonly");
  CayleyBall ball = cayley_ball(o->group, default_gens(o->group), 3);
  std::string dot = figure_dot(o, ball);
  CHECK(dot.find("graph cayley_ball") != std::string::npos);
  CHECK(dot.find("red") != std::string::npos);
  CHECK(dot.find("blue") != std::string::npos);
  CHECK(dot.find("gray") != std::string::npos);
  std::string svg = figure_svg_grid(o, ball);
  CHECK(svg.find("<svg") != std::string::npos);
  // deterministic output
  CHECK(figure_dot(o, ball) == dot);
  CHECK(figure_svg_grid(o, ball) == svg);
}

TEST_CASE("reports are exact and deterministic") {
  SpecFile spec = parse_spec(kDemo);
  OrderCensus cns = census(spec.group("Z"), {2, 2});
  Json j1 = census_json(cns);
  Json j2 = census_json(census(spec.group("Z"), {2, 2}));
  CHECK(j1.dump() == j2.dump());
  // exact string values, no floats anywhere in the census report
  std::string dumped = j1.dump();
  CHECK(dumped.find("1/1") != std::string::npos);
  CHECK(input_hash("x") != input_hash("y"));
  CHECK(input_hash("same") == input_hash("same"));
}
