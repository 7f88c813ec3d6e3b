#include "pogroup/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pogroup {

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind;
  std::string text;
  long long value = 0;
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError,
         "line " + std::to_string(tok_.line) + ", col " + std::to_string(tok_.col) + ": " + msg +
             (tok_.kind == Token::Kind::End ? " (at end of input)" : " (at '" + tok_.text + "')"));
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = Token{Token::Kind::End, "", 0, line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Kind::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      col_ += static_cast<int>(tok_.text.size());
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::Kind::Int;
      tok_.text = text_.substr(start, pos_ - start);
      tok_.value = std::stoll(tok_.text);
      col_ += static_cast<int>(tok_.text.size());
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok_ = Token{Token::Kind::Punct, "->", 0, line_, col_};
      pos_ += 2;
      col_ += 2;
      return;
    }
    tok_ = Token{Token::Kind::Punct, std::string(1, c), 0, line_, col_};
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  SpecFile parse() {
    SpecFile spec;
    while (lex_.peek().kind != Token::Kind::End) {
      std::string kw = expect_ident("declaration keyword");
      if (kw == "group")
        parse_group(spec);
      else if (kw == "hom")
        parse_hom(spec);
      else if (kw == "subgroup")
        parse_subgroup(spec);
      else if (kw == "order")
        parse_order(spec);
      else if (kw == "experiment")
        parse_experiment(spec);
      else
        lex_.error("unknown declaration '" + kw + "'");
      accept(";");
    }
    return spec;
  }

 private:
  Lexer lex_;

  bool accept(const std::string& punct) {
    if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == punct) {
      lex_.next();
      return true;
    }
    return false;
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) lex_.error("expected '" + punct + "'");
  }
  std::string expect_ident(const std::string& what) {
    if (lex_.peek().kind != Token::Kind::Ident) lex_.error("expected " + what);
    return lex_.next().text;
  }
  long long expect_int() {
    bool neg = accept("-");
    if (lex_.peek().kind != Token::Kind::Int) lex_.error("expected integer");
    long long v = lex_.next().value;
    return neg ? -v : v;
  }
  bool keyword(const std::string& kw) {
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == kw) {
      lex_.next();
      return true;
    }
    return false;
  }
  void expect_keyword(const std::string& kw) {
    if (!keyword(kw)) lex_.error("expected '" + kw + "'");
  }

  // word over named generators; "1" is the identity
  Element parse_word_in(const GroupRef& g) {
    if (lex_.peek().kind == Token::Kind::Int && lex_.peek().value == 1) {
      lex_.next();
      return identity(g);
    }
    std::vector<long long> letters;
    if (lex_.peek().kind != Token::Kind::Ident) lex_.error("expected a word");
    while (lex_.peek().kind == Token::Kind::Ident) {
      std::string name = lex_.next().text;
      int idx = g->gen_index(name);
      if (idx < 0) lex_.error("unknown generator '" + name + "' of group " + g->name);
      long long exp = 1;
      if (accept("^")) exp = expect_int();
      for (long long i = 0; i < std::abs(exp); ++i) letters.push_back(exp > 0 ? idx + 1 : -(idx + 1));
    }
    return elem_from_word(g, letters);
  }

  Rational parse_rational() {
    long long num = expect_int();
    long long den = 1;
    if (accept("/")) den = expect_int();
    return Rational(num, den);
  }

  AlgNum parse_algnum() {
    AlgNum acc;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept("+")) {
        sign = 1;
      } else if (accept("-")) {
        sign = -1;
      } else if (!first) {
        break;
      }
      AlgNum term;
      if (keyword("sqrt")) {
        expect("(");
        long long rad = expect_int();
        expect(")");
        term = AlgNum::sqrt_of(rad, Rational(sign));
      } else {
        Rational coeff = parse_rational() * Rational(sign);
        if (accept("*")) {
          expect_keyword("sqrt");
          expect("(");
          long long rad = expect_int();
          expect(")");
          term = AlgNum::sqrt_of(rad, coeff);
        } else {
          term = AlgNum(coeff);
        }
      }
      acc = acc + term;
      first = false;
    }
    return acc;
  }

  std::vector<AlgNum> parse_algnum_tuple() {
    expect("(");
    std::vector<AlgNum> values;
    if (!accept(")")) {
      values.push_back(parse_algnum());
      while (accept(",")) values.push_back(parse_algnum());
      expect(")");
    }
    return values;
  }

  void parse_group(SpecFile& spec) {
    std::string name = expect_ident("group name");
    if (spec.groups.count(name)) lex_.error("duplicate group '" + name + "'");
    expect("=");
    std::string kind = expect_ident("group kind");
    GroupRef g;
    if (kind == "free") {
      expect("(");
      long long rank = expect_int();
      expect(")");
      g = GroupSpec::free_group(static_cast<int>(rank), name);
    } else if (kind == "abelian") {
      expect("(");
      long long rank = expect_int();
      expect(")");
      g = GroupSpec::free_abelian(static_cast<int>(rank), name);
    } else if (kind == "nilpotent2") {
      expect("{");
      expect_keyword("gens");
      std::vector<std::string> gens;
      while (lex_.peek().kind == Token::Kind::Ident) gens.push_back(lex_.next().text);
      if (gens.empty()) lex_.error("nilpotent2 needs at least one generator");
      accept(";");
      // relations: comm x y = word-in-weight-2-generators
      struct Rel {
        std::string x, y;
        std::vector<std::pair<std::string, long long>> rhs;
      };
      std::vector<Rel> rels;
      while (keyword("comm")) {
        Rel r;
        r.x = expect_ident("generator");
        r.y = expect_ident("generator");
        expect("=");
        if (lex_.peek().kind == Token::Kind::Int && lex_.peek().value == 1) {
          lex_.next();
        } else {
          while (lex_.peek().kind == Token::Kind::Ident) {
            std::string gn = lex_.next().text;
            long long exp = 1;
            if (accept("^")) exp = expect_int();
            r.rhs.push_back({gn, exp});
          }
        }
        accept(";");
        rels.push_back(std::move(r));
      }
      expect("}");
      // weight inference: generators appearing on a right-hand side are
      // weight 2 (central); everything else is weight 1
      std::map<std::string, int> index;
      for (size_t i = 0; i < gens.size(); ++i) {
        if (index.count(gens[i])) lex_.error("duplicate generator '" + gens[i] + "'");
        index[gens[i]] = static_cast<int>(i);
      }
      std::vector<int> weights(gens.size(), 1);
      for (auto& r : rels)
        for (auto& [gn, exp] : r.rhs) {
          if (!index.count(gn)) lex_.error("unknown generator '" + gn + "' in relation");
          weights[index[gn]] = 2;
        }
      for (size_t i = 0; i + 1 < gens.size(); ++i)
        if (weights[i] > weights[i + 1])
          lex_.error("weight-2 generators must come after weight-1 generators");
      PcPresentation pc;
      pc.gen_names = gens;
      pc.weights = weights;
      pc.klass = 2;
      int m = pc.n_weight1(), p = pc.n_weight2();
      pc.comm.assign(m * (m - 1) / 2, IntVec(p, 0));
      for (auto& r : rels) {
        if (!index.count(r.x) || !index.count(r.y)) lex_.error("unknown generator in relation");
        int i = index[r.x], j = index[r.y];
        if (i >= m || j >= m) lex_.error("commutator of a central generator is trivial");
        if (i == j) lex_.error("comm of a generator with itself");
        IntVec v(p, 0);
        for (auto& [gn, exp] : r.rhs) {
          int t = index[gn] - m;
          if (t < 0) lex_.error("commutator values must be words in central generators");
          v[t] = checked_add(v[t], exp);
        }
        // comm x y with x later than y encodes the inverse relation
        if (i < j) {
          pc.comm[pc.pair_index(i, j)] = v;
        } else {
          for (auto& e : v) e = -e;
          pc.comm[pc.pair_index(j, i)] = v;
        }
      }
      try {
        g = GroupSpec::nilpotent_pc(pc, name);
      } catch (const Error& e) {
        lex_.error(std::string("invalid presentation: ") + e.what());
      }
    } else {
      lex_.error("unknown group kind '" + kind + "'");
    }
    spec.groups.emplace(name, g);
    spec.group_names.push_back(name);
  }

  GroupRef resolve_group(const SpecFile& spec, const std::string& name) {
    auto it = spec.groups.find(name);
    if (it == spec.groups.end())
      fail(ErrorCode::UnresolvedRef, "unknown group '" + name + "'");
    return it->second;
  }

  void parse_hom(SpecFile& spec) {
    std::string name = expect_ident("hom name");
    if (spec.homs.count(name)) lex_.error("duplicate hom '" + name + "'");
    expect(":");
    GroupRef dom = resolve_group(spec, expect_ident("domain group"));
    expect("->");
    GroupRef cod = resolve_group(spec, expect_ident("codomain group"));
    expect("{");
    std::map<int, Element> images;
    if (!accept("}")) {
      do {
        std::string gn = expect_ident("generator");
        int idx = dom->gen_index(gn);
        if (idx < 0) lex_.error("unknown generator '" + gn + "' of " + dom->name);
        expect("->");
        images.emplace(idx, parse_word_in(cod));
      } while (accept(","));
      expect("}");
    }
    std::vector<Element> imgvec;
    for (int i = 0; i < dom->n_gens(); ++i) {
      auto it = images.find(i);
      imgvec.push_back(it == images.end() ? identity(cod) : it->second);
    }
    Homomorphism h = make_hom(dom, cod, std::move(imgvec));
    if (!hom_validate(h))
      fail(ErrorCode::InvalidHom, "hom '" + name + "' does not preserve relations");
    spec.homs.emplace(name, std::move(h));
    spec.hom_names.push_back(name);
  }

  void parse_subgroup(SpecFile& spec) {
    std::string name = expect_ident("subgroup name");
    if (spec.subgroups.count(name)) lex_.error("duplicate subgroup '" + name + "'");
    expect_keyword("of");
    GroupRef g = resolve_group(spec, expect_ident("ambient group"));
    expect("=");
    expect("[");
    std::vector<Element> gens;
    if (!accept("]")) {
      gens.push_back(parse_word_in(g));
      while (accept(",")) gens.push_back(parse_word_in(g));
      expect("]");
    }
    spec.subgroups.emplace(name, make_subgroup(g, std::move(gens)));
    spec.subgroup_names.push_back(name);
  }

  void parse_order(SpecFile& spec) {
    std::string name = expect_ident("order name");
    if (spec.orders.count(name)) lex_.error("duplicate order '" + name + "'");
    expect_keyword("on");
    GroupRef g = resolve_group(spec, expect_ident("group"));
    expect("=");
    std::string kind = expect_ident("order kind");
    OrderDeclForm form;
    form.group = g->name;
    OrderRef o;
    auto lookup_order = [&](const std::string& n) -> OrderRef {
      auto it = spec.orders.find(n);
      if (it == spec.orders.end()) fail(ErrorCode::UnresolvedRef, "unknown order '" + n + "'");
      return it->second;
    };
    auto lookup_hom = [&](const std::string& n) -> const Homomorphism& {
      auto it = spec.homs.find(n);
      if (it == spec.homs.end()) fail(ErrorCode::UnresolvedRef, "unknown hom '" + n + "'");
      return it->second;
    };
    try {
      if (kind == "trivial") {
        form.kind = OrderKind::Trivial;
        o = order_trivial(g, name);
      } else if (kind == "char") {
        form.kind = OrderKind::Character;
        form.values = parse_algnum_tuple();
        o = order_character(make_character(g, form.values), name);
      } else if (kind == "pullback") {
        form.kind = OrderKind::Pullback;
        expect("(");
        form.hom = expect_ident("hom name");
        expect(",");
        form.inner = expect_ident("order name");
        expect(")");
        o = order_pullback(lookup_hom(form.hom), lookup_order(form.inner), name);
      } else if (kind == "pushforward") {
        form.kind = OrderKind::Pushforward;
        expect("(");
        form.hom = expect_ident("hom name");
        expect(",");
        form.inner = expect_ident("order name");
        expect(")");
        o = order_pushforward(lookup_hom(form.hom), lookup_order(form.inner), name);
      } else if (kind == "lex") {
        form.kind = OrderKind::Lexicographic;
        expect("(");
        form.iota = expect_ident("iota hom");
        expect(",");
        form.sub = expect_ident("sub order");
        expect(",");
        form.proj = expect_ident("projection hom");
        expect(",");
        form.quot = expect_ident("quotient order");
        expect(")");
        o = order_lexicographic(lookup_hom(form.iota), lookup_order(form.sub),
                                lookup_hom(form.proj), lookup_order(form.quot), name);
      } else if (kind == "classification") {
        form.kind = OrderKind::Classification;
        expect("(");
        form.psub = expect_ident("subgroup name");
        expect(",");
        form.iota_values = parse_algnum_tuple();
        expect(")");
        auto it = spec.subgroups.find(form.psub);
        if (it == spec.subgroups.end())
          fail(ErrorCode::UnresolvedRef, "unknown subgroup '" + form.psub + "'");
        o = order_classification(g, it->second, form.iota_values, name);
      } else {
        lex_.error("unknown order kind '" + kind + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      fail(e.code(), "in declaration of order '" + name + "': " + e.what());
    }
    if (!o->group->same_as(*g))
      fail(ErrorCode::Validation, "order '" + name + "' does not live on group " + g->name);
    spec.orders.emplace(name, o);
    spec.order_names.push_back(name);
    spec.order_decls.emplace(name, std::move(form));
  }

  void parse_experiment(SpecFile& spec) {
    ExperimentDecl e;
    e.name = expect_ident("experiment name");
    expect("=");
    std::string kind = expect_ident("experiment kind");
    if (kind == "census")
      e.kind = ExperimentDecl::Kind::Census;
    else if (kind == "sigma")
      e.kind = ExperimentDecl::Kind::Sigma;
    else if (kind == "theorem_a")
      e.kind = ExperimentDecl::Kind::TheoremA;
    else
      lex_.error("unknown experiment kind '" + kind + "'");
    expect("{");
    while (!accept("}")) {
      std::string field = expect_ident("field");
      expect("=");
      if (field == "group") {
        e.group = expect_ident("group name");
        resolve_group(spec, e.group);
      } else if (field == "order") {
        e.order = expect_ident("order name");
        if (!spec.orders.count(e.order))
          fail(ErrorCode::UnresolvedRef, "unknown order '" + e.order + "'");
      } else if (field == "hom") {
        e.hom = expect_ident("hom name");
        if (!spec.homs.count(e.hom))
          fail(ErrorCode::UnresolvedRef, "unknown hom '" + e.hom + "'");
      } else if (field == "radii" || field == "slacks") {
        expect("[");
        std::vector<int> vals;
        vals.push_back(static_cast<int>(expect_int()));
        while (accept(",")) vals.push_back(static_cast<int>(expect_int()));
        expect("]");
        (field == "radii" ? e.radii : e.slacks) = vals;
      } else if (field == "bound") {
        e.bound = static_cast<int>(expect_int());
      } else if (field == "budget") {
        e.budget = static_cast<int>(expect_int());
      } else {
        lex_.error("unknown experiment field '" + field + "'");
      }
      accept(";");
    }
    spec.experiments.push_back(std::move(e));
  }
};

std::string word_str(const Element& e) { return elem_str(e); }

}  // namespace

const GroupRef& SpecFile::group(const std::string& name) const {
  auto it = groups.find(name);
  if (it == groups.end()) fail(ErrorCode::UnresolvedRef, "unknown group '" + name + "'");
  return it->second;
}
const Homomorphism& SpecFile::hom(const std::string& name) const {
  auto it = homs.find(name);
  if (it == homs.end()) fail(ErrorCode::UnresolvedRef, "unknown hom '" + name + "'");
  return it->second;
}
const Subgroup& SpecFile::subgroup(const std::string& name) const {
  auto it = subgroups.find(name);
  if (it == subgroups.end()) fail(ErrorCode::UnresolvedRef, "unknown subgroup '" + name + "'");
  return it->second;
}
const OrderRef& SpecFile::order(const std::string& name) const {
  auto it = orders.find(name);
  if (it == orders.end()) fail(ErrorCode::UnresolvedRef, "unknown order '" + name + "'");
  return it->second;
}
const ExperimentDecl& SpecFile::experiment(const std::string& name) const {
  for (auto& e : experiments)
    if (e.name == name) return e;
  fail(ErrorCode::UnresolvedRef, "unknown experiment '" + name + "'");
}

SpecFile parse_spec(const std::string& text) { return Parser(text).parse(); }

Element parse_word(const GroupRef& g, const std::string& text) {
  Lexer lx(text);
  std::vector<long long> letters;
  if (lx.peek().kind == Token::Kind::Int && lx.peek().value == 1) {
    lx.next();
    if (lx.peek().kind != Token::Kind::End) lx.error("trailing input after identity");
    return identity(g);
  }
  while (lx.peek().kind == Token::Kind::Ident) {
    std::string name = lx.next().text;
    int idx = g->gen_index(name);
    if (idx < 0) lx.error("unknown generator '" + name + "' of group " + g->name);
    long long exp = 1;
    if (lx.peek().kind == Token::Kind::Punct && lx.peek().text == "^") {
      lx.next();
      bool neg = lx.peek().kind == Token::Kind::Punct && lx.peek().text == "-";
      if (neg) lx.next();
      if (lx.peek().kind != Token::Kind::Int) lx.error("expected integer exponent");
      exp = lx.next().value * (neg ? -1 : 1);
    }
    for (long long i = 0; i < std::abs(exp); ++i) letters.push_back(exp > 0 ? idx + 1 : -(idx + 1));
  }
  if (lx.peek().kind != Token::Kind::End) lx.error("trailing input after word");
  return elem_from_word(g, letters);
}

std::vector<AlgNum> parse_algnum_list(const std::string& text) {
  std::string wrapped = "(" + text + ")";
  Lexer lx(wrapped);
  struct Mini {
    Lexer& lx;
    bool accept(const std::string& p) {
      if (lx.peek().kind == Token::Kind::Punct && lx.peek().text == p) {
        lx.next();
        return true;
      }
      return false;
    }
    void expect(const std::string& p) {
      if (!accept(p)) lx.error("expected '" + p + "'");
    }
    long long expect_int() {
      bool neg = accept("-");
      if (lx.peek().kind != Token::Kind::Int) lx.error("expected integer");
      long long v = lx.next().value;
      return neg ? -v : v;
    }
    bool keyword(const std::string& kw) {
      if (lx.peek().kind == Token::Kind::Ident && lx.peek().text == kw) {
        lx.next();
        return true;
      }
      return false;
    }
    AlgNum parse_algnum() {
      AlgNum acc;
      bool first = true;
      while (true) {
        int sign = 1;
        if (accept("+")) {
          sign = 1;
        } else if (accept("-")) {
          sign = -1;
        } else if (!first) {
          break;
        }
        AlgNum term;
        if (keyword("sqrt")) {
          expect("(");
          long long rad = expect_int();
          expect(")");
          term = AlgNum::sqrt_of(rad, Rational(sign));
        } else {
          long long num = expect_int();
          long long den = 1;
          if (accept("/")) den = expect_int();
          Rational coeff = Rational(num, den) * Rational(sign);
          if (accept("*")) {
            if (!keyword("sqrt")) lx.error("expected 'sqrt'");
            expect("(");
            long long rad = expect_int();
            expect(")");
            term = AlgNum::sqrt_of(rad, coeff);
          } else {
            term = AlgNum(coeff);
          }
        }
        acc = acc + term;
        first = false;
      }
      return acc;
    }
  } mini{lx};
  mini.expect("(");
  std::vector<AlgNum> values;
  if (!mini.accept(")")) {
    values.push_back(mini.parse_algnum());
    while (mini.accept(",")) values.push_back(mini.parse_algnum());
    mini.expect(")");
  }
  if (lx.peek().kind != Token::Kind::End) lx.error("trailing input after tuple");
  return values;
}

namespace {

std::string group_decl_str(const GroupRef& g) {
  std::ostringstream os;
  os << "group " << g->name << " = ";
  switch (g->kind) {
    case GroupKind::Free: os << "free(" << g->rank << ");"; break;
    case GroupKind::FreeAbelian: os << "abelian(" << g->rank << ");"; break;
    case GroupKind::NilpotentPc: {
      os << "nilpotent2 { gens";
      for (auto& n : g->pc.gen_names) os << " " << n;
      os << ";";
      int m = g->pc.n_weight1(), p = g->pc.n_weight2();
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          const IntVec& cv = g->pc.comm_vec(i, j);
          if (vec_is_zero(cv)) continue;
          os << " comm " << g->pc.gen_names[i] << " " << g->pc.gen_names[j] << " =";
          bool any = false;
          for (int t = 0; t < p; ++t) {
            if (cv[t] == 0) continue;
            os << " " << g->pc.gen_names[m + t];
            if (cv[t] != 1) os << "^" << cv[t];
            any = true;
          }
          if (!any) os << " 1";
          os << ";";
        }
      os << " };";
      break;
    }
  }
  return os.str();
}

std::string algnum_tuple_str(const std::vector<AlgNum>& values) {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + ")";
}

}  // namespace

std::string serialize_spec(const SpecFile& spec) {
  std::ostringstream os;
  for (auto& name : spec.group_names) os << group_decl_str(spec.groups.at(name)) << "\n";
  for (auto& name : spec.hom_names) {
    const Homomorphism& h = spec.homs.at(name);
    os << "hom " << name << " : " << h.dom->name << " -> " << h.cod->name << " { ";
    for (int i = 0; i < h.dom->n_gens(); ++i) {
      if (i) os << ", ";
      os << h.dom->gen_name(i) << " -> " << word_str(h.images[i]);
    }
    os << " };\n";
  }
  for (auto& name : spec.subgroup_names) {
    const Subgroup& s = spec.subgroups.at(name);
    os << "subgroup " << name << " of " << s.ambient->name << " = [";
    for (size_t i = 0; i < s.gens.size(); ++i) {
      if (i) os << ", ";
      os << word_str(s.gens[i]);
    }
    os << "];\n";
  }
  for (auto& name : spec.order_names) {
    const OrderDeclForm& f = spec.order_decls.at(name);
    os << "order " << name << " on " << f.group << " = ";
    switch (f.kind) {
      case OrderKind::Trivial: os << "trivial"; break;
      case OrderKind::Character: os << "char" << algnum_tuple_str(f.values); break;
      case OrderKind::Pullback: os << "pullback(" << f.hom << ", " << f.inner << ")"; break;
      case OrderKind::Pushforward: os << "pushforward(" << f.hom << ", " << f.inner << ")"; break;
      case OrderKind::Lexicographic:
        os << "lex(" << f.iota << ", " << f.sub << ", " << f.proj << ", " << f.quot << ")";
        break;
      case OrderKind::Classification:
        os << "classification(" << f.psub << ", " << algnum_tuple_str(f.iota_values) << ")";
        break;
    }
    os << ";\n";
  }
  for (auto& e : spec.experiments) {
    os << "experiment " << e.name << " = "
       << (e.kind == ExperimentDecl::Kind::Census   ? "census"
           : e.kind == ExperimentDecl::Kind::Sigma  ? "sigma"
                                                    : "theorem_a")
       << " {";
    if (!e.group.empty()) os << " group = " << e.group << ";";
    if (!e.order.empty()) os << " order = " << e.order << ";";
    if (!e.hom.empty()) os << " hom = " << e.hom << ";";
    os << " radii = [";
    for (size_t i = 0; i < e.radii.size(); ++i) os << (i ? ", " : "") << e.radii[i];
    os << "]; slacks = [";
    for (size_t i = 0; i < e.slacks.size(); ++i) os << (i ? ", " : "") << e.slacks[i];
    os << "]; bound = " << e.bound << "; budget = " << e.budget << "; };\n";
  }
  return os.str();
}

}  // namespace pogroup
