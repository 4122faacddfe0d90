#include "cocycle/infiltration.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cocycle {

// ---------------------------------------------------------------------------
// Expr

Expr Expr::gen(const GenDecl& g, Role role, int occurrence) {
  Expr e;
  e.kind_ = Kind::gen;
  e.role_ = role;
  e.name_ = g.name;
  e.occurrence_ = occurrence;
  e.p_ = g.p;
  e.q_ = g.q;
  return e;
}

Expr Expr::marked() { return gen(GenDecl{"f", 1, 1}, Role::marked); }

Expr Expr::id(int k) {
  Expr e;
  e.kind_ = Kind::id;
  e.p_ = e.q_ = k;
  return e;
}

Expr Expr::swap() {
  Expr e;
  e.kind_ = Kind::swap;
  e.p_ = e.q_ = 2;
  return e;
}

Expr Expr::tensor(std::vector<Expr> factors) {
  if (factors.size() == 1) return std::move(factors.front());
  Expr e;
  e.kind_ = Kind::tensor;
  e.p_ = e.q_ = 0;
  for (const auto& f : factors) {
    e.p_ += f.p_;
    e.q_ += f.q_;
  }
  e.children_ = std::move(factors);
  return e;
}

Expr Expr::compose(std::vector<Expr> factors) {
  if (factors.empty()) throw ShapeError("empty composite");
  if (factors.size() == 1) return std::move(factors.front());
  for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
    const Expr& upper = factors[k];
    const Expr& lower = factors[k + 1];
    if (lower.q_ != upper.p_) {
      throw ShapeError("cannot compose '" + upper.to_string() + "' (" + upper.signature() + ") after '" +
                       lower.to_string() + "' (" + lower.signature() + ")");
    }
  }
  Expr e;
  e.kind_ = Kind::compose;
  e.p_ = factors.back().p_;
  e.q_ = factors.front().q_;
  e.children_ = std::move(factors);
  return e;
}

Expr Expr::canonical() const {
  if (kind_ != Kind::tensor && kind_ != Kind::compose) return *this;
  std::vector<Expr> flat;
  for (const auto& c : children_) {
    Expr cc = c.canonical();
    if (cc.kind_ == kind_) {
      flat.insert(flat.end(), cc.children_.begin(), cc.children_.end());
    } else {
      flat.push_back(std::move(cc));
    }
  }
  std::vector<Expr> out;
  if (kind_ == Kind::tensor) {
    for (auto& c : flat) {
      if (c.kind_ == Kind::id) {
        if (c.p_ == 0) continue;
        if (!out.empty() && out.back().kind_ == Kind::id) {
          out.back() = id(out.back().p_ + c.p_);
          continue;
        }
      }
      out.push_back(std::move(c));
    }
    if (out.empty()) return id(0);
    return tensor(std::move(out));
  }
  for (auto& c : flat) {
    if (c.kind_ != Kind::id) out.push_back(std::move(c));
  }
  if (out.empty()) return id(p_);
  return compose(std::move(out));
}

std::string Expr::to_string() const { return to_string(Context::top); }

std::string Expr::to_string(Context ctx) const {
  switch (kind_) {
    case Kind::gen:
      switch (role_) {
        case Role::generator: return occurrence_ > 0 ? name_ + "_" + std::to_string(occurrence_) : name_;
        case Role::cochain: return "phi_" + name_;
        case Role::marked: return "f";
      }
      break;
    case Kind::swap: return "X";
    case Kind::id: {
      if (p_ == 0) return "1";
      std::string s = "id";
      for (int k = 1; k < p_; ++k) s += " x id";
      return p_ > 1 && ctx == Context::compose_factor ? "(" + s + ")" : s;
    }
    case Kind::tensor: {
      std::string s;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (k > 0) s += " x ";
        s += children_[k].to_string(Context::tensor_factor);
      }
      return ctx == Context::compose_factor ? "(" + s + ")" : s;
    }
    case Kind::compose: {
      std::string s;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (k > 0) s += "*";
        s += children_[k].to_string(Context::compose_factor);
      }
      return ctx == Context::tensor_factor ? "(" + s + ")" : s;
    }
  }
  return "?";
}

int Expr::count(Role role) const {
  if (kind_ == Kind::gen) return role_ == role ? 1 : 0;
  int n = 0;
  for (const auto& c : children_) n += c.count(role);
  return n;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { ident, number, symbol, end } kind = end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++k;
    }
  };
  while (k < s.size()) {
    char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (k < s.size() && s[k] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = k;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Token::ident;
      t.text = std::string(s.substr(k, j - k));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = k;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Token::number;
      t.text = std::string(s.substr(k, j - k));
    } else if (c == '-' && k + 1 < s.size() && s[k + 1] == '>') {
      t.kind = Token::symbol;
      t.text = "->";
    } else if (std::string_view(":;=*()+-").find(c) != std::string_view::npos) {
      t.kind = Token::symbol;
      t.text = std::string(1, c);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    std::size_t len = t.text.size();
    out.push_back(std::move(t));
    advance(len);
  }
  Token e;
  e.line = line;
  e.column = col;
  out.push_back(e);
  return out;
}

bool is_reserved(const std::string& name) {
  static const char* words[] = {"x", "id", "X", "gen", "identity", "lhs", "rhs"};
  return std::find(std::begin(words), std::end(words), name) != std::end(words);
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<GenDecl> gens, bool allow_symbols)
      : toks_(tokenize(text)), gens_(std::move(gens)), allow_symbols_(allow_symbols) {}

  IdentitySet parse_file() {
    IdentitySet set;
    int unnamed = 0;
    while (peek().kind != Token::end) {
      const Token& t = peek();
      if (is_word("gen")) {
        next();
        const Token& name = expect_ident("generator name");
        if (is_reserved(name.text)) fail("'" + name.text + "' is reserved and cannot name a generator", name);
        for (const auto& g : gens_) {
          if (g.name == name.text) fail("generator '" + name.text + "' declared twice", name);
        }
        expect(":");
        int p = expect_int();
        expect("->");
        int q = expect_int();
        expect(";");
        gens_.push_back(GenDecl{name.text, p, q});
      } else if (is_word("identity")) {
        next();
        const Token& label = next();
        if (label.kind != Token::ident && label.kind != Token::number) fail("expected an identity label", label);
        expect(":");
        Expr lhs = parse_expr();
        expect("=");
        Expr rhs = parse_expr();
        expect(";");
        add_identity(set, label.text, std::move(lhs), std::move(rhs), label);
      } else if (is_word("lhs")) {
        next();
        Expr lhs = parse_expr();
        expect(";");
        if (!is_word("rhs")) fail("expected 'rhs' after an 'lhs' statement", peek());
        next();
        Expr rhs = parse_expr();
        expect(";");
        add_identity(set, std::to_string(++unnamed), std::move(lhs), std::move(rhs), t);
      } else {
        fail("expected 'gen', 'identity' or 'lhs'", t);
      }
    }
    set.generators = gens_;
    return set;
  }

  FormalSum parse_sum() {
    std::vector<std::pair<long long, Expr>> terms;
    long long sign = 1;
    if (is_symbol("-") || is_symbol("+")) sign = next().text == "-" ? -1 : 1;
    terms.emplace_back(parse_signed_term(sign));
    while (is_symbol("+") || is_symbol("-")) {
      sign = next().text == "-" ? -1 : 1;
      terms.emplace_back(parse_signed_term(sign));
    }
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'", peek());
    FormalSum out(terms.front().second.domain_arity(), terms.front().second.codomain_arity());
    for (auto& [c, e] : terms) {
      if (e.domain_arity() != out.domain_arity() || e.codomain_arity() != out.codomain_arity()) {
        throw ShapeError("term '" + e.to_string() + "' has arity " + e.signature() + " but the sum has arity " +
                         terms.front().second.signature());
      }
      out.add(c, std::move(e));
    }
    return out;
  }

 private:
  std::pair<long long, Expr> parse_signed_term(long long sign) {
    long long coeff = sign;
    if (peek().kind == Token::number) {
      coeff *= std::stoll(next().text);
      expect("*");
    }
    return {coeff, parse_expr()};
  }

  void add_identity(IdentitySet& set, std::string label, Expr lhs, Expr rhs, const Token& at) {
    if (lhs.domain_arity() != rhs.domain_arity() || lhs.codomain_arity() != rhs.codomain_arity()) {
      fail("sides of identity '" + label + "' have different signatures: '" + lhs.to_string() + "' is " +
               lhs.signature() + ", '" + rhs.to_string() + "' is " + rhs.signature(),
           at);
    }
    for (const auto& s : set.identities) {
      if (s.label == label) fail("identity '" + label + "' defined twice", at);
    }
    set.identities.push_back(SingleTermIdentity{std::move(label), std::move(lhs), std::move(rhs)});
  }

  Expr parse_expr() {
    const Token& start = peek();
    std::vector<Expr> factors{parse_term()};
    while (is_symbol("*")) {
      next();
      factors.push_back(parse_term());
    }
    try {
      return Expr::compose(std::move(factors));
    } catch (const ShapeError& e) {
      fail(std::string("arity mismatch: ") + e.what(), start);
    }
  }

  Expr parse_term() {
    std::vector<Expr> factors{parse_atom()};
    while (is_word("x")) {
      next();
      factors.push_back(parse_atom());
    }
    return Expr::tensor(std::move(factors));
  }

  Expr parse_atom() {
    const Token& t = next();
    if (t.kind == Token::symbol && t.text == "(") {
      Expr e = parse_expr();
      expect(")");
      return e;
    }
    if (t.kind != Token::ident) fail("expected 'id', 'X', a generator or '('", t);
    if (t.text == "id") return Expr::id(1);
    if (t.text == "X") return Expr::swap();
    for (const auto& g : gens_) {
      if (g.name == t.text) return Expr::gen(g);
    }
    if (allow_symbols_) {
      if (t.text.rfind("phi_", 0) == 0) {
        std::string base = t.text.substr(4);
        for (const auto& g : gens_) {
          if (g.name == base) return Expr::gen(g, Expr::Role::cochain);
        }
      }
      if (t.text == "f") return Expr::marked();
    }
    fail("unknown generator '" + t.text + "'", t);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Token::end) ++pos_;
    return t;
  }
  bool is_word(const char* w) const { return peek().kind == Token::ident && peek().text == w; }
  bool is_symbol(const char* s) const { return peek().kind == Token::symbol && peek().text == s; }

  void expect(const char* s) {
    if (!is_symbol(s)) {
      const Token& t = peek();
      fail(std::string("expected '") + s + "' but found " + (t.kind == Token::end ? "end of input" : "'" + t.text + "'"),
           t);
    }
    next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::ident) fail(std::string("expected ") + what, peek());
    return next();
  }
  int expect_int() {
    if (peek().kind != Token::number) fail("expected an arity", peek());
    const Token& t = next();
    if (t.text.size() > 3) fail("arity too large", t);
    return std::stoi(t.text);
  }

  [[noreturn]] void fail(const std::string& what, const Token& at) const { throw ParseError(what, at.line, at.column); }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<GenDecl> gens_;
  bool allow_symbols_;
};

}  // namespace

const GenDecl& IdentitySet::generator(std::string_view name) const {
  for (const auto& g : generators) {
    if (g.name == name) return g;
  }
  throw Error("no generator named '" + std::string(name) + "'");
}

const SingleTermIdentity& IdentitySet::identity(std::string_view label) const {
  for (const auto& s : identities) {
    if (s.label == label) return s;
  }
  throw Error("no identity labelled '" + std::string(label) + "'");
}

IdentitySet parse_identities(std::string_view text) { return Parser(text, {}, false).parse_file(); }

IdentitySet load_identities(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open identity file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_identities(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

FormalSum parse_formal_sum(std::string_view text, const std::vector<GenDecl>& generators) {
  return Parser(text, generators, true).parse_sum();
}

// ---------------------------------------------------------------------------
// Elaborate plans and infiltration

namespace {

Expr number(const Expr& e, std::map<std::string, int>& counts) {
  if (e.kind() == Expr::Kind::gen) {
    if (e.role() != Expr::Role::generator) return e;
    return Expr::gen(GenDecl{e.name(), e.domain_arity(), e.codomain_arity()}, Expr::Role::generator,
                     ++counts[e.name()]);
  }
  if (e.children().empty()) return e;
  std::vector<Expr> kids;
  for (const auto& c : e.children()) kids.push_back(number(c, counts));
  return e.kind() == Expr::Kind::tensor ? Expr::tensor(std::move(kids)) : Expr::compose(std::move(kids));
}

// Replaces occurrence (name, j) by the cochain and strips every other label.
Expr substitute(const Expr& e, const std::string& name, int j) {
  if (e.kind() == Expr::Kind::gen) {
    if (e.role() != Expr::Role::generator) return e;
    GenDecl g{e.name(), e.domain_arity(), e.codomain_arity()};
    bool hit = e.name() == name && e.occurrence() == j;
    return Expr::gen(g, hit ? Expr::Role::cochain : Expr::Role::generator);
  }
  if (e.children().empty()) return e;
  std::vector<Expr> kids;
  for (const auto& c : e.children()) kids.push_back(substitute(c, name, j));
  return e.kind() == Expr::Kind::tensor ? Expr::tensor(std::move(kids)) : Expr::compose(std::move(kids));
}

FormalSum infiltrate_side(const Expr& side, const std::map<std::string, int>& counts,
                          const std::vector<GenDecl>& generators) {
  FormalSum out(side.domain_arity(), side.codomain_arity());
  for (const auto& g : generators) {
    auto it = counts.find(g.name);
    if (it == counts.end()) continue;
    for (int j = 1; j <= it->second; ++j) out.add(1, substitute(side, g.name, j));
  }
  return out;
}

}  // namespace

ElaboratePlan elaborate(const SingleTermIdentity& identity) {
  ElaboratePlan plan;
  plan.identity = identity;
  plan.lhs = number(identity.lhs, plan.lhs_counts);
  plan.rhs = number(identity.rhs, plan.rhs_counts);
  return plan;
}

Infiltration infiltrate(const ElaboratePlan& plan, const std::vector<GenDecl>& generators) {
  return Infiltration{infiltrate_side(plan.lhs, plan.lhs_counts, generators),
                      infiltrate_side(plan.rhs, plan.rhs_counts, generators)};
}

FormalSum one_differential(const GenDecl& gen) {
  FormalSum out(gen.p, gen.q);
  Expr g = Expr::gen(gen);
  for (int i = 1; i <= gen.q; ++i) {
    Expr slot = Expr::tensor({Expr::id(i - 1), Expr::marked(), Expr::id(gen.q - i)}).canonical();
    out.add(1, Expr::compose({slot, g}));
  }
  for (int j = 1; j <= gen.p; ++j) {
    Expr slot = Expr::tensor({Expr::id(j - 1), Expr::marked(), Expr::id(gen.p - j)}).canonical();
    out.add(-1, Expr::compose({g, slot}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// FormalSum

void FormalSum::add(long long coeff, Expr e) {
  if (terms_.empty() && p_ == 0 && q_ == 0) {
    p_ = e.domain_arity();
    q_ = e.codomain_arity();
  }
  if (e.domain_arity() != p_ || e.codomain_arity() != q_) {
    throw ShapeError("term '" + e.to_string() + "' has arity " + e.signature() + ", expected " +
                     std::to_string(p_) + "->" + std::to_string(q_));
  }
  terms_.push_back(FormalTerm{coeff, std::move(e)});
}

FormalSum FormalSum::operator-() const {
  FormalSum out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

FormalSum operator+(const FormalSum& a, const FormalSum& b) {
  if (a.terms_.empty()) return b;
  if (b.terms_.empty()) return a;
  FormalSum out = a;
  for (const auto& t : b.terms_) out.add(t.coeff, t.expr);
  return out;
}

std::map<std::string, long long> FormalSum::canonical_terms() const {
  std::map<std::string, long long> out;
  for (const auto& t : terms_) out[t.expr.canonical().to_string()] += t.coeff;
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

bool FormalSum::equivalent(const FormalSum& other) const { return canonical_terms() == other.canonical_terms(); }

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    long long c = terms_[k].coeff;
    if (k == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    long long m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m) + "*";
    s += terms_[k].expr.to_string();
  }
  return s;
}

}  // namespace cocycle
