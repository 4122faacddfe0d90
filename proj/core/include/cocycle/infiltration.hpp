#pragma once

// Single-term identities over named generators, their elaborate plans and
// infiltrations, 1-differentials, and evaluation of formal sums on concrete
// linear maps.
//
// Identity DSL:
//   gen <name>: <p> -> <q>;
//   identity <label>: <expr> = <expr>;
//   lhs <expr>; rhs <expr>;          (unlabelled identity, numbered 1, 2, ...)
//   expr := term ('*' term)*        composition, leftmost applied last
//   term := atom ('x' atom)*        tensor product
//   atom := 'id' | 'X' | <name> | '(' expr ')'
// '#' starts a comment running to the end of the line.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cocycle/linear_map.hpp"

namespace cocycle {

struct GenDecl {
  std::string name;
  int p = 0;
  int q = 0;

  friend bool operator==(const GenDecl&, const GenDecl&) = default;
};

class Expr {
 public:
  enum class Kind { gen, id, swap, tensor, compose };
  /// What a gen leaf stands for: the generator itself, its cochain phi_<name>,
  /// or the marked map f of a 1-differential.
  enum class Role { generator, cochain, marked };

  static Expr gen(const GenDecl& g, Role role = Role::generator, int occurrence = 0);
  static Expr marked();
  static Expr id(int k = 1);
  static Expr swap();
  static Expr tensor(std::vector<Expr> factors);
  /// Throws ShapeError when consecutive arities do not chain.
  static Expr compose(std::vector<Expr> factors);

  Kind kind() const { return kind_; }
  Role role() const { return role_; }
  const std::string& name() const { return name_; }
  int occurrence() const { return occurrence_; }
  const std::vector<Expr>& children() const { return children_; }
  int domain_arity() const { return p_; }
  int codomain_arity() const { return q_; }
  std::string signature() const { return std::to_string(p_) + "->" + std::to_string(q_); }

  /// Flattens nested products, merges runs of identities and drops identities
  /// inside composites.
  Expr canonical() const;

  /// DSL text; cochains print as phi_<name>, the marked map as f and
  /// numbered occurrences as <name>_<j>.
  std::string to_string() const;

  /// Number of leaves with the given role.
  int count(Role role) const;

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  enum class Context { top, compose_factor, tensor_factor };
  std::string to_string(Context ctx) const;

  Kind kind_ = Kind::id;
  Role role_ = Role::generator;
  std::string name_;
  int occurrence_ = 0;
  int p_ = 1;
  int q_ = 1;
  std::vector<Expr> children_;
};

struct SingleTermIdentity {
  std::string label;
  Expr lhs;
  Expr rhs;
};

struct IdentitySet {
  std::vector<GenDecl> generators;
  std::vector<SingleTermIdentity> identities;

  const GenDecl& generator(std::string_view name) const;
  const SingleTermIdentity& identity(std::string_view label) const;
};

/// Parses the identity DSL; errors carry line and column.
IdentitySet parse_identities(std::string_view text);
IdentitySet load_identities(const std::string& path);

struct ElaboratePlan {
  SingleTermIdentity identity;
  Expr lhs;  // every generator leaf numbered 1..m(name)
  Expr rhs;
  std::map<std::string, int> lhs_counts;
  std::map<std::string, int> rhs_counts;

  std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

/// Numbers the occurrences of each generator depth-first, composites top-down
/// (leftmost factor first) and tensor factors left to right.
ElaboratePlan elaborate(const SingleTermIdentity& identity);

struct FormalTerm {
  long long coeff = 1;
  Expr expr;
};

class FormalSum {
 public:
  FormalSum() = default;
  FormalSum(int p, int q) : p_(p), q_(q) {}

  void add(long long coeff, Expr e);
  const std::vector<FormalTerm>& terms() const { return terms_; }
  int domain_arity() const { return p_; }
  int codomain_arity() const { return q_; }

  FormalSum operator-() const;
  friend FormalSum operator+(const FormalSum& a, const FormalSum& b);
  friend FormalSum operator-(const FormalSum& a, const FormalSum& b) { return a + (-b); }

  /// Like terms combined by canonical form, zero terms dropped, sorted.
  std::map<std::string, long long> canonical_terms() const;
  /// Equality of canonical term multisets.
  bool equivalent(const FormalSum& other) const;

  std::string to_string() const;

 private:
  int p_ = 0;
  int q_ = 0;
  std::vector<FormalTerm> terms_;
};

struct Infiltration {
  FormalSum lhs;
  FormalSum rhs;

  /// LHS - RHS, the 2-differential of the identity.
  FormalSum differential() const { return lhs - rhs; }
};

/// One term per generator occurrence, with that occurrence replaced by the
/// generator's cochain symbol; terms ordered by declaration, then occurrence.
Infiltration infiltrate(const ElaboratePlan& plan, const std::vector<GenDecl>& generators);

/// sum_i (id^(i-1) x f x id^(q-i)) F  -  sum_j F (id^(j-1) x f x id^(p-j))
FormalSum one_differential(const GenDecl& gen);

/// Parses a formal sum such as "phi_mu*(mu x id) - 2*mu*(id x phi_mu)".
/// Names resolve to declared generators, then phi_<generator>, then f.
FormalSum parse_formal_sum(std::string_view text, const std::vector<GenDecl>& generators);

// ---------------------------------------------------------------------------
// Evaluation

template <class S>
struct Assignment {
  int d = 1;
  std::map<std::string, LinearMap<S>> generators;
  std::map<std::string, LinearMap<S>> cochains;  // keyed by generator name
  std::optional<LinearMap<S>> marked;
};

namespace detail {

template <class S>
const LinearMap<S>& lookup(const std::map<std::string, LinearMap<S>>& table, const Expr& leaf, const char* what) {
  auto it = table.find(leaf.name());
  if (it == table.end()) throw Error(std::string("no ") + what + " assigned to '" + leaf.to_string() + "'");
  const auto& f = it->second;
  if (f.domain_arity() != leaf.domain_arity() || f.codomain_arity() != leaf.codomain_arity()) {
    throw ShapeError(std::string(what) + " assigned to '" + leaf.to_string() + "' has arity " +
                     f.shape().to_string() + ", expected " + leaf.signature());
  }
  return f;
}

}  // namespace detail

template <class S>
LinearMap<S> evaluate(const Expr& e, const Assignment<S>& a) {
  switch (e.kind()) {
    case Expr::Kind::id: return LinearMap<S>::identity(a.d, e.domain_arity());
    case Expr::Kind::swap: return transposition<S>(a.d);
    case Expr::Kind::gen:
      switch (e.role()) {
        case Expr::Role::generator: return detail::lookup(a.generators, e, "generator");
        case Expr::Role::cochain: return detail::lookup(a.cochains, e, "cochain");
        case Expr::Role::marked:
          if (!a.marked) throw Error("no map assigned to the marked symbol f");
          if (a.marked->shape() != MapShape{a.d, 1, 1}) throw ShapeError("the marked map f must have arity 1->1");
          return *a.marked;
      }
      break;
    case Expr::Kind::tensor: {
      std::vector<LinearMap<S>> parts;
      for (const auto& c : e.children()) parts.push_back(evaluate(c, a));
      return tensor_all(parts);
    }
    case Expr::Kind::compose: {
      std::vector<LinearMap<S>> parts;
      for (const auto& c : e.children()) parts.push_back(evaluate(c, a));
      return compose_all(parts);
    }
  }
  throw Error("bad expression node");
}

template <class S>
LinearMap<S> evaluate(const FormalSum& sum, const Assignment<S>& a) {
  LinearMap<S> total = LinearMap<S>::zero(MapShape{a.d, sum.domain_arity(), sum.codomain_arity()});
  for (const auto& t : sum.terms()) {
    LinearMap<S> v;
    try {
      v = evaluate(t.expr, a);
    } catch (const ShapeError& err) {
      throw ShapeError("in term '" + t.expr.to_string() + "': " + err.what());
    }
    total = total + from_int<S>(t.coeff) * v;
  }
  return total;
}

/// Evaluates LHS - RHS of the identity on the generators of a.
template <class S>
LinearMap<S> identity_residual(const SingleTermIdentity& id, const Assignment<S>& a) {
  return evaluate(id.lhs, a) - evaluate(id.rhs, a);
}

/// d^2 applied to the cochains phi^l := d^{1,l}(f). Raises HypothesisError when
/// the assignment does not satisfy the identity.
template <class S>
LinearMap<S> d2d1(const IdentitySet& set, const SingleTermIdentity& id, const Assignment<S>& a,
                  const LinearMap<S>& f) {
  if (!identity_residual(id, a).is_zero()) {
    throw HypothesisError("the assignment does not satisfy identity '" + id.label + "'");
  }
  Assignment<S> b = a;
  b.marked = f;
  b.cochains.clear();
  for (const auto& g : set.generators) {
    if (a.generators.count(g.name)) b.cochains.emplace(g.name, evaluate(one_differential(g), b));
  }
  FormalSum d2 = infiltrate(elaborate(id), set.generators).differential();
  return evaluate(d2, b);
}

template <class S>
bool check_d2d1(const IdentitySet& set, const SingleTermIdentity& id, const Assignment<S>& a,
                const LinearMap<S>& f) {
  return d2d1(set, id, a, f).is_zero();
}

}  // namespace cocycle
