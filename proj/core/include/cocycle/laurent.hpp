#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cocycle/gauss_rat.hpp"

namespace cocycle {

/// Laurent polynomial in A with Q(i) coefficients.
///
/// Stored sparsely as (exponent, coefficient) pairs, strictly ascending by
/// exponent, with no zero coefficients.
class LaurentA {
 public:
  struct Term {
    int exp;
    GaussRat coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentA() = default;
  explicit LaurentA(GaussRat constant);
  /// Takes terms in any order; merges duplicates and drops zeros.
  explicit LaurentA(std::vector<Term> terms);

  static LaurentA one() { return LaurentA(GaussRat(1)); }
  /// coeff * A^exp
  static LaurentA monomial(int exp, GaussRat coeff = GaussRat(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff.is_one(); }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Units of Q(i)[A, A^-1] are exactly the nonzero monomials.
  bool is_invertible() const { return is_monomial(); }

  /// Lowest / highest exponent; both 0 for the zero polynomial.
  int min_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }
  GaussRat coeff(int exp) const;
  GaussRat constant_value() const;

  LaurentA inverse() const;
  /// Multiplies by A^k.
  LaurentA shifted(int k) const;
  LaurentA scaled(const GaussRat& c) const;
  /// Value at A = a (a must be nonzero when negative exponents occur).
  GaussRat evaluate(const GaussRat& a) const;

  LaurentA operator-() const;
  friend LaurentA operator+(const LaurentA& a, const LaurentA& b);
  friend LaurentA operator-(const LaurentA& a, const LaurentA& b);
  friend LaurentA operator*(const LaurentA& a, const LaurentA& b);

  LaurentA& operator+=(const LaurentA& b) { return *this = *this + b; }
  LaurentA& operator-=(const LaurentA& b) { return *this = *this - b; }
  LaurentA& operator*=(const LaurentA& b) { return *this = *this * b; }

  friend bool operator==(const LaurentA& a, const LaurentA& b) = default;

  /// Canonical text in ascending exponent order, e.g. "-A^-2 - A^2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace cocycle
