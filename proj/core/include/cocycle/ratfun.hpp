#pragma once

#include <string>

#include "cocycle/laurent.hpp"

namespace cocycle {

/// Rational function in A over Q(i), the fraction field of LaurentA.
///
/// Canonical form: num / den where den is an honest polynomial with nonzero
/// constant term equal to 1, and gcd(num, den) = 1 once num is cleared of
/// negative powers of A. Every rational function has exactly one such
/// representation, so equality is structural.
class RatFunA {
 public:
  RatFunA() : den_(LaurentA::one()) {}
  explicit RatFunA(GaussRat c) : num_(std::move(c)), den_(LaurentA::one()) {}
  explicit RatFunA(LaurentA num) : num_(std::move(num)), den_(LaurentA::one()) {}
  /// Normalizes; throws NotInvertible when den is zero.
  RatFunA(const LaurentA& num, const LaurentA& den);

  static RatFunA one() { return RatFunA(GaussRat(1)); }

  const LaurentA& num() const { return num_; }
  const LaurentA& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_invertible() const { return !is_zero(); }
  /// True when the value lies in LaurentA.
  bool is_laurent() const { return den_.is_one(); }

  RatFunA inverse() const;
  GaussRat evaluate(const GaussRat& a) const;

  RatFunA operator-() const;
  friend RatFunA operator+(const RatFunA& a, const RatFunA& b);
  friend RatFunA operator-(const RatFunA& a, const RatFunA& b);
  friend RatFunA operator*(const RatFunA& a, const RatFunA& b);
  friend RatFunA operator/(const RatFunA& a, const RatFunA& b) { return a * b.inverse(); }

  RatFunA& operator+=(const RatFunA& b) { return *this = *this + b; }
  RatFunA& operator-=(const RatFunA& b) { return *this = *this - b; }
  RatFunA& operator*=(const RatFunA& b) { return *this = *this * b; }

  friend bool operator==(const RatFunA& a, const RatFunA& b) = default;

  /// The numerator alone when den == 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  struct Raw {};
  RatFunA(Raw, LaurentA num, LaurentA den) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentA num_;
  LaurentA den_;
};

}  // namespace cocycle
