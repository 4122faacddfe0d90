#pragma once

#include <string>

#include "cocycle/errors.hpp"

namespace cocycle {

/// Truncated polynomial body + t*slope with t^2 = 0.
template <class S>
class Dual {
 public:
  using Base = S;

  Dual() = default;
  explicit Dual(S body) : body_(std::move(body)) {}
  Dual(S body, S slope) : body_(std::move(body)), slope_(std::move(slope)) {}

  static Dual one() { return Dual(S::one()); }
  /// The nilpotent generator t itself.
  static Dual t() { return Dual(S(), S::one()); }

  const S& body() const { return body_; }
  const S& slope() const { return slope_; }

  bool is_zero() const { return body_.is_zero() && slope_.is_zero(); }
  bool is_one() const { return body_.is_one() && slope_.is_zero(); }
  bool is_invertible() const { return body_.is_invertible(); }

  /// (u + t v)^-1 = u^-1 - t u^-2 v
  Dual inverse() const {
    if (!body_.is_invertible()) {
      throw NotInvertible("dual number with non-invertible body " + body_.to_string());
    }
    S inv = body_.inverse();
    return Dual(inv, -(inv * inv * slope_));
  }

  Dual operator-() const { return Dual(-body_, -slope_); }
  friend Dual operator+(const Dual& a, const Dual& b) {
    return Dual(a.body_ + b.body_, a.slope_ + b.slope_);
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    return Dual(a.body_ - b.body_, a.slope_ - b.slope_);
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    if (a.slope_.is_zero() && b.slope_.is_zero()) return Dual(a.body_ * b.body_);
    return Dual(a.body_ * b.body_, a.body_ * b.slope_ + a.slope_ * b.body_);
  }
  friend Dual operator/(const Dual& a, const Dual& b) { return a * b.inverse(); }

  Dual& operator+=(const Dual& b) { return *this = *this + b; }
  Dual& operator-=(const Dual& b) { return *this = *this - b; }
  Dual& operator*=(const Dual& b) { return *this = *this * b; }

  friend bool operator==(const Dual& a, const Dual& b) = default;

  /// "<body>" or "<body> + t*(<slope>)".
  std::string to_string() const {
    if (slope_.is_zero()) return body_.to_string();
    return body_.to_string() + " + t*(" + slope_.to_string() + ")";
  }

 private:
  S body_;
  S slope_;
};

}  // namespace cocycle
