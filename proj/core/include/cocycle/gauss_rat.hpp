#pragma once

#include <string>

#include "cocycle/rational.hpp"

namespace cocycle {

/// Gaussian rational re + im*i, the constant field Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(long long re) : re_(re) {}             // NOLINT(google-explicit-constructor)
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(0, 1); }
  static GaussRat one() { return GaussRat(1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_invertible() const { return !is_zero(); }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  GaussRat inverse() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }

  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

  /// Canonical text: "p/q", "r/si", or "p/q+r/si"; "0" for zero.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace cocycle
