#include "cocycle/gauss_rat.hpp"

#include "cocycle/errors.hpp"

namespace cocycle {

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussRat(a.re_ * b.re_);
  if (a.im_.is_zero()) return GaussRat(a.re_ * b.re_, a.re_ * b.im_);
  if (b.im_.is_zero()) return GaussRat(a.re_ * b.re_, a.im_ * b.re_);
  return GaussRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw NotInvertible("zero Gaussian rational has no inverse");
  if (im_.is_zero()) return GaussRat(re_.inverse());
  Rational norm = re_ * re_ + im_ * im_;
  Rational inv = norm.inverse();
  return GaussRat(re_ * inv, -im_ * inv);
}

std::string GaussRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  Rational mag = im_.abs();
  if (!mag.is_one()) imag = mag.to_string();
  imag += "i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

}  // namespace cocycle
