#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cocycle {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// every operation checks for overflow and falls back to GMP, so arithmetic is
/// exact at any size. Almost every coefficient met in practice is a small
/// Gaussian integer, and the inline path keeps those allocation free.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  /// Parses "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  mpq_class to_mpq() const;
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  bool is_inline() const { return !big_; }

 private:
  void assign(const mpq_class& q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace cocycle
