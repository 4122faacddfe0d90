#include "cocycle/rational.hpp"

#include <limits>
#include <numeric>

#include "cocycle/errors.hpp"

namespace cocycle {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  // Callers never pass INT64_MIN, so std::gcd cannot overflow.
  return std::gcd(a, b);
}

// Builds a reduced inline value, or returns false when it does not fit.
bool make_small(__int128 num, __int128 den, std::int64_t& out_num, std::int64_t& out_den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || num < -kMax || den > kMax) return false;
  out_num = static_cast<std::int64_t>(num);
  out_den = static_cast<std::int64_t>(den);
  return true;
}

}  // namespace

Rational::Rational(long long n) {
  if (n == kMin) {
    assign(mpq_class(mpz_class(static_cast<long>(n))));
  } else {
    num_ = n;
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw NotInvertible("rational with zero denominator");
  if (num == kMin || den == kMin) {
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    assign(q);
    return;
  }
  std::int64_t g = gcd64(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num_ = num;
  den_ = den;
}

Rational::Rational(const mpq_class& q) { assign(q); }

void Rational::assign(const mpq_class& q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = mpz_get_si(q.get_num_mpz_t());
    long d = mpz_get_si(q.get_den_mpz_t());
    if (n != kMin && d != kMin) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(q);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw ParseError("malformed rational '" + s + "'", 1, 1);
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 1, 1);
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw NotInvertible("zero rational has no inverse");
  if (big_) return Rational(mpq_class(1) / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    Rational r;
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
        r.num_ = s;
        return r;
      }
    }
    __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_;
    if (make_small(num, den, r.num_, r.den_)) return r;
  }
  return Rational(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    Rational r;
    if (a.num_ == 0 || b.num_ == 0) return r;
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != kMin) {
        r.num_ = p;
        return r;
      }
    }
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    __int128 num = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
    __int128 den = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
    if (make_small(num, den, r.num_, r.den_)) return r;
  }
  return Rational(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  // Canonical storage means an inline value never equals a big one.
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace cocycle
