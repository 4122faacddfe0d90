#include "cocycle/ratfun.hpp"

#include "cocycle/errors.hpp"

namespace cocycle {

namespace {

// Dense polynomial, index = degree, no trailing zeros (empty = 0).
using Poly = std::vector<GaussRat>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Splits x = A^shift * p(A) with p(0) != 0.
Poly to_poly(const LaurentA& x, int& shift) {
  shift = x.min_exp();
  Poly p(static_cast<std::size_t>(x.max_exp() - shift + 1));
  for (const auto& t : x.terms()) p[static_cast<std::size_t>(t.exp - shift)] = t.coeff;
  return p;
}

LaurentA from_poly(const Poly& p, int shift) {
  std::vector<LaurentA::Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) terms.push_back({static_cast<int>(k) + shift, p[k]});
  }
  return LaurentA(std::move(terms));
}

// a = q*b + r; b nonzero.
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, GaussRat());
  GaussRat lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    GaussRat c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    a.pop_back();  // leading coefficient cancels exactly
    trim(a);
  }
  r = std::move(a);
  trim(q);
}

Poly monic(Poly p) {
  if (p.empty() || p.back() == GaussRat(1)) return p;
  GaussRat c = p.back().inverse();
  for (auto& x : p) x *= c;
  return p;
}

// Euclid with monic remainders, which keeps the coefficients small.
Poly gcd(Poly a, Poly b) {
  if (a.size() < b.size()) std::swap(a, b);
  b = monic(std::move(b));
  while (!b.empty()) {
    if (b.size() == 1) return Poly{GaussRat(1)};
    Poly q, r;
    divmod(std::move(a), b, q, r);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  return q;
}

Poly scaled(Poly p, const GaussRat& c) {
  for (auto& x : p) x *= c;
  return p;
}

// Monic polynomial gcd of the polynomial parts; A-powers are units and ignored.
LaurentA common_factor(const LaurentA& x, const LaurentA& y) {
  if (x.is_monomial() || y.is_monomial()) return LaurentA::one();
  int sx = 0, sy = 0;
  Poly g = gcd(to_poly(x, sx), to_poly(y, sy));
  return from_poly(g, 0);
}

LaurentA divide_exact(const LaurentA& x, const LaurentA& g) {
  if (g.is_one()) return x;
  int sx = 0, sg = 0;
  Poly px = to_poly(x, sx);
  return from_poly(exact_quotient(px, to_poly(g, sg)), sx - sg);
}

}  // namespace

RatFunA::RatFunA(const LaurentA& num, const LaurentA& den) {
  if (den.is_zero()) throw NotInvertible("rational function with zero denominator");
  den_ = LaurentA::one();
  if (num.is_zero()) return;
  if (den.is_monomial()) {
    const auto& t = den.terms()[0];
    num_ = num.scaled(t.coeff.inverse()).shifted(-t.exp);
    return;
  }
  int num_shift = 0;
  int den_shift = 0;
  Poly pn = to_poly(num, num_shift);
  Poly pd = to_poly(den, den_shift);
  Poly g = gcd(pn, pd);
  if (degree(g) > 0) {
    pn = exact_quotient(pn, g);
    pd = exact_quotient(pd, g);
  }
  // Both polynomials keep a nonzero constant term after dividing by g.
  GaussRat c = pd.front().inverse();
  num_ = from_poly(scaled(std::move(pn), c), num_shift - den_shift);
  den_ = from_poly(scaled(std::move(pd), c), 0);
}

RatFunA RatFunA::inverse() const {
  if (is_zero()) throw NotInvertible("zero rational function has no inverse");
  return RatFunA(den_, num_);
}

GaussRat RatFunA::evaluate(const GaussRat& a) const {
  GaussRat d = den_.evaluate(a);
  if (d.is_zero()) {
    throw NotInvertible("denominator " + den_.to_string() + " vanishes at A = " + a.to_string());
  }
  return num_.evaluate(a) / d;
}

RatFunA RatFunA::operator-() const { return RatFunA(Raw{}, -num_, den_); }

RatFunA operator+(const RatFunA& a, const RatFunA& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunA(RatFunA::Raw{}, a.num_ + b.num_, a.den_);
  if (a.den_ == b.den_) return RatFunA(a.num_ + b.num_, a.den_);
  if (a.den_.is_one()) return RatFunA(RatFunA::Raw{}, a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return RatFunA(RatFunA::Raw{}, a.num_ + b.num_ * a.den_, a.den_);
  // a/p + b/q = (a q' + b p') / (p' q' g) with g = gcd(p, q)
  LaurentA g = common_factor(a.den_, b.den_);
  if (g.is_one()) {
    LaurentA num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return RatFunA();
    return RatFunA(RatFunA::Raw{}, std::move(num), a.den_ * b.den_);
  }
  LaurentA p = divide_exact(a.den_, g), q = divide_exact(b.den_, g);
  return RatFunA(a.num_ * q + b.num_ * p, p * q * g);
}

RatFunA operator-(const RatFunA& a, const RatFunA& b) { return a + (-b); }

RatFunA operator*(const RatFunA& a, const RatFunA& b) {
  if (a.is_zero() || b.is_zero()) return RatFunA();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunA(RatFunA::Raw{}, a.num_ * b.num_, a.den_);
  // cancel across the diagonal first, then the product is already reduced up to the constant
  LaurentA g1 = common_factor(a.num_, b.den_), g2 = common_factor(b.num_, a.den_);
  LaurentA num = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
  LaurentA den = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
  return RatFunA(num, den);
}

std::string RatFunA::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cocycle
