#include "cocycle/laurent.hpp"

#include <algorithm>

#include "cocycle/errors.hpp"

namespace cocycle {

namespace {

// Appends one signed term "c*A^e" (c real) or "ci*A^e" (c imaginary part).
void append_term(std::string& out, const Rational& c, bool imaginary, int exp) {
  bool negative = c.sign() < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  Rational mag = c.abs();
  std::string coeff;
  if (imaginary) {
    coeff = (mag.is_one() ? "" : mag.to_string()) + "i";
  } else if (!mag.is_one() || exp == 0) {
    coeff = mag.to_string();
  }
  if (exp == 0) {
    out += coeff;
    return;
  }
  std::string power = exp == 1 ? "A" : "A^" + std::to_string(exp);
  out += coeff.empty() ? power : coeff + "*" + power;
}

}  // namespace

LaurentA::LaurentA(GaussRat constant) {
  if (!constant.is_zero()) terms_.push_back({0, std::move(constant)});
}

LaurentA::LaurentA(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
    if (terms_.back().coeff.is_zero()) terms_.pop_back();
  }
}

LaurentA LaurentA::monomial(int exp, GaussRat coeff) {
  LaurentA r;
  if (!coeff.is_zero()) r.terms_.push_back({exp, std::move(coeff)});
  return r;
}

GaussRat LaurentA::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return GaussRat();
}

GaussRat LaurentA::constant_value() const {
  if (!is_constant()) throw DemotionError("Laurent polynomial " + to_string() + " is not a constant");
  return coeff(0);
}

LaurentA LaurentA::inverse() const {
  if (is_zero()) throw NotInvertible("zero Laurent polynomial has no inverse");
  if (!is_monomial()) {
    throw NotInvertible("Laurent polynomial " + to_string() +
                        " is not a monomial; invert it in the rational function field instead");
  }
  return monomial(-terms_[0].exp, terms_[0].coeff.inverse());
}

LaurentA LaurentA::shifted(int k) const {
  LaurentA r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

LaurentA LaurentA::scaled(const GaussRat& c) const {
  if (c.is_zero()) return LaurentA();
  LaurentA r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

GaussRat LaurentA::evaluate(const GaussRat& a) const {
  if (is_zero()) return GaussRat();
  if (a.is_zero() && min_exp() < 0) {
    throw NotInvertible("cannot evaluate " + to_string() + " at A = 0");
  }
  GaussRat result;
  if (a.is_zero()) return coeff(0);
  GaussRat ainv = a.inverse();
  for (const auto& t : terms_) {
    GaussRat p(1);
    const GaussRat& base = t.exp < 0 ? ainv : a;
    for (int k = 0; k < std::abs(t.exp); ++k) p *= base;
    result += t.coeff * p;
  }
  return result;
}

LaurentA LaurentA::operator-() const {
  LaurentA r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentA operator+(const LaurentA& a, const LaurentA& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentA r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->exp < i->exp) {
      r.terms_.push_back(*j++);
    } else {
      GaussRat c = i->coeff + j->coeff;
      if (!c.is_zero()) r.terms_.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentA operator-(const LaurentA& a, const LaurentA& b) { return a + (-b); }

LaurentA operator*(const LaurentA& a, const LaurentA& b) {
  if (a.is_zero() || b.is_zero()) return LaurentA();
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return LaurentA::monomial(a.terms_[0].exp + b.terms_[0].exp, a.terms_[0].coeff * b.terms_[0].coeff);
  }
  int lo = a.min_exp() + b.min_exp();
  int hi = a.max_exp() + b.max_exp();
  std::vector<GaussRat> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      dense[static_cast<std::size_t>(s.exp + t.exp - lo)] += s.coeff * t.coeff;
    }
  }
  LaurentA r;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!dense[k].is_zero()) r.terms_.push_back({static_cast<int>(k) + lo, std::move(dense[k])});
  }
  return r;
}

std::string LaurentA::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!t.coeff.re().is_zero()) append_term(out, t.coeff.re(), false, t.exp);
    if (!t.coeff.im().is_zero()) append_term(out, t.coeff.im(), true, t.exp);
  }
  return out;
}

}  // namespace cocycle
