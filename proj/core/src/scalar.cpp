#include "cocycle/scalar.hpp"

#include <cctype>

namespace cocycle {

std::string ring_name(RingTag tag) {
  switch (tag) {
    case RingTag::gauss: return "gauss";
    case RingTag::laurent: return "laurent";
    case RingTag::ratfun: return "ratfun";
    case RingTag::dual_gauss: return "dual-gauss";
    case RingTag::dual_laurent: return "dual-laurent";
    case RingTag::dual_ratfun: return "dual-ratfun";
  }
  return "?";
}

RingTag parse_ring_tag(std::string_view name) {
  for (RingTag t : {RingTag::gauss, RingTag::laurent, RingTag::ratfun, RingTag::dual_gauss,
                    RingTag::dual_laurent, RingTag::dual_ratfun}) {
    if (ring_name(t) == name) return t;
  }
  throw Error("unknown ring '" + std::string(name) +
              "' (expected gauss, laurent, ratfun, dual-gauss, dual-laurent or dual-ratfun)");
}

bool is_field_tag(RingTag tag) { return tag == RingTag::gauss || tag == RingTag::ratfun; }

namespace {

struct Parsed {
  RatFunA body;
  RatFunA slope;
  bool has_slope = false;
};

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : s_(text) {}

  Parsed parse() {
    Parsed out;
    out.body = parse_base();
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      bool negative = peek() == '-';
      ++pos_;
      skip_ws();
      expect('t');
      skip_ws();
      expect('*');
      skip_ws();
      expect('(');
      out.slope = parse_base();
      skip_ws();
      expect(')');
      if (negative) out.slope = -out.slope;
      out.has_slope = true;
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in scalar '" + std::string(s_) + "'", 1, pos_ + 1);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational rational() {
    std::string text = digits();
    skip_ws();
    if (peek() == '/' && pos_ + 1 < s_.size()) {
      // A '/' followed by '(' separates numerator and denominator of a
      // rational function and is not part of this coefficient.
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string den = digits();
        if (Rational::parse(den).is_zero()) fail("zero denominator");
        return Rational::parse(text + "/" + den);
      }
      pos_ = save;
    }
    return Rational::parse(text);
  }

  int exponent() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    std::string text = digits();
    if (text.size() > 6) fail("exponent out of range");
    int e = std::stoi(text);
    return negative ? -e : e;
  }

  LaurentA term() {
    skip_ws();
    GaussRat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational r = rational();
      skip_ws();
      if (peek() == 'i') {
        ++pos_;
        coeff = GaussRat(0, r);
      } else {
        coeff = GaussRat(r);
      }
      have_coeff = true;
    } else if (peek() == '(') {
      ++pos_;
      skip_ws();
      bool negative = false;
      if (peek() == '-' || peek() == '+') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      }
      Rational r = rational();
      skip_ws();
      expect(')');
      skip_ws();
      expect('i');
      coeff = GaussRat(0, negative ? -r : r);
      have_coeff = true;
    } else if (peek() == 'i') {
      ++pos_;
      coeff = GaussRat::i();
      have_coeff = true;
    }
    skip_ws();
    bool star = false;
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      star = true;
    }
    int exp = 0;
    bool have_a = false;
    if (peek() == 'A') {
      ++pos_;
      have_a = true;
      exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        exp = exponent();
      }
    }
    if (star && !have_a) fail("expected 'A' after '*'");
    if (!have_coeff && !have_a) fail("expected a term");
    return LaurentA::monomial(exp, coeff);
  }

  LaurentA sum() {
    skip_ws();
    LaurentA total;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    LaurentA first = term();
    total = negative ? -first : first;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '\0' || c == ')') break;
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (peek() == 't') {
        pos_ = save;
        break;
      }
      LaurentA next = term();
      total = c == '-' ? total - next : total + next;
    }
    return total;
  }

  RatFunA parse_base() {
    skip_ws();
    if (peek() == '(') {
      std::size_t save = pos_;
      try {
        ++pos_;
        LaurentA num = sum();
        skip_ws();
        expect(')');
        skip_ws();
        if (peek() == '/') {
          ++pos_;
          skip_ws();
          expect('(');
          LaurentA den = sum();
          skip_ws();
          expect(')');
          if (den.is_zero()) fail("zero denominator");
          return RatFunA(num, den);
        }
      } catch (const ParseError&) {
      }
      pos_ = save;
    }
    return RatFunA(sum());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class S>
S convert(const Parsed& p) {
  if constexpr (is_dual_v<S>) {
    using B = typename S::Base;
    return S(demote<B>(p.body), demote<B>(p.slope));
  } else {
    if (p.has_slope && !p.slope.is_zero()) {
      throw DemotionError("value with a t-part does not lie in the " + ring_name(RingTraits<S>::tag) + " ring");
    }
    return demote<S>(p.body);
  }
}

template <class F>
RingElem dispatch(RingTag tag, F&& f) {
  switch (tag) {
    case RingTag::gauss: return f(GaussRat());
    case RingTag::laurent: return f(LaurentA());
    case RingTag::ratfun: return f(RatFunA());
    case RingTag::dual_gauss: return f(Dual<GaussRat>());
    case RingTag::dual_laurent: return f(Dual<LaurentA>());
    case RingTag::dual_ratfun: return f(Dual<RatFunA>());
  }
  throw Error("bad ring tag");
}

template <class Op>
RingElem binary(const RingElem& x, const RingElem& y, const char* what, Op op) {
  if (x.index() != y.index()) {
    throw RingMismatch(std::string("cannot ") + what + " elements of the " + ring_name(tag_of(x)) + " and " +
                       ring_name(tag_of(y)) + " rings without an explicit promotion");
  }
  return std::visit(
      [&](const auto& a) -> RingElem {
        using T = std::decay_t<decltype(a)>;
        return op(a, std::get<T>(y));
      },
      x);
}

}  // namespace

template <class S>
S parse_scalar(std::string_view text) {
  return convert<S>(ScalarParser(text).parse());
}

template GaussRat parse_scalar<GaussRat>(std::string_view);
template LaurentA parse_scalar<LaurentA>(std::string_view);
template RatFunA parse_scalar<RatFunA>(std::string_view);
template Dual<GaussRat> parse_scalar<Dual<GaussRat>>(std::string_view);
template Dual<LaurentA> parse_scalar<Dual<LaurentA>>(std::string_view);
template Dual<RatFunA> parse_scalar<Dual<RatFunA>>(std::string_view);

RingTag tag_of(const RingElem& x) {
  return std::visit([](const auto& a) { return RingTraits<std::decay_t<decltype(a)>>::tag; }, x);
}

RingElem ring_add(const RingElem& x, const RingElem& y) {
  return binary(x, y, "add", [](const auto& a, const auto& b) { return a + b; });
}

RingElem ring_sub(const RingElem& x, const RingElem& y) {
  return binary(x, y, "subtract", [](const auto& a, const auto& b) { return a - b; });
}

RingElem ring_mul(const RingElem& x, const RingElem& y) {
  return binary(x, y, "multiply", [](const auto& a, const auto& b) { return a * b; });
}

RingElem ring_neg(const RingElem& x) {
  return std::visit([](const auto& a) -> RingElem { return -a; }, x);
}

RingElem ring_inv(const RingElem& x) {
  return std::visit([](const auto& a) -> RingElem { return a.inverse(); }, x);
}

bool ring_equal(const RingElem& x, const RingElem& y) {
  if (x.index() != y.index()) {
    throw RingMismatch("cannot compare elements of the " + ring_name(tag_of(x)) + " and " + ring_name(tag_of(y)) +
                       " rings without an explicit promotion");
  }
  return x == y;
}

RingElem promote(const RingElem& x, RingTag target) {
  return std::visit(
      [&](const auto& a) -> RingElem {
        using From = std::decay_t<decltype(a)>;
        return dispatch(target, [&](auto proto) -> RingElem {
          using To = decltype(proto);
          if constexpr (embeddable_v<To, From>) {
            return embed<To>(a);
          } else {
            throw DemotionError("cannot promote from " + ring_name(RingTraits<From>::tag) + " to " +
                                ring_name(RingTraits<To>::tag) + "; use demote");
          }
        });
      },
      x);
}

RingElem demote(const RingElem& x, RingTag target) {
  return std::visit(
      [&](const auto& a) -> RingElem {
        using From = std::decay_t<decltype(a)>;
        return dispatch(target, [&](auto proto) -> RingElem {
          using To = decltype(proto);
          if constexpr (embeddable_v<From, To>) {
            return demote<To>(a);
          } else {
            throw DemotionError("cannot demote from " + ring_name(RingTraits<From>::tag) + " to " +
                                ring_name(RingTraits<To>::tag) + "; use promote");
          }
        });
      },
      x);
}

RingElem parse_scalar(std::string_view text, RingTag ring) {
  Parsed p = ScalarParser(text).parse();
  return dispatch(ring, [&](auto proto) -> RingElem { return convert<decltype(proto)>(p); });
}

std::string format_scalar(const RingElem& x) {
  return std::visit([](const auto& a) { return a.to_string(); }, x);
}

}  // namespace cocycle
