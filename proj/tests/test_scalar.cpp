#include <doctest.h>

#include "cocycle/scalar.hpp"
#include "random_elems.hpp"

using namespace cocycle;
using cocycle::testing::Sampler;

namespace {

LaurentA A(int k = 1) { return LaurentA::monomial(k); }

template <class S>
void check_axioms(unsigned seed, int rounds) {
  Sampler s(seed);
  for (int k = 0; k < rounds; ++k) {
    S x = s.sample<S>(), y = s.sample<S>(), z = s.sample<S>();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + S() == x);
    CHECK(x * S::one() == x);
    CHECK(x - x == S());
    CHECK(x + (-x) == S());
  }
}

template <class S>
void check_inverses(unsigned seed, int rounds) {
  Sampler s(seed);
  int tested = 0;
  for (int k = 0; k < rounds; ++k) {
    S x = s.sample<S>();
    if (!x.is_invertible()) {
      CHECK_THROWS_AS(x.inverse(), NotInvertible);
      continue;
    }
    CHECK(x * x.inverse() == S::one());
    ++tested;
  }
  CHECK(tested > 0);
}

template <class S>
void check_round_trip(unsigned seed, int rounds) {
  Sampler s(seed);
  for (int k = 0; k < rounds; ++k) {
    S x = s.sample<S>();
    std::string text = x.to_string();
    INFO(text);
    CHECK(parse_scalar<S>(text) == x);
  }
}

}  // namespace

TEST_CASE("rational arithmetic stays exact past 64 bits") {
  Rational x(1);
  for (int k = 0; k < 40; ++k) x = x * Rational(1000003);
  CHECK_FALSE(x.is_inline());
  Rational y = x;
  for (int k = 0; k < 40; ++k) y = y / Rational(1000003);
  CHECK(y == Rational(1));
  CHECK(y.is_inline());
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational(INT64_MAX) + Rational(1) > Rational(INT64_MAX));
  CHECK(Rational(INT64_MIN + 1) - Rational(5) < Rational(0));
}

TEST_CASE("gaussian rationals") {
  CHECK(GaussRat(1) + GaussRat::i() == GaussRat(1, 1));
  CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
  CHECK(GaussRat(3, 4).inverse() == GaussRat(Rational(3, 25), Rational(-4, 25)));
  CHECK(GaussRat(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4i");
  CHECK(GaussRat(0, 1).to_string() == "i");
  CHECK_THROWS_AS(GaussRat().inverse(), NotInvertible);
}

TEST_CASE("laurent polynomials") {
  CHECK(A() * A(-1) == LaurentA::one());
  CHECK(A(2).inverse() == A(-2));
  CHECK_THROWS_AS((A(2) + LaurentA::one()).inverse(), NotInvertible);
  LaurentA delta = -A(2) - A(-2);
  CHECK(delta.to_string() == "-A^-2 - A^2");
  CHECK(parse_scalar<LaurentA>("-A^2 - A^-2") == delta);
  CHECK(parse_scalar<LaurentA>("i*A^-1") == LaurentA::monomial(-1, GaussRat::i()));
  CHECK(parse_scalar<LaurentA>("iA") == LaurentA::monomial(1, GaussRat::i()));
  CHECK(parse_scalar<GaussRat>("(1/2)i") == GaussRat(0, Rational(1, 2)));
  CHECK(parse_scalar<LaurentA>("-i*A^-1") == LaurentA::monomial(-1, -GaussRat::i()));
  CHECK(parse_scalar<LaurentA>(" 2 * A ^ 3 + 1/2 ") == LaurentA::monomial(3, 2) + LaurentA(GaussRat(Rational(1, 2))));
  CHECK(delta.evaluate(GaussRat(2)) == GaussRat(Rational(-17, 4)));
}

TEST_CASE("rational functions are kept in lowest terms") {
  LaurentA p = A(2) + LaurentA::one();
  RatFunA inv = RatFunA(p).inverse();
  CHECK(inv == RatFunA(LaurentA::one(), p));
  CHECK(inv.to_string() == "(1)/(1 + A^2)");
  CHECK(inv * RatFunA(p) == RatFunA::one());
  // (A^4 - 1)/(A^2 - 1) = A^2 + 1
  RatFunA q(A(4) - LaurentA::one(), A(2) - LaurentA::one());
  CHECK(q.is_laurent());
  CHECK(q == RatFunA(p));
  // common A-power and scalar factors disappear
  RatFunA r(A(3).scaled(2) * p, A(1).scaled(4) * (A(1) + LaurentA::one()));
  CHECK(r.den().coeff(0) == GaussRat(1));
  CHECK(r * RatFunA(A(1) + LaurentA::one()) == RatFunA((A(2) * p).scaled(Rational(1, 2))));
  CHECK(parse_scalar<RatFunA>(inv.to_string()) == inv);
  CHECK(parse_scalar<RatFunA>("(A)/(2 + A^2)") == RatFunA(A(), A(2) + LaurentA(GaussRat(2))));
  CHECK_THROWS_AS(RatFunA().inverse(), NotInvertible);
  CHECK_THROWS_AS(inv.evaluate(GaussRat::i()), NotInvertible);
}

TEST_CASE("dual numbers") {
  using D = Dual<LaurentA>;
  D tA(LaurentA(), A());
  CHECK(tA * tA == D());
  D x(A(), LaurentA::one());
  CHECK(x.inverse() == D(A(-1), -A(-2)));
  CHECK(x * x.inverse() == D::one());
  CHECK_THROWS_AS(D(A() + LaurentA::one(), A()).inverse(), NotInvertible);
  CHECK(x.to_string() == "A + t*(1)");
  CHECK(parse_scalar<D>("A + t*(1)") == x);
  CHECK(parse_scalar<D>("A - t*(A^2)") == D(A(), -A(2)));
  CHECK(parse_scalar<D>("A") == D(A()));
}

TEST_CASE("ring axioms on sampled triples") {
  check_axioms<GaussRat>(1, 200);
  check_axioms<LaurentA>(2, 200);
  check_axioms<RatFunA>(3, 60);
  check_axioms<Dual<GaussRat>>(4, 100);
  check_axioms<Dual<LaurentA>>(5, 100);
  check_axioms<Dual<RatFunA>>(6, 30);
}

TEST_CASE("sampled invertible elements have exact inverses") {
  check_inverses<GaussRat>(11, 200);
  check_inverses<LaurentA>(12, 200);
  check_inverses<RatFunA>(13, 100);
  check_inverses<Dual<GaussRat>>(14, 100);
  check_inverses<Dual<LaurentA>>(15, 200);
  check_inverses<Dual<RatFunA>>(16, 50);
}

TEST_CASE("t is nilpotent on sampled elements") {
  Sampler s(21);
  for (int k = 0; k < 200; ++k) {
    RatFunA x = s.ratfun(), y = s.ratfun();
    CHECK(Dual<RatFunA>(RatFunA(), x) * Dual<RatFunA>(RatFunA(), y) == Dual<RatFunA>());
  }
}

TEST_CASE("parse inverts format on 1000 sampled elements per ring") {
  check_round_trip<GaussRat>(31, 1000);
  check_round_trip<LaurentA>(32, 1000);
  check_round_trip<RatFunA>(33, 1000);
  check_round_trip<Dual<GaussRat>>(34, 1000);
  check_round_trip<Dual<LaurentA>>(35, 1000);
  check_round_trip<Dual<RatFunA>>(36, 1000);
}

TEST_CASE("scalar syntax errors carry a position") {
  CHECK_THROWS_AS(parse_scalar<LaurentA>("A^"), ParseError);
  CHECK_THROWS_AS(parse_scalar<LaurentA>("2 A ++ 1"), ParseError);
  CHECK_THROWS_AS(parse_scalar<GaussRat>("1/0"), ParseError);
  try {
    parse_scalar<LaurentA>("A + @");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_scalar<GaussRat>("A"), DemotionError);
  CHECK_THROWS_AS(parse_scalar<LaurentA>("A + t*(1)"), DemotionError);
  CHECK_THROWS_AS(parse_scalar<LaurentA>("(1)/(1 + A)"), DemotionError);
}

TEST_CASE("runtime-tagged elements refuse mixed rings") {
  RingElem one_g = GaussRat(1);
  RingElem i_g = GaussRat::i();
  CHECK(ring_add(one_g, i_g) == RingElem(GaussRat(1, 1)));
  RingElem a = A();
  CHECK_THROWS_AS(ring_add(one_g, a), RingMismatch);
  CHECK_THROWS_AS(ring_mul(a, RingElem(Dual<LaurentA>(A()))), RingMismatch);
  CHECK(ring_mul(a, RingElem(A(-1))) == RingElem(LaurentA::one()));
  CHECK(ring_inv(RingElem(A(2))) == RingElem(A(-2)));
  CHECK(ring_inv(RingElem(Dual<LaurentA>(A(), LaurentA::one()))) == RingElem(Dual<LaurentA>(A(-1), -A(-2))));

  CHECK(promote(RingElem(GaussRat(Rational(3, 2))), RingTag::laurent) == RingElem(LaurentA(GaussRat(Rational(3, 2)))));
  CHECK(promote(a, RingTag::dual_laurent) == RingElem(Dual<LaurentA>(A())));
  CHECK(demote(RingElem(Dual<LaurentA>(A())), RingTag::laurent) == a);
  CHECK_THROWS_AS(demote(RingElem(Dual<LaurentA>(A(), A())), RingTag::laurent), DemotionError);
  CHECK_THROWS_AS(promote(a, RingTag::gauss), DemotionError);
  CHECK(format_scalar(parse_scalar("-A^2 - A^-2", RingTag::ratfun)) == "-A^-2 - A^2");
  CHECK(parse_ring_tag("dual-ratfun") == RingTag::dual_ratfun);
  CHECK_THROWS_AS(parse_ring_tag("real"), Error);
}

TEST_CASE("specialization of A") {
  RatFunA x(A(2), A(2) + LaurentA::one());
  CHECK(specialize_A(x, GaussRat(2)) == GaussRat(Rational(4, 5)));
  Dual<RatFunA> y(x, RatFunA(A()));
  CHECK(specialize_A(y, GaussRat(3)) == Dual<GaussRat>(GaussRat(Rational(9, 10)), GaussRat(3)));
}
