#include <doctest.h>

#include "cocycle/matrix_io.hpp"
#include "cocycle/rmatrix.hpp"
#include "random_elems.hpp"

using namespace cocycle;
using cocycle::testing::Sampler;

namespace {

using DR = Dual<RatFunA>;

LaurentA A(int k = 1) { return LaurentA::monomial(k); }
RatFunA rA(int k = 1) { return RatFunA(A(k)); }

Cochain2<RatFunA> random_bracket_cocycle(Sampler& s) {
  return bracket_cocycle(RatFunA(s.laurent(2)), RatFunA(s.laurent(2)), RatFunA(s.laurent(2)), RatFunA(s.laurent(2)));
}

}  // namespace

TEST_CASE("bracket R-matrix entries") {
  auto p = make_bracket_pair<LaurentA>();
  auto r = build_R(p, A(), A(-1));
  // basis order xx, xy, yx, yy
  CHECK(r.R == parse_map<LaurentA>("A, 0, 0, 0;"
                                   "0, 0, A^-1, 0;"
                                   "0, A^-1, A - A^-3, 0;"
                                   "0, 0, 0, A",
                                   MapShape{2, 2, 2}));
  CHECK(r.Rinv == parse_map<LaurentA>("A^-1, 0, 0, 0;"
                                      "0, A^-1 - A^3, A, 0;"
                                      "0, A, 0, 0;"
                                      "0, 0, 0, A^-1",
                                      MapShape{2, 2, 2}));
  CHECK(r.delta0 == -A(2) - A(-2));
  CHECK(r.ap == A(-1));
  CHECK(r.bp == A());
  CHECK(verify_ybe(r.R).ok);
  CHECK(verify_ybe(r.Rinv).ok);
}

TEST_CASE("build_R rejects bad coefficients") {
  auto p = make_bracket_pair<LaurentA>();
  try {
    build_R(p, A(), A());
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    // 2A^2 + (-A^2 - A^-2) A^2
    CHECK(std::string(e.what()).find(format_scalar(A(2).scaled(2) - A(4) - LaurentA::one())) != std::string::npos);
  }
  CHECK_THROWS_AS(build_R(p, A() + LaurentA::one(), A(-1)), NotInvertible);
  CHECK_THROWS_AS(build_R(p, A(), LaurentA()), NotInvertible);
  auto r = build_R(p, A(-1), A());
  CHECK(verify_ybe(r.R).ok);
}

TEST_CASE("Yang-Baxter check on simple maps") {
  CHECK(verify_ybe(transposition<GaussRat>(2)).ok);
  CHECK(verify_ybe(transposition<GaussRat>(3)).ok);
  auto p = make_bracket_pair<LaurentA>();
  auto bad = LinearMap<LaurentA>::identity(2, 2) + cup_cap(p);
  auto rep = verify_ybe(bad);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.residual.is_zero());
  CHECK_THROWS_AS(verify_ybe(p.beta), ShapeError);
}

TEST_CASE("Yang-Baxter for R built on other switchback pairs") {
  // B = [[0, 1], [q, 0]] has delta0 = q + 1/q; q = -2 gives a = 2, b = 1
  Matrix<GaussRat> b(2, 2);
  b(0, 1) = GaussRat(1);
  b(1, 0) = GaussRat(-2);
  auto p = pair_from_form(b);
  CHECK(p.delta0() == GaussRat(Rational(-5, 2)));
  auto r = build_R(p, GaussRat(2), GaussRat(1));
  CHECK(verify_ybe(r.R).ok);
  CHECK(verify_ybe(r.Rinv).ok);
  // identity form: delta0 = 2, a = -1, b = 1
  auto q = pair_from_form(Matrix<GaussRat>::identity(2));
  CHECK(q.delta0() == GaussRat(2));
  CHECK(verify_ybe(build_R(q, GaussRat(-1), GaussRat(1)).R).ok);
  CHECK_THROWS_AS(build_R(q, GaussRat(1), GaussRat(1)), HypothesisError);
}

TEST_CASE("deformed coefficients for the bracket") {
  Sampler s(21);
  auto p = make_bracket_pair<RatFunA>();
  RatFunA i(GaussRat::i());
  for (int k = 0; k < 10; ++k) {
    auto c = random_bracket_cocycle(s);
    auto co = solve_deformed_coefficients(deform(p, c));
    RatFunA slope = i * (rA(2) - rA(-2)) * (rA(-1) * beta1(c, 0, 1) + rA(1) * beta1(c, 1, 0));
    CHECK(co.delta0 == DR(-rA(2) - rA(-2), slope));
    CHECK(co.b == DR(rA(-1)));
    CHECK(co.a == DR(rA(), -slope * rA(3) * (rA(4) - RatFunA::one()).inverse()));
    CHECK(skein_quadratic(co.a, co.b, co.delta0).is_zero());
  }
  auto diag = bracket_cocycle(RatFunA(GaussRat(3)), RatFunA(), RatFunA(), rA(5));
  auto co = solve_deformed_coefficients(deform(p, diag));
  CHECK(co.delta0.slope().is_zero());
  CHECK(co.a == DR(rA()));
}

TEST_CASE("deformed coefficients break down when A^4 = 1") {
  auto p = make_bracket_pair<RatFunA>();
  auto c = bracket_cocycle(RatFunA(), RatFunA::one(), RatFunA(), RatFunA());
  for (GaussRat a : {GaussRat(1), GaussRat(-1), GaussRat::i()}) {
    auto ps = specialize_pair(p, a);
    Cochain2<GaussRat> cs{specialize_map(c.phi1, a), specialize_map(c.phi2, a)};
    CHECK_THROWS_AS(solve_deformed_coefficients(deform(ps, cs), a, a.inverse()), HypothesisError);
  }
  auto ps = specialize_pair(p, GaussRat(2));
  Cochain2<GaussRat> cs{specialize_map(c.phi1, GaussRat(2)), specialize_map(c.phi2, GaussRat(2))};
  auto co = solve_deformed_coefficients(deform(ps, cs), GaussRat(2), GaussRat(Rational(1, 2)));
  CHECK(skein_quadratic(co.a, co.b, co.delta0).is_zero());
}

TEST_CASE("deformed R-matrices satisfy the Yang-Baxter equation") {
  auto p = make_bracket_pair<RatFunA>();
  auto undeformed = build_R(p, rA(), rA(-1));
  for (const auto& c : solve_2cocycles(p)) {
    auto pt = deform(p, c);
    auto co = solve_deformed_coefficients(pt);
    auto r = build_R(pt, co.a, co.b);
    CHECK(verify_ybe(r.R).ok);
    CHECK(verify_ybe(r.Rinv).ok);
    CHECK(compose(r.R, r.Rinv) == LinearMap<DR>::identity(2, 2));
    CHECK(body_of(r.R) == undeformed.R);
    CHECK(body_of(r.Rinv) == undeformed.Rinv);
  }
}

TEST_CASE("Temperley-Lieb relations") {
  auto p = make_bracket_pair<LaurentA>();
  auto e2 = tl_generators(p, 2);
  REQUIRE(e2.size() == 1);
  CHECK(e2[0] == cup_cap(p));
  for (int n = 2; n <= 5; ++n) CHECK(verify_tl_relations(tl_generators(p, n), p.delta0()).ok);
  CHECK_THROWS_AS(tl_generators(p, 1), Error);

  auto e = tl_generators(p, 3);
  e[0] = LaurentA(GaussRat(2)) * e[0];
  auto rep = verify_tl_relations(e, p.delta0());
  CHECK_FALSE(rep.ok);
  CHECK(rep.failing == "e1^2 = delta*e1");

  auto pr = make_bracket_pair<RatFunA>();
  Sampler s(31);
  auto pt = deform(pr, random_bracket_cocycle(s));
  for (int n = 2; n <= 5; ++n) CHECK(verify_tl_relations(tl_generators(pt, n), pt.delta0()).ok);
}

TEST_CASE("weak condition is what the Temperley-Lieb relations need") {
  auto p = make_bracket_pair<RatFunA>();
  // gamma1^xy = A^2 beta1_yx + A^2, gamma1^yx = A^-2 beta1_xy + 1
  auto c = bracket_cocycle(RatFunA(), RatFunA::one(), RatFunA(), RatFunA());
  c.phi2.at(1, 0) = c.phi2(1, 0) + rA(2);
  c.phi2.at(2, 0) = c.phi2(2, 0) + RatFunA::one();
  REQUIRE_FALSE(D2(p, c).is_zero());
  REQUIRE(verify_weak_tl_condition(p, c));
  auto pt = deform(p, c);
  CHECK_FALSE(verify_switchback(pt));
  CHECK(verify_tl_relations(tl_generators(pt, 3), pt.delta0()).ok);
  CHECK(verify_tl_relations(tl_generators(pt, 4), pt.delta0()).ok);

  Sampler s(32);
  for (int k = 0; k < 10; ++k) {
    Cochain2<RatFunA> r{embed_map<RatFunA>(s.map<LaurentA>(2, 2, 0)), embed_map<RatFunA>(s.map<LaurentA>(2, 0, 2))};
    auto qt = deform(p, r);
    CHECK(verify_weak_tl_condition(p, r) == verify_tl_relations(tl_generators(qt, 3), qt.delta0()).ok);
  }
}
