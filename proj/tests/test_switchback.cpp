#include <doctest.h>

#include "cocycle/matrix_io.hpp"
#include "cocycle/switchback.hpp"
#include "random_elems.hpp"

using namespace cocycle;
using cocycle::testing::Sampler;

namespace {

LaurentA A(int k = 1) { return LaurentA::monomial(k); }
RatFunA rA(int k = 1) { return RatFunA(A(k)); }

template <class S>
Matrix<S> random_invertible(Sampler& s, int d) {
  while (true) {
    Matrix<S> b(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) b(i, j) = S(GaussRat(s.uniform(-3, 3), s.uniform(-1, 1)));
    if (rank(b) == static_cast<std::size_t>(d)) return b;
  }
}

Cochain2<RatFunA> random_bracket_cocycle(Sampler& s) {
  return bracket_cocycle(RatFunA(s.laurent(2)), RatFunA(s.laurent(2)), RatFunA(s.laurent(2)), RatFunA(s.laurent(2)));
}

}  // namespace

TEST_CASE("bracket pair literals") {
  auto p = make_bracket_pair<LaurentA>();
  CHECK(p.beta == parse_map<LaurentA>("0, i*A, -i*A^-1, 0", MapShape{2, 2, 0}));
  CHECK(p.gamma == parse_map<LaurentA>("0; i*A; -i*A^-1; 0", MapShape{2, 0, 2}));
  CHECK(p.delta0() == -A(2) - A(-2));

  auto bad = p.gamma;
  bad.at(1, 0) = A();
  CHECK_THROWS_AS(make_switchback_pair(p.beta, bad), HypothesisError);
  CHECK_THROWS_AS(make_switchback_pair(p.gamma, p.beta), ShapeError);
}

TEST_CASE("switchback residual written out by hand") {
  // (beta x id)(id x gamma) on x: sum_ab beta(x a) gamma^{ab} b
  auto p = make_bracket_pair<LaurentA>();
  Matrix<LaurentA> hand(2, 2);
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) hand(b, x) += p.beta(0, 2 * x + a) * p.gamma(2 * a + b, 0);
  CHECK(hand == Matrix<LaurentA>::identity(2));
  CHECK(verify_switchback(p));
}

TEST_CASE("bracket cohomology dimensions") {
  CohomologyDims expected;
  expected.z1 = 1;
  expected.b2 = 3;
  expected.z2 = 4;
  expected.b3 = 4;
  expected.z3 = 4;
  expected.b4 = 4;
  expected.h1 = 1;
  expected.h2 = 1;
  expected.h3 = 0;
  auto p = make_bracket_pair<RatFunA>();
  CHECK(cohomology_dims(p) == expected);
  CHECK(cohomology_dims(specialize_pair(p, GaussRat(2))) == expected);
  CHECK(cohomology_dims(specialize_pair(p, GaussRat(3))) == expected);
  CHECK_THROWS_AS(cohomology_dims(make_bracket_pair<LaurentA>()), NotAField);
}

TEST_CASE("the differentials square to zero on random pairs") {
  Sampler s(101);
  auto check = [&](const auto& p) {
    using S = std::decay_t<decltype(p.beta(0, 0))>;
    CHECK((matrix_D2(p) * matrix_D1(p)).is_zero());
    CHECK((matrix_D3(p) * matrix_D2(p)).is_zero());
    const int n = p.d * p.d;
    for (int k = 0; k < 3; ++k) {
      auto eta = s.map<S>(p.d, 1, 1);
      CHECK(D2(p, D1(p, eta)).is_zero());
      Cochain2<S> c{s.map<S>(p.d, 2, 0), s.map<S>(p.d, 0, 2)};
      CHECK(is_zero(D3(p, D2(p, c))));
    }
    CHECK(static_cast<int>(matrix_D1(p).rows()) == 2 * n);
  };
  check(make_bracket_pair<RatFunA>());
  for (int k = 0; k < 5; ++k) check(pair_from_form(random_invertible<GaussRat>(s, k < 3 ? 2 : 3)));
}

TEST_CASE("identity-form pair is switchback and its dims satisfy rank-nullity") {
  auto p = pair_from_form(Matrix<GaussRat>::identity(3));
  auto c = cohomology_dims(p);
  CHECK(c.z1 + c.b2 == 9);
  CHECK(c.z2 + c.b3 == 18);
  CHECK(c.z3 + c.b4 == 18);
  CHECK(c.h2 >= 0);
  CHECK(c.h3 >= 0);
}

TEST_CASE("2-cocycles of the bracket are cut out by four linear relations") {
  auto p = make_bracket_pair<RatFunA>();
  auto basis = solve_2cocycles(p);
  REQUIRE(basis.size() == 4);
  for (const auto& c : basis) {
    CHECK(satisfies_bracket_relations(c));
    CHECK(D2(p, c).is_zero());
  }
  Sampler s(7);
  for (int k = 0; k < 20; ++k) {
    auto c = random_bracket_cocycle(s);
    CHECK(D2(p, c).is_zero());
  }
  // breaking any single relation leaves the cocycle space
  for (std::size_t slot = 0; slot < 4; ++slot) {
    auto c = bracket_cocycle(RatFunA(), RatFunA(), RatFunA(), RatFunA());
    c.phi2.at(slot, 0) = RatFunA::one();
    CHECK_FALSE(D2(p, c).is_zero());
    CHECK_FALSE(satisfies_bracket_relations(c));
  }
}

TEST_CASE("Z^1 of the bracket is spanned by the identity") {
  auto p = make_bracket_pair<RatFunA>();
  auto z1 = solve_1cocycles(p);
  REQUIRE(z1.size() == 1);
  auto v = z1[0];
  CHECK(v == v(0, 0) * LinearMap<RatFunA>::identity(2, 1));
  CHECK(z1_check(p, LinearMap<RatFunA>::identity(2, 1)));
  auto off = LinearMap<RatFunA>::zero(MapShape{2, 1, 1});
  off.at(0, 1) = RatFunA::one();
  CHECK_FALSE(z1_check(p, off));
}

TEST_CASE("Z^3 of the bracket satisfies the derived relations") {
  auto p = make_bracket_pair<RatFunA>();
  auto z3 = z3_solve(p);
  REQUIRE(z3.size() == 4);
  for (const auto& c : z3) {
    const auto &a = c.xi1, &b = c.xi2;
    CHECK(b(0, 0) == a(1, 1));
    CHECK(b(1, 1) == a(0, 0));
    // ξ_a^b = entry (b, a)
    CHECK(b(1, 0) == -rA(-2) * a(1, 0));
    CHECK(b(0, 1) == -rA(2) * a(0, 1));
  }
  // every 3-cocycle is a coboundary
  for (const auto& c : z3) CHECK(solve(matrix_D2(p), coords(c)).has_value());
}

TEST_CASE("first-order obstruction equals the 2-differential") {
  Sampler s(55);
  auto p = make_bracket_pair<RatFunA>();
  for (int k = 0; k < 10; ++k) {
    Cochain2<RatFunA> c{s.map<RatFunA>(2, 2, 0), s.map<RatFunA>(2, 0, 2)};
    CHECK(primary_obstruction(deform(p, c)) == D2(p, c));
  }
  for (int k = 0; k < 10; ++k) {
    auto c = random_bracket_cocycle(s);
    auto pt = deform(p, c);
    CHECK(primary_obstruction(pt).is_zero());
    CHECK(verify_switchback(pt));
  }
}

TEST_CASE("deformed loop value") {
  Sampler s(56);
  auto p = make_bracket_pair<RatFunA>();
  RatFunA i(GaussRat::i());
  for (int k = 0; k < 10; ++k) {
    auto c = random_bracket_cocycle(s);
    auto delta = deform(p, c).delta0();
    CHECK(delta.body() == -rA(2) - rA(-2));
    CHECK(delta.slope() == i * (rA(2) - rA(-2)) * (rA(-1) * beta1(c, 0, 1) + rA(1) * beta1(c, 1, 0)));
  }
}

TEST_CASE("degree-2 extension of bracket cocycles") {
  Sampler s(57);
  auto p = make_bracket_pair<RatFunA>();
  for (int k = 0; k < 5; ++k) {
    auto c = random_bracket_cocycle(s);
    auto an = degree2_analysis(p, c);
    CHECK(an.psi1 == compose(tensor(c.phi1, LinearMap<RatFunA>::identity(2, 1)),
                             tensor(LinearMap<RatFunA>::identity(2, 1), c.phi2)));
    CHECK(an.is_cocycle);
    REQUIRE(an.extension.has_value());
    Cochain3<RatFunA> want{-an.psi1, -an.psi2};
    CHECK(D2(p, *an.extension) == want);
  }
  Cochain2<RatFunA> not_cocycle{s.map<RatFunA>(2, 2, 0), LinearMap<RatFunA>::zero(MapShape{2, 0, 2})};
  not_cocycle.phi1.at(0, 0) = RatFunA::one();
  CHECK_THROWS_AS(degree2_analysis(p, not_cocycle), HypothesisError);
}

TEST_CASE("weak Temperley-Lieb condition") {
  auto p = make_bracket_pair<RatFunA>();
  Sampler s(58);
  for (int k = 0; k < 5; ++k) CHECK(verify_weak_tl_condition(p, random_bracket_cocycle(s)));
  // gamma1^xx = -beta1_yy, gamma1^yy = -beta1_xx, and
  // gamma1^xy - A^2 beta1_yx = A^2 (gamma1^yx - A^-2 beta1_xy), here with both sides A^2
  auto c = bracket_cocycle(RatFunA(), RatFunA::one(), RatFunA(), RatFunA());
  c.phi2.at(1, 0) = c.phi2(1, 0) + rA(2);
  c.phi2.at(2, 0) = c.phi2(2, 0) + RatFunA::one();
  CHECK_FALSE(D2(p, c).is_zero());
  CHECK(verify_weak_tl_condition(p, c));
  c.phi2.at(2, 0) = c.phi2(2, 0) + RatFunA::one();
  CHECK_FALSE(verify_weak_tl_condition(p, c));
}

TEST_CASE("weak condition fails off the relations") {
  auto p = make_bracket_pair<RatFunA>();
  Cochain2<RatFunA> c{LinearMap<RatFunA>::zero(MapShape{2, 2, 0}), LinearMap<RatFunA>::zero(MapShape{2, 0, 2})};
  c.phi1.at(0, 0) = RatFunA::one();
  CHECK_FALSE(verify_weak_tl_condition(p, c));
}
