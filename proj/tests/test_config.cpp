#include <doctest.h>

#include "cocycle/config.hpp"
#include "cocycle/rmatrix.hpp"

using namespace cocycle;

namespace {

std::string fixture(const std::string& name) { return std::string(COCYCLE_FIXTURES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("key-value parsing") {
  auto cfg = KeyValueConfig::parse("# comment\ndimension = 2\n  beta = \"0, 1 # not a comment\"  # trailing\n");
  CHECK(cfg.get_int("dimension") == 2);
  CHECK(cfg.get("beta") == "0, 1 # not a comment");
  CHECK_FALSE(cfg.has("gamma"));
  CHECK_FALSE(cfg.find("gamma"));
  CHECK_THROWS_AS(cfg.get("gamma"), Error);

  try {
    KeyValueConfig::parse("a = 1\n\n  b \"x\"\n", "t");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(KeyValueConfig::parse("a = 1\na = 2\n"), ParseError);
  CHECK_THROWS_AS(KeyValueConfig::parse("a = \"open\n"), ParseError);
  CHECK_THROWS_AS(KeyValueConfig::parse("a = word\n"), ParseError);
  CHECK_THROWS_AS(KeyValueConfig::parse("a b = 1\n"), ParseError);
  CHECK_THROWS_AS(KeyValueConfig::parse("dimension = \"two\"\n").get_int("dimension"), ParseError);
  CHECK_THROWS_AS(KeyValueConfig::parse("colour = 1\n").require_keys_within({"color"}), ParseError);
}

TEST_CASE("bundled bracket pair") {
  auto pc = pair_from_config<RatFunA>(KeyValueConfig::load(fixture("bracket.pair")));
  auto b = make_bracket_pair<RatFunA>();
  CHECK(pc.pair.beta == b.beta);
  CHECK(pc.pair.gamma == b.gamma);
  CHECK(*pc.a == RatFunA(LaurentA::monomial(1)));
  CHECK(*pc.b == RatFunA(LaurentA::monomial(-1)));
  // the same pair over Laurent polynomials, where gamma must be given
  auto pl = pair_from_config<LaurentA>(KeyValueConfig::load(fixture("bracket.pair")));
  CHECK(pl.pair.gamma == make_bracket_pair<LaurentA>().gamma);
}

TEST_CASE("pair configs") {
  // gamma defaults to the inverse form
  auto pc = pair_from_config<GaussRat>(KeyValueConfig::parse("dimension = 2\nbeta = \"0, 1, -1, 0\"\n"));
  CHECK(verify_switchback(pc.pair));
  CHECK(pc.pair.gamma == parse_map<GaussRat>("0; -1; 1; 0", MapShape{2, 0, 2}));
  CHECK_FALSE(pc.a);
  CHECK_THROWS_AS(pair_from_config<LaurentA>(KeyValueConfig::parse("dimension = 2\nbeta = \"0, 1, -1, 0\"\n")),
                  NotAField);
  // a wrong gamma fails validation
  CHECK_THROWS_AS(pair_from_config<GaussRat>(
                      KeyValueConfig::parse("dimension = 2\nbeta = \"0, 1, -1, 0\"\ngamma = \"0; 1; 1; 0\"\n")),
                  HypothesisError);
  CHECK_THROWS_AS(pair_from_config<GaussRat>(KeyValueConfig::parse("dimension = 2\nbeta = \"0, 1, -1\"\n")),
                  ShapeError);
  CHECK_THROWS_AS(pair_from_config<GaussRat>(KeyValueConfig::parse("dimension = 2\nbeta = \"0, 1, -1, 0\"\na = \"1\"\n")),
                  Error);
  CHECK_THROWS_AS(pair_from_config<GaussRat>(KeyValueConfig::parse("dimension = 0\nbeta = \"\"\n")), Error);

  auto rp = pair_from_config<GaussRat>(KeyValueConfig::load(fixture("random.pair")));
  CHECK(rp.pair.d == 3);
  CHECK(verify_switchback(rp.pair));
}

TEST_CASE("bundled cocycles span Z^2") {
  auto p = make_bracket_pair<RatFunA>();
  Matrix<RatFunA> span(8, 4);
  std::size_t col = 0;
  for (const char* name : {"z2_xx", "z2_xy", "z2_yx", "z2_yy"}) {
    auto c = cocycle_from_config<RatFunA>(KeyValueConfig::load(fixture(std::string("cocycles/") + name + ".toml")), 2);
    CHECK(D2(p, c).is_zero());
    CHECK(satisfies_bracket_relations(c));
    auto v = coords(c);
    for (std::size_t r = 0; r < 8; ++r) span(r, col) = v[r];
    ++col;
  }
  CHECK(rank(span) == 4);

  auto bad = cocycle_from_config<RatFunA>(KeyValueConfig::load(fixture("cocycles/not_cocycle.toml")), 2);
  CHECK_FALSE(D2(p, bad).is_zero());
  CHECK_FALSE(verify_weak_tl_condition(p, bad));

  auto weak = cocycle_from_config<RatFunA>(KeyValueConfig::load(fixture("cocycles/weak_only.toml")), 2);
  CHECK_FALSE(D2(p, weak).is_zero());
  CHECK(verify_weak_tl_condition(p, weak));
  auto pt = deform(p, weak);
  for (int n = 2; n <= 4; ++n) CHECK(verify_tl_relations(tl_generators(pt, n), pt.delta0()).ok);

  CHECK_THROWS_AS(cocycle_from_config<RatFunA>(KeyValueConfig::parse("phi1 = \"1, 0, 0, 0\"\n"), 2), Error);
}

TEST_CASE("random pair fixture cohomology") {
  auto p = pair_from_config<GaussRat>(KeyValueConfig::load(fixture("random.pair"))).pair;
  auto c = cohomology_dims(p);
  CHECK(c.z1 + c.b2 == 9);
  CHECK(c.z2 + c.b3 == 18);
  CHECK(c.z3 + c.b4 == 18);
  CHECK(static_cast<int>(solve_1cocycles(p).size()) == c.z1);
  auto z2 = solve_2cocycles(p);
  CHECK(static_cast<int>(z2.size()) == c.z2);
  for (const auto& phi : z2) CHECK(D2(p, phi).is_zero());
  CHECK(c.h2 == 2);
}

TEST_CASE("bracket cocycles by coordinates") {
  auto cfg = KeyValueConfig::load(fixture("cocycles/bracket_sample.toml"));
  auto c = cocycle_from_config<RatFunA>(cfg, 2);
  auto A = RatFunA(LaurentA::monomial(1));
  auto Ainv = RatFunA(LaurentA::monomial(-1));
  auto byx = Ainv / (A * A + RatFunA(1));
  // gamma1 column (xx, xy, yx, yy) = (-beta1_yy, A^2 beta1_yx, A^-2 beta1_xy, -beta1_xx)
  CHECK(c.phi2.matrix()(0, 0) == -parse_scalar<RatFunA>("2i"));
  CHECK(c.phi2.matrix()(1, 0) == A * A * byx);
  CHECK(c.phi2.matrix()(2, 0) == Ainv * Ainv * (A * A - RatFunA(1)));
  CHECK(c.phi2.matrix()(3, 0) == RatFunA(-1));
  CHECK(c.phi1.matrix()(0, 2) == byx);
  CHECK(D2(make_bracket_pair<RatFunA>(), c).is_zero());

  CHECK_THROWS_AS(cocycle_from_config<RatFunA>(cfg, 3), ShapeError);
  CHECK_THROWS_AS(cocycle_from_config<GaussRat>(KeyValueConfig::parse("beta1_xx = \"1\"\nbeta1_xy = \"0\"\n"
                                                                     "beta1_yx = \"0\"\nbeta1_yy = \"0\"\n"),
                                                2),
                  Error);
  CHECK_THROWS_AS(cocycle_from_config<RatFunA>(KeyValueConfig::parse("beta1_xx = \"1\"\n"), 2), Error);
  CHECK_THROWS_AS(
      cocycle_from_config<RatFunA>(KeyValueConfig::parse("beta1_xx = \"1\"\nphi1 = \"1, 0, 0, 0\"\n"), 2), Error);
}

TEST_CASE("ring key of pair configs") {
  CHECK_FALSE(config_ring(KeyValueConfig::parse("dimension = 2\n")));
  CHECK(*config_ring(KeyValueConfig::parse("ring = \"laurent\"\n")) == RingTag::laurent);
  CHECK(*config_ring(KeyValueConfig::parse("ring = \"dual-ratfun\"\n")) == RingTag::ratfun);
  CHECK_THROWS_AS(config_ring(KeyValueConfig::parse("ring = \"reals\"\n")), Error);
  auto pc = pair_from_config<LaurentA>(
      KeyValueConfig::parse("dimension = 2\nring = \"laurent\"\nbeta = \"0, i*A, -i*A^-1, 0\"\n"
                            "gamma = \"0; i*A; -i*A^-1; 0\"\n"));
  CHECK(verify_switchback(pc.pair));
}
