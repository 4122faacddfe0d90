#include "commands.hpp"

#include <filesystem>
#include <random>

#include "cocycle/braid_invariant.hpp"
#include "cocycle/config.hpp"
#include "cocycle/infiltration.hpp"
#include "cocycle/matrix_io.hpp"

namespace cocycle::cli {

namespace {

const char* const kBracketPair =
    "dimension = 2\n"
    "beta = \"0, i*A, -i*A^-1, 0\"\n"
    "gamma = \"0; i*A; -i*A^-1; 0\"\n"
    "a = \"A\"\n"
    "b = \"A^-1\"\n";

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string canonical_string(const FormalSum& s) {
  std::string out;
  for (const auto& [term, coeff] : s.canonical_terms()) {
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    long long c = coeff < 0 ? -coeff : coeff;
    if (c != 1) out += std::to_string(c) + "*";
    out += term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Loading inputs in the working ring

KeyValueConfig pair_source(const RunConfig& rc) {
  if (rc.pair == "bracket") return KeyValueConfig::parse(kBracketPair, "bracket");
  return KeyValueConfig::load(rc.pair);
}

template <class S>
PairConfig<S> load_pair(const RunConfig& rc) {
  KeyValueConfig kv = pair_source(rc);
  if constexpr (std::is_same_v<S, GaussRat>) {
    if (rc.specialize) {
      auto full = pair_from_config<RatFunA>(kv);
      PairConfig<GaussRat> out;
      out.pair = specialize_pair(full.pair, *rc.specialize);
      if (!verify_switchback(out.pair)) throw HypothesisError("the specialized pair is not switchback");
      if (full.a) out.a = specialize_A(*full.a, *rc.specialize);
      if (full.b) out.b = specialize_A(*full.b, *rc.specialize);
      return out;
    }
  }
  return pair_from_config<S>(kv);
}

template <class S>
Cochain2<S> load_cocycle(const RunConfig& rc, int d) {
  if (rc.cocycle.empty()) throw UsageError(rc.command + " needs --cocycle");
  KeyValueConfig kv = KeyValueConfig::load(rc.cocycle);
  if constexpr (std::is_same_v<S, GaussRat>) {
    if (rc.specialize) {
      auto c = cocycle_from_config<RatFunA>(kv, d);
      return Cochain2<GaussRat>{specialize_map(c.phi1, *rc.specialize), specialize_map(c.phi2, *rc.specialize)};
    }
  }
  return cocycle_from_config<S>(kv, d);
}

template <class S>
std::pair<S, S> skein_coefficients(const RunConfig& rc, const PairConfig<S>& pc) {
  if (!pc.a) throw UsageError("pair config '" + rc.pair + "' has no skein coefficients a, b");
  return {*pc.a, *pc.b};
}

/// The oracle value carried into the working ring.
template <class S>
S oracle_in(const RunConfig& rc, const LaurentA& x) {
  if constexpr (std::is_same_v<S, GaussRat>) {
    if (!rc.specialize) throw UsageError("oracle comparison over gauss needs --specialize");
    return specialize_A(x, *rc.specialize);
  } else {
    return embed<S>(x);
  }
}

std::vector<BraidWord> load_braids(const RunConfig& rc) {
  std::vector<BraidWord> out;
  for (const auto& text : rc.braids) {
    int n = rc.strands;
    if (n == 0) {
      BraidWord probe = parse_braid(text, 1000000);
      n = 1;
      for (const auto& l : probe.letters) n = std::max(n, l.index + 1);
    }
    out.push_back(parse_braid(text, n));
  }
  return out;
}

std::string strand_note(const BraidWord& w) { return std::to_string(w.n); }

// ---------------------------------------------------------------------------
// Commands

template <class S>
LinearMap<S> random_map(std::mt19937& rng, int d, int p, int q) {
  std::uniform_int_distribution<int> dist(-3, 3);
  LinearMap<S> f = LinearMap<S>::zero(MapShape{d, p, q});
  Matrix<S> m = f.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = from_gauss<S>(GaussRat(dist(rng), dist(rng)));
  }
  return LinearMap<S>(f.shape(), std::move(m));
}

template <class S>
Assignment<S> model_assignment(const RunConfig& rc, const IdentitySet& set) {
  Assignment<S> a;
  if (rc.model == "bracket") {
    auto pc = load_pair<S>(rc);
    a.d = pc.pair.d;
    for (const auto& g : set.generators) {
      if (g.name == "beta") a.generators.emplace("beta", pc.pair.beta);
      if (g.name == "gamma") a.generators.emplace("gamma", pc.pair.gamma);
    }
  } else if (rc.model == "dual-numbers") {
    // multiplication of K[x]/(x^2) on the basis (1, x)
    a.d = 2;
    for (const auto& g : set.generators) {
      if (g.p == 2 && g.q == 1) a.generators.emplace(g.name, parse_map<S>("1, 0, 0, 0; 0, 1, 1, 0", MapShape{2, 2, 1}));
    }
  } else {
    throw UsageError("unknown model '" + rc.model + "' (expected bracket or dual-numbers)");
  }
  return a;
}

template <class S>
void run_d2d1(const RunConfig& rc, const IdentitySet& set, Report& rep) {
  Assignment<S> a = model_assignment<S>(rc, set);
  std::mt19937 rng(rc.seed);
  int checked = 0;
  for (const auto& id : set.identities) {
    if (!rc.identity.empty() && id.label != rc.identity) continue;
    bool covered = true;
    auto uses = [&](const Expr& e, auto&& self) -> void {
      if (e.kind() == Expr::Kind::gen && !a.generators.count(e.name())) covered = false;
      for (const auto& c : e.children()) self(c, self);
    };
    uses(id.lhs, uses);
    uses(id.rhs, uses);
    if (!covered) {
      rep.record("skipped", {{"identity", id.label}, {"reason", "model does not assign every generator"}},
                 "d2 d1 on '" + id.label + "': skipped (model does not assign every generator)");
      continue;
    }
    int good = 0;
    for (int k = 0; k < rc.trials; ++k) {
      if (check_d2d1(set, id, a, random_map<S>(rng, a.d, 1, 1))) ++good;
    }
    ++checked;
    rep.check("d2 d1 = 0 on '" + id.label + "' (" + rc.model + ", " + std::to_string(rc.trials) + " random f)",
              good == rc.trials, good == rc.trials ? "" : std::to_string(rc.trials - good) + " nonzero");
  }
  if (checked == 0) throw UsageError("no identity could be checked with model '" + rc.model + "'");
}

template <class S>
int cmd_infiltrate(const RunConfig& rc, Report& rep) {
  IdentitySet set = load_identities(rc.idl);
  bool any = false;
  for (const auto& id : set.identities) {
    if (!rc.identity.empty() && id.label != rc.identity) continue;
    any = true;
    ElaboratePlan plan = elaborate(id);
    Infiltration inf = infiltrate(plan, set.generators);
    FormalSum d2 = inf.differential();
    rep.record("identity",
               {{"label", id.label},
                {"plan", plan.to_string()},
                {"lhs", inf.lhs.to_string()},
                {"rhs", inf.rhs.to_string()},
                {"d2", d2.to_string()},
                {"canonical", canonical_string(d2)}},
               "identity " + id.label + "\n  plan:      " + plan.to_string() + "\n  lhs:       " +
                   inf.lhs.to_string() + "\n  rhs:       " + inf.rhs.to_string() + "\n  d2:        " +
                   d2.to_string() + "\n  canonical: " + canonical_string(d2));
  }
  if (!any) throw UsageError("no identity labelled '" + rc.identity + "' in " + rc.idl);
  if (rc.check_d2d1) run_d2d1<S>(rc, set, rep);
  return 0;
}

template <class S>
int cmd_check_d2d1(const RunConfig& rc, Report& rep) {
  run_d2d1<S>(rc, load_identities(rc.idl), rep);
  return 0;
}

template <class S>
void describe_pair(const SwitchbackPair<S>& p, Report& rep) {
  rep.record("pair",
             {{"dimension", std::to_string(p.d)},
              {"beta", format_map(p.beta)},
              {"gamma", format_map(p.gamma)},
              {"delta0", format_scalar(p.delta0())}},
             "beta   = " + format_map(p.beta) + "\ngamma  = " + format_map(p.gamma) +
                 "\ndelta0 = " + format_scalar(p.delta0()));
}

template <class S>
int cmd_verify_switchback(const RunConfig& rc, Report& rep) {
  KeyValueConfig kv = pair_source(rc);
  // load without the validating constructor so that failures are reported
  SwitchbackPair<S> p;
  if constexpr (std::is_same_v<S, GaussRat>) {
    if (rc.specialize) {
      auto d = kv.get_int("dimension");
      auto beta = parse_map<RatFunA>(kv.get("beta"), MapShape{d, 2, 0});
      auto gamma = parse_map<RatFunA>(kv.get("gamma"), MapShape{d, 0, 2});
      p = specialize_pair(SwitchbackPair<RatFunA>{d, beta, gamma}, *rc.specialize);
    }
  }
  if (p.d == 0) {
    kv.require_keys_within({"dimension", "ring", "beta", "gamma", "a", "b"});
    const int d = kv.get_int("dimension");
    auto beta = parse_map<S>(kv.get("beta"), MapShape{d, 2, 0});
    if (kv.has("gamma")) {
      p = SwitchbackPair<S>{d, beta, parse_map<S>(kv.get("gamma"), MapShape{d, 0, 2})};
    } else {
      p = load_pair<S>(rc).pair;
    }
  }
  describe_pair(p, rep);
  auto res = switchback_residual(p);
  rep.check("(beta x 1)(1 x gamma) = 1", res.xi1.is_zero(), res.xi1.is_zero() ? "" : "residual " + format_map(res.xi1));
  rep.check("(1 x beta)(gamma x 1) = 1", res.xi2.is_zero(), res.xi2.is_zero() ? "" : "residual " + format_map(res.xi2));
  return 0;
}

template <class S>
int cmd_cohomology(const RunConfig& rc, Report& rep) {
  if constexpr (!is_field_v<S>) {
    throw NotAField("cohomology needs a field ring (gauss or ratfun), got " + ring_name(RingTraits<S>::tag));
  } else {
    auto p = load_pair<S>(rc).pair;
    CohomologyDims c = cohomology_dims(p);
    rep.record("dims",
               {{"z1", std::to_string(c.z1)},
                {"b2", std::to_string(c.b2)},
                {"z2", std::to_string(c.z2)},
                {"b3", std::to_string(c.b3)},
                {"z3", std::to_string(c.z3)},
                {"b4", std::to_string(c.b4)},
                {"h1", std::to_string(c.h1)},
                {"h2", std::to_string(c.h2)},
                {"h3", std::to_string(c.h3)}},
               "z1=" + std::to_string(c.z1) + " b2=" + std::to_string(c.b2) + " z2=" + std::to_string(c.z2) +
                   " b3=" + std::to_string(c.b3) + " z3=" + std::to_string(c.z3) + " b4=" + std::to_string(c.b4) +
                   "\nh1=" + std::to_string(c.h1) + " h2=" + std::to_string(c.h2) + " h3=" + std::to_string(c.h3));
    return 0;
  }
}

template <class S>
int cmd_solve_cocycles(const RunConfig& rc, Report& rep) {
  if constexpr (!is_field_v<S>) {
    throw NotAField("solve-cocycles needs a field ring (gauss or ratfun), got " + ring_name(RingTraits<S>::tag));
  } else {
    auto p = load_pair<S>(rc).pair;
    int k = 0;
    if (rc.degree == 1) {
      for (const auto& eta : solve_1cocycles(p)) {
        ++k;
        rep.record("z1", {{"index", std::to_string(k)}, {"eta", format_map(eta)}},
                   "# Z^1 basis vector " + std::to_string(k) + "\neta = \"" + format_map(eta) + "\"");
      }
    } else if (rc.degree == 2) {
      bool is_bracket = false;
      if constexpr (HasVariableA<S>) {
        auto b = make_bracket_pair<S>();
        is_bracket = p.beta == b.beta && p.gamma == b.gamma;
      }
      for (const auto& c : solve_2cocycles(p)) {
        ++k;
        rep.record("z2", {{"index", std::to_string(k)}, {"phi1", format_map(c.phi1)}, {"phi2", format_map(c.phi2)}},
                   "# Z^2 basis vector " + std::to_string(k) + "\nphi1 = \"" + format_map(c.phi1) +
                       "\"\nphi2 = \"" + format_map(c.phi2) + "\"");
        rep.check("D2(phi) = 0 for vector " + std::to_string(k), D2(p, c).is_zero());
        if constexpr (HasVariableA<S>) {
          if (is_bracket) rep.check("bracket relations for vector " + std::to_string(k), satisfies_bracket_relations(c));
        }
      }
    } else if (rc.degree == 3) {
      for (const auto& x : z3_solve(p)) {
        ++k;
        rep.record("z3", {{"index", std::to_string(k)}, {"xi1", format_map(x.xi1)}, {"xi2", format_map(x.xi2)}},
                   "# Z^3 basis vector " + std::to_string(k) + "\nxi1 = \"" + format_map(x.xi1) + "\"\nxi2 = \"" +
                       format_map(x.xi2) + "\"");
      }
    } else {
      throw UsageError("--degree must be 1, 2 or 3");
    }
    rep.record("basis", {{"degree", std::to_string(rc.degree)}, {"size", std::to_string(k)}},
               "dim Z^" + std::to_string(rc.degree) + " = " + std::to_string(k));
    return 0;
  }
}

template <class S>
int cmd_deform(const RunConfig& rc, Report& rep) {
  auto p = load_pair<S>(rc).pair;
  auto c = load_cocycle<S>(rc, p.d);
  auto pt = deform(p, c);
  auto obs = primary_obstruction(pt);
  rep.record("deformed",
             {{"beta_t", format_map(pt.beta)}, {"gamma_t", format_map(pt.gamma)}, {"delta0_t", format_scalar(pt.delta0())}},
             "beta_t   = " + format_map(pt.beta) + "\ngamma_t  = " + format_map(pt.gamma) +
                 "\ndelta0_t = " + format_scalar(pt.delta0()));
  rep.record("obstruction", {{"xi1", format_map(obs.xi1)}, {"xi2", format_map(obs.xi2)}},
             "obstruction xi1 = " + format_map(obs.xi1) + "\nobstruction xi2 = " + format_map(obs.xi2));
  bool weak = verify_weak_tl_condition(p, c);
  rep.record("weak-tl", {{"holds", weak ? "true" : "false"}},
             std::string("weak Temperley-Lieb condition: ") + (weak ? "holds" : "fails"));
  const bool cocycle = obs.is_zero();
  rep.check("switchback mod t^2", cocycle, cocycle ? "" : "the cochain is not a 2-cocycle");
  if constexpr (is_field_v<S>) {
    if (cocycle) {
      auto an = degree2_analysis(p, c);
      rep.record("psi", {{"psi1", format_map(an.psi1)}, {"psi2", format_map(an.psi2)}},
                 "psi1 = " + format_map(an.psi1) + "\npsi2 = " + format_map(an.psi2));
      rep.check("D3(psi) = 0", an.is_cocycle);
      if (an.extension) {
        rep.record("extension", {{"beta2", format_map(an.extension->phi1)}, {"gamma2", format_map(an.extension->phi2)}},
                   "beta2  = " + format_map(an.extension->phi1) + "\ngamma2 = " + format_map(an.extension->phi2));
      }
      rep.check("degree-2 extension exists", an.extension.has_value());
    }
  }
  return 0;
}

template <class S>
SkeinRMatrix<Dual<S>> deformed_R(const RunConfig& rc, const PairConfig<S>& pc) {
  auto [a0, b0] = skein_coefficients(rc, pc);
  auto pt = deform(pc.pair, load_cocycle<S>(rc, pc.pair.d));
  if (!primary_obstruction(pt).is_zero()) throw HypothesisError("the cochain in " + rc.cocycle + " is not a 2-cocycle");
  auto co = solve_deformed_coefficients(pt, a0, b0);
  return build_R(pt, co.a, co.b);
}

template <class T>
void report_ybe(const SkeinRMatrix<T>& R, Report& rep) {
  rep.record("rmatrix",
             {{"a", format_scalar(R.a)}, {"b", format_scalar(R.b)}, {"delta0", format_scalar(R.delta0)}, {"R", format_map(R.R)}},
             "a = " + format_scalar(R.a) + "\nb = " + format_scalar(R.b) + "\ndelta0 = " + format_scalar(R.delta0) +
                 "\nR = " + format_map(R.R));
  auto y = verify_ybe(R.R);
  rep.check("Yang-Baxter equation", y.ok);
}

template <class S>
int cmd_verify_ybe(const RunConfig& rc, Report& rep) {
  auto pc = load_pair<S>(rc);
  if (rc.cocycle.empty()) {
    auto [a, b] = skein_coefficients(rc, pc);
    report_ybe(build_R(pc.pair, a, b), rep);
  } else {
    auto R = deformed_R(rc, pc);
    report_ybe(R, rep);
    rep.record("delta0-slope", {{"value", format_scalar(R.delta0.slope())}},
               "delta0 slope = " + format_scalar(R.delta0.slope()));
  }
  return 0;
}

template <class T>
void report_tl(const SwitchbackPair<T>& p, int max_n, Report& rep) {
  const T delta = p.delta0();
  rep.record("delta", {{"value", format_scalar(delta)}}, "delta = " + format_scalar(delta));
  for (int n = 2; n <= max_n; ++n) {
    auto r = verify_tl_relations(tl_generators(p, n), delta);
    rep.check("Temperley-Lieb relations, n = " + std::to_string(n), r.ok, r.ok ? "" : r.failing);
  }
}

template <class S>
int cmd_tl_check(const RunConfig& rc, Report& rep) {
  if (rc.max_n < 2) throw UsageError("--max-n must be at least 2");
  auto pc = load_pair<S>(rc);
  if (rc.cocycle.empty()) {
    report_tl(pc.pair, rc.max_n, rep);
  } else {
    auto c = load_cocycle<S>(rc, pc.pair.d);
    report_tl(deform(pc.pair, c), rc.max_n, rep);
  }
  return 0;
}

template <class T>
void report_turaev(const TuraevData<T>& td, Report& rep, bool verbose) {
  auto tr = verify_turaev(td);
  if (verbose) {
    rep.record("turaev", {{"u", format_scalar(td.u)}, {"v", format_scalar(td.v)}, {"nu", format_map(td.nu)}},
               "nu = " + format_map(td.nu) + "\nu = " + format_scalar(td.u) + "\nv = " + format_scalar(td.v));
    for (const auto& [name, ok] : tr.checks) rep.check(name, ok);
  } else if (!tr.ok) {
    rep.check("Turaev conditions", false, tr.failing);
  }
  if (!tr.ok) throw HypothesisError("Turaev condition fails: " + tr.failing);
}

template <class S, class T>
void report_values(const RunConfig& rc, const TuraevData<T>& td, Report& rep) {
  const auto words = load_braids(rc);
  for (const auto& w : words) {
    T value = rc.raw ? invariant(td, w) : normalized_invariant(td, w);
    rep.record("value", {{"word", w.to_string()}, {"strands", strand_note(w)}, {"value", format_scalar(value)}},
               w.to_string() + "\t" + format_scalar(value));
    if (rc.compare_oracle) {
      LaurentA oracle = jones_oracle(w);
      S expected = oracle_in<S>(rc, oracle);
      S body;
      if constexpr (is_dual_v<T>) {
        body = value.body();
      } else {
        body = value;
      }
      if (rc.raw) {
        if constexpr (is_dual_v<T>) {
          expected = expected * td.R.pair.delta0().body();
        } else {
          expected = expected * td.R.pair.delta0();
        }
      }
      rep.check("t = 0 value of '" + w.to_string() + "' matches the oracle", body == expected,
                body == expected ? "" : "oracle " + format_scalar(expected));
    }
  }
}

template <class S>
int cmd_invariant(const RunConfig& rc, Report& rep) {
  if (rc.braids.empty()) throw UsageError("invariant needs at least one --braid");
  auto pc = load_pair<S>(rc);
  if (rc.deformed) {
    auto td = make_turaev(deformed_R(rc, pc));
    report_turaev(td, rep, false);
    report_values<S>(rc, td, rep);
  } else {
    if (!rc.cocycle.empty()) throw UsageError("--cocycle needs --deformed for invariant");
    auto [a, b] = skein_coefficients(rc, pc);
    auto td = make_turaev(build_R(pc.pair, a, b));
    report_turaev(td, rep, false);
    report_values<S>(rc, td, rep);
  }
  return 0;
}

int cmd_jones_oracle(const RunConfig& rc, Report& rep) {
  if (rc.braids.empty()) throw UsageError("jones-oracle needs at least one --braid");
  for (const auto& w : load_braids(rc)) {
    LaurentA v = rc.raw ? bracket_state_sum(w.n, w.letters) : jones_oracle(w);
    rep.record("oracle", {{"word", w.to_string()}, {"strands", strand_note(w)}, {"value", v.to_string()}},
               w.to_string() + "\t" + v.to_string());
  }
  return 0;
}

int cmd_compare(const RunConfig& rc, Report& rep) {
  auto pc = load_pair<RatFunA>(rc);
  auto td = make_turaev(deformed_R(rc, pc));
  report_turaev(td, rep, true);
  std::vector<BraidWord> corpus;
  if (rc.braids.empty()) {
    corpus = {parse_braid("", 1), parse_braid("", 2), parse_braid("s1 s1 s1", 2), parse_braid("s1 s2^-1 s1 s2^-1", 3),
              parse_braid("s1 s1 s1 s1 s1", 2)};
  } else {
    corpus = load_braids(rc);
  }
  auto r = truncated_jones_compare(td, corpus);
  const auto& k = r.constants;
  rep.record("constants",
             {{"c", k.c.to_string()}, {"ell", k.ell.to_string()}, {"m", k.m.to_string()}, {"delta0", k.delta0.to_string()},
              {"ell_sign", std::to_string(k.ell_sign)}},
             "c      = " + k.c.to_string() + "\nell    = " + k.ell.to_string() + "\nm      = " + k.m.to_string() +
                 "\ndelta0 = " + k.delta0.to_string() + "\nell    = " + (k.ell_sign > 0 ? "+c^2" : k.ell_sign < 0 ? "-c^2" : "neither +c^2 nor -c^2"));
  rep.check("ell^2 = c^4", k.ell_squared_is_c4);
  rep.check("delta0 = -(c + c^-1)", k.delta_is_c_form);
  for (const auto& row : r.rows) {
    rep.record("row",
               {{"word", row.word.to_string()}, {"strands", strand_note(row.word)}, {"value", row.value.to_string()},
                {"oracle", row.oracle.to_string()}},
               row.word.to_string() + "\t" + row.value.to_string() + "\toracle " + row.oracle.to_string());
    rep.check("t = 0 part of '" + row.word.to_string() + "' equals the oracle", row.body_matches);
    rep.check("'" + row.word.to_string() + "' equals the oracle at A^2 = c", row.substitution_matches);
  }
  rep.check("skein relation at " + std::to_string(r.skein_triples) + " crossings", r.skein_failures == 0,
            r.skein_failures == 0 ? "" : std::to_string(r.skein_failures) + " failures");
  return 0;
}

template <class F>
int with_ring(RingTag tag, F&& f) {
  switch (tag) {
    case RingTag::gauss: return f(GaussRat{});
    case RingTag::laurent: return f(LaurentA{});
    case RingTag::ratfun: return f(RatFunA{});
    default: throw UsageError("--ring must be gauss, laurent or ratfun");
  }
}

void validate(RunConfig& rc) {
  if (rc.specialize) {
    if (rc.ring_given && rc.ring != RingTag::gauss) {
      throw UsageError("--specialize evaluates A, so the working ring is gauss, not " + ring_name(rc.ring));
    }
    rc.ring = RingTag::gauss;
  }
  auto need_file = [](const std::string& path, const char* what) {
    if (path.empty()) return;
    if (!std::filesystem::exists(path)) throw UsageError(std::string(what) + " '" + path + "' does not exist");
  };
  need_file(rc.idl, "identity file");
  need_file(rc.cocycle, "cocycle config");
  if (rc.pair != "bracket") need_file(rc.pair, "pair config");
  if (!rc.ring_given && !rc.specialize && !rc.pair.empty()) {
    if (auto r = config_ring(pair_source(rc))) rc.ring = *r;
  }
  if ((rc.command == "cohomology" || rc.command == "solve-cocycles") && !is_field_tag(rc.ring)) {
    throw NotAField(rc.command + " needs a field ring (gauss or ratfun), got " + ring_name(rc.ring));
  }
  if (rc.command == "compare" && rc.ring != RingTag::ratfun) {
    throw UsageError("compare works over ratfun only");
  }
  if (rc.deformed && rc.cocycle.empty()) throw UsageError("--deformed needs --cocycle");
  if (rc.trials < 1) throw UsageError("--trials must be positive");
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
  if (dynamic_cast<const NotAField*>(&e)) return "NotAField";
  if (dynamic_cast<const NotInvertible*>(&e)) return "NotInvertible";
  if (dynamic_cast<const HypothesisError*>(&e)) return "HypothesisError";
  if (dynamic_cast<const DemotionError*>(&e)) return "DemotionError";
  if (dynamic_cast<const RingMismatch*>(&e)) return "RingMismatch";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

}  // namespace

GaussRat parse_specialization(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || text.substr(0, eq) != "A") {
    throw ParseError("expected A=<value> in --specialize", 1, 1);
  }
  return parse_scalar<GaussRat>(text.substr(eq + 1));
}

int run(RunConfig rc, std::ostream& out, std::ostream& err) {
  Report rep(rc.format, out);
  int code = 0;
  try {
    validate(rc);
    const std::string& c = rc.command;
    auto dispatch = [&](auto body) { return with_ring(rc.ring, body); };
    if (c == "infiltrate") {
      code = dispatch([&](auto tag) { return cmd_infiltrate<decltype(tag)>(rc, rep); });
    } else if (c == "check-d2d1") {
      code = dispatch([&](auto tag) { return cmd_check_d2d1<decltype(tag)>(rc, rep); });
    } else if (c == "verify-switchback") {
      code = dispatch([&](auto tag) { return cmd_verify_switchback<decltype(tag)>(rc, rep); });
    } else if (c == "cohomology") {
      code = dispatch([&](auto tag) { return cmd_cohomology<decltype(tag)>(rc, rep); });
    } else if (c == "solve-cocycles") {
      code = dispatch([&](auto tag) { return cmd_solve_cocycles<decltype(tag)>(rc, rep); });
    } else if (c == "deform") {
      code = dispatch([&](auto tag) { return cmd_deform<decltype(tag)>(rc, rep); });
    } else if (c == "verify-ybe") {
      code = dispatch([&](auto tag) { return cmd_verify_ybe<decltype(tag)>(rc, rep); });
    } else if (c == "tl-check") {
      code = dispatch([&](auto tag) { return cmd_tl_check<decltype(tag)>(rc, rep); });
    } else if (c == "invariant") {
      code = dispatch([&](auto tag) { return cmd_invariant<decltype(tag)>(rc, rep); });
    } else if (c == "jones-oracle") {
      code = cmd_jones_oracle(rc, rep);
    } else if (c == "compare") {
      code = cmd_compare(rc, rep);
    } else {
      throw UsageError("unknown command '" + c + "'");
    }
  } catch (const HypothesisError& e) {
    // a failed precondition of the requested verification
    if (rc.format == Report::Format::records) {
      rep.record("failure", {{"command", rc.command}, {"kind", error_kind(e)}, {"message", e.what()}});
    } else {
      err << "error: " << e.what() << '\n';
    }
    return 1;
  } catch (const std::exception& e) {
    if (rc.format == Report::Format::records) {
      rep.record("error", {{"kind", error_kind(e)}, {"message", e.what()}});
    } else {
      err << "error: " << e.what() << '\n';
    }
    return 2;
  }
  return code != 0 ? code : rep.finish(rc.command);
}

}  // namespace cocycle::cli
