#include "cocycle/braid_invariant.hpp"

namespace cocycle {

std::optional<std::size_t> skein_position(const BraidWord& wp, const BraidWord& wm, const BraidWord& w0) {
  if (wp.n != wm.n || wp.n != w0.n) return std::nullopt;
  const BraidWord rm = wm.freely_reduced(), r0 = w0.freely_reduced();
  for (std::size_t j = 0; j < wp.letters.size(); ++j) {
    if (wp.letters[j].sign != 1) continue;
    BraidWord flipped = wp, removed = wp;
    flipped.letters[j].sign = -1;
    removed.letters.erase(removed.letters.begin() + static_cast<std::ptrdiff_t>(j));
    if (flipped.freely_reduced() == rm && removed.freely_reduced() == r0) return j;
  }
  return std::nullopt;
}

SkeinConstants skein_constants(const TuraevData<Dual<RatFunA>>& td) {
  using D = Dual<RatFunA>;
  SkeinConstants k;
  const auto& r = td.R;
  k.c = r.a * r.b.inverse();
  k.ell = r.b.inverse() * td.u;
  k.m = r.a * r.bp - r.ap * r.b;
  k.delta0 = r.delta0;
  D c2 = k.c * k.c;
  k.ell_squared_is_c4 = k.ell * k.ell == c2 * c2;
  k.delta_is_c_form = k.delta0 == -(k.c + k.c.inverse());
  k.ell_sign = k.ell == c2 ? 1 : (k.ell == -c2 ? -1 : 0);
  return k;
}

Dual<RatFunA> substitute_A_squared(const LaurentA& j, const Dual<RatFunA>& c) {
  Dual<RatFunA> out;
  for (const auto& t : j.terms()) {
    if (t.exp % 2 != 0) throw Error("odd power of A in " + j.to_string());
    out += Dual<RatFunA>(RatFunA(t.coeff)) * int_power(c, t.exp / 2);
  }
  return out;
}

TruncatedJonesReport truncated_jones_compare(const TuraevData<Dual<RatFunA>>& td, const std::vector<BraidWord>& corpus) {
  using D = Dual<RatFunA>;
  TruncatedJonesReport rep;
  rep.constants = skein_constants(td);
  const auto& k = rep.constants;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  if (!k.ell_squared_is_c4) fail("ell^2 != c^4: ell = " + k.ell.to_string() + ", c = " + k.c.to_string());
  if (!k.delta_is_c_form) fail("delta0 != -(c + c^-1): delta0 = " + k.delta0.to_string());

  const D unknot = invariant(td, BraidWord{1, {}});
  const D unknot_inv = unknot.inverse();
  for (const auto& w : corpus) {
    JonesRow row;
    row.word = w;
    row.oracle = jones_oracle(w);
    row.value = invariant(td, w) * unknot_inv;
    row.body_matches = row.value.body() == RatFunA(row.oracle);
    row.substitution_matches = row.value == substitute_A_squared(row.oracle, k.c);
    if (!row.body_matches) {
      fail("'" + w.to_string() + "': t = 0 part " + row.value.body().to_string() + " but oracle gives " +
           row.oracle.to_string());
    }
    if (!row.substitution_matches) {
      fail("'" + w.to_string() + "': value " + row.value.to_string() + " differs from the oracle at A^2 = c");
    }
    // HOMFLYPT-form skein relation at every letter of the word
    for (std::size_t j = 0; j < w.letters.size(); ++j) {
      BraidWord wp = w, wm = w, w0 = w;
      wp.letters[j].sign = 1;
      wm.letters[j].sign = -1;
      w0.letters.erase(w0.letters.begin() + static_cast<std::ptrdiff_t>(j));
      D lhs = k.ell * invariant(td, wp) * unknot_inv - k.ell.inverse() * invariant(td, wm) * unknot_inv;
      D rhs = k.m * invariant(td, w0) * unknot_inv;
      ++rep.skein_triples;
      if (lhs != rhs) {
        ++rep.skein_failures;
        fail("skein relation fails at letter " + std::to_string(j + 1) + " of '" + w.to_string() + "'");
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace cocycle
