#pragma once

// Skein R-matrices R = a·1 + b·(gamma beta) built from a switchback pair, the
// Yang-Baxter check, the deformed coefficient solve and the Temperley-Lieb
// generators e_i.

#include <string>
#include <vector>

#include "cocycle/switchback.hpp"

namespace cocycle {

template <class S>
struct SkeinRMatrix {
  SwitchbackPair<S> pair;
  S a, b;    // R = a·1 + b·(gamma beta)
  S ap, bp;  // Rinv = a'·1 + b'·(gamma beta)
  S delta0;
  LinearMap<S> R;
  LinearMap<S> Rinv;
};

/// gamma∘beta as a map 2 -> 2.
template <class S>
LinearMap<S> cup_cap(const SwitchbackPair<S>& p) {
  return compose(p.gamma, p.beta);
}

template <class S>
S skein_quadratic(const S& a, const S& b, const S& delta0) {
  return a * a + b * b + delta0 * a * b;
}

template <class S>
SkeinRMatrix<S> build_R(const SwitchbackPair<S>& p, const S& a, const S& b) {
  if (!a.is_invertible()) throw NotInvertible("the coefficient a = " + format_scalar(a) + " is not invertible");
  if (!b.is_invertible()) throw NotInvertible("the coefficient b = " + format_scalar(b) + " is not invertible");
  S delta0 = p.delta0();
  S residual = skein_quadratic(a, b, delta0);
  if (!residual.is_zero()) {
    throw HypothesisError("a^2 + b^2 + delta0*a*b = " + format_scalar(residual) + ", not 0");
  }
  SkeinRMatrix<S> out{p, a, b, a.inverse(), b.inverse(), delta0, {}, {}};
  auto one = LinearMap<S>::identity(p.d, 2);
  auto e = cup_cap(p);
  out.R = a * one + b * e;
  out.Rinv = out.ap * one + out.bp * e;
  if (compose(out.R, out.Rinv) != one) throw Error("internal error: R * Rinv is not the identity");
  return out;
}

template <class S>
struct YbeReport {
  bool ok = false;
  LinearMap<S> residual;  // (R⊗1)(1⊗R)(R⊗1) - (1⊗R)(R⊗1)(1⊗R)
};

template <class S>
YbeReport<S> verify_ybe(const LinearMap<S>& R) {
  if (R.domain_arity() != 2 || R.codomain_arity() != 2) {
    throw ShapeError("the Yang-Baxter equation needs a map 2->2, got " + R.shape().to_string());
  }
  auto id3 = LinearMap<S>::identity(R.dim(), 3);
  auto lhs = apply_expanded(R, 0, apply_expanded(R, 1, apply_expanded(R, 0, id3)));
  auto rhs = apply_expanded(R, 1, apply_expanded(R, 0, apply_expanded(R, 1, id3)));
  YbeReport<S> out;
  out.residual = lhs - rhs;
  out.ok = out.residual.is_zero();
  return out;
}

template <class S>
struct DeformedCoefficients {
  Dual<S> a, b, delta0;
};

/// Solves a_t^2 + b_t^2 + delta0_t a_t b_t = 0 to first order with b fixed at
/// b0: a_t = a0 + t·alpha, alpha (2 a0 + delta0 b0) = -delta0' a0 b0.
template <class S>
DeformedCoefficients<S> solve_deformed_coefficients(const SwitchbackPair<Dual<S>>& pt, const S& a0, const S& b0) {
  Dual<S> delta = pt.delta0();
  if (!skein_quadratic(a0, b0, delta.body()).is_zero()) {
    throw HypothesisError("the undeformed coefficients do not satisfy a^2 + b^2 + delta0*a*b = 0");
  }
  S lin = from_int<S>(2) * a0 + delta.body() * b0;
  if (!lin.is_invertible()) {
    throw HypothesisError("2a + delta0*b = " + format_scalar(lin) +
                          " is not invertible, so the deformed quadratic cannot be solved with b fixed (A^4 = 1)");
  }
  S alpha = -(delta.slope() * a0 * b0) * lin.inverse();
  DeformedCoefficients<S> out{Dual<S>(a0, alpha), Dual<S>(b0), delta};
  if (!skein_quadratic(out.a, out.b, out.delta0).is_zero()) {
    throw Error("internal error: the deformed coefficients miss the quadratic");
  }
  return out;
}

/// Bracket gauge a0 = A, b0 = A^-1.
template <HasVariableA S>
DeformedCoefficients<S> solve_deformed_coefficients(const SwitchbackPair<Dual<S>>& pt) {
  return solve_deformed_coefficients(pt, power_of_A<S>(1), power_of_A<S>(-1));
}

/// e_i = 1^(i-1) ⊗ (gamma beta) ⊗ 1^(n-i-1), i = 1..n-1.
template <class S>
std::vector<LinearMap<S>> tl_generators(const SwitchbackPair<S>& p, int n) {
  if (n < 2) throw Error("Temperley-Lieb generators need n >= 2, got " + std::to_string(n));
  auto e = cup_cap(p);
  std::vector<LinearMap<S>> out;
  for (int i = 1; i < n; ++i) out.push_back(expand(e, i - 1, n - i - 1));
  return out;
}

struct TlReport {
  bool ok = true;
  std::string failing;  // first failing relation, empty when ok
};

template <class S>
TlReport verify_tl_relations(const std::vector<LinearMap<S>>& e, const S& delta) {
  auto name = [](std::size_t i) { return "e" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (compose(e[i], e[i]) != delta * e[i]) return {false, name(i) + "^2 = delta*" + name(i)};
    if (i + 1 < e.size()) {
      if (compose_all<S>({e[i], e[i + 1], e[i]}) != e[i]) {
        return {false, name(i) + " " + name(i + 1) + " " + name(i) + " = " + name(i)};
      }
      if (compose_all<S>({e[i + 1], e[i], e[i + 1]}) != e[i + 1]) {
        return {false, name(i + 1) + " " + name(i) + " " + name(i + 1) + " = " + name(i + 1)};
      }
    }
    for (std::size_t j = i + 2; j < e.size(); ++j) {
      if (compose(e[i], e[j]) != compose(e[j], e[i])) {
        return {false, name(i) + " " + name(j) + " = " + name(j) + " " + name(i)};
      }
    }
  }
  return {};
}

}  // namespace cocycle
