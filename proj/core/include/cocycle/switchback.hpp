#pragma once

// Switchback pairs (beta: V⊗V -> K, gamma: K -> V⊗V), their 2-cocycles, the
// low-degree chain complex C^1 -> C^2 -> C^3 -> C^4 and first-order
// deformations.
//
// Coordinates: C^1 = Hom(V,V) as row-major matrix entries (d^2 slots);
// C^2 = beta-part then gamma-part, each in basis order xx, xy, yx, yy;
// C^3 = xi_1 entries then xi_2 entries; C^4 like C^2.

#include <optional>
#include <string>
#include <vector>

#include "cocycle/field_linalg.hpp"
#include "cocycle/linear_map.hpp"

namespace cocycle {

template <class S>
struct SwitchbackPair {
  int d = 0;
  LinearMap<S> beta;   // 2 -> 0
  LinearMap<S> gamma;  // 0 -> 2

  /// beta∘gamma(1)
  S delta0() const { return compose(beta, gamma)(0, 0); }
};

template <class S>
struct Cochain2 {
  LinearMap<S> phi1;  // 2 -> 0
  LinearMap<S> phi2;  // 0 -> 2
  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

template <class S>
struct Cochain3 {
  LinearMap<S> xi1;  // 1 -> 1
  LinearMap<S> xi2;  // 1 -> 1
  bool is_zero() const { return xi1.is_zero() && xi2.is_zero(); }
  friend bool operator==(const Cochain3&, const Cochain3&) = default;
};

template <class S>
using Cochain4 = Cochain2<S>;

template <class S>
bool is_zero(const Cochain2<S>& c) {
  return c.phi1.is_zero() && c.phi2.is_zero();
}

/// (beta⊗1)(1⊗gamma) - 1 and (1⊗beta)(gamma⊗1) - 1.
template <class S>
Cochain3<S> switchback_residual(const SwitchbackPair<S>& p) {
  const int d = p.d;
  auto one = LinearMap<S>::identity(d, 1);
  auto first = compose(expand(p.beta, 0, 1), expand(p.gamma, 1, 0));
  auto second = compose(expand(p.beta, 1, 0), expand(p.gamma, 0, 1));
  return Cochain3<S>{first - one, second - one};
}

template <class S>
bool verify_switchback(const SwitchbackPair<S>& p) {
  return switchback_residual(p).is_zero();
}

/// Validating constructor; raises HypothesisError when a switchback condition fails.
template <class S>
SwitchbackPair<S> make_switchback_pair(LinearMap<S> beta, LinearMap<S> gamma) {
  const int d = beta.dim();
  if (beta.shape() != MapShape{d, 2, 0}) throw ShapeError("beta must have arity 2->0, got " + beta.shape().to_string());
  if (gamma.shape() != MapShape{d, 0, 2}) throw ShapeError("gamma must have arity 0->2, got " + gamma.shape().to_string());
  SwitchbackPair<S> p{d, std::move(beta), std::move(gamma)};
  if (!verify_switchback(p)) throw HypothesisError("beta and gamma violate the switchback conditions");
  return p;
}

/// The Kauffman bracket pair: beta(x⊗y) = iA, beta(y⊗x) = -iA^-1, and
/// gamma(1) = iA (x⊗y) - iA^-1 (y⊗x).
template <HasVariableA S>
SwitchbackPair<S> make_bracket_pair() {
  S p = power_of_A<S>(1, GaussRat::i());
  S m = power_of_A<S>(-1, -GaussRat::i());
  LinearMap<S> beta(MapShape{2, 2, 0}, Matrix<S>(1, 4, {S(), p, m, S()}));
  LinearMap<S> gamma(MapShape{2, 0, 2}, Matrix<S>(4, 1, {S(), p, m, S()}));
  return make_switchback_pair(std::move(beta), std::move(gamma));
}

/// Pair with beta(e_i⊗e_j) = B_ij and gamma(1) = sum_ij (B^-1)_ij e_i⊗e_j.
template <class S>
SwitchbackPair<S> pair_from_form(const Matrix<S>& b) {
  const int d = static_cast<int>(b.rows());
  Matrix<S> c = inverse(b);
  const std::size_t n = b.data().size();
  return make_switchback_pair(LinearMap<S>(MapShape{d, 2, 0}, Matrix<S>(1, n, b.data())),
                              LinearMap<S>(MapShape{d, 0, 2}, Matrix<S>(n, 1, c.data())));
}

template <class T, class S>
SwitchbackPair<T> embed_pair(const SwitchbackPair<S>& p) {
  return SwitchbackPair<T>{p.d, embed_map<T>(p.beta), embed_map<T>(p.gamma)};
}

template <class S>
SwitchbackPair<specialized_t<S>> specialize_pair(const SwitchbackPair<S>& p, const GaussRat& a) {
  return SwitchbackPair<specialized_t<S>>{p.d, specialize_map(p.beta, a), specialize_map(p.gamma, a)};
}

// ---------------------------------------------------------------------------
// Differentials

template <class S>
Cochain3<S> d2(const SwitchbackPair<S>& p, const LinearMap<S>& phi1, const LinearMap<S>& phi2) {
  if (phi1.shape() != p.beta.shape() || phi2.shape() != p.gamma.shape()) {
    throw ShapeError("a 2-cochain needs phi1: 2->0 and phi2: 0->2 over the pair's dimension");
  }
  auto xi1 = compose(expand(p.beta, 0, 1), expand(phi2, 1, 0)) + compose(expand(phi1, 0, 1), expand(p.gamma, 1, 0));
  auto xi2 = compose(expand(p.beta, 1, 0), expand(phi2, 0, 1)) + compose(expand(phi1, 1, 0), expand(p.gamma, 0, 1));
  return Cochain3<S>{std::move(xi1), std::move(xi2)};
}

template <class S>
Cochain3<S> D2(const SwitchbackPair<S>& p, const Cochain2<S>& c) {
  return d2(p, c.phi1, c.phi2);
}

/// (beta(η⊗1) - beta(1⊗η), (η⊗1)gamma - (1⊗η)gamma)
template <class S>
Cochain2<S> D1(const SwitchbackPair<S>& p, const LinearMap<S>& eta) {
  if (eta.shape() != MapShape{p.d, 1, 1}) throw ShapeError("a 1-cochain must have arity 1->1");
  return Cochain2<S>{compose(p.beta, expand(eta, 0, 1)) - compose(p.beta, expand(eta, 1, 0)),
                     compose(expand(eta, 0, 1), p.gamma) - compose(expand(eta, 1, 0), p.gamma)};
}

/// (beta(ξ1⊗1) - beta(1⊗ξ2), (ξ2⊗1)gamma - (1⊗ξ1)gamma)
template <class S>
Cochain4<S> D3(const SwitchbackPair<S>& p, const Cochain3<S>& c) {
  if (c.xi1.shape() != MapShape{p.d, 1, 1} || c.xi2.shape() != MapShape{p.d, 1, 1}) {
    throw ShapeError("a 3-cochain needs two maps of arity 1->1");
  }
  return Cochain4<S>{compose(p.beta, expand(c.xi1, 0, 1)) - compose(p.beta, expand(c.xi2, 1, 0)),
                     compose(expand(c.xi2, 0, 1), p.gamma) - compose(expand(c.xi1, 1, 0), p.gamma)};
}

// ---------------------------------------------------------------------------
// Coordinates

template <class S>
std::vector<S> coords(const LinearMap<S>& f) {
  return f.matrix().data();
}

template <class S>
std::vector<S> coords(const Cochain2<S>& c) {
  std::vector<S> v = c.phi1.matrix().data();
  const auto& g = c.phi2.matrix().data();
  v.insert(v.end(), g.begin(), g.end());
  return v;
}

template <class S>
std::vector<S> coords(const Cochain3<S>& c) {
  std::vector<S> v = c.xi1.matrix().data();
  const auto& g = c.xi2.matrix().data();
  v.insert(v.end(), g.begin(), g.end());
  return v;
}

template <class S>
LinearMap<S> c1_from_coords(int d, const std::vector<S>& v) {
  const std::size_t n = static_cast<std::size_t>(d);
  if (v.size() != n * n) throw ShapeError("C^1 coordinates have the wrong length");
  return LinearMap<S>(MapShape{d, 1, 1}, Matrix<S>(n, n, v));
}

template <class S>
Cochain2<S> c2_from_coords(int d, const std::vector<S>& v) {
  const std::size_t n = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  if (v.size() != 2 * n) throw ShapeError("C^2 coordinates have the wrong length");
  return Cochain2<S>{LinearMap<S>(MapShape{d, 2, 0}, Matrix<S>(1, n, std::vector<S>(v.begin(), v.begin() + n))),
                     LinearMap<S>(MapShape{d, 0, 2}, Matrix<S>(n, 1, std::vector<S>(v.begin() + n, v.end())))};
}

template <class S>
Cochain3<S> c3_from_coords(int d, const std::vector<S>& v) {
  const std::size_t n = static_cast<std::size_t>(d);
  if (v.size() != 2 * n * n) throw ShapeError("C^3 coordinates have the wrong length");
  return Cochain3<S>{LinearMap<S>(MapShape{d, 1, 1}, Matrix<S>(n, n, std::vector<S>(v.begin(), v.begin() + n * n))),
                     LinearMap<S>(MapShape{d, 1, 1}, Matrix<S>(n, n, std::vector<S>(v.begin() + n * n, v.end())))};
}

namespace detail {

template <class S>
std::vector<S> unit(std::size_t n, std::size_t k) {
  std::vector<S> v(n);
  v[k] = S::one();
  return v;
}

}  // namespace detail

/// Matrices of D1, D2, D3 in the coordinates above (columns = images of unit vectors).
template <class S>
Matrix<S> matrix_D1(const SwitchbackPair<S>& p) {
  const std::size_t n = static_cast<std::size_t>(p.d * p.d);
  std::vector<std::vector<S>> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(coords(D1(p, c1_from_coords(p.d, detail::unit<S>(n, k)))));
  return from_columns(cols, 2 * n);
}

template <class S>
Matrix<S> matrix_D2(const SwitchbackPair<S>& p) {
  const std::size_t n = static_cast<std::size_t>(p.d * p.d);
  std::vector<std::vector<S>> cols;
  for (std::size_t k = 0; k < 2 * n; ++k) cols.push_back(coords(D2(p, c2_from_coords(p.d, detail::unit<S>(2 * n, k)))));
  return from_columns(cols, 2 * n);
}

template <class S>
Matrix<S> matrix_D3(const SwitchbackPair<S>& p) {
  const std::size_t n = static_cast<std::size_t>(p.d * p.d);
  std::vector<std::vector<S>> cols;
  for (std::size_t k = 0; k < 2 * n; ++k) cols.push_back(coords(D3(p, c3_from_coords(p.d, detail::unit<S>(2 * n, k)))));
  return from_columns(cols, 2 * n);
}

// ---------------------------------------------------------------------------
// Cohomology

struct CohomologyDims {
  int z1 = 0, b2 = 0, z2 = 0, b3 = 0, z3 = 0, b4 = 0;
  int h1 = 0, h2 = 0, h3 = 0;
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

template <class S>
CohomologyDims cohomology_dims(const SwitchbackPair<S>& p) {
  require_field<S>("cohomology");
  Matrix<S> m1 = matrix_D1(p), m2 = matrix_D2(p), m3 = matrix_D3(p);
  if (!(m2 * m1).is_zero() || !(m3 * m2).is_zero()) {
    throw HypothesisError("the differentials do not compose to zero; the input is not a switchback pair");
  }
  CohomologyDims c;
  c.b2 = static_cast<int>(rank(m1));
  c.b3 = static_cast<int>(rank(m2));
  c.b4 = static_cast<int>(rank(m3));
  c.z1 = static_cast<int>(kernel_basis(m1).size());
  c.z2 = static_cast<int>(kernel_basis(m2).size());
  c.z3 = static_cast<int>(kernel_basis(m3).size());
  // rank-nullity cross-check between the two computations
  if (c.z1 + c.b2 != static_cast<int>(m1.cols()) || c.z2 + c.b3 != static_cast<int>(m2.cols()) ||
      c.z3 + c.b4 != static_cast<int>(m3.cols())) {
    throw Error("internal error: kernel and image dimensions disagree");
  }
  c.h1 = c.z1;
  c.h2 = c.z2 - c.b2;
  c.h3 = c.z3 - c.b3;
  return c;
}

/// Basis of Z^2 = ker D2.
template <class S>
std::vector<Cochain2<S>> solve_2cocycles(const SwitchbackPair<S>& p) {
  std::vector<Cochain2<S>> out;
  for (auto& v : kernel_basis(matrix_D2(p))) out.push_back(c2_from_coords(p.d, v));
  return out;
}

/// Basis of Z^1 = ker D1.
template <class S>
std::vector<LinearMap<S>> solve_1cocycles(const SwitchbackPair<S>& p) {
  std::vector<LinearMap<S>> out;
  for (auto& v : kernel_basis(matrix_D1(p))) out.push_back(c1_from_coords(p.d, v));
  return out;
}

/// Basis of Z^3 = ker D3.
template <class S>
std::vector<Cochain3<S>> z3_solve(const SwitchbackPair<S>& p) {
  std::vector<Cochain3<S>> out;
  for (auto& v : kernel_basis(matrix_D3(p))) out.push_back(c3_from_coords(p.d, v));
  return out;
}

template <class S>
bool z1_check(const SwitchbackPair<S>& p, const LinearMap<S>& eta) {
  return is_zero(D1(p, eta));
}

// ---------------------------------------------------------------------------
// Bracket cocycle coordinates

/// Entry of phi1 at a⊗b and of phi2(1) at a⊗b, with x = 0 and y = 1.
template <class S>
const S& beta1(const Cochain2<S>& c, int a, int b) {
  return c.phi1(0, static_cast<std::size_t>(2 * a + b));
}
template <class S>
const S& gamma1(const Cochain2<S>& c, int a, int b) {
  return c.phi2(static_cast<std::size_t>(2 * a + b), 0);
}

/// The four relations cutting out Z^2 for the bracket pair:
/// gamma1^yy = -beta1_xx, gamma1^xx = -beta1_yy, gamma1^yx = A^-2 beta1_xy, gamma1^xy = A^2 beta1_yx.
template <HasVariableA S>
bool satisfies_bracket_relations(const Cochain2<S>& c) {
  constexpr int x = 0, y = 1;
  return gamma1(c, y, y) == -beta1(c, x, x) && gamma1(c, x, x) == -beta1(c, y, y) &&
         gamma1(c, y, x) == power_of_A<S>(-2) * beta1(c, x, y) && gamma1(c, x, y) == power_of_A<S>(2) * beta1(c, y, x);
}

/// The bracket 2-cocycle with free coordinates beta1_xx, beta1_xy, beta1_yx, beta1_yy.
template <HasVariableA S>
Cochain2<S> bracket_cocycle(const S& bxx, const S& bxy, const S& byx, const S& byy) {
  LinearMap<S> phi1(MapShape{2, 2, 0}, Matrix<S>(1, 4, {bxx, bxy, byx, byy}));
  LinearMap<S> phi2(MapShape{2, 0, 2},
                    Matrix<S>(4, 1, {-byy, power_of_A<S>(2) * byx, power_of_A<S>(-2) * bxy, -bxx}));
  return Cochain2<S>{std::move(phi1), std::move(phi2)};
}

// ---------------------------------------------------------------------------
// Deformations

template <class S>
SwitchbackPair<Dual<S>> deform(const SwitchbackPair<S>& p, const Cochain2<S>& c) {
  return SwitchbackPair<Dual<S>>{p.d, make_dual(p.beta, c.phi1), make_dual(p.gamma, c.phi2)};
}

/// t-slope of the switchback residual of a first-order deformation. The body
/// of the residual must vanish (the undeformed pair is switchback).
template <class S>
Cochain3<S> primary_obstruction(const SwitchbackPair<Dual<S>>& pt) {
  Cochain3<Dual<S>> r = switchback_residual(pt);
  if (!body_of(r.xi1).is_zero() || !body_of(r.xi2).is_zero()) {
    throw HypothesisError("the undeformed pair does not satisfy the switchback conditions");
  }
  return Cochain3<S>{slope_of(r.xi1), slope_of(r.xi2)};
}

template <class S>
struct Degree2Analysis {
  LinearMap<S> psi1;  // (beta1⊗1)(1⊗gamma1)
  LinearMap<S> psi2;  // (1⊗beta1)(gamma1⊗1)
  bool is_cocycle = false;
  std::optional<Cochain2<S>> extension;  // (beta2, gamma2) with D2 = -(psi1, psi2)
};

template <class S>
Degree2Analysis<S> degree2_analysis(const SwitchbackPair<S>& p, const Cochain2<S>& c) {
  if (!D2(p, c).is_zero()) throw HypothesisError("(beta1, gamma1) is not a 2-cocycle");
  Degree2Analysis<S> out;
  out.psi1 = compose(expand(c.phi1, 0, 1), expand(c.phi2, 1, 0));
  out.psi2 = compose(expand(c.phi1, 1, 0), expand(c.phi2, 0, 1));
  Cochain3<S> psi{out.psi1, out.psi2};
  out.is_cocycle = is_zero(D3(p, psi));
  if constexpr (is_field_v<S>) {
    std::vector<S> rhs = coords(psi);
    for (auto& x : rhs) x = -x;
    if (auto sol = solve(matrix_D2(p), rhs)) out.extension = c2_from_coords(p.d, *sol);
  } else {
    require_field<S>("the degree-2 extension solver");
  }
  return out;
}

/// Whether the deformed cup-cap maps still satisfy e_i e_{i±1} e_i = e_i to
/// first order. Expanding e_1 e_2 e_1 = (gamma⊗1) s_1 s_2 (beta⊗1) gives
/// d^{2,1}(phi) + d^{2,2}(phi) = 0.
template <class S>
bool verify_weak_tl_condition(const SwitchbackPair<S>& p, const Cochain2<S>& c) {
  Cochain3<S> x = D2(p, c);
  return (x.xi1 + x.xi2).is_zero();
}

}  // namespace cocycle
