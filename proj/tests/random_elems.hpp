#pragma once

#include <random>

#include "cocycle/linear_map.hpp"
#include "cocycle/scalar.hpp"

namespace cocycle::testing {

// Exponents in [-8, 8], rational numerators and denominators in [-9, 9].
class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() {
    int den = 0;
    while (den == 0) den = uniform(-9, 9);
    return Rational(uniform(-9, 9), den);
  }

  GaussRat gauss() {
    switch (uniform(0, 3)) {
      case 0: return GaussRat(rational());
      case 1: return GaussRat(0, rational());
      default: return GaussRat(rational(), rational());
    }
  }

  GaussRat nonzero_gauss() {
    GaussRat g;
    while (g.is_zero()) g = gauss();
    return g;
  }

  LaurentA laurent(int max_terms = 3) {
    std::vector<LaurentA::Term> terms;
    int n = uniform(0, max_terms);
    for (int k = 0; k < n; ++k) terms.push_back({uniform(-8, 8), gauss()});
    return LaurentA(std::move(terms));
  }

  LaurentA nonzero_laurent(int max_terms = 3) {
    LaurentA x;
    while (x.is_zero()) x = laurent(max_terms);
    return x;
  }

  RatFunA ratfun() { return RatFunA(laurent(), nonzero_laurent(2)); }

  template <class S>
  S sample() {
    if constexpr (std::is_same_v<S, GaussRat>) return gauss();
    else if constexpr (std::is_same_v<S, LaurentA>) return laurent();
    else if constexpr (std::is_same_v<S, RatFunA>) return ratfun();
    else {
      using B = typename S::Base;
      return S(sample<B>(), sample<B>());
    }
  }

  template <class S>
  LinearMap<S> map(int d, int p, int q) {
    MapShape s{d, p, q};
    Matrix<S> m(s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r) {
      for (std::size_t c = 0; c < s.cols(); ++c) m(r, c) = sample<S>();
    }
    return LinearMap<S>(s, std::move(m));
  }

  /// Small integer Gaussian entries, so products stay readable in failures.
  LinearMap<GaussRat> small_map(int d, int p, int q) {
    MapShape s{d, p, q};
    Matrix<GaussRat> m(s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r) {
      for (std::size_t c = 0; c < s.cols(); ++c) m(r, c) = GaussRat(uniform(-3, 3), uniform(-1, 1));
    }
    return LinearMap<GaussRat>(s, std::move(m));
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace cocycle::testing
