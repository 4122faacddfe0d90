#pragma once

// The scalar tower Q(i) ⊂ Q(i)[A, A^-1] ⊂ Q(i)(A), each optionally extended by
// a nilpotent t with t^2 = 0. Static code uses the concrete types directly;
// RingElem carries a runtime ring tag for configs and the command line.

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "cocycle/dual.hpp"
#include "cocycle/errors.hpp"
#include "cocycle/gauss_rat.hpp"
#include "cocycle/laurent.hpp"
#include "cocycle/ratfun.hpp"

namespace cocycle {

enum class RingTag { gauss, laurent, ratfun, dual_gauss, dual_laurent, dual_ratfun };

template <class S>
struct RingTraits;

template <>
struct RingTraits<GaussRat> {
  static constexpr RingTag tag = RingTag::gauss;
  static constexpr int rank = 0;
  static constexpr bool is_field = true;
  static constexpr bool is_dual = false;
  static constexpr bool has_A = false;
};

template <>
struct RingTraits<LaurentA> {
  static constexpr RingTag tag = RingTag::laurent;
  static constexpr int rank = 1;
  static constexpr bool is_field = false;
  static constexpr bool is_dual = false;
  static constexpr bool has_A = true;
};

template <>
struct RingTraits<RatFunA> {
  static constexpr RingTag tag = RingTag::ratfun;
  static constexpr int rank = 2;
  static constexpr bool is_field = true;
  static constexpr bool is_dual = false;
  static constexpr bool has_A = true;
};

template <class S>
struct RingTraits<Dual<S>> {
  static constexpr RingTag tag = RingTraits<S>::tag == RingTag::gauss     ? RingTag::dual_gauss
                                 : RingTraits<S>::tag == RingTag::laurent ? RingTag::dual_laurent
                                                                          : RingTag::dual_ratfun;
  static constexpr int rank = RingTraits<S>::rank;
  static constexpr bool is_field = false;
  static constexpr bool is_dual = true;
  static constexpr bool has_A = RingTraits<S>::has_A;
};

template <class S>
inline constexpr bool is_field_v = RingTraits<S>::is_field;

template <class S>
inline constexpr bool is_dual_v = RingTraits<S>::is_dual;

template <class S>
concept HasVariableA = RingTraits<S>::has_A;

/// "gauss", "laurent", "ratfun", "dual-gauss", "dual-laurent", "dual-ratfun".
std::string ring_name(RingTag tag);
RingTag parse_ring_tag(std::string_view name);
bool is_field_tag(RingTag tag);

// ---------------------------------------------------------------------------
// Canonical inclusions

template <class To, class From>
inline constexpr bool embeddable_v =
    RingTraits<From>::rank <= RingTraits<To>::rank && (!is_dual_v<From> || is_dual_v<To>);

template <class To, class From>
To embed(const From& x) {
  static_assert(embeddable_v<To, From>, "no canonical inclusion between these rings");
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (is_dual_v<To> && is_dual_v<From>) {
    using B = typename To::Base;
    return To(embed<B>(x.body()), embed<B>(x.slope()));
  } else if constexpr (is_dual_v<To>) {
    return To(embed<typename To::Base>(x));
  } else if constexpr (std::is_same_v<From, GaussRat>) {
    if constexpr (std::is_same_v<To, LaurentA>) return LaurentA(x);
    else return RatFunA(x);
  } else {
    static_assert(std::is_same_v<From, LaurentA> && std::is_same_v<To, RatFunA>);
    return RatFunA(x);
  }
}

/// Inverse of embed; throws DemotionError when x lies outside the subring.
template <class To, class From>
To demote(const From& x) {
  static_assert(embeddable_v<From, To>, "no canonical inclusion between these rings");
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (is_dual_v<From> && is_dual_v<To>) {
    using B = typename To::Base;
    return To(demote<B>(x.body()), demote<B>(x.slope()));
  } else if constexpr (is_dual_v<From>) {
    if (!x.slope().is_zero()) {
      throw DemotionError("value " + x.to_string() + " has a nonzero t-slope");
    }
    return demote<To>(x.body());
  } else if constexpr (std::is_same_v<From, RatFunA>) {
    if (!x.is_laurent()) throw DemotionError("rational function " + x.to_string() + " is not a Laurent polynomial");
    return demote<To>(x.num());
  } else {
    static_assert(std::is_same_v<From, LaurentA> && std::is_same_v<To, GaussRat>);
    return x.constant_value();
  }
}

template <class S>
S from_gauss(const GaussRat& g) {
  return embed<S>(g);
}

template <class S>
S from_int(long long n) {
  return embed<S>(GaussRat(n));
}

template <class S>
S zero() {
  return S();
}

template <class S>
S one() {
  return S::one();
}

/// coeff * A^k in the ring S.
template <HasVariableA S>
S power_of_A(int k, const GaussRat& coeff = GaussRat(1)) {
  return embed<S>(LaurentA::monomial(k, coeff));
}

// ---------------------------------------------------------------------------
// Specialization A -> concrete value

template <class S>
struct Specialized {
  using type = GaussRat;
};
template <class S>
struct Specialized<Dual<S>> {
  using type = Dual<GaussRat>;
};
template <class S>
using specialized_t = typename Specialized<S>::type;

template <class S>
specialized_t<S> specialize_A(const S& x, const GaussRat& a) {
  if constexpr (is_dual_v<S>) {
    return Dual<GaussRat>(specialize_A(x.body(), a), specialize_A(x.slope(), a));
  } else if constexpr (std::is_same_v<S, GaussRat>) {
    return x;
  } else {
    return x.evaluate(a);
  }
}

// ---------------------------------------------------------------------------
// Text form (grammar documented in the README)

/// Parses text into ring S; values outside S raise DemotionError.
template <class S>
S parse_scalar(std::string_view text);

template <class S>
std::string format_scalar(const S& x) {
  return x.to_string();
}

// ---------------------------------------------------------------------------
// Runtime-tagged elements

using RingElem = std::variant<GaussRat, LaurentA, RatFunA, Dual<GaussRat>, Dual<LaurentA>, Dual<RatFunA>>;

RingTag tag_of(const RingElem& x);
RingElem ring_add(const RingElem& x, const RingElem& y);
RingElem ring_sub(const RingElem& x, const RingElem& y);
RingElem ring_mul(const RingElem& x, const RingElem& y);
RingElem ring_neg(const RingElem& x);
RingElem ring_inv(const RingElem& x);
bool ring_equal(const RingElem& x, const RingElem& y);
RingElem promote(const RingElem& x, RingTag target);
RingElem demote(const RingElem& x, RingTag target);
RingElem parse_scalar(std::string_view text, RingTag ring);
std::string format_scalar(const RingElem& x);

}  // namespace cocycle
