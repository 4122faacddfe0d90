#pragma once

// Braid words and the Kauffman-bracket state-sum oracle built on
// Temperley-Lieb diagrams.

#include <string>
#include <string_view>
#include <vector>

#include "cocycle/laurent.hpp"

namespace cocycle {

struct BraidLetter {
  int index = 1;  // generator sigma_index, 1-based
  int sign = 1;   // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int n = 1;
  std::vector<BraidLetter> letters;

  int writhe() const;
  /// "s1 s2^-1 ..."; the empty word prints as "".
  std::string to_string() const;
  /// Cancels adjacent s_i s_i^-1 pairs until none remain.
  BraidWord freely_reduced() const;
  BraidWord inverse() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Whitespace-separated tokens `s<i>` or `s<i>^-1` (also `s<i>^1`), 1 <= i < n.
BraidWord parse_braid(std::string_view text, int n);

BraidWord concat(const BraidWord& a, const BraidWord& b);

/// A Temperley-Lieb diagram on n strands: a non-crossing perfect matching of
/// the n bottom points 0..n-1 and the n top points n..2n-1.
class PlanarMatching {
 public:
  static PlanarMatching identity(int n);
  /// The cup-cap joining strands i and i+1 (1-based).
  static PlanarMatching cup_cap(int n, int i);

  int strands() const { return n_; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  bool is_planar() const;

  /// upper ∘ lower: lower's top glued to upper's bottom. `loops` receives the
  /// number of closed loops removed.
  static PlanarMatching stack(const PlanarMatching& lower, const PlanarMatching& upper, int& loops);
  /// Loops of the trace closure (top k joined to bottom k).
  int closure_loops() const;

  std::string to_string() const;
  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
  friend bool operator<(const PlanarMatching& a, const PlanarMatching& b) { return a.partner_ < b.partner_; }

 private:
  int n_ = 0;
  std::vector<int> partner_;
};

/// A letter of a generalized word for the oracle: a crossing of either sign or
/// a bare cup-cap e_i (sign 0).
using OracleLetter = BraidLetter;

/// Unnormalized bracket of the trace closure, <unknot> = 1: each crossing
/// s_i -> A·1 + A^-1·e_i, s_i^-1 -> A^-1·1 + A·e_i, states weighted by
/// delta^(loops - 1) with delta = -A^2 - A^-2.
LaurentA bracket_state_sum(int n, const std::vector<OracleLetter>& letters);

/// (-A^3)^(-writhe) <closure of w>
LaurentA jones_oracle(const BraidWord& w);

}  // namespace cocycle
