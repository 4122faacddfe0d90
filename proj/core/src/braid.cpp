#include "cocycle/braid.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "cocycle/errors.hpp"

namespace cocycle {

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters) w += l.sign;
  return w;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

BraidWord BraidWord::freely_reduced() const {
  BraidWord out{n, {}};
  for (const auto& l : letters) {
    if (!out.letters.empty() && out.letters.back().index == l.index && out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out{n, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back({it->index, -it->sign});
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw ShapeError("cannot concatenate braids on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord parse_braid(std::string_view text, int n) {
  if (n < 1) throw Error("a braid needs at least one strand");
  BraidWord w{n, {}};
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const std::string& msg) -> void {
    throw ParseError(msg, 1, at + 1);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string tok(text.substr(start, end - start));
    pos = end;
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S')) fail(start, "malformed braid token '" + tok + "'");
    std::size_t k = 1;
    int index = 0;
    while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) {
      index = index * 10 + (tok[k] - '0');
      if (index > 1000000) fail(start, "braid index too large in '" + tok + "'");
      ++k;
    }
    if (k == 1) fail(start, "malformed braid token '" + tok + "'");
    int sign = 1;
    if (k < tok.size()) {
      std::string_view rest = std::string_view(tok).substr(k);
      if (rest == "^-1") {
        sign = -1;
      } else if (rest != "^1" && rest != "^+1") {
        fail(start, "malformed braid token '" + tok + "'");
      }
    }
    if (index < 1 || index >= n) {
      fail(start, "generator s" + std::to_string(index) + " is out of range for " + std::to_string(n) + " strands");
    }
    w.letters.push_back({index, sign});
  }
  return w;
}

// ---------------------------------------------------------------------------

PlanarMatching PlanarMatching::identity(int n) {
  PlanarMatching m;
  m.n_ = n;
  m.partner_.resize(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    m.partner_[static_cast<std::size_t>(k)] = n + k;
    m.partner_[static_cast<std::size_t>(n + k)] = k;
  }
  return m;
}

PlanarMatching PlanarMatching::cup_cap(int n, int i) {
  if (i < 1 || i >= n) throw Error("cup-cap index out of range");
  PlanarMatching m = identity(n);
  auto set = [&](int a, int b) {
    m.partner_[static_cast<std::size_t>(a)] = b;
    m.partner_[static_cast<std::size_t>(b)] = a;
  };
  set(i - 1, i);
  set(n + i - 1, n + i);
  return m;
}

bool PlanarMatching::is_planar() const {
  // Place the points on a circle: bottom 0..n-1 left to right, then top right to left.
  auto circ = [&](int p) { return p < n_ ? p : 2 * n_ - 1 - (p - n_); };
  std::vector<int> pos(partner_.size());
  for (std::size_t p = 0; p < partner_.size(); ++p) pos[p] = circ(static_cast<int>(p));
  for (std::size_t p = 0; p < partner_.size(); ++p) {
    int a = pos[p], b = pos[static_cast<std::size_t>(partner_[p])];
    if (a > b) std::swap(a, b);
    for (std::size_t q = 0; q < partner_.size(); ++q) {
      int c = pos[q], d = pos[static_cast<std::size_t>(partner_[q])];
      if (c > d) std::swap(c, d);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

PlanarMatching PlanarMatching::stack(const PlanarMatching& lower, const PlanarMatching& upper, int& loops) {
  if (lower.n_ != upper.n_) throw ShapeError("cannot stack diagrams on different strand counts");
  const int n = lower.n_;
  PlanarMatching out;
  out.n_ = n;
  out.partner_.assign(static_cast<std::size_t>(2 * n), -1);
  std::vector<bool> seen_mid(static_cast<std::size_t>(n), false);

  // Result points: lower bottom k -> k, upper top k -> n + k.
  // Walk from a result point to the other end of its strand.
  auto walk = [&](bool in_lower, int point) {
    // point is an endpoint inside the given diagram; follow until leaving to the result
    while (true) {
      const PlanarMatching& dg = in_lower ? lower : upper;
      int q = dg.partner_[static_cast<std::size_t>(point)];
      if (in_lower && q < n) return q;  // lower bottom
      if (!in_lower && q >= n) return q;  // upper top
      int mid = in_lower ? q - n : q;  // middle slot
      seen_mid[static_cast<std::size_t>(mid)] = true;
      if (in_lower) {
        in_lower = false;
        point = mid;  // upper bottom
      } else {
        in_lower = true;
        point = n + mid;  // lower top
      }
    }
  };
  for (int k = 0; k < n; ++k) {
    if (out.partner_[static_cast<std::size_t>(k)] < 0) {
      int e = walk(true, k);
      out.partner_[static_cast<std::size_t>(k)] = e;
      out.partner_[static_cast<std::size_t>(e)] = k;
    }
    if (out.partner_[static_cast<std::size_t>(n + k)] < 0) {
      int e = walk(false, n + k);
      out.partner_[static_cast<std::size_t>(n + k)] = e;
      out.partner_[static_cast<std::size_t>(e)] = n + k;
    }
  }
  // Remaining middle points lie on closed loops.
  loops = 0;
  for (int k = 0; k < n; ++k) {
    if (seen_mid[static_cast<std::size_t>(k)]) continue;
    ++loops;
    int mid = k;
    do {
      seen_mid[static_cast<std::size_t>(mid)] = true;
      int q = upper.partner_[static_cast<std::size_t>(mid)];  // from upper bottom, must return to upper bottom
      seen_mid[static_cast<std::size_t>(q)] = true;
      mid = lower.partner_[static_cast<std::size_t>(n + q)] - n;  // lower top back to lower top
    } while (mid != k);
  }
  return out;
}

int PlanarMatching::closure_loops() const {
  // components of the graph with matching edges and closure edges top k - bottom k
  std::vector<int> parent(partner_.size());
  for (std::size_t p = 0; p < parent.size(); ++p) parent[p] = static_cast<int>(p);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int p = 0; p < 2 * n_; ++p) unite(p, partner_[static_cast<std::size_t>(p)]);
  for (int k = 0; k < n_; ++k) unite(k, n_ + k);
  int loops = 0;
  for (int p = 0; p < 2 * n_; ++p) loops += find(p) == p ? 1 : 0;
  return loops;
}

std::string PlanarMatching::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int p = 0; p < 2 * n_; ++p) {
    int q = partner_[static_cast<std::size_t>(p)];
    if (q < p) continue;
    if (!first) os << ' ';
    first = false;
    auto name = [&](int x) { return x < n_ ? "b" + std::to_string(x + 1) : "t" + std::to_string(x - n_ + 1); };
    os << name(p) << '-' << name(q);
  }
  return os.str();
}

LaurentA bracket_state_sum(int n, const std::vector<OracleLetter>& letters) {
  const LaurentA A = LaurentA::monomial(1), Ainv = LaurentA::monomial(-1);
  const LaurentA delta = -LaurentA::monomial(2) - LaurentA::monomial(-2);
  std::map<PlanarMatching, LaurentA> states{{PlanarMatching::identity(n), LaurentA::one()}};
  auto power = [&](int k) {
    LaurentA r = LaurentA::one();
    for (int j = 0; j < k; ++j) r = r * delta;
    return r;
  };
  // Letters read left to right act top to bottom: the first letter is the top crossing.
  for (const auto& l : letters) {
    if (l.index < 1 || l.index >= n) throw Error("oracle letter index out of range");
    PlanarMatching e = PlanarMatching::cup_cap(n, l.index);
    std::map<PlanarMatching, LaurentA> next;
    for (const auto& [d, c] : states) {
      int loops = 0;
      PlanarMatching de = PlanarMatching::stack(e, d, loops);
      LaurentA with_e = c * power(loops);
      if (l.sign == 0) {
        next[de] += with_e;
      } else {
        next[d] += c * (l.sign > 0 ? A : Ainv);
        next[de] += with_e * (l.sign > 0 ? Ainv : A);
      }
    }
    states.clear();
    for (auto& [d, c] : next) {
      if (!c.is_zero()) states.emplace(d, std::move(c));
    }
  }
  LaurentA total;
  for (const auto& [d, c] : states) total += c * power(d.closure_loops() - 1);
  return total;
}

LaurentA jones_oracle(const BraidWord& w) {
  const int wr = w.writhe();
  // (-A^3)^(-wr) = (-1)^wr A^(-3 wr)
  LaurentA norm = LaurentA::monomial(-3 * wr, GaussRat(wr % 2 == 0 ? 1 : -1));
  return norm * bracket_state_sum(w.n, w.letters);
}

}  // namespace cocycle
