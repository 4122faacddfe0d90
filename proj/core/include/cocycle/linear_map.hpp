#pragma once

// Linear maps V^{⊗p} -> V^{⊗q} on a d-dimensional base space.
//
// Basis convention: e_{i0} ⊗ ... ⊗ e_{i(n-1)} has index
// sum_k i_k * d^(n-1-k), leftmost tensor factor most significant. The ground
// ring (arity 0) is one-dimensional. Matrices have d^q rows (codomain) and d^p
// columns (domain).

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cocycle/matrix.hpp"
#include "cocycle/scalar.hpp"

namespace cocycle {

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

struct MapShape {
  int d = 1;
  int p = 0;  // domain arity
  int q = 0;  // codomain arity

  std::size_t rows() const { return ipow(static_cast<std::size_t>(d), q); }
  std::size_t cols() const { return ipow(static_cast<std::size_t>(d), p); }
  std::string to_string() const { return std::to_string(p) + "->" + std::to_string(q); }

  friend bool operator==(const MapShape&, const MapShape&) = default;
};

template <class S>
class LinearMap {
 public:
  using Scalar = S;

  LinearMap() = default;
  LinearMap(MapShape shape, Matrix<S> m) : shape_(shape), m_(std::move(m)) {
    if (shape_.d < 1 || shape_.p < 0 || shape_.q < 0) throw ShapeError("invalid map shape");
    if (m_.rows() != shape_.rows() || m_.cols() != shape_.cols()) {
      throw ShapeError("matrix " + m_.shape_string() + " does not fit arity " + shape_.to_string() +
                       " over dimension " + std::to_string(shape_.d));
    }
  }

  static LinearMap zero(MapShape shape) { return LinearMap(shape, Matrix<S>(shape.rows(), shape.cols())); }
  static LinearMap identity(int d, int n) {
    MapShape s{d, n, n};
    return LinearMap(s, Matrix<S>::identity(s.rows()));
  }
  /// The map K -> K given by multiplication with s.
  static LinearMap scalar(int d, S s) { return LinearMap(MapShape{d, 0, 0}, Matrix<S>(1, 1, {std::move(s)})); }

  const MapShape& shape() const { return shape_; }
  int dim() const { return shape_.d; }
  int domain_arity() const { return shape_.p; }
  int codomain_arity() const { return shape_.q; }
  const Matrix<S>& matrix() const { return m_; }

  const S& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  S& at(std::size_t r, std::size_t c) { return m_(r, c); }

  bool is_zero() const { return m_.is_zero(); }

  LinearMap operator-() const { return LinearMap(shape_, -m_); }
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    a.check_same(b, "add");
    return LinearMap(a.shape_, a.m_ + b.m_);
  }
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    a.check_same(b, "subtract");
    return LinearMap(a.shape_, a.m_ - b.m_);
  }
  friend LinearMap operator*(const S& s, const LinearMap& a) { return LinearMap(a.shape_, s * a.m_); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

 private:
  void check_same(const LinearMap& b, const char* what) const {
    if (!(shape_ == b.shape_)) {
      throw ShapeError(std::string("cannot ") + what + " maps of arity " + shape_.to_string() + " and " +
                       b.shape_.to_string());
    }
  }

  MapShape shape_;
  Matrix<S> m_;
};

/// f ∘ g (g applied first; f drawn on top in diagrams).
template <class S>
LinearMap<S> compose(const LinearMap<S>& f, const LinearMap<S>& g) {
  if (f.dim() != g.dim()) throw ShapeError("cannot compose maps over different base dimensions");
  if (g.codomain_arity() != f.domain_arity()) {
    throw ShapeError("cannot compose " + f.shape().to_string() + " after " + g.shape().to_string());
  }
  return LinearMap<S>(MapShape{f.dim(), g.domain_arity(), f.codomain_arity()}, f.matrix() * g.matrix());
}

/// Composite of a list, leftmost applied last.
template <class S>
LinearMap<S> compose_all(const std::vector<LinearMap<S>>& maps) {
  if (maps.empty()) throw ShapeError("empty composite");
  LinearMap<S> acc = maps.back();
  for (std::size_t k = maps.size() - 1; k-- > 0;) acc = compose(maps[k], acc);
  return acc;
}

/// f ⊗ g, the Kronecker product under the basis convention.
template <class S>
LinearMap<S> tensor(const LinearMap<S>& f, const LinearMap<S>& g) {
  if (f.dim() != g.dim()) throw ShapeError("cannot tensor maps over different base dimensions");
  MapShape s{f.dim(), f.domain_arity() + g.domain_arity(), f.codomain_arity() + g.codomain_arity()};
  const auto& a = f.matrix();
  const auto& b = g.matrix();
  Matrix<S> m(s.rows(), s.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const S& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const S& y = b(k, l);
          if (y.is_zero()) continue;
          m(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
      }
    }
  }
  return LinearMap<S>(s, std::move(m));
}

template <class S>
LinearMap<S> tensor_all(const std::vector<LinearMap<S>>& maps) {
  if (maps.empty()) throw ShapeError("empty tensor product");
  LinearMap<S> acc = maps.front();
  for (std::size_t k = 1; k < maps.size(); ++k) acc = tensor(acc, maps[k]);
  return acc;
}

/// 1^{⊗left} ⊗ f ⊗ 1^{⊗right}
template <class S>
LinearMap<S> expand(const LinearMap<S>& f, int left, int right) {
  LinearMap<S> out = f;
  if (left > 0) out = tensor(LinearMap<S>::identity(f.dim(), left), out);
  if (right > 0) out = tensor(out, LinearMap<S>::identity(f.dim(), right));
  return out;
}

/// (1^{⊗left} ⊗ local ⊗ 1^{⊗rest}) ∘ m without forming the expanded matrix.
template <class S>
LinearMap<S> apply_expanded(const LinearMap<S>& local, int left, const LinearMap<S>& m) {
  const int d = m.dim();
  if (local.dim() != d) throw ShapeError("cannot compose maps over different base dimensions");
  const int right = m.codomain_arity() - left - local.domain_arity();
  if (left < 0 || right < 0) {
    throw ShapeError("local map of arity " + local.shape().to_string() + " does not fit at slot " +
                     std::to_string(left) + " of a " + std::to_string(m.codomain_arity()) + "-fold tensor");
  }
  const std::size_t in_block = local.shape().cols();
  const std::size_t out_block = local.shape().rows();
  const std::size_t tail = ipow(static_cast<std::size_t>(d), right);
  const std::size_t head = ipow(static_cast<std::size_t>(d), left);
  MapShape s{d, m.domain_arity(), left + local.codomain_arity() + right};
  Matrix<S> out(s.rows(), s.cols());
  const auto& lm = local.matrix();
  const auto& mm = m.matrix();
  for (std::size_t a = 0; a < head; ++a) {
    for (std::size_t b = 0; b < in_block; ++b) {
      for (std::size_t c = 0; c < tail; ++c) {
        const std::size_t src = (a * in_block + b) * tail + c;
        for (std::size_t col = 0; col < mm.cols(); ++col) {
          const S& y = mm(src, col);
          if (y.is_zero()) continue;
          for (std::size_t b2 = 0; b2 < out_block; ++b2) {
            const S& x = lm(b2, b);
            if (x.is_zero()) continue;
            out((a * out_block + b2) * tail + c, col) += x * y;
          }
        }
      }
    }
  }
  return LinearMap<S>(s, std::move(out));
}

/// Sends e_{i0}⊗...⊗e_{i(n-1)} to the basis tensor whose slot perm[k] holds i_k.
template <class S>
LinearMap<S> permutation(int d, int n, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n) throw ShapeError("permutation has the wrong number of slots");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int k : perm) {
    if (k < 0 || k >= n || seen[static_cast<std::size_t>(k)]) throw ShapeError("not a permutation of the slots");
    seen[static_cast<std::size_t>(k)] = true;
  }
  MapShape s{d, n, n};
  Matrix<S> m(s.rows(), s.cols());
  const std::size_t ud = static_cast<std::size_t>(d);
  std::vector<std::size_t> digits(static_cast<std::size_t>(n));
  std::vector<std::size_t> moved(static_cast<std::size_t>(n));
  for (std::size_t col = 0; col < s.cols(); ++col) {
    std::size_t x = col;
    for (int k = n - 1; k >= 0; --k) {
      digits[static_cast<std::size_t>(k)] = x % ud;
      x /= ud;
    }
    for (int k = 0; k < n; ++k) moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = digits[static_cast<std::size_t>(k)];
    std::size_t row = 0;
    for (int k = 0; k < n; ++k) row = row * ud + moved[static_cast<std::size_t>(k)];
    m(row, col) = S::one();
  }
  return LinearMap<S>(s, std::move(m));
}

/// The flip τ: V ⊗ V -> V ⊗ V.
template <class S>
LinearMap<S> transposition(int d) {
  return permutation<S>(d, 2, {1, 0});
}

/// Contracts the last domain slot against the last codomain slot.
template <class S>
LinearMap<S> partial_trace_last(const LinearMap<S>& f) {
  if (f.domain_arity() != f.codomain_arity() || f.domain_arity() < 1) {
    throw ShapeError("partial trace needs a square map of arity at least 1, got " + f.shape().to_string());
  }
  const std::size_t d = static_cast<std::size_t>(f.dim());
  MapShape s{f.dim(), f.domain_arity() - 1, f.codomain_arity() - 1};
  Matrix<S> m(s.rows(), s.cols());
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) {
      S acc;
      for (std::size_t k = 0; k < d; ++k) {
        const S& x = f(r * d + k, c * d + k);
        if (!x.is_zero()) acc += x;
      }
      m(r, c) = std::move(acc);
    }
  }
  return LinearMap<S>(s, std::move(m));
}

/// Contracts domain slot k against codomain slot k (0-based).
template <class S>
LinearMap<S> partial_trace(const LinearMap<S>& f, int slot) {
  const int n = f.domain_arity();
  if (f.codomain_arity() != n || slot < 0 || slot >= n) {
    throw ShapeError("no slot " + std::to_string(slot) + " to trace in a map of arity " + f.shape().to_string());
  }
  if (slot == n - 1) return partial_trace_last(f);
  std::vector<int> to_last(static_cast<std::size_t>(n)), back(static_cast<std::size_t>(n));
  for (int k = 0, j = 0; k < n; ++k) to_last[static_cast<std::size_t>(k)] = k == slot ? n - 1 : j++;
  for (int k = 0; k < n; ++k) back[static_cast<std::size_t>(to_last[static_cast<std::size_t>(k)])] = k;
  auto p = permutation<S>(f.dim(), n, to_last);
  auto q = permutation<S>(f.dim(), n, back);
  return partial_trace_last(compose(compose(p, f), q));
}

template <class S>
S full_trace(const LinearMap<S>& f) {
  if (f.domain_arity() != f.codomain_arity()) {
    throw ShapeError("trace needs a square map, got " + f.shape().to_string());
  }
  S acc;
  for (std::size_t k = 0; k < f.matrix().rows(); ++k) {
    if (!f(k, k).is_zero()) acc += f(k, k);
  }
  return acc;
}

/// Changes the scalar ring entrywise.
template <class T, class S, class F>
LinearMap<T> map_entries(const LinearMap<S>& f, F&& fn) {
  return LinearMap<T>(f.shape(), map_entries<T>(f.matrix(), std::forward<F>(fn)));
}

template <class T, class S>
LinearMap<T> embed_map(const LinearMap<S>& f) {
  return map_entries<T>(f, [](const S& x) { return embed<T>(x); });
}

template <class T, class S>
LinearMap<T> demote_map(const LinearMap<S>& f) {
  return map_entries<T>(f, [](const S& x) { return demote<T>(x); });
}

template <class S>
LinearMap<specialized_t<S>> specialize_map(const LinearMap<S>& f, const GaussRat& a) {
  return map_entries<specialized_t<S>>(f, [&](const S& x) { return specialize_A(x, a); });
}

/// Picks the body (t = 0) or slope (t-coefficient) of a map over a dual ring.
template <class S>
LinearMap<S> body_of(const LinearMap<Dual<S>>& f) {
  return map_entries<S>(f, [](const Dual<S>& x) { return x.body(); });
}
template <class S>
LinearMap<S> slope_of(const LinearMap<Dual<S>>& f) {
  return map_entries<S>(f, [](const Dual<S>& x) { return x.slope(); });
}
template <class S>
LinearMap<Dual<S>> make_dual(const LinearMap<S>& body, const LinearMap<S>& slope) {
  if (!(body.shape() == slope.shape())) throw ShapeError("body and slope maps differ in shape");
  std::vector<Dual<S>> data;
  data.reserve(body.matrix().data().size());
  for (std::size_t k = 0; k < body.matrix().data().size(); ++k) {
    data.emplace_back(body.matrix().data()[k], slope.matrix().data()[k]);
  }
  return LinearMap<Dual<S>>(body.shape(),
                            Matrix<Dual<S>>(body.matrix().rows(), body.matrix().cols(), std::move(data)));
}

}  // namespace cocycle
