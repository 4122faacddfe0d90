#pragma once

// Exact Gaussian elimination over the field rings (GaussRat, RatFunA).
// The ring check happens at runtime so callers dispatching on a RingTag can
// instantiate these for every ring and get NotAField for the wrong ones.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cocycle/matrix.hpp"
#include "cocycle/scalar.hpp"

namespace cocycle {

template <class S>
void require_field(const char* op) {
  if constexpr (!is_field_v<S>) {
    throw NotAField(std::string(op) + " needs a field, but " + ring_name(RingTraits<S>::tag) +
                    " is not one (use gauss or ratfun)");
  }
}

template <class S>
struct Echelon {
  Matrix<S> reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

template <class S>
Echelon<S> row_reduce(Matrix<S> m) {
  require_field<S>("row reduction");
  Echelon<S> out;
  if constexpr (is_field_v<S>) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = rows;
      for (std::size_t k = r; k < rows; ++k) {
        if (!m(k, c).is_zero()) {
          piv = k;
          break;
        }
      }
      if (piv == rows) continue;
      if (piv != r) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      }
      S inv = m(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
      }
      for (std::size_t k = 0; k < rows; ++k) {
        if (k == r || m(k, c).is_zero()) continue;
        S f = m(k, c);
        for (std::size_t j = c; j < cols; ++j) {
          if (!m(r, j).is_zero()) m(k, j) -= f * m(r, j);
        }
      }
      out.pivots.push_back(c);
      ++r;
    }
    out.reduced = std::move(m);
  }
  return out;
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that slot.
template <class S>
std::vector<std::vector<S>> kernel_basis(const Matrix<S>& m) {
  Echelon<S> e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(cols);
    v[f] = S::one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const S& x = e.reduced(r, f);
      if (!x.is_zero()) v[e.pivots[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, or nullopt when the system is inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& m, const std::vector<S>& b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side length does not match the matrix");
  Matrix<S> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon<S> e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<S> x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw ShapeError("only square matrices have inverses, got " + m.shape_string());
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = S::one();
  }
  Echelon<S> e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw NotInvertible("matrix is singular");
  Matrix<S> out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  }
  return out;
}

template <class S>
std::vector<S> mat_vec(const Matrix<S>& m, const std::vector<S>& v) {
  if (v.size() != m.cols()) throw ShapeError("vector length does not match the matrix");
  std::vector<S> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

/// Matrix whose columns are the given vectors.
template <class S>
Matrix<S> from_columns(const std::vector<std::vector<S>>& cols, std::size_t rows) {
  Matrix<S> m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

}  // namespace cocycle
