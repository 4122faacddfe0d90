#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cocycle/errors.hpp"

namespace cocycle {

/// Dense row-major matrix over a scalar ring.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("matrix data does not match its dimensions");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<S>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  std::vector<S> column(std::size_t c) const {
    std::vector<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
    return m;
  }

  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix m = a;
    if (s.is_one()) return m;
    for (auto& x : m.data_) {
      if (!x.is_zero()) x = s * x;
    }
    return m;
  }

  /// Matrix product; zero entries are skipped.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw ShapeError("cannot multiply " + a.shape_string() + " by " + b.shape_string());
    }
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& y = b(k, j);
          if (y.is_zero()) continue;
          m(i, j) += x * y;
        }
      }
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw ShapeError("matrix sizes differ: " + shape_string() + " vs " + b.shape_string());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Converts every entry with fn.
template <class T, class S, class F>
Matrix<T> map_entries(const Matrix<S>& m, F&& fn) {
  std::vector<T> out;
  out.reserve(m.data().size());
  for (const auto& x : m.data()) out.push_back(fn(x));
  return Matrix<T>(m.rows(), m.cols(), std::move(out));
}

}  // namespace cocycle
