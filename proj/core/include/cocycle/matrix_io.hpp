#pragma once

// Matrix literals: rows separated by ';', entries by ',', each entry in the
// scalar grammar. "0, i*A, -i*A^-1, 0" is a 1x4 row.

#include <string>
#include <string_view>
#include <vector>

#include "cocycle/linear_map.hpp"

namespace cocycle {

inline std::vector<std::string> split_top(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  out.emplace_back(text.substr(start));
  return out;
}

template <class S>
Matrix<S> parse_matrix(std::string_view text) {
  std::vector<std::vector<S>> rows;
  for (const auto& row : split_top(text, ';')) {
    std::vector<S> entries;
    for (const auto& e : split_top(row, ',')) entries.push_back(parse_scalar<S>(e));
    if (!rows.empty() && entries.size() != rows.front().size()) {
      throw ParseError("ragged matrix literal: row " + std::to_string(rows.size() + 1) + " has " +
                           std::to_string(entries.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       1, 1);
    }
    rows.push_back(std::move(entries));
  }
  std::vector<S> data;
  for (auto& r : rows) data.insert(data.end(), r.begin(), r.end());
  return Matrix<S>(rows.size(), rows.front().size(), std::move(data));
}

/// Parses a matrix literal and checks it against the shape p -> q over dimension d.
template <class S>
LinearMap<S> parse_map(std::string_view text, MapShape shape) {
  return LinearMap<S>(shape, parse_matrix<S>(text));
}

template <class S>
std::string format_matrix(const Matrix<S>& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += m(r, c).to_string();
    }
  }
  return out;
}

template <class S>
std::string format_map(const LinearMap<S>& f) {
  return format_matrix(f.matrix());
}

}  // namespace cocycle
