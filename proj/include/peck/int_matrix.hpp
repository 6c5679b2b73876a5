// Copyright (c) 2026 The peck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "peck/common.hpp"

namespace peck {

/// Sparse matrix with arbitrary-precision integer entries, stored column
/// major. Zero entries are never stored. Operators act on column vectors:
/// entry (row, col) = (target, source).
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}

  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    data_.resize(static_cast<std::size_t>(cols));
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i)] = {{i, 1}};
    return m;
  }

  static IntMatrix from_triplets(
      int rows, int cols, const std::vector<std::tuple<int, int, Int>>& ts) {
    IntMatrix m(rows, cols);
    for (const auto& [r, c, v] : ts) {
      m.check_index(r, c);
      if (v != 0) m.data_[static_cast<std::size_t>(c)].emplace_back(r, v);
    }
    for (auto& col : m.data_) {
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 1; i < col.size(); ++i)
        if (col[i].first == col[i - 1].first)
          throw input_error("duplicate triplet entry");
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long nnz() const {
    long long n = 0;
    for (const auto& col : data_) n += static_cast<long long>(col.size());
    return n;
  }

  /// Column c as (row, value) pairs sorted by row.
  const std::vector<std::pair<int, Int>>& column(int c) const {
    check_index(0, c);
    return data_[static_cast<std::size_t>(c)];
  }

  Int at(int r, int c) const {
    check_index(r, c);
    const auto& col = data_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(
        col.begin(), col.end(), r,
        [](const auto& e, int row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? it->second : Int(0);
  }

  void set(int r, int c, Int v) {
    check_index(r, c);
    auto& col = data_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(
        col.begin(), col.end(), r,
        [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
      if (v == 0)
        col.erase(it);
      else
        it->second = std::move(v);
    } else if (v != 0) {
      col.insert(it, {r, std::move(v)});
    }
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw input_error("matrix product dimension mismatch: " +
                        a.dims_str() + " * " + b.dims_str());
    IntMatrix out(a.rows_, b.cols_);
    std::map<int, Int> acc;
    for (int j = 0; j < b.cols_; ++j) {
      acc.clear();
      for (const auto& [k, bv] : b.data_[static_cast<std::size_t>(j)])
        for (const auto& [i, av] : a.data_[static_cast<std::size_t>(k)])
          acc[i] += av * bv;
      auto& col = out.data_[static_cast<std::size_t>(j)];
      for (auto& [i, v] : acc)
        if (v != 0) col.emplace_back(i, std::move(v));
    }
    return out;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    return linear_combine(a, b, 1);
  }
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    return linear_combine(a, b, -1);
  }

  IntMatrix scaled(const Int& s) const {
    IntMatrix out(rows_, cols_);
    if (s == 0) return out;
    for (int c = 0; c < cols_; ++c) {
      auto& col = out.data_[static_cast<std::size_t>(c)];
      col = data_[static_cast<std::size_t>(c)];
      for (auto& [r, v] : col) v *= s;
    }
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) {
    return !(a == b);
  }

  bool is_zero() const {
    for (const auto& col : data_)
      if (!col.empty()) return false;
    return true;
  }

  struct Entry {
    int row;
    int col;
    Int value;
  };

  /// First stored entry in column-major order, if any.
  std::optional<Entry> first_nonzero() const {
    for (int c = 0; c < cols_; ++c) {
      const auto& col = data_[static_cast<std::size_t>(c)];
      if (!col.empty()) return Entry{col.front().first, c, col.front().second};
    }
    return std::nullopt;
  }

  Int max_abs() const {
    Int m = 0;
    for (const auto& col : data_)
      for (const auto& [r, v] : col) {
        Int a = v < 0 ? Int(-v) : v;
        if (a > m) m = std::move(a);
      }
    return m;
  }

  std::vector<std::vector<Int>> to_dense() const {
    std::vector<std::vector<Int>> d(
        static_cast<std::size_t>(rows_),
        std::vector<Int>(static_cast<std::size_t>(cols_), Int(0)));
    for (int c = 0; c < cols_; ++c)
      for (const auto& [r, v] : data_[static_cast<std::size_t>(c)])
        d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    return d;
  }

 private:
  static IntMatrix linear_combine(const IntMatrix& a, const IntMatrix& b,
                                  int sign) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw input_error("matrix sum dimension mismatch: " + a.dims_str() +
                        " vs " + b.dims_str());
    IntMatrix out(a.rows_, a.cols_);
    for (int c = 0; c < a.cols_; ++c) {
      const auto& ca = a.data_[static_cast<std::size_t>(c)];
      const auto& cb = b.data_[static_cast<std::size_t>(c)];
      auto& co = out.data_[static_cast<std::size_t>(c)];
      std::size_t i = 0, j = 0;
      while (i < ca.size() || j < cb.size()) {
        if (j == cb.size() || (i < ca.size() && ca[i].first < cb[j].first)) {
          co.push_back(ca[i++]);
        } else if (i == ca.size() || cb[j].first < ca[i].first) {
          co.emplace_back(cb[j].first, sign > 0 ? cb[j].second : -cb[j].second);
          ++j;
        } else {
          Int v = sign > 0 ? Int(ca[i].second + cb[j].second)
                           : Int(ca[i].second - cb[j].second);
          if (v != 0) co.emplace_back(ca[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
    }
    return out;
  }

  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw input_error("matrix index (" + std::to_string(r) + ", " +
                        std::to_string(c) + ") out of " + dims_str());
  }

  std::string dims_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  int rows_, cols_;
  std::vector<std::vector<std::pair<int, Int>>> data_;
};

/// Writes the plain-text triplet form: a header line
/// `# <rows> <cols> <nnz> <description>` followed by one `row col value` line
/// per nonzero in row-major order. Values are decimal, arbitrary precision.
inline void write_triplets(std::ostream& os, const IntMatrix& m,
                           const std::string& description) {
  std::vector<std::tuple<int, int, const Int*>> entries;
  entries.reserve(static_cast<std::size_t>(m.nnz()));
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) entries.emplace_back(r, c, &v);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              return std::pair(std::get<0>(a), std::get<1>(a)) <
                     std::pair(std::get<0>(b), std::get<1>(b));
            });
  os << "# " << m.rows() << " " << m.cols() << " " << m.nnz();
  if (!description.empty()) os << " " << description;
  os << "\n";
  for (const auto& [r, c, v] : entries)
    os << r << " " << c << " " << v->str() << "\n";
}

inline IntMatrix read_triplets(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.empty() || line[0] != '#')
    throw input_error("triplet stream missing '#' header line");
  std::istringstream hs(line.substr(1));
  int rows = -1, cols = -1;
  long long nnz = -1;
  if (!(hs >> rows >> cols >> nnz))
    throw input_error("triplet header must start with rows cols nnz");
  std::vector<std::tuple<int, int, Int>> ts;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int r, c;
    std::string value;
    if (!(ls >> r >> c >> value))
      throw input_error("malformed triplet line: " + line);
    ts.emplace_back(r, c, Int(value));
  }
  if (static_cast<long long>(ts.size()) != nnz)
    throw input_error("triplet count does not match header nnz");
  return IntMatrix::from_triplets(rows, cols, ts);
}

}  // namespace peck
