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
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "peck/common.hpp"

namespace peck {

/// Hard cap on the permutation degree; 9! = 362880 keeps full-group
/// enumerations explicitly in memory.
inline constexpr int max_permutation_degree = 9;

/// A permutation of {1,...,n} in one-line notation: the word w_1 w_2 ... w_n
/// where w_i is the image of position i.
///
/// The public interface is 1-based throughout (storage is 0-based).
/// Immutable after construction. Right multiplication by the simple
/// transposition s_i swaps the entries at positions i and i+1; right
/// multiplication by the transposition t_ij swaps the entries at positions
/// i and j.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n < 1 || n > max_permutation_degree)
      throw input_error("permutation degree must be in [1, " +
                        std::to_string(max_permutation_degree) + "], got " +
                        std::to_string(n));
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw input_error("one-line word is not a permutation of 1.." +
                          std::to_string(n));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  /// Parses a one-line word written with single-digit values, e.g. "312".
  static Permutation from_string(const std::string& s) {
    std::vector<int> w;
    w.reserve(s.size());
    for (char c : s) {
      if (c < '1' || c > '9') throw input_error("invalid one-line word: " + s);
      w.push_back(c - '0');
    }
    return Permutation(std::move(w));
  }

  /// Inverse of lehmer_code(): decodes a code from the staircase box
  /// [0,n-1] x [0,n-2] x ... x {0}.
  static Permutation from_lehmer(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size());
    if (n < 1 || n > max_permutation_degree)
      throw input_error("Lehmer code length out of range");
    std::vector<int> remaining(static_cast<std::size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (code[static_cast<std::size_t>(i)] < 0 ||
          code[static_cast<std::size_t>(i)] > n - 1 - i)
        throw input_error("Lehmer code entry out of box bounds");
      auto it = remaining.begin() + code[static_cast<std::size_t>(i)];
      w.push_back(*it);
      remaining.erase(it);
    }
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }

  /// Value at position i (1-based).
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& word() const { return word_; }

  std::string str() const {
    std::string s;
    s.reserve(word_.size());
    for (int v : word_) s.push_back(static_cast<char>('0' + v));
    return s;
  }

  /// Coxeter length = inversion count #{(i,j) : i<j, w_i > w_j}.
  int length() const {
    const int n = size();
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (word_[static_cast<std::size_t>(i)] >
            word_[static_cast<std::size_t>(j)])
          ++inv;
    return inv;
  }

  /// Lehmer code L, with L_i = #{j > i : w_j < w_i}. L_n is always 0 and the
  /// entries sum to length().
  std::vector<int> lehmer_code() const {
    const int n = size();
    std::vector<int> code(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (word_[static_cast<std::size_t>(j)] <
            word_[static_cast<std::size_t>(i)])
          ++code[static_cast<std::size_t>(i)];
    return code;
  }

  bool is_ascent(int i) const {
    check_position(i, size() - 1, "ascent position");
    return word_[static_cast<std::size_t>(i - 1)] <
           word_[static_cast<std::size_t>(i)];
  }

  /// Right multiplication by s_i: swaps the entries at positions i, i+1.
  Permutation apply_simple(int i) const {
    check_position(i, size() - 1, "simple transposition index");
    Permutation out(*this);
    std::swap(out.word_[static_cast<std::size_t>(i - 1)],
              out.word_[static_cast<std::size_t>(i)]);
    return out;
  }

  /// Right multiplication by t_ij (i < j): swaps the entries at positions i, j.
  Permutation apply_transposition(int i, int j) const {
    if (i < 1 || j > size() || i >= j)
      throw input_error("transposition requires 1 <= i < j <= n");
    Permutation out(*this);
    std::swap(out.word_[static_cast<std::size_t>(i - 1)],
              out.word_[static_cast<std::size_t>(j - 1)]);
    return out;
  }

  /// Covers of w in the weak order: (i, w*s_i) for every ascent position i,
  /// in increasing i.
  std::vector<std::pair<int, Permutation>> weak_covers_up() const {
    std::vector<std::pair<int, Permutation>> out;
    for (int i = 1; i < size(); ++i)
      if (is_ascent(i)) out.emplace_back(i, apply_simple(i));
    return out;
  }

  /// True when w*t_ij is covered by w in the strong order, i.e. w_i > w_j and
  /// no position k strictly between i and j holds a value strictly between
  /// w_j and w_i.
  bool is_strong_cover_down(int i, int j) const {
    if (i < 1 || j > size() || i >= j)
      throw input_error("cover test requires 1 <= i < j <= n");
    const int wi = (*this)(i), wj = (*this)(j);
    if (wi <= wj) return false;
    for (int k = i + 1; k < j; ++k) {
      const int wk = (*this)(k);
      if (wj < wk && wk < wi) return false;
    }
    return true;
  }

  /// Elements covered by w in the strong order: ((i,j), w*t_ij) for every
  /// strong cover pair, ordered lexicographically by (i,j).
  std::vector<std::pair<std::pair<int, int>, Permutation>> strong_covers_down()
      const {
    std::vector<std::pair<std::pair<int, int>, Permutation>> out;
    for (int i = 1; i <= size(); ++i)
      for (int j = i + 1; j <= size(); ++j)
        if (is_strong_cover_down(i, j))
          out.push_back({{i, j}, apply_transposition(i, j)});
    return out;
  }

  /// Crossing count a = #{k < i : w_j < w_k < w_i} for a strong descent pair
  /// (i < j with w_i > w_j).
  int crossing_count(int i, int j) const {
    if (i < 1 || j > size() || i >= j)
      throw input_error("crossing count requires 1 <= i < j <= n");
    const int wi = (*this)(i), wj = (*this)(j);
    if (wi <= wj)
      throw input_error("crossing count requires the descent w_i > w_j");
    int a = 0;
    for (int k = 1; k < i; ++k) {
      const int wk = (*this)(k);
      if (wj < wk && wk < wi) ++a;
    }
    return a;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.word_ < b.word_;
  }

 private:
  static void check_position(int i, int hi, const char* what) {
    if (i < 1 || i > hi)
      throw input_error(std::string(what) + " out of range [1, " +
                        std::to_string(hi) + "]: " + std::to_string(i));
  }

  std::vector<int> word_;
};

/// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace peck
