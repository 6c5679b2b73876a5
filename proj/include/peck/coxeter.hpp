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

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "peck/common.hpp"
#include "peck/ranked_poset.hpp"
#include "peck/sperner.hpp"

namespace peck {

/// Golden integer a + b*phi with phi = (1+sqrt(5))/2, phi^2 = phi + 1.
/// Closed under ring operations; covers the rationals' extension by sqrt(5)
/// without ever needing fraction normalization.
struct GoldenInt {
  Int a{0}, b{0};

  GoldenInt() = default;
  GoldenInt(long long x) : a(x) {}  // NOLINT(google-explicit-constructor)
  GoldenInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

  static GoldenInt phi() { return GoldenInt(Int(0), Int(1)); }

  friend GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) {
    return GoldenInt(x.a + y.a, x.b + y.b);
  }
  friend GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) {
    return GoldenInt(x.a - y.a, x.b - y.b);
  }
  friend GoldenInt operator-(const GoldenInt& x) {
    return GoldenInt(-x.a, -x.b);
  }
  friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
    // (a1 + b1 phi)(a2 + b2 phi) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) phi
    return GoldenInt(x.a * y.a + x.b * y.b,
                     x.a * y.b + x.b * y.a + x.b * y.b);
  }
  friend bool operator==(const GoldenInt& x, const GoldenInt& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const GoldenInt& x, const GoldenInt& y) {
    return !(x == y);
  }

  bool is_zero() const { return a == 0 && b == 0; }

  std::string str() const {
    if (b == 0) return a.str();
    return a.str() + "+" + b.str() + "*phi";
  }
};

/// Dense square matrix over the golden integers.
class GMatrix {
 public:
  explicit GMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

  static GMatrix identity(int n) {
    GMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GoldenInt(1);
    return m;
  }

  int dim() const { return n_; }

  GoldenInt& at(int i, int j) {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }
  const GoldenInt& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  friend GMatrix operator*(const GMatrix& x, const GMatrix& y) {
    GMatrix out(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        const GoldenInt& xik = x.at(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < x.n_; ++j) {
          const GoldenInt& ykj = y.at(k, j);
          if (!ykj.is_zero()) out.at(i, j) = out.at(i, j) + xik * ykj;
        }
      }
    return out;
  }

  friend bool operator==(const GMatrix& x, const GMatrix& y) {
    return x.n_ == y.n_ && x.e_ == y.e_;
  }
  friend bool operator!=(const GMatrix& x, const GMatrix& y) {
    return !(x == y);
  }

  /// Canonical byte key for hashing/deduplication.
  std::string key() const {
    std::string s;
    for (const auto& g : e_) {
      s += g.a.str();
      s.push_back(':');
      s += g.b.str();
      s.push_back(',');
    }
    return s;
  }

 private:
  int n_;
  std::vector<GoldenInt> e_;
};

/// A finite Coxeter system: type label, rank and Coxeter matrix (symmetric,
/// diagonal 1, off-diagonal >= 2).
struct CoxeterSpec {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> m;

  bool is_dihedral() const { return rank == 2; }
};

namespace detail {

inline CoxeterSpec make_spec(std::string label, int rank,
                             const std::vector<std::tuple<int, int, int>>&
                                 bonds) {
  if (rank < 1) throw input_error("Coxeter rank must be >= 1");
  CoxeterSpec spec;
  spec.label = std::move(label);
  spec.rank = rank;
  spec.m.assign(static_cast<std::size_t>(rank),
                std::vector<int>(static_cast<std::size_t>(rank), 2));
  for (int s = 0; s < rank; ++s) spec.m[static_cast<std::size_t>(s)]
      [static_cast<std::size_t>(s)] = 1;
  for (const auto& [s, t, order] : bonds) {
    if (s == t || s < 0 || t < 0 || s >= rank || t >= rank || order < 3)
      throw input_error("invalid Coxeter bond");
    spec.m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = order;
    spec.m[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = order;
  }
  return spec;
}

}  // namespace detail

/// Parses a type string: "A4", "B3", "D4", "F4", "H3", "H4" or "I2:m".
inline CoxeterSpec coxeter_spec_from_string(const std::string& text) {
  auto bad = [&text]() -> input_error {
    return input_error("unrecognized Coxeter type '" + text + "'");
  };
  if (text.size() < 2) throw bad();
  const char family = text[0];
  if (family == 'I') {
    if (text.size() < 4 || text[1] != '2' || text[2] != ':') throw bad();
    int m = 0;
    try {
      m = std::stoi(text.substr(3));
    } catch (...) {
      throw bad();
    }
    if (m < 2) throw input_error("I2(m) requires m >= 2");
    if (m == 2) return detail::make_spec(text, 2, {});
    return detail::make_spec(text, 2, {{0, 1, m}});
  }
  int rank = 0;
  try {
    rank = std::stoi(text.substr(1));
  } catch (...) {
    throw bad();
  }
  std::vector<std::tuple<int, int, int>> bonds;
  auto chain = [&bonds](int upto, int order_last) {
    for (int s = 0; s + 1 < upto; ++s)
      bonds.emplace_back(s, s + 1, s + 2 == upto ? order_last : 3);
  };
  switch (family) {
    case 'A':
      if (rank < 1) throw bad();
      chain(rank, 3);
      return detail::make_spec(text, rank, bonds);
    case 'B':
      if (rank < 2) throw bad();
      chain(rank, 4);
      return detail::make_spec(text, rank, bonds);
    case 'D':
      if (rank < 2) throw bad();
      if (rank == 2) return detail::make_spec(text, 2, {});
      chain(rank - 1, 3);
      bonds.emplace_back(rank - 3, rank - 1, 3);
      return detail::make_spec(text, rank, bonds);
    case 'F':
      if (rank != 4) throw bad();
      return detail::make_spec(text, 4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}});
    case 'H':
      if (rank == 3)
        return detail::make_spec(text, 3, {{0, 1, 5}, {1, 2, 3}});
      if (rank == 4)
        return detail::make_spec(text, 4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}});
      throw bad();
    default:
      throw bad();
  }
}

/// Parses an explicit Coxeter matrix: first the rank, then the
/// rank*(rank-1)/2 upper-triangle orders m_st in row-major order
/// (m_12 m_13 ... m_1r m_23 ...), whitespace separated.
inline CoxeterSpec coxeter_spec_from_matrix_text(std::istream& in) {
  int rank = 0;
  if (!(in >> rank) || rank < 1)
    throw input_error("Coxeter matrix text must start with the rank");
  std::vector<std::tuple<int, int, int>> bonds;
  for (int s = 0; s < rank; ++s)
    for (int t = s + 1; t < rank; ++t) {
      int order = 0;
      if (!(in >> order))
        throw input_error("Coxeter matrix text is missing upper-triangle "
                          "entries");
      if (order < 2) throw input_error("off-diagonal m_st must be >= 2");
      if (order > 2) bonds.emplace_back(s, t, order);
    }
  return detail::make_spec("custom", rank, bonds);
}

struct GroupFacts {
  long long order = 0;
  int num_positive_roots = 0;
};

/// Known order and longest length for the standard type labels.
inline std::optional<GroupFacts> known_group_facts(const CoxeterSpec& spec) {
  const std::string& l = spec.label;
  auto factorial = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  if (l.size() >= 2 && l[0] == 'I' && l[1] == '2') {
    const int m = spec.m[0][1] == 1 ? 2 : spec.m[0][1];
    return GroupFacts{2LL * m, m};
  }
  if (l == "H3") return GroupFacts{120, 15};
  if (l == "H4") return GroupFacts{14400, 60};
  if (l == "F4") return GroupFacts{1152, 24};
  if (l.size() >= 2 && (l[0] == 'A' || l[0] == 'B' || l[0] == 'D')) {
    int n = 0;
    try {
      n = std::stoi(l.substr(1));
    } catch (...) {
      return std::nullopt;
    }
    if (l[0] == 'A') return GroupFacts{factorial(n + 1), n * (n + 1) / 2};
    if (l[0] == 'B') return GroupFacts{(1LL << n) * factorial(n), n * n};
    return GroupFacts{(1LL << (n - 1)) * factorial(n), n * n - n};
  }
  return std::nullopt;
}

/// Generator matrices of the reflection representation over the golden
/// integers: s sends the basis vector alpha_t to alpha_t + k(s,t) alpha_s
/// (t != s) and negates alpha_s. Cartan-style integer weights keep all
/// coordinates in Z[phi]: k pairs are (1,1) for m=3, (1,2) for m=4,
/// (phi,phi) for m=5 and (1,3) for m=6. Bond orders outside {2,3,4,5,6} have
/// no coordinates in this ring and are refused.
inline std::vector<GMatrix> reflection_representation(const CoxeterSpec& spec) {
  auto weights = [](int order) -> std::pair<GoldenInt, GoldenInt> {
    switch (order) {
      case 2:
        return {GoldenInt(0), GoldenInt(0)};
      case 3:
        return {GoldenInt(1), GoldenInt(1)};
      case 4:
        return {GoldenInt(1), GoldenInt(2)};
      case 5:
        return {GoldenInt::phi(), GoldenInt::phi()};
      case 6:
        return {GoldenInt(1), GoldenInt(3)};
      default:
        throw input_error(
            "unsupported bond order " + std::to_string(order) +
            ": 2cos(pi/m) lies outside the supported field for m outside "
            "{2,3,4,5,6}");
    }
  };
  std::vector<GMatrix> gens;
  gens.reserve(static_cast<std::size_t>(spec.rank));
  for (int s = 0; s < spec.rank; ++s) {
    GMatrix g = GMatrix::identity(spec.rank);
    g.at(s, s) = GoldenInt(-1);
    for (int t = 0; t < spec.rank; ++t) {
      if (t == s) continue;
      auto [lo, hi] = weights(spec.m[static_cast<std::size_t>(s)]
                                    [static_cast<std::size_t>(t)]);
      g.at(s, t) = s < t ? lo : hi;
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

inline constexpr int default_group_element_cap = 20000;

/// A fully enumerated finite Coxeter group: elements indexed in ShortLex
/// order of their reduced words, with lengths, normal-form words, weak-order
/// cover edges (u, v, generator) and, for matrix-backed enumerations, the
/// exact reflection matrices.
struct CoxeterGroup {
  CoxeterSpec spec;
  std::vector<int> lengths;
  std::vector<std::string> words;  // "" is the identity
  std::vector<GMatrix> matrices;   // empty for the dihedral fallback model
  std::vector<std::tuple<int, int, int>> cover_edges;
  int max_length = 0;

  long long order() const { return static_cast<long long>(lengths.size()); }
};

namespace detail {

// Breadth-first enumeration from the identity over abstract exact elements.
// Scanning layer elements in index order and generators in increasing order
// makes first-discovery order coincide with ShortLex order on reduced words.
template <class Elem, class Apply, class Key>
void bfs_enumerate(CoxeterGroup& group, Elem identity, int num_gens,
                   Apply apply, Key key, int element_cap,
                   std::vector<Elem>* out_elems) {
  std::vector<Elem> elems{std::move(identity)};
  std::unordered_map<std::string, int> index;
  index.emplace(key(elems[0]), 0);
  group.lengths = {0};
  group.words = {""};
  std::vector<int> frontier{0};
  int depth = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int g = 0; g < num_gens; ++g) {
        Elem child = apply(elems[static_cast<std::size_t>(u)], g);
        std::string k = key(child);
        auto it = index.find(k);
        int v;
        if (it == index.end()) {
          v = static_cast<int>(elems.size());
          if (v >= element_cap)
            throw budget_error("group enumeration exceeds the element cap of " +
                               std::to_string(element_cap));
          index.emplace(std::move(k), v);
          elems.push_back(std::move(child));
          group.lengths.push_back(depth + 1);
          group.words.push_back(group.words[static_cast<std::size_t>(u)] +
                                static_cast<char>('1' + g));
          next.push_back(v);
        } else {
          v = it->second;
          if (group.lengths[static_cast<std::size_t>(v)] != depth + 1)
            continue;  // length went down: not a cover
        }
        group.cover_edges.emplace_back(u, v, g + 1);
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  group.max_length = depth - 1;
  if (out_elems) *out_elems = std::move(elems);
}

// Exact dihedral model for I2(m): r^a and r^a*s as (a mod m, flip). The two
// simple reflections act on the right by s: (a,f) -> (a,1-f) and
// t = r*s: (a,0) -> (a+1,1), (a,1) -> (a-1,0).
struct DihedralElem {
  int rot;
  int flip;
};

inline void enumerate_dihedral_into(CoxeterGroup& group, int m,
                                    int element_cap) {
  auto apply = [m](const DihedralElem& e, int g) {
    if (g == 0) return DihedralElem{e.rot, 1 - e.flip};
    if (e.flip == 0) return DihedralElem{(e.rot + 1) % m, 1};
    return DihedralElem{(e.rot + m - 1) % m, 0};
  };
  auto key = [](const DihedralElem& e) {
    return std::to_string(e.rot) + ":" + std::to_string(e.flip);
  };
  bfs_enumerate<DihedralElem>(group, DihedralElem{0, 0}, 2, apply, key,
                              element_cap, nullptr);
}

}  // namespace detail

/// Exact enumeration of the dihedral group I2(m) without matrices; valid for
/// every m >= 2.
inline CoxeterGroup enumerate_dihedral(int m,
                                       int element_cap =
                                           default_group_element_cap) {
  if (m < 2) throw input_error("I2(m) requires m >= 2");
  CoxeterGroup group;
  group.spec = coxeter_spec_from_string("I2:" + std::to_string(m));
  detail::enumerate_dihedral_into(group, m, element_cap);
  return group;
}

/// Complete element list via breadth-first search from the identity; length
/// is the search depth. The element count and maximum length are checked
/// against the known values when the type is standard. Dihedral types with
/// bond order outside the matrix ring use the exact rotation model instead.
inline CoxeterGroup enumerate_group(const CoxeterSpec& spec,
                                    int element_cap =
                                        default_group_element_cap) {
  CoxeterGroup group;
  group.spec = spec;
  const bool matrix_ring_ok = [&spec]() {
    for (const auto& row : spec.m)
      for (int order : row)
        if (order != 1 && (order < 2 || order > 6)) return false;
    return true;
  }();
  if (matrix_ring_ok) {
    const std::vector<GMatrix> gens = reflection_representation(spec);
    auto apply = [&gens](const GMatrix& e, int g) {
      return e * gens[static_cast<std::size_t>(g)];
    };
    auto key = [](const GMatrix& e) { return e.key(); };
    detail::bfs_enumerate<GMatrix>(group, GMatrix::identity(spec.rank),
                                   spec.rank, apply, key, element_cap,
                                   &group.matrices);
  } else if (spec.is_dihedral()) {
    detail::enumerate_dihedral_into(group, spec.m[0][1], element_cap);
  } else {
    throw input_error(
        "no exact coordinate ring available for this Coxeter matrix");
  }
  if (const auto facts = known_group_facts(spec)) {
    if (group.order() != facts->order)
      throw std::logic_error("enumerated order " +
                             std::to_string(group.order()) +
                             " does not match the known order " +
                             std::to_string(facts->order) + " for " +
                             spec.label);
    if (group.max_length != facts->num_positive_roots)
      throw std::logic_error("maximum length does not match the number of "
                             "positive roots for " + spec.label);
  }
  return group;
}

/// Weak order of an enumerated group: rank = length, covers = right
/// multiplication by a simple generator raising the length, labels = ShortLex
/// reduced words ("e" for the identity). Rank symmetry of the profile is
/// asserted, not assumed.
inline RankedPoset build_weak_order_coxeter(const CoxeterGroup& group) {
  const int n = static_cast<int>(group.lengths.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (const auto& w : group.words) labels.push_back(w.empty() ? "e" : w);
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> cover_labels(static_cast<std::size_t>(n));
  for (const auto& [u, v, g] : group.cover_edges) {
    covers[static_cast<std::size_t>(u)].push_back(v);
    cover_labels[static_cast<std::size_t>(u)].push_back(g);
  }
  RankedPoset poset(std::move(labels), group.lengths, std::move(covers),
                    std::move(cover_labels));
  if (!rank_profile(poset).symmetric)
    throw std::logic_error("weak order rank profile is not symmetric for " +
                           group.spec.label);
  return poset;
}

inline RankedPoset build_weak_order_coxeter(const CoxeterSpec& spec,
                                            int element_cap =
                                                default_group_element_cap) {
  return build_weak_order_coxeter(enumerate_group(spec, element_cap));
}

/// Sperner certification of the weak order of a finite Coxeter group. Only
/// the order-theoretic certification runs here; the raising/lowering
/// operators are built for type A only.
inline SpernerCertificate conjecture_check(const CoxeterSpec& spec,
                                           std::uint64_t seed = 0,
                                           int element_cap =
                                               default_group_element_cap) {
  const RankedPoset poset = build_weak_order_coxeter(spec, element_cap);
  return certify(poset, "weak_order(" + spec.label + ")", seed);
}

}  // namespace peck
