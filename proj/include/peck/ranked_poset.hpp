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
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "peck/common.hpp"

namespace peck {

/// Finite ranked poset presented by its Hasse diagram. Elements are indexed
/// 0..size()-1, grouped contiguously by rank (rank 0 first); every up-cover
/// edge raises the rank by exactly one and every rank 0..top_rank() is
/// nonempty. Cover edges may carry an optional positive integer label
/// (weak-order builders store the generator index there).
class RankedPoset {
 public:
  RankedPoset(std::vector<std::string> labels, std::vector<int> ranks,
              std::vector<std::vector<int>> up_covers,
              std::vector<std::vector<int>> up_labels = {})
      : labels_(std::move(labels)),
        ranks_(std::move(ranks)),
        up_covers_(std::move(up_covers)),
        up_labels_(std::move(up_labels)) {
    validate();
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int top_rank() const { return static_cast<int>(offsets_.size()) - 2; }

  const std::string& label(int v) const {
    return labels_[static_cast<std::size_t>(v)];
  }
  int rank_of(int v) const { return ranks_[static_cast<std::size_t>(v)]; }

  const std::vector<int>& up_covers(int v) const {
    return up_covers_[static_cast<std::size_t>(v)];
  }

  bool has_edge_labels() const { return !up_labels_.empty(); }

  const std::vector<int>& up_labels(int v) const {
    if (!has_edge_labels()) throw input_error("poset has no edge labels");
    return up_labels_[static_cast<std::size_t>(v)];
  }

  /// Index range [rank_begin(k), rank_end(k)) of the rank-k elements.
  int rank_begin(int k) const { return offsets_[static_cast<std::size_t>(k)]; }
  int rank_end(int k) const {
    return offsets_[static_cast<std::size_t>(k) + 1];
  }
  int rank_size(int k) const { return rank_end(k) - rank_begin(k); }

  long long cover_edge_count() const {
    long long e = 0;
    for (const auto& c : up_covers_) e += static_cast<long long>(c.size());
    return e;
  }

  int find_index(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
  }

  int index_of(const std::string& label) const {
    const int i = find_index(label);
    if (i < 0) throw input_error("no element labeled '" + label + "'");
    return i;
  }

  bool is_cover(int u, int v) const {
    const auto& c = up_covers(u);
    return std::find(c.begin(), c.end(), v) != c.end();
  }

 private:
  void validate() {
    const std::size_t n = labels_.size();
    if (n == 0) throw input_error("poset must have at least one element");
    if (ranks_.size() != n || up_covers_.size() != n)
      throw input_error("poset field sizes disagree");
    if (!up_labels_.empty() && up_labels_.size() != n)
      throw input_error("edge label table has wrong size");
    if (ranks_.front() != 0) throw input_error("rank 0 must come first");
    for (std::size_t v = 1; v < n; ++v) {
      const int step = ranks_[v] - ranks_[v - 1];
      if (step < 0 || step > 1)
        throw input_error(
            "element indices must be contiguous and sorted by rank");
    }
    offsets_.assign(static_cast<std::size_t>(ranks_.back()) + 2, 0);
    for (std::size_t v = 0; v < n; ++v)
      offsets_[static_cast<std::size_t>(ranks_[v]) + 1] =
          static_cast<int>(v) + 1;
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t e = 0; e < up_covers_[v].size(); ++e) {
        const int c = up_covers_[v][e];
        if (c < 0 || c >= static_cast<int>(n))
          throw input_error("cover edge target out of range");
        if (ranks_[static_cast<std::size_t>(c)] != ranks_[v] + 1)
          throw input_error("cover edge must raise rank by exactly 1");
      }
      if (!up_labels_.empty() && up_labels_[v].size() != up_covers_[v].size())
        throw input_error("edge label list shape mismatch");
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!index_.emplace(labels_[v], static_cast<int>(v)).second)
        throw input_error("duplicate element label '" + labels_[v] + "'");
  }

  std::vector<std::string> labels_;
  std::vector<int> ranks_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<std::vector<int>> up_labels_;
  std::vector<int> offsets_;
  std::unordered_map<std::string, int> index_;
};

/// Assembles a RankedPoset from unordered pieces: elements are stably sorted
/// by rank (preserving the given within-rank order) and edges remapped.
inline RankedPoset make_ranked_poset(
    std::vector<std::string> labels, std::vector<int> ranks,
    const std::vector<std::pair<int, int>>& up_cover_edges,
    const std::vector<int>& edge_labels = {}) {
  const int n = static_cast<int>(labels.size());
  if (ranks.size() != labels.size())
    throw input_error("labels and ranks must have equal length");
  if (!edge_labels.empty() && edge_labels.size() != up_cover_edges.size())
    throw input_error("edge label list shape mismatch");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ranks[static_cast<std::size_t>(a)] <
           ranks[static_cast<std::size_t>(b)];
  });
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = i;
  std::vector<std::string> slabels(static_cast<std::size_t>(n));
  std::vector<int> sranks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    slabels[static_cast<std::size_t>(i)] =
        std::move(labels[static_cast<std::size_t>(order[i])]);
    sranks[static_cast<std::size_t>(i)] =
        ranks[static_cast<std::size_t>(order[i])];
  }
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> covlab(
      edge_labels.empty() ? 0 : static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < up_cover_edges.size(); ++e) {
    const auto [u, v] = up_cover_edges[e];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("cover edge endpoint out of range");
    covers[static_cast<std::size_t>(pos[static_cast<std::size_t>(u)])]
        .push_back(pos[static_cast<std::size_t>(v)]);
    if (!edge_labels.empty())
      covlab[static_cast<std::size_t>(pos[static_cast<std::size_t>(u)])]
          .push_back(edge_labels[e]);
  }
  return RankedPoset(std::move(slabels), std::move(sranks), std::move(covers),
                     std::move(covlab));
}

/// The rank-size vector together with its symmetry and unimodality flags.
struct RankProfile {
  std::vector<int> sizes;
  bool symmetric = false;
  bool unimodal = false;
};

inline RankProfile rank_profile(const RankedPoset& p) {
  RankProfile out;
  const int r = p.top_rank();
  out.sizes.reserve(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) out.sizes.push_back(p.rank_size(k));
  out.symmetric = true;
  for (int k = 0; k <= r; ++k)
    if (out.sizes[static_cast<std::size_t>(k)] !=
        out.sizes[static_cast<std::size_t>(r - k)])
      out.symmetric = false;
  int i = 0;
  while (i < r && out.sizes[static_cast<std::size_t>(i)] <=
                      out.sizes[static_cast<std::size_t>(i + 1)])
    ++i;
  out.unimodal = true;
  for (; i < r; ++i)
    if (out.sizes[static_cast<std::size_t>(i)] <
        out.sizes[static_cast<std::size_t>(i + 1)])
      out.unimodal = false;
  return out;
}

/// Strict order relation (irreflexive, transitive) stored as one bit row per
/// element: bit v of row u set iff u < v. |P|^2/8 bytes, fine up to 14400
/// elements.
class StrictOrder {
 public:
  explicit StrictOrder(int n)
      : n_(n),
        words_(static_cast<int>((static_cast<std::size_t>(n) + 63) / 64)),
        bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_),
              0) {}

  int size() const { return n_; }
  int words_per_row() const { return words_; }

  const std::uint64_t* row(int u) const {
    return bits_.data() +
           static_cast<std::size_t>(u) * static_cast<std::size_t>(words_);
  }

  bool less(int u, int v) const {
    return (row(u)[static_cast<std::size_t>(v) / 64] >>
            (static_cast<std::size_t>(v) % 64)) &
           1;
  }

  /// Adds the cover u -> v: sets u < v and folds in everything above v.
  void add_cover(int u, int v) {
    std::uint64_t* ru = mutable_row(u);
    const std::uint64_t* rv = row(v);
    for (int w = 0; w < words_; ++w) ru[static_cast<std::size_t>(w)] |=
        rv[static_cast<std::size_t>(w)];
    ru[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1)
                                            << (static_cast<std::size_t>(v) %
                                                64);
  }

  long long pair_count() const {
    long long c = 0;
    for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
  }

  template <class F>
  void for_each_greater(int u, F&& f) const {
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bitsw = r[static_cast<std::size_t>(w)];
      while (bitsw) {
        const int b = __builtin_ctzll(bitsw);
        f(w * 64 + b);
        bitsw &= bitsw - 1;
      }
    }
  }

 private:
  std::uint64_t* mutable_row(int u) {
    return bits_.data() +
           static_cast<std::size_t>(u) * static_cast<std::size_t>(words_);
  }

  int n_, words_;
  std::vector<std::uint64_t> bits_;
};

/// Transitive closure of the cover relation, accumulated in reverse
/// topological order (element indices ascend with rank, so descending index
/// order works).
inline StrictOrder transitive_closure(const RankedPoset& p) {
  StrictOrder ord(p.size());
  for (int v = p.size() - 1; v >= 0; --v)
    for (int c : p.up_covers(v)) ord.add_cover(v, c);
  return ord;
}

/// Number of elements in a longest chain (computed over cover paths).
inline int height(const RankedPoset& p) {
  std::vector<int> h(static_cast<std::size_t>(p.size()), 1);
  int best = 1;
  for (int v = p.size() - 1; v >= 0; --v) {
    for (int c : p.up_covers(v))
      h[static_cast<std::size_t>(v)] =
          std::max(h[static_cast<std::size_t>(v)],
                   1 + h[static_cast<std::size_t>(c)]);
    best = std::max(best, h[static_cast<std::size_t>(v)]);
  }
  return best;
}

namespace detail {

inline void dot_preamble(std::ostream& os, const RankedPoset& p,
                         const std::string& name) {
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int k = 0; k <= p.top_rank(); ++k) {
    os << "  { rank=same;";
    for (int v = p.rank_begin(k); v < p.rank_end(k); ++v)
      os << " \"" << p.label(v) << "\";";
    os << " }\n";
  }
}

}  // namespace detail

/// DOT rendering of the Hasse diagram (edges point up), with optional edge
/// labels. Every labeled pair must be a cover edge. Node order and edge order
/// are deterministic, so output is byte-stable.
inline std::string export_dot(
    const RankedPoset& p,
    const std::map<std::pair<int, int>, Int>* edge_labels = nullptr,
    const std::string& graph_name = "poset") {
  if (edge_labels)
    for (const auto& [e, lab] : *edge_labels)
      if (e.first < 0 || e.first >= p.size() || !p.is_cover(e.first, e.second))
        throw input_error("edge label on a non-cover pair (" +
                          std::to_string(e.first) + ", " +
                          std::to_string(e.second) + ")");
  std::ostringstream os;
  detail::dot_preamble(os, p, graph_name);
  for (int u = 0; u < p.size(); ++u) {
    std::vector<int> targets = p.up_covers(u);
    std::sort(targets.begin(), targets.end());
    for (int v : targets) {
      os << "  \"" << p.label(u) << "\" -> \"" << p.label(v) << "\"";
      if (edge_labels) {
        auto it = edge_labels->find({u, v});
        if (it != edge_labels->end()) os << " [label=\"" << it->second << "\"]";
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

/// DOT rendering of an arbitrary labeled digraph over the poset's elements,
/// keeping the rank-level layout (used for operators that do not follow the
/// cover relation, like the lowering operator).
inline std::string export_labeled_digraph(
    const RankedPoset& p, std::vector<std::tuple<int, int, Int>> edges,
    const std::string& graph_name = "digraph_on_poset") {
  for (const auto& [u, v, lab] : edges)
    if (u < 0 || u >= p.size() || v < 0 || v >= p.size())
      throw input_error("digraph edge endpoint out of range");
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair(std::get<0>(a), std::get<1>(a)) <
           std::pair(std::get<0>(b), std::get<1>(b));
  });
  std::ostringstream os;
  detail::dot_preamble(os, p, graph_name);
  for (const auto& [u, v, lab] : edges)
    os << "  \"" << p.label(u) << "\" -> \"" << p.label(v) << "\" [label=\""
       << lab << "\"];\n";
  os << "}\n";
  return os.str();
}

/// Chain with m elements c0 < c1 < ... (m-1 cover edges).
inline RankedPoset make_chain(int m) {
  if (m < 1) throw input_error("chain needs at least one element");
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    labels.push_back("c" + std::to_string(i));
    ranks.push_back(i);
    if (i + 1 < m) covers[static_cast<std::size_t>(i)].push_back(i + 1);
  }
  return RankedPoset(std::move(labels), std::move(ranks), std::move(covers));
}

/// Antichain with m pairwise-incomparable elements, all at rank 0.
inline RankedPoset make_antichain(int m) {
  if (m < 1) throw input_error("antichain needs at least one element");
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i));
  return RankedPoset(std::move(labels),
                     std::vector<int>(static_cast<std::size_t>(m), 0),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(m)));
}

/// Disjoint union, ranks aligned at 0. Labels get "l_"/"r_" prefixes.
inline RankedPoset disjoint_union(const RankedPoset& a, const RankedPoset& b) {
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < a.size(); ++v) {
    labels.push_back("l_" + a.label(v));
    ranks.push_back(a.rank_of(v));
    for (int c : a.up_covers(v)) edges.emplace_back(v, c);
  }
  for (int v = 0; v < b.size(); ++v) {
    labels.push_back("r_" + b.label(v));
    ranks.push_back(b.rank_of(v));
    for (int c : b.up_covers(v))
      edges.emplace_back(a.size() + v, a.size() + c);
  }
  return make_ranked_poset(std::move(labels), std::move(ranks), edges);
}

}  // namespace peck
