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

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "peck/common.hpp"
#include "peck/permutation.hpp"
#include "peck/ranked_poset.hpp"

namespace peck {

/// The weak order on S_n: elements are all n! permutations, rank = Coxeter
/// length, covers are right multiplications by simple transpositions that
/// raise the length. Cover edges carry the generator index i of s_i.
///
/// Element order is ShortLex on reduced words: breadth-first from the
/// identity, scanning parents in index order and ascent positions in
/// increasing order, keeping first discoveries. Rank-0 element is the
/// identity; labels are one-line words ("123", "213", ...).
inline RankedPoset build_weak_order(int n) {
  if (n < 1 || n > max_permutation_degree)
    throw input_error("weak order supports 1 <= n <= " +
                      std::to_string(max_permutation_degree) + ", got " +
                      std::to_string(n));
  std::vector<Permutation> elems;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<std::vector<int>> covers;
  std::vector<std::vector<int>> cover_labels;
  std::unordered_map<std::string, int> index;

  const Permutation id = Permutation::identity(n);
  elems.push_back(id);
  labels.push_back(id.str());
  ranks.push_back(0);
  covers.emplace_back();
  cover_labels.emplace_back();
  index.emplace(labels.back(), 0);

  std::vector<int> frontier{0};
  int depth = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier) {
      for (const auto& [i, child] : elems[static_cast<std::size_t>(u)]
                                        .weak_covers_up()) {
        std::string key = child.str();
        auto it = index.find(key);
        int v;
        if (it == index.end()) {
          v = static_cast<int>(elems.size());
          index.emplace(key, v);
          elems.push_back(child);
          labels.push_back(std::move(key));
          ranks.push_back(depth + 1);
          covers.emplace_back();
          cover_labels.emplace_back();
          next.push_back(v);
        } else {
          v = it->second;
        }
        covers[static_cast<std::size_t>(u)].push_back(v);
        cover_labels[static_cast<std::size_t>(u)].push_back(i);
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return RankedPoset(std::move(labels), std::move(ranks), std::move(covers),
                     std::move(cover_labels));
}

/// Recovers the permutation list behind a weak-order poset from its labels,
/// index-aligned with the poset.
inline std::vector<Permutation> weak_order_elements(const RankedPoset& p) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int v = 0; v < p.size(); ++v)
    out.push_back(Permutation::from_string(p.label(v)));
  return out;
}

}  // namespace peck
