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

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "peck/common.hpp"
#include "peck/int_matrix.hpp"
#include "peck/permutation.hpp"
#include "peck/ranked_poset.hpp"
#include "peck/weak_order.hpp"

namespace peck {

/// Lowering weight c(w, w*t_ij) = 2*(w_i - w_j - a) - 1, where a is the
/// crossing count #{k < i : w_j < w_k < w_i}. Defined on strong down-covers;
/// always a positive odd integer.
inline long long weight_c(const Permutation& w, int i, int j) {
  if (!w.is_strong_cover_down(i, j))
    throw input_error("(" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not a strong down-cover of " + w.str());
  return 2LL * (w(i) - w(j) - w.crossing_count(i, j)) - 1;
}

/// The same weight computed as the Manhattan (L^1) distance between the
/// Lehmer codes of w and w*t_ij. Agrees with weight_c on every strong
/// down-cover; only positions i and j of the codes can differ there.
inline long long weight_c_lehmer(const Permutation& w, int i, int j) {
  if (!w.is_strong_cover_down(i, j))
    throw input_error("(" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not a strong down-cover of " + w.str());
  const std::vector<int> lw = w.lehmer_code();
  const std::vector<int> lv = w.apply_transposition(i, j).lehmer_code();
  long long d = 0;
  for (std::size_t k = 0; k < lw.size(); ++k) d += std::abs(lw[k] - lv[k]);
  return d;
}

/// Order raising operator U on the weak order: column w holds entry i at row
/// w*s_i for every ascent i of w. Requires the generator-labeled poset from
/// build_weak_order.
inline IntMatrix build_U(const RankedPoset& p) {
  if (!p.has_edge_labels())
    throw input_error("raising operator needs a generator-labeled weak order");
  std::vector<std::tuple<int, int, Int>> ts;
  for (int u = 0; u < p.size(); ++u) {
    const auto& covers = p.up_covers(u);
    const auto& gens = p.up_labels(u);
    for (std::size_t e = 0; e < covers.size(); ++e)
      ts.emplace_back(covers[e], u, Int(gens[e]));
  }
  return IntMatrix::from_triplets(p.size(), p.size(), ts);
}

/// Lowering operator D: column w holds entry c(w, w*t_ij) at row w*t_ij for
/// every strong down-cover (i,j) of w. Supported on strong covers, which need
/// not be weak covers.
inline IntMatrix build_D(const RankedPoset& p) {
  const std::vector<Permutation> elems = weak_order_elements(p);
  std::vector<std::tuple<int, int, Int>> ts;
  for (int u = 0; u < p.size(); ++u) {
    for (const auto& [ij, v] : elems[static_cast<std::size_t>(u)]
                                   .strong_covers_down()) {
      const int target = p.index_of(v.str());
      ts.emplace_back(target, u,
                      Int(weight_c(elems[static_cast<std::size_t>(u)],
                                   ij.first, ij.second)));
    }
  }
  return IntMatrix::from_triplets(p.size(), p.size(), ts);
}

/// Diagonal weight operator H with entry 2*rank(w) - top_rank at w. For the
/// weak order on S_n the top rank is n(n-1)/2, so the spectrum is symmetric
/// about 0 with constant parity.
inline IntMatrix build_H(const RankedPoset& p) {
  IntMatrix h(p.size(), p.size());
  for (int v = 0; v < p.size(); ++v)
    h.set(v, v, Int(2LL * p.rank_of(v) - p.top_rank()));
  return h;
}

/// The (U, D, H) operator bundle over a fixed basis order. rank_offsets[k] is
/// the first basis index of rank k (rank_offsets has top_rank+2 entries).
struct Sl2Triple {
  IntMatrix U, D, H;
  std::vector<int> rank_offsets;
  int top_rank = 0;
};

inline Sl2Triple build_sl2_triple(const RankedPoset& p) {
  Sl2Triple t;
  t.U = build_U(p);
  t.D = build_D(p);
  t.H = build_H(p);
  t.top_rank = p.top_rank();
  for (int k = 0; k <= p.top_rank(); ++k)
    t.rank_offsets.push_back(p.rank_begin(k));
  t.rank_offsets.push_back(p.size());
  return t;
}

struct RelationCheck {
  std::string relation;
  Int max_abs_residual;
  bool ok = false;
  std::optional<IntMatrix::Entry> first_offending;
};

struct Sl2Report {
  std::vector<RelationCheck> relations;
  bool all_ok = false;
};

/// Verifies [U,D] = H, [H,U] = 2U, [H,D] = -2D exactly over the integers.
/// Residuals are computed as sparse products; a relation holds iff its
/// maximum absolute residual entry is 0.
inline Sl2Report verify_sl2(const Sl2Triple& t) {
  if (t.U.rows() != t.D.rows() || t.U.rows() != t.H.rows() ||
      t.U.rows() != t.U.cols())
    throw std::logic_error("sl2 triple has inconsistent dimensions");
  Sl2Report report;
  auto check = [&report](const std::string& name, const IntMatrix& residual) {
    RelationCheck c;
    c.relation = name;
    c.max_abs_residual = residual.max_abs();
    c.ok = c.max_abs_residual == 0;
    if (!c.ok) c.first_offending = residual.first_nonzero();
    report.relations.push_back(std::move(c));
  };
  check("[U,D]-H", t.U * t.D - t.D * t.U - t.H);
  check("[H,U]-2U", t.H * t.U - t.U * t.H - t.U.scaled(2));
  check("[H,D]+2D", t.H * t.D - t.D * t.H + t.D.scaled(2));
  report.all_ok = true;
  for (const auto& c : report.relations) report.all_ok = report.all_ok && c.ok;
  return report;
}

/// The restriction of U^(r-2k) mapping the rank-k subspace to the rank-(r-k)
/// subspace, as a p_(r-k) x p_k matrix (square for rank-symmetric posets).
/// Computed as a product of the per-level blocks of U, never materializing a
/// full-space power.
inline IntMatrix raising_power_block(const Sl2Triple& t, int k) {
  const int r = t.top_rank;
  if (k < 0 || 2 * k >= r)
    throw input_error("raising block requires 0 <= k < r/2, got k=" +
                      std::to_string(k) + " with r=" + std::to_string(r));
  auto level_block = [&t](int j) {
    const int c0 = t.rank_offsets[static_cast<std::size_t>(j)];
    const int c1 = t.rank_offsets[static_cast<std::size_t>(j) + 1];
    const int r0 = c1;
    const int r1 = t.rank_offsets[static_cast<std::size_t>(j) + 2];
    std::vector<std::tuple<int, int, Int>> ts;
    for (int c = c0; c < c1; ++c)
      for (const auto& [row, v] : t.U.column(c)) {
        if (row < r0 || row >= r1)
          throw std::logic_error("raising operator leaves its level");
        ts.emplace_back(row - r0, c - c0, v);
      }
    return IntMatrix::from_triplets(r1 - r0, c1 - c0, ts);
  };
  IntMatrix block = level_block(k);
  for (int j = k + 1; j <= r - k - 1; ++j) block = level_block(j) * block;
  return block;
}

/// Multiplicities of the irreducible summands read off the rank sizes: the
/// highest weight r-2k occurs p_k - p_(k-1) times.
struct IrrepDecomposition {
  std::map<int, long long> multiplicity;  // highest weight -> multiplicity

  long long total_dimension() const {
    long long d = 0;
    for (const auto& [m, mult] : multiplicity) d += (m + 1) * mult;
    return d;
  }
};

inline IrrepDecomposition decompose(const RankProfile& profile) {
  const int r = static_cast<int>(profile.sizes.size()) - 1;
  if (r < 0) throw input_error("empty rank profile");
  if (!profile.symmetric)
    throw input_error("decomposition requires a rank-symmetric profile");
  IrrepDecomposition out;
  long long total = 0;
  for (int k = 0; 2 * k <= r; ++k) {
    const long long mult =
        profile.sizes[static_cast<std::size_t>(k)] -
        (k > 0 ? profile.sizes[static_cast<std::size_t>(k) - 1] : 0);
    if (mult < 0)
      throw input_error(
          "rank profile is not consistent with an sl2-representation with "
          "these weight spaces (negative multiplicity at highest weight " +
          std::to_string(r - 2 * k) + ")");
    if (mult > 0) out.multiplicity[r - 2 * k] = mult;
  }
  for (int s : profile.sizes) total += s;
  if (out.total_dimension() != total)
    throw std::logic_error("irrep dimension count does not match poset size");
  return out;
}

}  // namespace peck
