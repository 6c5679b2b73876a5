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
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "peck/common.hpp"
#include "peck/ranked_poset.hpp"

namespace peck {

namespace detail {

// Min-cost augmenting-path solver for the Greene-Kleitman network:
//   s -> v_in   (capacity 1, cost +k)   for every element v
//   v_in -> v_out (capacity 1, cost -1)
//   u_out -> v_in (capacity 1, cost 0)  for every closure pair u < v
//   v_out -> t  (capacity 1, cost 0)
// Each augmenting unit is a chain C of cost k - |C|; augmentation continues
// while the cheapest path is negative, i.e. while chains longer than k exist.
// Closure arcs are enumerated straight from the closure bit rows; only arcs
// carrying flow get explicit storage.
class ChainFlowSolver {
 public:
  ChainFlowSolver(const RankedPoset& p, const StrictOrder& ord, long long k)
      : ord_(ord),
        k_(k),
        n_(p.size()),
        s_(2 * p.size()),
        t_(2 * p.size() + 1),
        s_used_(static_cast<std::size_t>(p.size()), 0),
        int_used_(static_cast<std::size_t>(p.size()), 0),
        t_used_(static_cast<std::size_t>(p.size()), 0),
        flowed_out_(static_cast<std::size_t>(p.size())),
        flowed_in_(static_cast<std::size_t>(p.size())),
        pot_(static_cast<std::size_t>(2 * p.size()) + 2, 0),
        dist_(static_cast<std::size_t>(2 * p.size()) + 2, kInf),
        parent_(static_cast<std::size_t>(2 * p.size()) + 2, -1) {
    init_potentials();
  }

  /// Total cost of the min-cost flow (a nonpositive number; each unit
  /// contributes k - |chain|).
  long long solve() {
    long long total = 0;
    for (;;) {
      const long long path_cost = shortest_path();
      if (path_cost >= 0) break;
      augment();
      total += path_cost;
    }
    return total;
  }

 private:
  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  static int in_node(int v) { return 2 * v; }
  static int out_node(int v) { return 2 * v + 1; }

  // Shortest-path distances in the flow-free network, used as initial node
  // potentials. All arcs go forward in (s, 0_in, 0_out, 1_in, ..., t) order,
  // so one topological sweep suffices.
  void init_potentials() {
    std::vector<long long>& d = pot_;
    std::fill(d.begin(), d.end(), kInf);
    d[static_cast<std::size_t>(s_)] = 0;
    for (int v = 0; v < n_; ++v) {
      auto& din = d[static_cast<std::size_t>(in_node(v))];
      din = std::min(din, k_);
      if (din == kInf) continue;
      auto& dout = d[static_cast<std::size_t>(out_node(v))];
      dout = std::min(dout, din - 1);
      d[static_cast<std::size_t>(t_)] =
          std::min(d[static_cast<std::size_t>(t_)], dout);
      ord_.for_each_greater(v, [&](int w) {
        auto& dw = d[static_cast<std::size_t>(in_node(w))];
        dw = std::min(dw, dout);
      });
    }
  }

  bool closure_arc_flowed(int u, int v) const {
    const auto& f = flowed_out_[static_cast<std::size_t>(u)];
    return std::binary_search(f.begin(), f.end(), v);
  }

  // Dijkstra over the residual graph with reduced costs; ties broken by node
  // id via the pair ordering, so the augmentation order is deterministic.
  // Returns the true cost of the cheapest s-t path (kInf if unreachable).
  long long shortest_path() {
    std::fill(dist_.begin(), dist_.end(), kInf);
    std::fill(parent_.begin(), parent_.end(), -1);
    using QE = std::pair<long long, int>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    dist_[static_cast<std::size_t>(s_)] = 0;
    pq.push({0, s_});
    auto relax = [&](int x, int y, long long cost) {
      const long long rc = cost + pot_[static_cast<std::size_t>(x)] -
                           pot_[static_cast<std::size_t>(y)];
      const long long nd = dist_[static_cast<std::size_t>(x)] + rc;
      if (nd < dist_[static_cast<std::size_t>(y)]) {
        dist_[static_cast<std::size_t>(y)] = nd;
        parent_[static_cast<std::size_t>(y)] = x;
        pq.push({nd, y});
      }
    };
    while (!pq.empty()) {
      const auto [d, x] = pq.top();
      pq.pop();
      if (d != dist_[static_cast<std::size_t>(x)]) continue;
      if (x == t_) break;  // settled: the cheapest augmenting path is known
      if (x == s_) {
        for (int v = 0; v < n_; ++v)
          if (!s_used_[static_cast<std::size_t>(v)]) relax(s_, in_node(v), k_);
      } else if ((x & 1) == 0) {
        const int v = x / 2;
        if (!int_used_[static_cast<std::size_t>(v)])
          relax(x, out_node(v), -1);
        for (int u : flowed_in_[static_cast<std::size_t>(v)])
          relax(x, out_node(u), 0);
      } else {
        const int v = x / 2;
        if (int_used_[static_cast<std::size_t>(v)]) relax(x, in_node(v), 1);
        if (!t_used_[static_cast<std::size_t>(v)]) relax(x, t_, 0);
        ord_.for_each_greater(v, [&](int w) {
          if (!closure_arc_flowed(v, w)) relax(x, in_node(w), 0);
        });
      }
    }
    const long long dt = dist_[static_cast<std::size_t>(t_)];
    if (dt == kInf) return kInf;
    const long long true_cost = dt + pot_[static_cast<std::size_t>(t_)];
    // Clamping unsettled labels at dist(t) keeps every residual reduced
    // cost nonnegative for the next round.
    for (std::size_t i = 0; i < pot_.size(); ++i)
      pot_[i] += std::min(dist_[i], dt);
    return true_cost;
  }

  static void sorted_insert(std::vector<int>& v, int x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }
  static void sorted_erase(std::vector<int>& v, int x) {
    v.erase(std::lower_bound(v.begin(), v.end(), x));
  }

  void augment() {
    int y = t_;
    while (y != s_) {
      const int x = parent_[static_cast<std::size_t>(y)];
      if (x == s_) {
        s_used_[static_cast<std::size_t>(y / 2)] = 1;
      } else if (y == t_) {
        t_used_[static_cast<std::size_t>(x / 2)] = 1;
      } else if ((x & 1) == 0 && y == out_node(x / 2)) {
        int_used_[static_cast<std::size_t>(x / 2)] = 1;
      } else if ((y & 1) == 0 && x == out_node(y / 2)) {
        int_used_[static_cast<std::size_t>(y / 2)] = 0;  // reverse internal
      } else if ((x & 1) == 1) {
        sorted_insert(flowed_out_[static_cast<std::size_t>(x / 2)], y / 2);
        sorted_insert(flowed_in_[static_cast<std::size_t>(y / 2)], x / 2);
      } else {
        sorted_erase(flowed_out_[static_cast<std::size_t>(y / 2)], x / 2);
        sorted_erase(flowed_in_[static_cast<std::size_t>(x / 2)], y / 2);
      }
      y = x;
    }
  }

  const StrictOrder& ord_;
  const long long k_;
  const int n_, s_, t_;
  std::vector<char> s_used_, int_used_, t_used_;
  std::vector<std::vector<int>> flowed_out_, flowed_in_;
  std::vector<long long> pot_, dist_;
  std::vector<int> parent_;
};

}  // namespace detail

/// Maximum size of a union of k antichains, via Greene-Kleitman duality:
/// a_k = |P| - max over disjoint chain families of sum (|C|-k)^+, realized as
/// a min-cost flow over the transitive closure. k at or above the height
/// returns |P| outright.
inline long long max_k_antichain_flow(const RankedPoset& p,
                                      const StrictOrder& closure, int k) {
  if (k < 1) throw input_error("antichain count k must be >= 1");
  if (k >= height(p)) return p.size();
  detail::ChainFlowSolver solver(p, closure, k);
  return p.size() + solver.solve();
}

inline long long max_k_antichain_flow(const RankedPoset& p, int k) {
  if (k < 1) throw input_error("antichain count k must be >= 1");
  if (k >= height(p)) return p.size();
  const StrictOrder closure = transitive_closure(p);
  return max_k_antichain_flow(p, closure, k);
}

inline constexpr int default_oracle_element_cap = 24;

struct OracleResult {
  long long value = 0;
  std::vector<int> witness;  // element indices, ascending
};

/// Brute-force maximum union of k antichains: branch-and-bound over subsets
/// with no (k+1)-element chain (the Mirsky characterization). Include-first
/// search over elements in index order, so the witness is deterministic.
/// Refuses posets above the element cap.
inline OracleResult max_k_antichain_oracle_witness(
    const RankedPoset& p, int k, int element_cap = default_oracle_element_cap) {
  if (k < 1) throw input_error("antichain count k must be >= 1");
  if (p.size() > element_cap)
    throw budget_error("oracle refuses posets with more than " +
                       std::to_string(element_cap) + " elements (got " +
                       std::to_string(p.size()) + ")");
  const int n = p.size();
  const StrictOrder closure = transitive_closure(p);
  std::vector<std::uint32_t> below(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    closure.for_each_greater(
        u, [&](int v) { below[static_cast<std::size_t>(v)] |= 1u << u; });

  std::uint32_t chosen = 0, best_mask = 0;
  int best = 0;
  std::vector<int> h(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int v, int count) {
    if (count > best) {
      best = count;
      best_mask = chosen;
    }
    if (v == n || count + (n - v) <= best) return;
    std::uint32_t lower = below[static_cast<std::size_t>(v)] & chosen;
    int hv = 1;
    while (lower) {
      const int u = __builtin_ctz(lower);
      hv = std::max(hv, h[static_cast<std::size_t>(u)] + 1);
      lower &= lower - 1;
    }
    if (hv <= k) {
      chosen |= 1u << v;
      h[static_cast<std::size_t>(v)] = hv;
      go(v + 1, count + 1);
      chosen &= ~(1u << v);
    }
    go(v + 1, count);
  };
  go(0, 0);

  OracleResult out;
  out.value = best;
  for (int v = 0; v < n; ++v)
    if (best_mask & (1u << v)) out.witness.push_back(v);
  return out;
}

inline long long max_k_antichain_oracle(
    const RankedPoset& p, int k, int element_cap = default_oracle_element_cap) {
  return max_k_antichain_oracle_witness(p, k, element_cap).value;
}

/// Mirsky layering of a subset: antichain number h of each element = longest
/// chain within the subset ending at it. Returns the layers (at most
/// max-height many, each an antichain).
inline std::vector<std::vector<int>> mirsky_antichains(
    const RankedPoset& p, const std::vector<int>& subset) {
  const StrictOrder closure = transitive_closure(p);
  std::vector<std::vector<int>> layers;
  std::vector<int> h(static_cast<std::size_t>(p.size()), 0);
  for (int v : subset) {
    int hv = 1;
    for (int u : subset) {
      if (u >= v) break;
      if (closure.less(u, v) && h[static_cast<std::size_t>(u)] >= hv)
        hv = h[static_cast<std::size_t>(u)] + 1;
    }
    h[static_cast<std::size_t>(v)] = hv;
    if (static_cast<int>(layers.size()) < hv) layers.resize(
        static_cast<std::size_t>(hv));
    layers[static_cast<std::size_t>(hv) - 1].push_back(v);
  }
  return layers;
}

struct PerKRecord {
  int k = 0;
  long long max_k_antichain = 0;
  long long top_k_rank_sum = 0;
  bool equal = false;
  std::string method;  // "FLOW", "ORACLE" or "SKIPPED"
};

/// Machine-readable Sperner verdicts for one poset: per-k antichain maxima
/// against the top-k rank sums, plus the profile-level flags.
struct SpernerCertificate {
  std::string poset_id;
  int n_elements = 0;
  std::vector<int> rank_sizes;
  RankProfile profile;
  std::vector<PerKRecord> per_k;
  bool strongly_sperner = false;
  bool peck = false;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = schema_version;
    j["poset"] = poset_id;
    j["n_elements"] = n_elements;
    j["rank_sizes"] = rank_sizes;
    j["rank_symmetric"] = profile.symmetric;
    j["rank_unimodal"] = profile.unimodal;
    j["per_k"] = nlohmann::json::array();
    for (const auto& rec : per_k)
      j["per_k"].push_back({{"k", rec.k},
                            {"a_k", rec.max_k_antichain},
                            {"rank_sum", rec.top_k_rank_sum},
                            {"equal", rec.equal},
                            {"method", rec.method}});
    j["strongly_sperner"] = strongly_sperner;
    j["peck"] = peck;
    j["seed"] = seed;
    j["versions"] = {{"tool", version}, {"schema", schema_version}};
    return j;
  }
};

/// Runs the flow for k = 1..top_rank, compares each maximum against the sum
/// of the k largest rank sizes, and assembles the verdicts. The sequence a_k
/// must be concave nondecreasing and dominate the rank sums; both are
/// asserted, a violation means a solver bug.
inline SpernerCertificate certify(const RankedPoset& p,
                                  const std::string& poset_id,
                                  std::uint64_t seed = 0) {
  SpernerCertificate cert;
  cert.poset_id = poset_id;
  cert.n_elements = p.size();
  cert.profile = rank_profile(p);
  cert.rank_sizes = cert.profile.sizes;
  cert.seed = seed;
  cert.strongly_sperner = true;

  std::vector<long long> sorted_sizes(cert.rank_sizes.begin(),
                                      cert.rank_sizes.end());
  std::sort(sorted_sizes.rbegin(), sorted_sizes.rend());

  const StrictOrder closure = transitive_closure(p);
  long long prev_a = 0, prev_inc = std::numeric_limits<long long>::max();
  long long rank_sum = 0;
  for (int k = 1; k <= p.top_rank(); ++k) {
    PerKRecord rec;
    rec.k = k;
    rank_sum += k <= static_cast<int>(sorted_sizes.size())
                    ? sorted_sizes[static_cast<std::size_t>(k) - 1]
                    : 0;
    rec.top_k_rank_sum = rank_sum;
    try {
      rec.max_k_antichain = max_k_antichain_flow(p, closure, k);
      rec.method = "FLOW";
    } catch (const budget_error&) {
      rec.method = "SKIPPED";
      rec.equal = false;
      cert.strongly_sperner = false;
      cert.per_k.push_back(rec);
      continue;
    }
    if (rec.max_k_antichain < rec.top_k_rank_sum)
      throw std::logic_error("a_k fell below the top-k rank sum");
    const long long inc = rec.max_k_antichain - prev_a;
    if (inc < 0 || inc > prev_inc)
      throw std::logic_error("a_k sequence is not concave nondecreasing");
    prev_inc = inc;
    prev_a = rec.max_k_antichain;
    rec.equal = rec.max_k_antichain == rec.top_k_rank_sum;
    cert.strongly_sperner = cert.strongly_sperner && rec.equal;
    cert.per_k.push_back(rec);
  }
  cert.peck =
      cert.strongly_sperner && cert.profile.symmetric && cert.profile.unimodal;
  return cert;
}

}  // namespace peck
