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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "peck/coxeter.hpp"
#include "peck/sperner.hpp"
#include "peck/weak_order.hpp"

using peck::RankedPoset;

namespace {

void check_flow_matches_oracle(const RankedPoset& p, const std::string& what) {
  const int kmax = peck::height(p) + 1;
  for (int k = 1; k <= kmax; ++k) {
    INFO(what << " k=" << k);
    CHECK(peck::max_k_antichain_flow(p, k) ==
          peck::max_k_antichain_oracle(p, k));
  }
}

}  // namespace

TEST_CASE("flow on W_3: pinned values") {
  const RankedPoset p = peck::build_weak_order(3);
  CHECK(peck::max_k_antichain_flow(p, 1) == 2);
  CHECK(peck::max_k_antichain_flow(p, 2) == 4);
  CHECK(peck::max_k_antichain_flow(p, 3) == 5);
  CHECK(peck::max_k_antichain_flow(p, 4) == 6);   // k = height
  CHECK(peck::max_k_antichain_flow(p, 99) == 6);  // beyond the height
  CHECK_THROWS_AS(peck::max_k_antichain_flow(p, 0), peck::input_error);
}

TEST_CASE("oracle on W_3 finds the pinned witness") {
  const RankedPoset p = peck::build_weak_order(3);
  const peck::OracleResult r = peck::max_k_antichain_oracle_witness(p, 1);
  CHECK(r.value == 2);
  REQUIRE(r.witness.size() == 2);
  CHECK(p.label(r.witness[0]) == "213");
  CHECK(p.label(r.witness[1]) == "132");
  const auto layers = peck::mirsky_antichains(p, r.witness);
  CHECK(layers.size() == 1);  // a single antichain
}

TEST_CASE("oracle basics and budget") {
  CHECK(peck::max_k_antichain_oracle(peck::make_antichain(9), 1) == 9);
  CHECK(peck::max_k_antichain_oracle(peck::build_weak_order(4), 1) == 6);
  CHECK(peck::max_k_antichain_oracle(peck::make_chain(6), 2) == 2);
  CHECK_THROWS_AS(peck::max_k_antichain_oracle(peck::make_chain(25), 1),
                  peck::budget_error);
  CHECK_THROWS_AS(peck::max_k_antichain_oracle(peck::make_chain(3), 0),
                  peck::input_error);
}

TEST_CASE("flow agrees with the oracle on the fixed corpus") {
  check_flow_matches_oracle(peck::build_weak_order(3), "W3");
  check_flow_matches_oracle(peck::build_weak_order(4), "W4");
  for (int m = 2; m <= 6; ++m)
    check_flow_matches_oracle(
        peck::build_weak_order_coxeter(
            peck::coxeter_spec_from_string("I2:" + std::to_string(m))),
        "I2:" + std::to_string(m));
  check_flow_matches_oracle(
      peck::build_weak_order_coxeter(peck::coxeter_spec_from_string("B2")),
      "B2");
  for (int len = 1; len <= 5; ++len)
    check_flow_matches_oracle(peck::make_chain(len), "chain");
  check_flow_matches_oracle(peck::make_antichain(8), "antichain");
  check_flow_matches_oracle(
      peck::disjoint_union(peck::make_chain(4), peck::make_antichain(5)),
      "chain+antichain");
  check_flow_matches_oracle(
      peck::disjoint_union(peck::build_weak_order(3), peck::make_chain(3)),
      "W3+chain");
}

TEST_CASE("flow agrees with the oracle on random ranked posets") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 20; ++trial)
    check_flow_matches_oracle(oracles::random_ranked_poset(rng),
                              "random #" + std::to_string(trial));
}

TEST_CASE("certificate for W_4: pinned per-k maxima") {
  const peck::SpernerCertificate cert =
      peck::certify(peck::build_weak_order(4), "weak_order(S4)");
  CHECK(cert.n_elements == 24);
  CHECK(cert.rank_sizes == std::vector<int>{1, 3, 5, 6, 5, 3, 1});
  REQUIRE(cert.per_k.size() == 6);
  const std::vector<long long> expected{6, 11, 16, 19, 22, 23};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(cert.per_k[i].max_k_antichain == expected[i]);
    CHECK(cert.per_k[i].top_k_rank_sum == expected[i]);
    CHECK(cert.per_k[i].equal);
    CHECK(cert.per_k[i].method == "FLOW");
  }
  CHECK(cert.strongly_sperner);
  CHECK(cert.peck);
}

TEST_CASE("single-rank posets are trivially Peck") {
  const peck::SpernerCertificate cert =
      peck::certify(peck::build_weak_order(1), "weak_order(S1)");
  CHECK(cert.per_k.empty());
  CHECK(cert.strongly_sperner);
  CHECK(cert.peck);
}

TEST_CASE("W_5 is strongly Sperner and Peck") {
  const peck::SpernerCertificate cert =
      peck::certify(peck::build_weak_order(5), "weak_order(S5)");
  CHECK(cert.strongly_sperner);
  CHECK(cert.peck);
  // increments of a_k are nonincreasing (certify also asserts this)
  for (std::size_t i = 2; i < cert.per_k.size(); ++i)
    CHECK(cert.per_k[i].max_k_antichain - cert.per_k[i - 1].max_k_antichain <=
          cert.per_k[i - 1].max_k_antichain -
              cert.per_k[i - 2].max_k_antichain);
}

TEST_CASE("a non-Sperner poset is flagged") {
  // four minimal elements, two tops attached to only one of them: the five
  // pairwise-incomparable elements beat the largest rank (4)
  const RankedPoset p = peck::make_ranked_poset(
      {"x1", "x2", "x3", "x4", "y1", "y2"}, {0, 0, 0, 0, 1, 1},
      {{0, 4}, {0, 5}});
  CHECK(peck::max_k_antichain_flow(p, 1) == 5);
  const peck::SpernerCertificate cert = peck::certify(p, "counterexample");
  CHECK_FALSE(cert.per_k[0].equal);
  CHECK_FALSE(cert.strongly_sperner);
  CHECK_FALSE(cert.peck);
}

TEST_CASE("optimum is independent of the within-rank element order") {
  const RankedPoset p = peck::build_weak_order(4);
  std::vector<long long> baseline;
  for (int k = 1; k <= p.top_rank(); ++k)
    baseline.push_back(peck::max_k_antichain_flow(p, k));

  std::mt19937 rng(99);
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pos(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p.size(); ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    labels.push_back(p.label(v));
    ranks.push_back(p.rank_of(v));
  }
  for (int u = 0; u < p.size(); ++u)
    for (int c : p.up_covers(u))
      edges.emplace_back(pos[static_cast<std::size_t>(u)],
                         pos[static_cast<std::size_t>(c)]);
  const RankedPoset shuffled =
      peck::make_ranked_poset(std::move(labels), std::move(ranks), edges);
  for (int k = 1; k <= shuffled.top_rank(); ++k)
    CHECK(peck::max_k_antichain_flow(shuffled, k) ==
          baseline[static_cast<std::size_t>(k) - 1]);
}

TEST_CASE("certificate JSON carries the full schema") {
  peck::SpernerCertificate cert =
      peck::certify(peck::build_weak_order(3), "weak_order(S3)", 42);
  const auto j = cert.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["poset"] == "weak_order(S3)");
  CHECK(j["n_elements"] == 6);
  CHECK(j["rank_sizes"] == std::vector<int>{1, 2, 2, 1});
  CHECK(j["per_k"].size() == 3);
  CHECK(j["per_k"][0]["k"] == 1);
  CHECK(j["per_k"][0]["a_k"] == 2);
  CHECK(j["per_k"][0]["rank_sum"] == 2);
  CHECK(j["per_k"][0]["equal"] == true);
  CHECK(j["strongly_sperner"] == true);
  CHECK(j["peck"] == true);
  CHECK(j["seed"] == 42);
  CHECK(j["versions"]["schema"] == 1);
  const std::string tool = j["versions"]["tool"];
  CHECK_FALSE(tool.empty());
}

TEST_CASE("mirsky layering splits a subset into antichains") {
  const RankedPoset p = peck::make_chain(5);
  const auto layers = peck::mirsky_antichains(p, {0, 1, 3});
  REQUIRE(layers.size() == 3);
  CHECK(layers[0] == std::vector<int>{0});
  CHECK(layers[1] == std::vector<int>{1});
  CHECK(layers[2] == std::vector<int>{3});
}
