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

#include <map>
#include <string>
#include <vector>

#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "peck/ranked_poset.hpp"
#include "peck/weak_order.hpp"

using peck::RankedPoset;

TEST_CASE("weak order W_3 matches the hexagon") {
  const RankedPoset p = peck::build_weak_order(3);
  CHECK(p.size() == 6);
  CHECK(p.top_rank() == 3);
  CHECK(p.cover_edge_count() == 6);
  const auto profile = peck::rank_profile(p);
  CHECK(profile.sizes == std::vector<int>{1, 2, 2, 1});
  CHECK(profile.symmetric);
  CHECK(profile.unimodal);
  // ShortLex element order is pinned: downstream matrices depend on it.
  std::vector<std::string> labels;
  for (int v = 0; v < p.size(); ++v) labels.push_back(p.label(v));
  CHECK(labels ==
        std::vector<std::string>{"123", "213", "132", "231", "312", "321"});
}

TEST_CASE("weak order sizes and degenerate cases") {
  const RankedPoset w1 = peck::build_weak_order(1);
  CHECK(w1.size() == 1);
  CHECK(w1.top_rank() == 0);
  const RankedPoset w4 = peck::build_weak_order(4);
  CHECK(w4.size() == 24);
  CHECK(peck::rank_profile(w4).sizes ==
        std::vector<int>{1, 3, 5, 6, 5, 3, 1});
  CHECK_THROWS_AS(peck::build_weak_order(0), peck::input_error);
  CHECK_THROWS_AS(peck::build_weak_order(10), peck::input_error);
}

TEST_CASE("cover edge count is (n-1) n!/2") {
  long long factorial = 1;
  for (int n = 2; n <= 6; ++n) {
    factorial *= n;
    CHECK(peck::build_weak_order(n).cover_edge_count() ==
          (n - 1) * factorial / 2);
  }
}

TEST_CASE("rank sizes follow the Mahonian distribution") {
  for (int n = 1; n <= 7; ++n) {
    const auto sizes = peck::rank_profile(peck::build_weak_order(n)).sizes;
    const auto mahonian = oracles::mahonian_coefficients(n);
    REQUIRE(sizes.size() == mahonian.size());
    for (std::size_t i = 0; i < sizes.size(); ++i)
      CHECK(sizes[i] == mahonian[i]);
  }
}

TEST_CASE("rank profile flags") {
  const auto chain = peck::rank_profile(peck::make_chain(4));
  CHECK(chain.sizes == std::vector<int>{1, 1, 1, 1});
  CHECK(chain.symmetric);
  CHECK(chain.unimodal);
  const auto skew = peck::rank_profile(peck::make_ranked_poset(
      {"a", "b", "c"}, {0, 1, 1}, {{0, 1}, {0, 2}}));
  CHECK(skew.sizes == std::vector<int>{1, 2});
  CHECK_FALSE(skew.symmetric);
  CHECK(skew.unimodal);
  const auto dip = peck::rank_profile(peck::make_ranked_poset(
      {"a", "b", "c", "d", "e"}, {0, 0, 1, 2, 2},
      {{0, 2}, {1, 2}, {2, 3}, {2, 4}}));
  CHECK(dip.sizes == std::vector<int>{2, 1, 2});
  CHECK(dip.symmetric);
  CHECK_FALSE(dip.unimodal);
}

TEST_CASE("transitive closure of W_3") {
  const RankedPoset p = peck::build_weak_order(3);
  const peck::StrictOrder ord = peck::transitive_closure(p);
  const int bottom = p.index_of("123");
  for (int v = 0; v < p.size(); ++v)
    CHECK(ord.less(bottom, v) == (v != bottom));
  CHECK_FALSE(ord.less(p.index_of("213"), p.index_of("132")));
  CHECK_FALSE(ord.less(p.index_of("132"), p.index_of("213")));
  CHECK_FALSE(ord.less(p.index_of("213"), p.index_of("312")));
  CHECK(ord.less(p.index_of("213"), p.index_of("231")));
  CHECK(ord.pair_count() == 11);
}

TEST_CASE("strong order closure of S_3 has 13 pairs") {
  const RankedPoset strong = oracles::build_strong_order(3);
  const peck::StrictOrder ord = peck::transitive_closure(strong);
  CHECK(ord.pair_count() == 13);
  CHECK(ord.less(strong.index_of("213"), strong.index_of("312")));
}

TEST_CASE("closure restricted to consecutive ranks is the cover relation") {
  for (int n = 2; n <= 5; ++n) {
    const RankedPoset p = peck::build_weak_order(n);
    const peck::StrictOrder ord = peck::transitive_closure(p);
    for (int u = 0; u < p.size(); ++u)
      for (int v = 0; v < p.size(); ++v)
        if (p.rank_of(v) == p.rank_of(u) + 1)
          CHECK(ord.less(u, v) == p.is_cover(u, v));
  }
}

TEST_CASE("weak order closure is contained in the strong order closure") {
  for (int n = 2; n <= 5; ++n) {
    const RankedPoset weak = peck::build_weak_order(n);
    const RankedPoset strong = oracles::build_strong_order(n);
    const peck::StrictOrder wo = peck::transitive_closure(weak);
    const peck::StrictOrder so = peck::transitive_closure(strong);
    for (int u = 0; u < weak.size(); ++u)
      wo.for_each_greater(u, [&](int v) { CHECK(so.less(u, v)); });
  }
}

TEST_CASE("height counts elements of a longest chain") {
  CHECK(peck::height(peck::build_weak_order(3)) == 4);
  CHECK(peck::height(peck::make_chain(5)) == 5);
  CHECK(peck::height(peck::make_antichain(7)) == 1);
  // isolated top-rank element: height is shorter than the rank count
  const RankedPoset gap = peck::make_ranked_poset(
      {"a", "b", "c"}, {0, 1, 2}, {{0, 1}});
  CHECK(peck::height(gap) == 2);
}

TEST_CASE("poset constructor validates the invariants") {
  using V = std::vector<std::vector<int>>;
  CHECK_THROWS_AS(RankedPoset({"a", "b"}, {0, 2}, V{{1}, {}}),
                  peck::input_error);  // rank gap
  CHECK_THROWS_AS(RankedPoset({"a", "b"}, {1, 1}, V{{}, {}}),
                  peck::input_error);  // no rank 0
  CHECK_THROWS_AS(RankedPoset({"a", "b"}, {1, 0}, V{{}, {}}),
                  peck::input_error);  // not sorted by rank
  CHECK_THROWS_AS(RankedPoset({"a", "b"}, {0, 1}, V{{}, {0}}),
                  peck::input_error);  // cover goes down
  CHECK_THROWS_AS(RankedPoset({"a", "a"}, {0, 1}, V{{1}, {}}),
                  peck::input_error);  // duplicate label
  CHECK_THROWS_AS(RankedPoset({"a", "b"}, {0, 1}, V{{5}, {}}),
                  peck::input_error);  // target out of range
  CHECK_THROWS_AS(RankedPoset({"a", "b"}, {0, 1}, V{{1}, {}}, V{{1, 2}, {}}),
                  peck::input_error);  // label shape mismatch
}

TEST_CASE("make_ranked_poset reorders scrambled input by rank") {
  const RankedPoset p = peck::make_ranked_poset(
      {"top", "bot", "mid"}, {2, 0, 1}, {{1, 2}, {2, 0}});
  CHECK(p.label(0) == "bot");
  CHECK(p.label(2) == "top");
  CHECK(p.is_cover(0, 1));
  CHECK(p.is_cover(1, 2));
}

TEST_CASE("disjoint union aligns ranks at zero") {
  const RankedPoset u =
      peck::disjoint_union(peck::make_chain(2), peck::make_antichain(3));
  CHECK(u.size() == 5);
  CHECK(peck::rank_profile(u).sizes == std::vector<int>{4, 1});
  const peck::StrictOrder ord = peck::transitive_closure(u);
  CHECK(ord.pair_count() == 1);
}

TEST_CASE("dot export of W_3 with raising labels is byte-stable") {
  const RankedPoset p = peck::build_weak_order(3);
  std::map<std::pair<int, int>, peck::Int> labels;
  for (int u = 0; u < p.size(); ++u) {
    const auto& covers = p.up_covers(u);
    const auto& gens = p.up_labels(u);
    for (std::size_t e = 0; e < covers.size(); ++e)
      labels[{u, covers[e]}] = gens[e];
  }
  const std::string expected =
      "digraph raising_S3 {\n"
      "  rankdir=BT;\n"
      "  node [shape=plaintext];\n"
      "  { rank=same; \"123\"; }\n"
      "  { rank=same; \"213\"; \"132\"; }\n"
      "  { rank=same; \"231\"; \"312\"; }\n"
      "  { rank=same; \"321\"; }\n"
      "  \"123\" -> \"213\" [label=\"1\"];\n"
      "  \"123\" -> \"132\" [label=\"2\"];\n"
      "  \"213\" -> \"231\" [label=\"2\"];\n"
      "  \"132\" -> \"312\" [label=\"1\"];\n"
      "  \"231\" -> \"321\" [label=\"1\"];\n"
      "  \"312\" -> \"321\" [label=\"2\"];\n"
      "}\n";
  CHECK(peck::export_dot(p, &labels, "raising_S3") == expected);
  CHECK(peck::export_dot(p, &labels, "raising_S3") ==
        peck::export_dot(p, &labels, "raising_S3"));
}

TEST_CASE("dot export edge cases") {
  const RankedPoset w1 = peck::build_weak_order(1);
  CHECK(peck::export_dot(w1) ==
        "digraph poset {\n"
        "  rankdir=BT;\n"
        "  node [shape=plaintext];\n"
        "  { rank=same; \"1\"; }\n"
        "}\n");
  const RankedPoset p = peck::build_weak_order(3);
  std::map<std::pair<int, int>, peck::Int> bad{{{0, 5}, peck::Int(1)}};
  CHECK_THROWS_AS(peck::export_dot(p, &bad), peck::input_error);
  std::map<std::pair<int, int>, peck::Int> non_cover{
      {{p.index_of("123"), p.index_of("321")}, peck::Int(1)}};
  CHECK_THROWS_AS(peck::export_dot(p, &non_cover), peck::input_error);
}

TEST_CASE("labeled digraph export carries down edges") {
  const RankedPoset p = peck::build_weak_order(2);
  const std::string dot = peck::export_labeled_digraph(
      p, {{1, 0, peck::Int(1)}}, "lowering_S2");
  CHECK(dot ==
        "digraph lowering_S2 {\n"
        "  rankdir=BT;\n"
        "  node [shape=plaintext];\n"
        "  { rank=same; \"12\"; }\n"
        "  { rank=same; \"21\"; }\n"
        "  \"21\" -> \"12\" [label=\"1\"];\n"
        "}\n");
  CHECK_THROWS_AS(
      peck::export_labeled_digraph(p, {{0, 7, peck::Int(1)}}, "bad"),
      peck::input_error);
}
