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

#include <random>
#include <sstream>

#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "peck/exact_linalg.hpp"
#include "peck/int_matrix.hpp"
#include "peck/sl2.hpp"
#include "peck/weak_order.hpp"

using peck::Int;
using peck::IntMatrix;

namespace {

IntMatrix random_sparse(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> val(-9, 9);
  std::uniform_int_distribution<int> coin(0, 2);
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (coin(rng) == 0) m.set(r, c, Int(val(rng)));
  return m;
}

}  // namespace

TEST_CASE("IntMatrix basics") {
  IntMatrix m(2, 3);
  CHECK(m.is_zero());
  m.set(1, 2, Int(5));
  m.set(0, 0, Int(-1));
  CHECK(m.at(1, 2) == 5);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.nnz() == 2);
  m.set(1, 2, Int(0));
  CHECK(m.nnz() == 1);
  CHECK_THROWS_AS(m.at(2, 0), peck::input_error);
  CHECK_THROWS_AS(IntMatrix::from_triplets(2, 2, {{0, 0, Int(1)},
                                                  {0, 0, Int(2)}}),
                  peck::input_error);
}

TEST_CASE("multiplication against identity and zero") {
  std::mt19937 rng(7);
  const IntMatrix a = random_sparse(rng, 5, 5);
  CHECK(a * IntMatrix::identity(5) == a);
  CHECK(IntMatrix::identity(5) * a == a);
  CHECK((IntMatrix(5, 5) * a).is_zero());
  CHECK_THROWS_AS(a * IntMatrix(4, 4), peck::input_error);
  CHECK_THROWS_AS(a + IntMatrix(4, 5), peck::input_error);
}

TEST_CASE("U*U on the W_3 bottom column follows two-step paths") {
  const peck::RankedPoset p = peck::build_weak_order(3);
  const IntMatrix u = peck::build_U(p);
  const IntMatrix uu = u * u;
  const int bottom = p.index_of("123");
  CHECK(uu.at(p.index_of("231"), bottom) == 2);  // 123 -> 213 -> 231: 1*2
  CHECK(uu.at(p.index_of("312"), bottom) == 2);  // 123 -> 132 -> 312: 2*1
  CHECK(uu.column(bottom).size() == 2);
}

TEST_CASE("multiplication is associative on random sparse triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const IntMatrix a = random_sparse(rng, 4, 6);
    const IntMatrix b = random_sparse(rng, 6, 3);
    const IntMatrix c = random_sparse(rng, 3, 5);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("determinant pinned values") {
  CHECK(peck::determinant_exact(IntMatrix::from_triplets(
            2, 2, {{0, 0, Int(2)}, {1, 1, Int(1)}})) == 2);
  CHECK(peck::determinant_exact(IntMatrix(3, 3)) == 0);
  CHECK(peck::determinant_exact(IntMatrix(0, 0)) == 1);
  CHECK(peck::determinant_exact(IntMatrix::identity(6)) == 1);
  // antidiagonal swap flips the sign
  CHECK(peck::determinant_exact(IntMatrix::from_triplets(
            2, 2, {{0, 1, Int(1)}, {1, 0, Int(1)}})) == -1);
  CHECK_THROWS_AS(peck::determinant_exact(IntMatrix(2, 3)),
                  peck::input_error);
  // rank-deficient
  CHECK(peck::determinant_exact(IntMatrix::from_triplets(
            2, 2,
            {{0, 0, Int(1)}, {0, 1, Int(2)}, {1, 0, Int(2)}, {1, 1, Int(4)}})) ==
        0);
}

TEST_CASE("determinant agrees with cofactor expansion on random 4x4") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m.set(r, c, Int(val(rng)));
    CHECK(peck::determinant_exact(m) ==
          oracles::cofactor_determinant(m.to_dense()));
  }
}

TEST_CASE("raising power block determinants for W_3") {
  const peck::RankedPoset p = peck::build_weak_order(3);
  const peck::Sl2Triple t = peck::build_sl2_triple(p);
  CHECK(peck::determinant_exact(peck::raising_power_block(t, 0)) == 6);
  CHECK(peck::determinant_exact(peck::raising_power_block(t, 1)) == 2);
}

TEST_CASE("primality testing") {
  CHECK(peck::is_prime_u64(2));
  CHECK(peck::is_prime_u64(3));
  CHECK_FALSE(peck::is_prime_u64(1));
  CHECK_FALSE(peck::is_prime_u64(561));         // Carmichael
  CHECK(peck::is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(peck::is_prime_u64(2305843009213693951ull * 3));
  std::mt19937_64 rng(0);
  const std::uint64_t p = peck::random_prime_62bit(rng);
  CHECK(p >= (1ull << 61));
  CHECK(p < (1ull << 62));
  CHECK(peck::is_prime_u64(p));
}

TEST_CASE("modular rank") {
  std::mt19937_64 rng(5);
  const std::uint64_t p = peck::random_prime_62bit(rng);
  CHECK(peck::rank_mod_p(IntMatrix::identity(4), p) == 4);
  CHECK(peck::rank_mod_p(IntMatrix(3, 5), p) == 0);
  const IntMatrix dependent = IntMatrix::from_triplets(
      2, 2, {{0, 0, Int(1)}, {0, 1, Int(2)}, {1, 0, Int(3)}, {1, 1, Int(6)}});
  CHECK(peck::rank_mod_p(dependent, p) == 1);
}

TEST_CASE("nonsingularity certificates") {
  const IntMatrix diag =
      IntMatrix::from_triplets(2, 2, {{0, 0, Int(2)}, {1, 1, Int(1)}});
  const auto cert = peck::nonsingular_certificate(diag, 0);
  CHECK(cert.nonsingular());
  CHECK(cert.method == "MODULAR");
  CHECK(peck::is_prime_u64(cert.prime));
  CHECK(cert.rank == 2);

  const auto zero = peck::nonsingular_certificate(IntMatrix(2, 2), 0);
  CHECK_FALSE(zero.nonsingular());
  CHECK(zero.method == "EXACT");
  REQUIRE(zero.exact_det.has_value());
  CHECK(*zero.exact_det == 0);
  CHECK(zero.primes_tried.size() == 4);

  const IntMatrix dependent = IntMatrix::from_triplets(
      2, 2, {{0, 0, Int(1)}, {0, 1, Int(2)}, {1, 0, Int(2)}, {1, 1, Int(4)}});
  CHECK_FALSE(peck::nonsingular_certificate(dependent, 1).nonsingular());

  CHECK_THROWS_AS(peck::nonsingular_certificate(IntMatrix(2, 3)),
                  peck::input_error);
}

TEST_CASE("certificate verdicts match the exact determinant") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_sparse(rng, 5, 5);
    const bool nonsingular =
        peck::nonsingular_certificate(m, trial).nonsingular();
    CHECK(nonsingular == (peck::determinant_exact(m) != 0));
  }
}

TEST_CASE("raising blocks of W_5 are all nonsingular") {
  const peck::RankedPoset p = peck::build_weak_order(5);
  const peck::Sl2Triple t = peck::build_sl2_triple(p);
  for (int k = 0; 2 * k < t.top_rank; ++k) {
    const auto cert =
        peck::nonsingular_certificate(peck::raising_power_block(t, k), 0);
    CHECK(cert.nonsingular());
  }
}

TEST_CASE("triplet text round trip") {
  std::mt19937 rng(77);
  IntMatrix m = random_sparse(rng, 6, 4);
  m.set(3, 2, Int("-123456789012345678901234567890"));
  std::ostringstream os;
  peck::write_triplets(os, m, "basis=test order=shortlex");
  std::istringstream is(os.str());
  CHECK(peck::read_triplets(is) == m);
  CHECK(os.str().rfind("# 6 4 " + std::to_string(m.nnz()) +
                       " basis=test order=shortlex\n", 0) == 0);
  std::istringstream bad("no header\n0 0 1\n");
  CHECK_THROWS_AS(peck::read_triplets(bad), peck::input_error);
  std::ostringstream empty_os;
  peck::write_triplets(empty_os, IntMatrix(3, 2), "");
  std::istringstream empty_is(empty_os.str());
  CHECK(peck::read_triplets(empty_is) == IntMatrix(3, 2));
}
