// Copyright 2026 The Mobius Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "mobius/fastpath.hpp"
#include "mobius/oracle.hpp"
#include "mobius/parser.hpp"
#include "test_support.hpp"

using namespace mobius;
using namespace mobius::fastpath;
using test::poly;

namespace {

std::uint64_t mask_of(std::initializer_list<int> one_based) {
  std::uint64_t m = 0;
  for (int v : one_based) m |= std::uint64_t{1} << (v - 1);
  return m;
}

// Draws disjoint variable sets from [n]: sizes[i] positions each.
std::vector<std::uint64_t> disjoint_sets(std::mt19937_64& rng, int n,
                                         const std::vector<int>& sizes) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint64_t> out;
  std::size_t next = 0;
  for (int size : sizes) {
    std::uint64_t m = 0;
    for (int i = 0; i < size; ++i) m |= std::uint64_t{1} << order[next++];
    out.push_back(m);
  }
  return out;
}

SparsePoly poly_of(std::uint64_t I, std::uint64_t linear, int n) {
  std::vector<std::uint64_t> masks;
  std::uint64_t j = linear;
  while (j) {
    masks.push_back(I | (j & -j));
    j &= j - 1;
  }
  return SparsePoly::from_masks(std::move(masks), n);
}

}  // namespace

TEST_CASE("match_family finds the documented families") {
  auto hit = match_family(parse_poly("X1*X2*(X4+X5)"), 5);
  REQUIRE(hit);
  CHECK(hit->family == Family::MonoTimesLinear);
  CHECK(hit->I == mask_of({1, 2}));
  CHECK(hit->J == mask_of({4, 5}));

  std::string all13 = "X1";
  for (int i = 2; i <= 13; ++i) all13 += " + X" + std::to_string(i);
  auto lin = match_family(parse_poly(all13), 13);
  REQUIRE(lin);
  CHECK(lin->family == Family::LinearSum);

  CHECK(!match_family(parse_poly("X1*X2 + X3*X4"), 4));
  CHECK(!match_family(parse_poly("X1*(X1+X2)"), 2));
}

TEST_CASE("match_family precedence and shapes") {
  CHECK(match_family(parse_poly("X1 + X3"), 3)->family == Family::MonoTimesLinear);
  CHECK(match_family(parse_poly("X3 + X1*X2"), 3)->family == Family::XnPlusP);
  CHECK(match_family(parse_poly("X1*X2"), 3)->family == Family::SingleMonomial);
  CHECK(match_family(parse_poly("1"), 3)->family == Family::SingleMonomial);
  CHECK(match_family(parse_poly("X1*(X2+X3)"), 3)->family == Family::MonoTimesLinear);
  CHECK(match_family(parse_poly("X1*(X2+X3*X4)"), 4)->family ==
        Family::MonoTimesMonoPair);
  CHECK(match_family(parse_poly("X1*(X2+X3*X4)"), 5)->family ==
        Family::PaddedMonoTimesMonoPair);
  CHECK(match_family(parse_poly("(X1*X2*X3+X4*X5*X6)*(X7+X8)"), 8)->family ==
        Family::PairTimesLinear);
  auto ps = match_family(
      parse_poly("X1*X2*X3*(X4+X5) + X2*X4*(X1+X3+X5)"), 5);
  REQUIRE(ps);
  CHECK(ps->family == Family::ParitySplit);
}

TEST_CASE("single monomial closed form") {
  CHECK(mu_single_monomial(mask_of({1}), 2) == poly("X1 + X1*X2"));
  CHECK(weight_single_monomial(mask_of({1}), 2) == 2);

  CHECK(mu_single_monomial(mask_of({1, 2, 3}), 3) == poly("X1*X2*X3"));
  CHECK(weight_single_monomial(mask_of({1, 2, 3}), 3) == 1);

  for (int n = 1; n <= 8; ++n)
    CHECK(weight_single_monomial(mask_of({1}), n) == std::uint64_t{1} << (n - 1));
}

TEST_CASE("linear sum closed form") {
  CHECK(mu_linear_sum(mask_of({1, 2}), 2) == poly("X1 + X2"));
  CHECK(weight_linear_sum(2) == 2);
  CHECK(mu_linear_sum(mask_of({1, 2, 3}), 3) == poly("X1 + X2 + X3 + X1*X2*X3"));
  CHECK(weight_linear_sum(3) == 4);
  CHECK(mu_linear_sum(test::full_mask(13), 13).size() == 4096);
  CHECK(weight_linear_sum(13) == 4096);
  CHECK_THROWS_AS(mu_linear_sum(mask_of({1}), 2), Error);  // partial sums fall back
}

TEST_CASE("X_n + P closed form") {
  CHECK(mu_xn_plus_p(poly("X1"), 2) == poly("X1 + X2"));
  CHECK(weight_xn_plus_p(2) == 2);

  CHECK(mu_xn_plus_p(SparsePoly(0), 1) == poly("X1"));
  CHECK(weight_xn_plus_p(1) == 1);

  CHECK(mu_xn_plus_p(poly("1", 0), 1) == poly("1", 1));

  CHECK_THROWS_AS(mu_xn_plus_p(poly("X2"), 2), Error);  // X_n occurs in p
}

TEST_CASE("mono times linear closed form") {
  CHECK(mu_mono_times_linear(mask_of({1, 2}), mask_of({4, 5}), 5) ==
        poly("X1*X2*X4 + X1*X2*X5 + X1*X2*X3*X4 + X1*X2*X3*X5"));
  CHECK(weight_mono_times_linear(mask_of({1, 2}), 5) == 4);

  CHECK(mu_mono_times_linear(mask_of({1, 2}), mask_of({3, 4, 5}), 5) ==
        poly("X1*X2*X3 + X1*X2*X4 + X1*X2*X5 + X1*X2*X3*X4*X5"));

  CHECK(mu_mono_times_linear(0, mask_of({1}), 1) == poly("X1"));
  CHECK(weight_mono_times_linear(0, 1) == 1);

  CHECK_THROWS_AS(mu_mono_times_linear(mask_of({1}), mask_of({1, 2}), 2), Error);
}

TEST_CASE("pair times linear closed form") {
  // the Achterbahn degree-4 block shape
  std::uint64_t I1 = mask_of({1, 2, 3}), I2 = mask_of({4, 5, 6}), J = mask_of({7, 8});
  CHECK(weight_pair_times_linear(3, 3, 13) == 896);
  SparsePoly mu = mu_pair_times_linear(I1, I2, J, 13);
  CHECK(mu.size() == 896);
  CHECK(oracle::mobius_naive(mu) ==
        xor_add(poly_of(I1, J, 13), poly_of(I2, J, 13)));

  CHECK(weight_pair_times_linear(1, 1, 3) == 2);
  CHECK(mu_pair_times_linear(mask_of({1}), mask_of({2}), mask_of({3}), 3).size() == 2);

  CHECK_THROWS_AS(mu_pair_times_linear(mask_of({1}), mask_of({1}), mask_of({2}), 2),
                  Error);
}

TEST_CASE("parity split closed form") {
  std::uint64_t I = mask_of({1, 2, 3}), J = mask_of({4, 5});
  std::uint64_t Ip = mask_of({2, 4}), Jp = mask_of({1, 3, 5});
  CHECK(weight_parity_split(3, 2, 5) == 6);
  SparsePoly mu = mu_parity_split(I, J, Ip, Jp, 5);
  CHECK(mu.size() == 6);
  CHECK(mu == parse_poly("X1*X2*X3*(X4+X5) + X2*X4*(X1+X3+X5+X1*X3*X5)").expand(5));

  // same parity is rejected
  CHECK_THROWS_AS(mu_parity_split(mask_of({1, 2}), mask_of({3, 4}), mask_of({3, 4}),
                                  mask_of({1, 2}), 4),
                  Error);
}

TEST_CASE("mono times mono pair: the corrected weight formula") {
  // The published figure for X^I (X^J + X^K) with I={1}, J={2}, K={3}, n=3
  // is 2^|J| + 2^|K| = 4; enumeration gives 2 because X^I X^J X^K is emitted
  // by both halves and cancels mod 2.
  std::uint64_t I = mask_of({1}), J = mask_of({2}), K = mask_of({3});
  SparsePoly p = poly("X1*X2 + X1*X3");
  CHECK(oracle::weight_naive(p) == 2);
  CHECK(weight_mono_times_mono_pair(I, J, K, 3) == 2);
  CHECK(weight_mono_times_mono_pair_as_published(I, J, K, 3) == 4);
  CHECK(mu_mono_times_mono_pair(I, J, K, 3) == oracle::mobius_naive(p));

  // I may be empty at the operation level
  CHECK(weight_mono_times_mono_pair(0, mask_of({1}), mask_of({2}), 2) == 2);
  CHECK(mu_mono_times_mono_pair(0, mask_of({1}), mask_of({2}), 2) ==
        oracle::mobius_naive(poly("X1 + X2")));

  // padded variant
  CHECK(weight_mono_times_mono_pair(I, J, K, 4) == 4);
  CHECK(oracle::weight_naive(poly("X1*X2 + X1*X3", 4)) == 4);
}

TEST_CASE("fast weights agree with the brute-force oracle per family") {
  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 2 + int(rng() % 11);  // n <= 12
    {  // SingleMonomial
      auto sets = disjoint_sets(rng, n, {1 + int(rng() % n)});
      SparsePoly p({Monomial(sets[0])}, n);
      CHECK(weight_single_monomial(sets[0], n) == oracle::weight_naive(p));
      CHECK(mu_single_monomial(sets[0], n) == oracle::mobius_naive(p));
    }
    {  // LinearSum
      SparsePoly p = poly_of(0, test::full_mask(n), n);
      CHECK(weight_linear_sum(n) == oracle::weight_naive(p));
      CHECK(mu_linear_sum(test::full_mask(n), n) == oracle::mobius_naive(p));
    }
    {  // ParitySplit with random full covers of different parity
      int n1 = 1 + int(rng() % (n - 1));
      int n1p = (n1 % 2 == 0) ? 1 : (n >= 3 ? 2 : 1);
      if (((n1 ^ n1p) & 1) != 0) {
        std::uint64_t I = disjoint_sets(rng, n, {n1})[0];
        std::uint64_t Ip = disjoint_sets(rng, n, {n1p})[0];
        std::uint64_t J = test::full_mask(n) & ~I;
        std::uint64_t Jp = test::full_mask(n) & ~Ip;
        SparsePoly p = xor_add(poly_of(I, J, n), poly_of(Ip, Jp, n));
        CHECK(weight_parity_split(n1, n1p, n) == oracle::weight_naive(p));
        CHECK(mu_parity_split(I, J, Ip, Jp, n) == oracle::mobius_naive(p));
      }
    }
    {  // XnPlusP
      SparsePoly inner = test::random_poly(rng, n - 1, 12);
      SparsePoly whole = xor_add(inner.with_nvars(n), SparsePoly({Monomial::var(n - 1)}, n));
      CHECK(weight_xn_plus_p(n) == oracle::weight_naive(whole));
      CHECK(mu_xn_plus_p(inner, n) == oracle::mobius_naive(whole));
    }
    {  // MonoTimesLinear
      int ni = int(rng() % (n - 1));
      int nj = 1 + int(rng() % (n - ni - 1));
      auto sets = disjoint_sets(rng, n, {ni, nj});
      CHECK(weight_mono_times_linear(sets[0], n) ==
            oracle::weight_naive(poly_of(sets[0], sets[1], n)));
      CHECK(mu_mono_times_linear(sets[0], sets[1], n) ==
            oracle::mobius_naive(poly_of(sets[0], sets[1], n)));
    }
    if (n >= 3) {  // PairTimesLinear
      int n1 = 1 + int(rng() % (n - 2));
      int n2 = 1 + int(rng() % (n - n1 - 1));
      int avail = n - n1 - n2;
      int nj = 1 + int(rng() % avail);
      auto sets = disjoint_sets(rng, n, {n1, n2, nj});
      SparsePoly p = xor_add(poly_of(sets[0], sets[2], n), poly_of(sets[1], sets[2], n));
      CHECK(weight_pair_times_linear(n1, n2, n) == oracle::weight_naive(p));
      CHECK(mu_pair_times_linear(sets[0], sets[1], sets[2], n) == oracle::mobius_naive(p));
    }
    if (n >= 3) {  // MonoTimesMonoPair, partition and padded
      int njj = 1 + int(rng() % (n - 2));
      int nkk = 1 + int(rng() % (n - njj - 1));
      int nii = int(rng() % (n - njj - nkk + 1));
      auto sets = disjoint_sets(rng, n, {nii, njj, nkk});
      SparsePoly p = SparsePoly::from_masks({sets[0] | sets[1], sets[0] | sets[2]}, n);
      CHECK(weight_mono_times_mono_pair(sets[0], sets[1], sets[2], n) ==
            oracle::weight_naive(p));
      CHECK(mu_mono_times_mono_pair(sets[0], sets[1], sets[2], n) ==
            oracle::mobius_naive(p));
    }
  }
}

TEST_CASE("fast_mu and fast_weight fall back coherently") {
  FactoredExpr e = parse_poly("X1*X2*(X4+X5)");
  auto fw = fast_weight(e, 5);
  REQUIRE(fw);
  CHECK(fw->weight == 4);
  CHECK(fw->family == Family::MonoTimesLinear);
  CHECK(fast_mu(e, 5) == oracle::mobius_naive(e.expand(5)));

  FactoredExpr none = parse_poly("X1*X2 + X3*X4");
  CHECK(!fast_weight(none, 4));
  CHECK(fast_mu(none, 4) == oracle::mobius_naive(none.expand(4)));

  FactoredExpr xnp = parse_poly("X3 + X1*X2");
  REQUIRE(fast_weight(xnp, 3));
  CHECK(fast_weight(xnp, 3)->weight == 4);
  CHECK(fast_mu(xnp, 3) == oracle::mobius_naive(xnp.expand(3)));

  FactoredExpr split = parse_poly("X1*X2*X3*(X4+X5) + X2*X4*(X1+X3+X5)");
  REQUIRE(fast_weight(split, 5));
  CHECK(fast_weight(split, 5)->weight == 6);
  CHECK(fast_mu(split, 5) == oracle::mobius_naive(split.expand(5)));
}

TEST_CASE("distinct prefixes alone do not make block weights additive") {
  // X1(X2+X3) and X2(X1+X3) have distinct prefixes yet both emit x1x2, so
  // 2 + 2 overcounts the true weight 2. Only the parity argument is sound,
  // and anything else falls back to a general transform.
  FactoredExpr e = parse_poly("X1*(X2+X3) + X2*(X1+X3)");
  CHECK(oracle::weight_naive(e.expand(3)) == 2);
  CHECK(!fast_weight(e, 3));
  CHECK(fast_mu(e, 3) == oracle::mobius_naive(e.expand(3)));
}

TEST_CASE("estimate_ops sums per-block emission counts") {
  CHECK(estimate_ops(parse_poly("X1*X2*X3"), 3) == 1);
  CHECK(estimate_ops(parse_poly("X1 + X2 + X3"), 3) == 4);  // pooled linear block
  // every summand matches a family on its own
  CHECK(estimate_ops(parse_poly("X1*(X2+X3) + X1*X2 + X3*X4"), 4) == 4 + 4 + 4);
  // a summand violating the side conditions falls back to n*2^(n-1)
  CHECK(estimate_ops(parse_poly("X1*(X2+X3) + (X1+X2+X3)*(X2+X3)"), 4) == 4 + 4 * 8);
}

TEST_CASE("fast-path emission counts equal the estimates exactly") {
  std::mt19937_64 rng(79);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + int(rng() % 10);
    int ni = int(rng() % (n - 1));
    int nj = 1 + int(rng() % (n - ni - 1));
    auto sets = disjoint_sets(rng, n, {ni, nj});
    CHECK(mu_mono_times_linear(sets[0], sets[1], n).size() ==
          weight_mono_times_linear(sets[0], n));
    CHECK(mu_linear_sum(test::full_mask(n), n).size() == weight_linear_sum(n));
  }
}
