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

#include "mobius/core.hpp"
#include "mobius/parser.hpp"
#include "mobius/transforms.hpp"
#include "test_support.hpp"

using namespace mobius;
using test::poly;

namespace {

DenseForm dense(const std::string& text) { return parse_dense(text); }

}  // namespace

TEST_CASE("dense_to_sparse reads ANF bits as monomials") {
  CHECK(dense_to_sparse(dense("anf:0101")) == poly("X1 + X1*X2"));

  SparsePoly zero = dense_to_sparse(dense("anf:00000000"));
  CHECK(zero.empty());
  CHECK(zero.nvars() == 3);

  SparsePoly f3 = dense_to_sparse(dense("anf:01010000"));
  CHECK(f3 == poly("X1 + X1*X2", 3));
  CHECK(f3.nvars() == 3);

  CHECK_THROWS_AS(dense_to_sparse(dense("tt:0100")), Error);
}

TEST_CASE("sparse_to_dense is the inverse with role ANF") {
  CHECK(serialize(sparse_to_dense(poly("X1 + X1*X2", 4))) == "anf:0101000000000000");
  CHECK(serialize(sparse_to_dense(SparsePoly(1))) == "anf:00");
  CHECK(serialize(sparse_to_dense(poly("1", 2))) == "anf:1000");
}

TEST_CASE("dense/sparse round trip on random functions") {
  std::mt19937_64 rng(2026);
  for (int n = 1; n <= 10; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      DenseForm d = test::random_dense(rng, n);
      CHECK(sparse_to_dense(dense_to_sparse(d)) == d);
      SparsePoly p = test::random_poly(rng, n, 40);
      CHECK(dense_to_sparse(sparse_to_dense(p)) == p);
    }
  }
}

TEST_CASE("decompose splits off the cofactor of one position") {
  RMSplit s = decompose(poly("X1 + X1*X2"), 1);
  CHECK(s.p0 == poly("X1", 2));
  CHECK(s.p1 == poly("X1", 2));

  s = decompose(poly("X3 + X1*X2 + X1*X3"), 0);
  CHECK(s.p0 == poly("X3", 3));
  CHECK(s.p1 == poly("X2 + X3", 3));

  s = decompose(poly("X3"), 0);
  CHECK(s.p0 == poly("X3", 3));
  CHECK(s.p1.empty());

  CHECK_THROWS_AS(decompose(poly("X1", 1), 1), Error);
}

TEST_CASE("decompose recombines as p0 + X_i * p1") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 1 + int(rng() % 8);
    SparsePoly p = test::random_poly(rng, n, 30);
    for (int i = 0; i < n; ++i) {
      RMSplit s = decompose(p, i);
      CHECK(!s.p0.contains(Monomial::var(i)));
      std::vector<std::uint64_t> lifted;
      for (Monomial m : s.p1.monomials()) lifted.push_back(m.mask() | (1ull << i));
      SparsePoly xi_p1 = SparsePoly::from_masks(std::move(lifted), n);
      CHECK(xor_add(s.p0, xi_p1) == p);
    }
  }
}

TEST_CASE("xor_add is the symmetric difference") {
  CHECK(xor_add(poly("X1"), poly("X1")).empty());
  CHECK(xor_add(poly("X1"), poly("X2")) == poly("X1 + X2"));
  CHECK(xor_add(poly("X1 + X1*X2"), poly("X1*X2 + X2")) == poly("X1 + X2"));
}

TEST_CASE("weight counts the ones of a truth table") {
  CHECK(weight(dense("tt:0100")) == 1);
  CHECK(weight(dense("tt:00000000")) == 0);
  CHECK_THROWS_AS(weight(dense("anf:0100")), Error);
}

TEST_CASE("degree and valuation with the -infinity sentinel") {
  SparsePoly p = poly("X1 + X2*X3");
  CHECK(valuation(p) == 1);
  CHECK(degree(p) == 2);

  SparsePoly q = poly("1 + X2*X3 + X1*X2*X3");
  CHECK(valuation(q) == 0);
  CHECK(degree(q) == 3);

  SparsePoly zero;
  CHECK(degree(zero) == kNegInfinity);
  CHECK(valuation(zero) == kNegInfinity);
  CHECK(kNegInfinity < -1);
}

TEST_CASE("complement against the full monomial universe") {
  CHECK(complement(SparsePoly(1)) == poly("1 + X1"));
  CHECK(complement(poly("1 + X1")).empty());
  CHECK(complement(poly("X1", 2)) == poly("1 + X2 + X1*X2"));

  SparsePoly wide(kMaxDenseVars + 1);
  CHECK_THROWS_AS(complement(wide), Error);
}

TEST_CASE("complement involution and cardinality") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + int(rng() % 10);
    SparsePoly p = test::random_poly(rng, n, 60);
    SparsePoly bar = complement(p);
    CHECK(complement(bar) == p);
    CHECK(p.size() + bar.size() == (std::uint64_t{1} << n));
  }
}

TEST_CASE("evaluate follows the truth table") {
  SparsePoly f = poly("X1 + X1*X2");
  CHECK(evaluate(f, 0b11, 2) == 0);  // T(f) = 0100, position k = 3
  CHECK(evaluate(f, 0b01, 2) == 1);  // position k = 1
  CHECK(evaluate(f, 0, 2) == 0);
  CHECK(evaluate(poly("1 + X2", 2), 0, 2) == 1);
  CHECK_THROWS_AS(evaluate(f, 0, 3), Error);
}

TEST_CASE("evaluate agrees with the transformed truth table everywhere") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 8; ++n) {
    SparsePoly p = dense_to_sparse(test::random_dense(rng, n));
    DenseForm tt = mobius_iterative(sparse_to_dense(p));
    for (std::uint64_t a = 0; a < tt.size(); ++a)
      CHECK(evaluate(p, a, n) == int(tt.bit(a)));
  }
}

TEST_CASE("weight of the truth table equals the Mobius image's monomial count") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 1 + int(rng() % 10);
    DenseForm a = test::random_dense(rng, n);
    DenseForm tt = mobius_iterative(a);
    CHECK(weight(tt) == mu_full(dense_to_sparse(a), Algo::GreedyList).poly.size());
  }
}
