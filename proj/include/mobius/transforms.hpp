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

#pragma once

#include <span>

#include "mobius/core.hpp"
#include "mobius/op_counter.hpp"

namespace mobius {

enum class Algo {
  RecursiveButterfly,
  IterativeButterfly,
  ExclusiveMultVector,
  ExclusiveMultList,  // sequential ascending order
  GreedyList,
  Auto,
};

const char* algo_name(Algo a);

/// The per-indeterminate operator: with P = P0 + X_i P1 (P0 the X_i-free
/// part), returns P0 + X_i (P0 + P1). Fixed points: P with X_i dividing
/// every monomial. If X_i is absent, returns (1 + X_i) P.
SparsePoly mu_xi(const SparsePoly& p, int pos);

/// Exclusive multiplication, the natural product of R_n: monomials sharing
/// a variable annihilate. P (x) X^I = X^I * (monomials of P avoiding I),
/// extended additively over q.
SparsePoly exclusive_mul(const SparsePoly& p, const SparsePoly& q);

/// Divide-and-conquer butterfly; output role is flipped. n * 2^(n-1) XORs.
DenseForm mobius_recursive(const DenseForm& d, OpCounter* counter = nullptr);

/// In-place butterfly over the owned buffer; same output and count as the
/// recursive version on every input.
void mobius_iterative_inplace(DenseForm& d, OpCounter* counter = nullptr);
DenseForm mobius_iterative(const DenseForm& d, OpCounter* counter = nullptr);

/// Vector reformulation of the exclusive-multiplication transform: for each
/// position i, bits[j + 2^i] ^= bits[j] for every j with bit i clear.
/// Performs exactly the iterative butterfly's operations.
DenseForm mobius_vector(const DenseForm& d, OpCounter* counter = nullptr);

/// Chain P_i = P_{i-1} (x) (1 + X_i) in ascending position order.
SparsePoly mobius_list_sequential(const SparsePoly& p, OpCounter* counter = nullptr);

/// Same chain over an arbitrary order (a permutation of all positions).
SparsePoly mobius_list_ordered(const SparsePoly& p, std::span<const int> order,
                               OpCounter* counter = nullptr);

/// Occurrence-guided order: each step multiplies by (1 + X_i0) where i0 has
/// the highest occurrence count among unused positions (ties to the lowest
/// index); the table is updated on every insert/remove and the used position
/// is masked out.
SparsePoly mobius_list_greedy(const SparsePoly& p, OpCounter* counter = nullptr);

/// Runs the greedy list transform on the complement when N(P) > 2^(n-1) and
/// corrects by +1, per mu(P) = mu(P-bar) + 1; otherwise runs greedy directly.
SparsePoly mobius_with_complement(const SparsePoly& p, OpCounter* counter = nullptr,
                                  bool* used_complement = nullptr);

struct MuResult {
  SparsePoly poly;
  OpCounter counter;
  Algo used = Algo::Auto;
  bool via_complement = false;
};

/// Unified entry point; every choice yields the same polynomial. Auto picks
/// the complement route for N(P) > 2^(n-1) within dense capacity, else the
/// greedy list.
MuResult mu_full(const SparsePoly& p, Algo algo = Algo::Auto);

}  // namespace mobius
