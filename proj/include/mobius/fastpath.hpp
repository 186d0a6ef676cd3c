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

#include <cstdint>
#include <optional>
#include <string>

#include "mobius/factored_expr.hpp"
#include "mobius/sparse_poly.hpp"

namespace mobius::fastpath {

/// The factored families with closed-form Mobius transform and weight.
enum class Family {
  SingleMonomial,
  LinearSum,
  XnPlusP,
  MonoTimesLinear,
  PairTimesLinear,
  ParitySplit,
  MonoTimesMonoPair,
  PaddedMonoTimesMonoPair,
};

const char* family_name(Family f);

/// A successful match. The variable sets are bitmasks over positions < n;
/// which fields are populated depends on the family.
struct PatternHit {
  Family family;
  int n = 0;
  std::uint64_t I = 0;       // SingleMonomial, MonoTimesLinear, MonoTimesMonoPair, ParitySplit (first block)
  std::uint64_t J = 0;       // linear/mono-pair sets
  std::uint64_t K = 0;       // MonoTimesMonoPair second monomial
  std::uint64_t I1 = 0;      // PairTimesLinear
  std::uint64_t I2 = 0;
  std::uint64_t Iprime = 0;  // ParitySplit second block
  std::uint64_t Jprime = 0;
};

/// Syntactic match over the factored tree (never over the expansion).
/// All disjointness/cover side conditions are checked; the most specific
/// family wins. No match is a valid outcome.
std::optional<PatternHit> match_family(const FactoredExpr& e, int n);

// Closed forms, one pair per family. Preconditions are enforced and
// violations throw a precondition error.
SparsePoly mu_single_monomial(std::uint64_t I, int n);
std::uint64_t weight_single_monomial(std::uint64_t I, int n);

SparsePoly mu_linear_sum(std::uint64_t S, int n);  // requires S = [n]
std::uint64_t weight_linear_sum(int n);

/// mu over n variables of X_n + P. Position n-1 occurring in p is a
/// precondition error. The one-argument form takes n = p.nvars() + 1.
SparsePoly mu_xn_plus_p(const SparsePoly& p, int n);
SparsePoly mu_xn_plus_p(const SparsePoly& p);
std::uint64_t weight_xn_plus_p(int n);

SparsePoly mu_mono_times_linear(std::uint64_t I, std::uint64_t J, int n);
std::uint64_t weight_mono_times_linear(std::uint64_t I, int n);

SparsePoly mu_pair_times_linear(std::uint64_t I1, std::uint64_t I2, std::uint64_t J, int n);
std::uint64_t weight_pair_times_linear(int n1, int n2, int n);

SparsePoly mu_parity_split(std::uint64_t I, std::uint64_t J, std::uint64_t Ip,
                           std::uint64_t Jp, int n);
std::uint64_t weight_parity_split(int n1, int n1p, int n);

/// Covers both the partition case (I u J u K = [n]) and the padded one.
SparsePoly mu_mono_times_mono_pair(std::uint64_t I, std::uint64_t J, std::uint64_t K, int n);
/// 2^(n-|L|) (2^|J| + 2^|K| - 2): the cross term X^I X^J X^K is emitted by
/// both halves and cancels in characteristic 2.
std::uint64_t weight_mono_times_mono_pair(std::uint64_t I, std::uint64_t J,
                                          std::uint64_t K, int n);
/// The published 2^(n-|L|) (2^|J| + 2^|K|) figure, kept for comparison only.
std::uint64_t weight_mono_times_mono_pair_as_published(std::uint64_t I, std::uint64_t J,
                                                       std::uint64_t K, int n);

/// Closed-form weight for a matched hit.
std::uint64_t weight_of_hit(const PatternHit& hit);

/// Closed-form mu for a matched hit; XnPlusP needs the original expression
/// to recover its inner part, hence the expression argument.
SparsePoly mu_of_hit(const PatternHit& hit, const FactoredExpr& e);

struct FastWeight {
  std::uint64_t weight;
  Family family;
};

/// Weight through pattern matching alone; nullopt tells the caller to fall
/// back to a general transform.
std::optional<FastWeight> fast_weight(const FactoredExpr& e, int n);

/// Mobius transform preferring the matched closed form, falling back to the
/// general algorithms on the expansion. Always succeeds.
SparsePoly fast_mu(const FactoredExpr& e, int n);

/// Term-emission estimate: bare degree-1 summands are pooled into one linear
/// block; every other top-level summand contributes its family's emission
/// count, or the butterfly bound n 2^(n-1) when nothing matches.
std::uint64_t estimate_ops(const FactoredExpr& e, int n);

/// Top-level block structure of a factored sum: the pooled count of bare
/// degree-1 terms plus per-degree counts of the homogeneous blocks.
struct BlockStructure {
  int linear_terms = 0;
  int deg2_blocks = 0;
  int deg3_blocks = 0;
  int deg4_blocks = 0;
  int other_blocks = 0;
};

BlockStructure analyze_blocks(const FactoredExpr& e, int n);

}  // namespace mobius::fastpath
