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

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>

namespace mobius {

/// Positions are 0-based internally; position i is X_{i+1} under the default
/// one-based surface syntax. Sparse polynomials are capped at one machine word
/// of positions, dense forms at 2^26 bits.
inline constexpr int kMaxVars = 64;
inline constexpr int kMaxDenseVars = 26;

/// Sentinel for degree/valuation of the zero polynomial, ordered below every
/// attainable value.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

/// A square-free monomial of R_n: the set of variable positions it contains,
/// encoded as a bitmask. The constant monomial 1 is the empty mask. The mask
/// value doubles as the ANF index k = sum u_i 2^(i-1).
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t mask) : mask_(mask) {}

  static constexpr Monomial one() { return Monomial{0}; }
  static constexpr Monomial var(int pos) { return Monomial{std::uint64_t{1} << pos}; }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool is_one() const { return mask_ == 0; }
  constexpr bool contains(int pos) const { return (mask_ >> pos) & 1; }
  constexpr bool disjoint_from(Monomial o) const { return (mask_ & o.mask_) == 0; }

  /// Product of Boolean functions: a position is present or absent, never
  /// repeated, so masks union (x*x = x).
  constexpr Monomial operator*(Monomial o) const { return Monomial{mask_ | o.mask_}; }

  /// Largest used position, -1 for the constant monomial.
  constexpr int max_pos() const {
    return mask_ == 0 ? -1 : 63 - std::countl_zero(mask_);
  }

  friend constexpr auto operator<=>(Monomial a, Monomial b) = default;

 private:
  std::uint64_t mask_ = 0;
};

}  // namespace mobius
