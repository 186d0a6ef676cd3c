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

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mobius/errors.hpp"
#include "mobius/monomial.hpp"

namespace mobius {

/// An element of R_n = K_2[X_1..X_n]/<X_i^2>: a duplicate-free set of
/// monomials, kept sorted by mask so equality is structural. The declared
/// variable count nvars may exceed the largest position actually used; it is
/// raised automatically when it does not cover the monomials.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nvars_(check_nvars(nvars)) {}

  SparsePoly(std::initializer_list<Monomial> ms, int nvars) {
    std::vector<std::uint64_t> masks;
    masks.reserve(ms.size());
    for (Monomial m : ms) masks.push_back(m.mask());
    *this = from_masks(std::move(masks), nvars);
  }

  /// Builds the canonical polynomial from a multiset of masks; duplicate
  /// pairs cancel (coefficients live in K_2).
  static SparsePoly from_masks(std::vector<std::uint64_t> masks, int nvars) {
    std::sort(masks.begin(), masks.end());
    SparsePoly p;
    for (std::size_t i = 0; i < masks.size();) {
      std::size_t j = i;
      while (j < masks.size() && masks[j] == masks[i]) ++j;
      if ((j - i) & 1) p.monos_.push_back(Monomial{masks[i]});
      i = j;
    }
    p.nvars_ = check_nvars(nvars);
    if (p.max_pos() >= p.nvars_) p.nvars_ = p.max_pos() + 1;
    return p;
  }

  int nvars() const { return nvars_; }
  std::size_t size() const { return monos_.size(); }  // N(P)
  bool empty() const { return monos_.empty(); }
  const std::vector<Monomial>& monomials() const { return monos_; }

  bool contains(Monomial m) const {
    return std::binary_search(monos_.begin(), monos_.end(), m);
  }

  int max_pos() const { return monos_.empty() ? -1 : monos_.back().max_pos(); }

  /// Same polynomial with a (possibly larger) declared variable count.
  SparsePoly with_nvars(int n) const {
    SparsePoly p = *this;
    if (n > p.nvars_) p.nvars_ = check_nvars(n);
    return p;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  static int check_nvars(int n) {
    if (n < 0 || n > kMaxVars)
      throw Error(Errc::domain, "variable count out of range: " + std::to_string(n));
    return n;
  }

  std::vector<Monomial> monos_;  // ascending by mask
  int nvars_ = 0;
};

/// GF(2) addition: symmetric difference of the monomial sets. Takes the
/// larger declared variable count.
SparsePoly xor_add(const SparsePoly& p, const SparsePoly& q);

}  // namespace mobius
