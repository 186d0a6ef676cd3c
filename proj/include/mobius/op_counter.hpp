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
#include <numeric>
#include <vector>

namespace mobius {

/// Tally for one transform run. Dense algorithms count logical bit XORs
/// (every pair position, taken or not); list algorithms count insert/remove
/// modifications. per_step holds one entry per variable step. For list runs
/// poly_sizes additionally records N(P_i) after each step, the quantity the
/// sum-of-sizes complexity statement is about.
struct OpCounter {
  std::uint64_t xors = 0;
  std::uint64_t list_mods = 0;
  std::vector<std::uint64_t> per_step;
  std::vector<std::uint64_t> poly_sizes;

  std::uint64_t sum_poly_sizes() const {
    return std::accumulate(poly_sizes.begin(), poly_sizes.end(), std::uint64_t{0});
  }
};

}  // namespace mobius
