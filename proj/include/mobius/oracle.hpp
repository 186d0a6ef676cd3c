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

#include "mobius/sparse_poly.hpp"

namespace mobius::oracle {

/// Capacity of the brute-force reference paths (cost up to 4^n).
inline constexpr int kMaxOracleVars = 16;

/// Exact Mobius transform by superset expansion of each monomial,
/// deliberately sharing no code with the transforms module.
SparsePoly mobius_naive(const SparsePoly& p);

/// Hamming weight by evaluating the function at every point.
std::uint64_t weight_naive(const SparsePoly& p);

}  // namespace mobius::oracle
