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

// Brute-force references for differential testing. Everything here works by
// plain enumeration and stays independent of the transforms module.

#include "mobius/oracle.hpp"

#include <vector>

#include "mobius/errors.hpp"

namespace mobius::oracle {

namespace {

void check_capacity(const SparsePoly& p, const char* what) {
  if (p.nvars() > kMaxOracleVars)
    throw Error(Errc::capacity, std::string(what) + " is capped at n <= " +
                                    std::to_string(kMaxOracleVars));
}

}  // namespace

SparsePoly mobius_naive(const SparsePoly& p) {
  check_capacity(p, "mobius_naive");
  int n = p.nvars();
  std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  // mu(X^u) = sum of X^v over all supersets v of u; collect parities.
  std::vector<std::uint8_t> parity(std::uint64_t{1} << n, 0);
  for (Monomial m : p.monomials()) {
    std::uint64_t free = full & ~m.mask();
    std::uint64_t sub = free;
    while (true) {
      parity[m.mask() | sub] ^= 1;
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  std::vector<std::uint64_t> masks;
  for (std::uint64_t k = 0; k < parity.size(); ++k)
    if (parity[k]) masks.push_back(k);
  return SparsePoly::from_masks(std::move(masks), n);
}

std::uint64_t weight_naive(const SparsePoly& p) {
  check_capacity(p, "weight_naive");
  std::uint64_t points = std::uint64_t{1} << p.nvars();
  std::uint64_t w = 0;
  for (std::uint64_t a = 0; a < points; ++a) {
    int acc = 0;
    for (Monomial m : p.monomials()) acc ^= (m.mask() & a) == m.mask();
    w += acc;
  }
  return w;
}

}  // namespace mobius::oracle
