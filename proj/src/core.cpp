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

#include "mobius/core.hpp"

#include <algorithm>

namespace mobius {

SparsePoly xor_add(const SparsePoly& p, const SparsePoly& q) {
  std::vector<std::uint64_t> masks;
  masks.reserve(p.size() + q.size());
  for (Monomial m : p.monomials()) masks.push_back(m.mask());
  for (Monomial m : q.monomials()) masks.push_back(m.mask());
  return SparsePoly::from_masks(std::move(masks), std::max(p.nvars(), q.nvars()));
}

SparsePoly dense_to_sparse(const DenseForm& d) {
  if (d.role() != Role::Anf)
    throw Error(Errc::representation, "dense_to_sparse expects an ANF-role form");
  std::vector<std::uint64_t> masks;
  for (std::uint64_t k = 0, size = d.size(); k < size; ++k)
    if (d.bit(k)) masks.push_back(k);
  return SparsePoly::from_masks(std::move(masks), d.nvars());
}

DenseForm sparse_to_dense(const SparsePoly& p) {
  if (p.nvars() > kMaxDenseVars)
    throw Error(Errc::capacity, "polynomial over " + std::to_string(p.nvars()) +
                                    " variables exceeds the dense capacity");
  DenseForm d(p.nvars(), Role::Anf);
  for (Monomial m : p.monomials()) d.set_bit(m.mask(), true);
  return d;
}

RMSplit decompose(const SparsePoly& p, int pos) {
  if (pos < 0 || pos >= p.nvars())
    throw Error(Errc::domain, "decompose position " + std::to_string(pos) +
                                  " outside the declared " + std::to_string(p.nvars()) +
                                  " variables");
  std::uint64_t bit = std::uint64_t{1} << pos;
  std::vector<std::uint64_t> without, cofactor;
  for (Monomial m : p.monomials()) {
    if (m.mask() & bit)
      cofactor.push_back(m.mask() & ~bit);
    else
      without.push_back(m.mask());
  }
  RMSplit split;
  split.p0 = SparsePoly::from_masks(std::move(without), p.nvars());
  split.p1 = SparsePoly::from_masks(std::move(cofactor), p.nvars());
  split.pos = pos;
  return split;
}

std::uint64_t weight(const DenseForm& d) {
  if (d.role() != Role::TruthTable)
    throw Error(Errc::representation, "weight expects a truth-table-role form");
  return d.popcount();
}

int degree(const SparsePoly& p) {
  if (p.empty()) return kNegInfinity;
  int best = 0;
  for (Monomial m : p.monomials()) best = std::max(best, m.degree());
  return best;
}

int valuation(const SparsePoly& p) {
  if (p.empty()) return kNegInfinity;
  int best = kMaxVars + 1;
  for (Monomial m : p.monomials()) best = std::min(best, m.degree());
  return best;
}

SparsePoly complement(const SparsePoly& p) {
  int n = p.nvars();
  if (n > kMaxDenseVars)
    throw Error(Errc::capacity, "complement over " + std::to_string(n) +
                                    " variables exceeds the dense capacity");
  std::uint64_t universe = std::uint64_t{1} << n;
  std::vector<std::uint64_t> masks;
  masks.reserve(universe - p.size());
  auto it = p.monomials().begin(), end = p.monomials().end();
  for (std::uint64_t k = 0; k < universe; ++k) {
    if (it != end && it->mask() == k) {
      ++it;
      continue;
    }
    masks.push_back(k);
  }
  return SparsePoly::from_masks(std::move(masks), n);
}

int evaluate(const SparsePoly& p, std::uint64_t point, int npoint) {
  if (npoint != p.nvars())
    throw Error(Errc::domain, "evaluation point has " + std::to_string(npoint) +
                                  " coordinates, polynomial declares " +
                                  std::to_string(p.nvars()));
  if (npoint < 64 && (point >> npoint) != 0)
    throw Error(Errc::domain, "evaluation point uses coordinates beyond n");
  int acc = 0;
  for (Monomial m : p.monomials())
    acc ^= (m.mask() & point) == m.mask();  // X^u(a) = 1 iff u <= a
  return acc;
}

}  // namespace mobius
