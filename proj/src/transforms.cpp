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

#include "mobius/transforms.hpp"

#include <array>
#include <cstdint>
#include <unordered_set>

namespace mobius {
namespace {

// Bits whose stride-2^i coordinate is 0, i.e. the lower halves of each
// 2^(i+1) block inside one word.
constexpr std::array<std::uint64_t, 6> kLowerHalf = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

void credit(OpCounter* c, int level, std::uint64_t xors) {
  if (!c) return;
  c->xors += xors;
  if (static_cast<std::size_t>(level) >= c->per_step.size())
    c->per_step.resize(level + 1, 0);
  c->per_step[level] += xors;
}

// One butterfly level over the whole vector: lower half of each 2^i block is
// XORed into the upper half. half = 2^(i-1) bits.
void butterfly_level(std::span<std::uint64_t> words, int nvars, int i, OpCounter* c) {
  std::uint64_t half = std::uint64_t{1} << (i - 1);
  if (half >= 64) {
    std::size_t halfw = half >> 6;
    for (std::size_t base = 0; base < words.size(); base += 2 * halfw)
      for (std::size_t l = 0; l < halfw; ++l) words[base + halfw + l] ^= words[base + l];
  } else {
    std::uint64_t mask = kLowerHalf[i - 1];
    std::uint64_t size = std::uint64_t{1} << nvars;
    if (size < 64) mask &= (std::uint64_t{1} << size) - 1;
    for (auto& w : words) w ^= (w & mask) << half;
  }
  credit(c, i - 1, std::uint64_t{1} << (nvars - 1));
}

std::uint64_t get_bit(std::span<const std::uint64_t> w, std::uint64_t k) {
  return (w[k >> 6] >> (k & 63)) & 1;
}

void xor_bit(std::span<std::uint64_t> w, std::uint64_t dst, std::uint64_t v) {
  w[dst >> 6] ^= v << (dst & 63);
}

// In-place recursion on the bit range [off, off + size): transform both
// halves, then fold the lower into the upper.
void recursive_butterfly(std::span<std::uint64_t> words, std::uint64_t off,
                         std::uint64_t size, OpCounter* c) {
  if (size == 1) return;
  std::uint64_t half = size / 2;
  recursive_butterfly(words, off, half, c);
  recursive_butterfly(words, off + half, half, c);
  if (half >= 64) {
    std::uint64_t lo = off >> 6, hi = (off + half) >> 6;
    for (std::uint64_t l = 0; l < half >> 6; ++l) words[hi + l] ^= words[lo + l];
  } else {
    for (std::uint64_t l = 0; l < half; ++l)
      xor_bit(words, off + half + l, get_bit(words, off + l));
  }
  credit(c, std::countr_zero(size) - 1, half);
}

// Workspace for the list algorithms: the current monomial set plus the
// occurrence table the greedy order consults.
struct ListWork {
  std::unordered_set<std::uint64_t> set;
  std::array<std::int64_t, kMaxVars> occ{};

  explicit ListWork(const SparsePoly& p) {
    set.reserve(p.size() * 2 + 8);
    for (Monomial m : p.monomials()) {
      set.insert(m.mask());
      bump(m.mask(), +1);
    }
  }

  void bump(std::uint64_t mask, std::int64_t delta) {
    while (mask) {
      occ[std::countr_zero(mask)] += delta;
      mask &= mask - 1;
    }
  }

  // Multiply by (1 + X_pos): every monomial without the position toggles its
  // X_pos counterpart. Returns the number of list modifications.
  std::uint64_t step(int pos) {
    std::uint64_t bit = std::uint64_t{1} << pos;
    std::vector<std::uint64_t> lower;
    lower.reserve(set.size());
    for (std::uint64_t m : set)
      if (!(m & bit)) lower.push_back(m);
    for (std::uint64_t m : lower) {
      std::uint64_t t = m | bit;
      auto it = set.find(t);
      if (it != set.end()) {
        set.erase(it);
        bump(t, -1);
      } else {
        set.insert(t);
        bump(t, +1);
      }
    }
    return lower.size();
  }

  SparsePoly collect(int nvars) const {
    std::vector<std::uint64_t> masks(set.begin(), set.end());
    return SparsePoly::from_masks(std::move(masks), nvars);
  }
};

void credit_list(OpCounter* c, std::uint64_t mods, std::uint64_t poly_size) {
  if (!c) return;
  c->list_mods += mods;
  c->per_step.push_back(mods);
  c->poly_sizes.push_back(poly_size);
}

}  // namespace

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::RecursiveButterfly: return "rbm";
    case Algo::IterativeButterfly: return "ibm";
    case Algo::ExclusiveMultVector: return "vec";
    case Algo::ExclusiveMultList: return "list";
    case Algo::GreedyList: return "greedy";
    case Algo::Auto: return "auto";
  }
  return "?";
}

SparsePoly mu_xi(const SparsePoly& p, int pos) {
  if (pos < 0 || pos >= kMaxVars)
    throw Error(Errc::domain, "mu_xi position out of range");
  ListWork work(p);
  work.step(pos);
  return work.collect(std::max(p.nvars(), pos + 1));
}

SparsePoly exclusive_mul(const SparsePoly& p, const SparsePoly& q) {
  std::unordered_set<std::uint64_t> acc;
  acc.reserve(p.size() * q.size() + 8);
  for (Monomial qm : q.monomials())
    for (Monomial pm : p.monomials()) {
      if (!pm.disjoint_from(qm)) continue;  // shares a variable: X_i^2 = 0 in R_n
      std::uint64_t t = pm.mask() | qm.mask();
      auto it = acc.find(t);
      if (it != acc.end())
        acc.erase(it);
      else
        acc.insert(t);
    }
  std::vector<std::uint64_t> masks(acc.begin(), acc.end());
  return SparsePoly::from_masks(std::move(masks), std::max(p.nvars(), q.nvars()));
}

DenseForm mobius_recursive(const DenseForm& d, OpCounter* counter) {
  DenseForm out = d;
  if (counter) counter->per_step.assign(d.nvars(), 0);
  recursive_butterfly(out.words(), 0, out.size(), counter);
  out.flip_role();
  return out;
}

void mobius_iterative_inplace(DenseForm& d, OpCounter* counter) {
  for (int i = 1; i <= d.nvars(); ++i) butterfly_level(d.words(), d.nvars(), i, counter);
  d.flip_role();
}

DenseForm mobius_iterative(const DenseForm& d, OpCounter* counter) {
  DenseForm out = d;
  mobius_iterative_inplace(out, counter);
  return out;
}

DenseForm mobius_vector(const DenseForm& d, OpCounter* counter) {
  DenseForm out = d;
  auto words = out.words();
  std::uint64_t size = out.size();
  for (int i = 0; i < d.nvars(); ++i) {
    std::uint64_t bit = std::uint64_t{1} << i;
    std::uint64_t xors = 0;
    for (std::uint64_t j = 0; j < size; ++j) {
      if (j & bit) continue;
      xor_bit(words, j + bit, get_bit(words, j));
      ++xors;
    }
    credit(counter, i, xors);
  }
  out.flip_role();
  return out;
}

SparsePoly mobius_list_sequential(const SparsePoly& p, OpCounter* counter) {
  ListWork work(p);
  for (int i = 0; i < p.nvars(); ++i) {
    std::uint64_t mods = work.step(i);
    credit_list(counter, mods, work.set.size());
  }
  return work.collect(p.nvars());
}

SparsePoly mobius_list_ordered(const SparsePoly& p, std::span<const int> order,
                               OpCounter* counter) {
  std::uint64_t seen = 0;
  for (int pos : order) {
    if (pos < 0 || pos >= p.nvars() || (seen >> pos) & 1)
      throw Error(Errc::domain, "order must be a permutation of the positions");
    seen |= std::uint64_t{1} << pos;
  }
  if (std::popcount(seen) != p.nvars())
    throw Error(Errc::domain, "order must mention every position once");
  ListWork work(p);
  for (int pos : order) {
    std::uint64_t mods = work.step(pos);
    credit_list(counter, mods, work.set.size());
  }
  return work.collect(p.nvars());
}

SparsePoly mobius_list_greedy(const SparsePoly& p, OpCounter* counter) {
  ListWork work(p);
  std::array<bool, kMaxVars> used{};
  for (int step = 0; step < p.nvars(); ++step) {
    int best = -1;
    for (int v = 0; v < p.nvars(); ++v) {
      if (used[v]) continue;  // masked out, the occurrence table never elects it again
      if (best < 0 || work.occ[v] > work.occ[best]) best = v;
    }
    std::uint64_t mods = work.step(best);
    used[best] = true;
    credit_list(counter, mods, work.set.size());
  }
  return work.collect(p.nvars());
}

SparsePoly mobius_with_complement(const SparsePoly& p, OpCounter* counter,
                                  bool* used_complement) {
  int n = p.nvars();
  bool dense_side = n >= 1 && p.size() > (std::uint64_t{1} << (n - 1));
  if (used_complement) *used_complement = dense_side;
  if (!dense_side) return mobius_list_greedy(p, counter);
  SparsePoly bar = complement(p);  // throws capacity above the dense limit
  SparsePoly mu_bar = mobius_list_greedy(bar, counter);
  if (counter) ++counter->list_mods;  // the final +1 correction toggles one monomial
  return xor_add(mu_bar, SparsePoly({Monomial::one()}, n));
}

namespace {

// Dense roundtrip used by the butterfly dispatches of mu_full: the output
// bits are read back as monomial masks whatever the role label says (the
// transform's image of an ANF is the ANF of the transformed function).
SparsePoly poly_of_bits(const DenseForm& d, int nvars) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t k = 0, size = d.size(); k < size; ++k)
    if (d.bit(k)) masks.push_back(k);
  return SparsePoly::from_masks(std::move(masks), nvars);
}

}  // namespace

MuResult mu_full(const SparsePoly& p, Algo algo) {
  MuResult r;
  r.used = algo;
  switch (algo) {
    case Algo::RecursiveButterfly:
    case Algo::IterativeButterfly:
    case Algo::ExclusiveMultVector: {
      DenseForm in = sparse_to_dense(p);
      DenseForm out = algo == Algo::RecursiveButterfly ? mobius_recursive(in, &r.counter)
                      : algo == Algo::IterativeButterfly
                          ? mobius_iterative(in, &r.counter)
                          : mobius_vector(in, &r.counter);
      r.poly = poly_of_bits(out, p.nvars());
      return r;
    }
    case Algo::ExclusiveMultList:
      r.poly = mobius_list_sequential(p, &r.counter);
      return r;
    case Algo::GreedyList:
      r.poly = mobius_list_greedy(p, &r.counter);
      return r;
    case Algo::Auto: {
      int n = p.nvars();
      if (n >= 1 && n <= kMaxDenseVars && p.size() > (std::uint64_t{1} << (n - 1))) {
        r.poly = mobius_with_complement(p, &r.counter, &r.via_complement);
        return r;
      }
      r.poly = mobius_list_greedy(p, &r.counter);
      return r;
    }
  }
  throw Error(Errc::domain, "unknown algorithm");
}

}  // namespace mobius
