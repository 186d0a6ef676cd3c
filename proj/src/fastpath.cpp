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

#include "mobius/fastpath.hpp"

#include <bit>
#include <unordered_set>
#include <vector>

#include "mobius/core.hpp"
#include "mobius/transforms.hpp"

namespace mobius::fastpath {

namespace {

std::uint64_t full_mask(int n) { return n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n); }

int pc(std::uint64_t m) { return std::popcount(m); }

void require(bool cond, const char* msg) {
  if (!cond) throw Error(Errc::precondition, msg);
}

void check_range(std::uint64_t set, int n, const char* what) {
  if (n < 0 || n > kMaxVars || (set & ~full_mask(n)))
    throw Error(Errc::domain, std::string(what) + ": variable set outside [n]");
}

// Every closed form below enumerates its emitted terms; cap the free
// dimensions the same way dense forms are capped.
void check_emission(int freebits) {
  if (freebits > kMaxDenseVars)
    throw Error(Errc::capacity, "closed-form emission exceeds the dense capacity");
}

template <class F>
void for_subsets(std::uint64_t space, F f) {
  std::uint64_t sub = space;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & space;
  }
}

struct ToggleSet {
  std::unordered_set<std::uint64_t> set;
  void toggle(std::uint64_t m) {
    auto it = set.find(m);
    if (it != set.end())
      set.erase(it);
    else
      set.insert(m);
  }
  SparsePoly collect(int nvars) const {
    std::vector<std::uint64_t> masks(set.begin(), set.end());
    return SparsePoly::from_masks(std::move(masks), nvars);
  }
};

// mu of X^I * (sum over J) toggled into an accumulator; shared by the pair
// and parity-split forms.
void emit_mono_times_linear(ToggleSet& acc, std::uint64_t I, std::uint64_t J, int n) {
  std::uint64_t rest = full_mask(n) & ~(I | J);
  for_subsets(rest, [&](std::uint64_t L) {
    for_subsets(J, [&](std::uint64_t K) {
      if (pc(K) & 1) acc.toggle(I | L | K);
    });
  });
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::SingleMonomial: return "SingleMonomial";
    case Family::LinearSum: return "LinearSum";
    case Family::XnPlusP: return "XnPlusP";
    case Family::MonoTimesLinear: return "MonoTimesLinear";
    case Family::PairTimesLinear: return "PairTimesLinear";
    case Family::ParitySplit: return "ParitySplit";
    case Family::MonoTimesMonoPair: return "MonoTimesMonoPair";
    case Family::PaddedMonoTimesMonoPair: return "PaddedMonoTimesMonoPair";
  }
  return "?";
}

SparsePoly mu_single_monomial(std::uint64_t I, int n) {
  check_range(I, n, "mu_single_monomial");
  check_emission(n - pc(I));
  std::uint64_t rest = full_mask(n) & ~I;
  std::vector<std::uint64_t> masks;
  masks.reserve(std::uint64_t{1} << pc(rest));
  for_subsets(rest, [&](std::uint64_t sub) { masks.push_back(I | sub); });
  return SparsePoly::from_masks(std::move(masks), n);
}

std::uint64_t weight_single_monomial(std::uint64_t I, int n) {
  check_range(I, n, "weight_single_monomial");
  return std::uint64_t{1} << (n - pc(I));
}

SparsePoly mu_linear_sum(std::uint64_t S, int n) {
  check_range(S, n, "mu_linear_sum");
  require(S == full_mask(n) && n >= 1, "linear-sum closed form needs S = [n]");
  check_emission(n);
  std::vector<std::uint64_t> masks;
  masks.reserve(std::uint64_t{1} << (n - 1));
  for (std::uint64_t k = 0, end = std::uint64_t{1} << n; k < end; ++k)
    if (std::popcount(k) & 1) masks.push_back(k);
  return SparsePoly::from_masks(std::move(masks), n);
}

std::uint64_t weight_linear_sum(int n) {
  require(n >= 1, "linear sum needs n >= 1");
  return std::uint64_t{1} << (n - 1);
}

SparsePoly mu_xn_plus_p(const SparsePoly& p, int n) {
  require(n >= 1 && n <= kMaxVars, "mu_xn_plus_p: variable count out of range");
  require(p.max_pos() < n - 1, "mu_xn_plus_p: X_n occurs in p");
  std::vector<std::uint64_t> inner_masks;
  inner_masks.reserve(p.size());
  for (Monomial m : p.monomials()) inner_masks.push_back(m.mask());
  SparsePoly inner = SparsePoly::from_masks(std::move(inner_masks), n - 1);
  SparsePoly inner_mu = mobius_list_greedy(inner);
  SparsePoly inner_bar = complement(inner_mu);  // mu(P+1) over n-1 variables
  std::uint64_t xn = std::uint64_t{1} << (n - 1);
  std::vector<std::uint64_t> masks;
  masks.reserve(inner_mu.size() + inner_bar.size());
  for (Monomial m : inner_mu.monomials()) masks.push_back(m.mask());
  for (Monomial m : inner_bar.monomials()) masks.push_back(m.mask() | xn);
  return SparsePoly::from_masks(std::move(masks), n);
}

SparsePoly mu_xn_plus_p(const SparsePoly& p) { return mu_xn_plus_p(p, p.nvars() + 1); }

std::uint64_t weight_xn_plus_p(int n) {
  require(n >= 1, "weight_xn_plus_p needs n >= 1");
  return std::uint64_t{1} << (n - 1);
}

SparsePoly mu_mono_times_linear(std::uint64_t I, std::uint64_t J, int n) {
  check_range(I | J, n, "mu_mono_times_linear");
  require((I & J) == 0, "mono-times-linear needs I and J disjoint");
  require(J != 0, "mono-times-linear needs a nonempty linear part");
  check_emission(n - pc(I) - 1);
  ToggleSet acc;
  emit_mono_times_linear(acc, I, J, n);
  return acc.collect(n);
}

std::uint64_t weight_mono_times_linear(std::uint64_t I, int n) {
  check_range(I, n, "weight_mono_times_linear");
  require(n - pc(I) >= 1, "mono-times-linear needs a free position");
  return std::uint64_t{1} << (n - pc(I) - 1);
}

SparsePoly mu_pair_times_linear(std::uint64_t I1, std::uint64_t I2, std::uint64_t J, int n) {
  check_range(I1 | I2 | J, n, "mu_pair_times_linear");
  require((I1 & I2) == 0 && (I1 & J) == 0 && (I2 & J) == 0,
          "pair-times-linear needs I1, I2, J pairwise disjoint");
  require(I1 != I2, "pair-times-linear needs two distinct monomials");
  require(J != 0, "pair-times-linear needs a nonempty linear part");
  check_emission(n - std::min(pc(I1), pc(I2)) - 1);
  ToggleSet acc;
  emit_mono_times_linear(acc, I1, J, n);
  emit_mono_times_linear(acc, I2, J, n);  // mutual terms cancel in the toggle set
  return acc.collect(n);
}

std::uint64_t weight_pair_times_linear(int n1, int n2, int n) {
  require(n1 + n2 <= n && n >= 1, "pair-times-linear weight out of range");
  return (std::uint64_t{1} << (n - n1 - 1)) + (std::uint64_t{1} << (n - n2 - 1)) -
         (std::uint64_t{1} << (n - n1 - n2));
}

SparsePoly mu_parity_split(std::uint64_t I, std::uint64_t J, std::uint64_t Ip,
                           std::uint64_t Jp, int n) {
  check_range(I | J | Ip | Jp, n, "mu_parity_split");
  require((I & J) == 0 && (Ip & Jp) == 0, "parity split needs disjoint I/J pairs");
  require((I | J) == full_mask(n) && (Ip | Jp) == full_mask(n),
          "parity split needs both covers to be [n]");
  require((pc(I) & 1) != (pc(Ip) & 1), "parity split needs |I|, |I'| of different parity");
  check_emission(n - std::min(pc(I), pc(Ip)) - 1);
  ToggleSet acc;
  emit_mono_times_linear(acc, I, J, n);
  emit_mono_times_linear(acc, Ip, Jp, n);
  return acc.collect(n);
}

std::uint64_t weight_parity_split(int n1, int n1p, int n) {
  require(n1 < n && n1p < n, "parity split weight out of range");
  return (std::uint64_t{1} << (n - n1 - 1)) + (std::uint64_t{1} << (n - n1p - 1));
}

SparsePoly mu_mono_times_mono_pair(std::uint64_t I, std::uint64_t J, std::uint64_t K, int n) {
  check_range(I | J | K, n, "mu_mono_times_mono_pair");
  require((I & J) == 0 && (I & K) == 0 && (J & K) == 0,
          "mono-times-mono-pair needs I, J, K pairwise disjoint");
  require(J != K, "mono-times-mono-pair needs distinct J, K");
  std::uint64_t L = I | J | K;
  check_emission(n - pc(L) + std::max(pc(J), pc(K)));
  std::uint64_t pad = full_mask(n) & ~L;
  ToggleSet acc;
  for_subsets(pad, [&](std::uint64_t F) {
    for_subsets(K, [&](std::uint64_t SK) { acc.toggle(F | I | J | SK); });
    for_subsets(J, [&](std::uint64_t SJ) { acc.toggle(F | I | K | SJ); });
  });
  return acc.collect(n);
}

std::uint64_t weight_mono_times_mono_pair(std::uint64_t I, std::uint64_t J,
                                          std::uint64_t K, int n) {
  check_range(I | J | K, n, "weight_mono_times_mono_pair");
  require(J != K, "mono-times-mono-pair needs distinct J, K");
  std::uint64_t L = I | J | K;
  return (std::uint64_t{1} << (n - pc(L))) *
         ((std::uint64_t{1} << pc(J)) + (std::uint64_t{1} << pc(K)) - 2);
}

std::uint64_t weight_mono_times_mono_pair_as_published(std::uint64_t I, std::uint64_t J,
                                                       std::uint64_t K, int n) {
  std::uint64_t L = I | J | K;
  return (std::uint64_t{1} << (n - pc(L))) *
         ((std::uint64_t{1} << pc(J)) + (std::uint64_t{1} << pc(K)));
}

// ---------------------------------------------------------------------------
// Pattern matching

namespace {

std::uint64_t vars_of(const FactoredExpr& e) {
  switch (e.kind()) {
    case FactoredExpr::Kind::Mono:
      return e.mono().mask();
    case FactoredExpr::Kind::One:
      return 0;
    default: {
      std::uint64_t acc = 0;
      for (const auto& c : e.children()) acc |= vars_of(c);
      return acc;
    }
  }
}

struct FlatProduct {
  std::uint64_t prefix = 0;
  std::vector<const FactoredExpr*> sums;
  bool zero = false;
};

void flatten_product(const FactoredExpr& e, FlatProduct& out) {
  for (const auto& c : e.children()) {
    switch (c.kind()) {
      case FactoredExpr::Kind::Mono:
        out.prefix |= c.mono().mask();
        break;
      case FactoredExpr::Kind::One:
        break;
      case FactoredExpr::Kind::Product:
        flatten_product(c, out);
        break;
      case FactoredExpr::Kind::Sum:
        if (c.children().empty())
          out.zero = true;
        else
          out.sums.push_back(&c);
        break;
    }
  }
}

// An expression that is one monomial: a Mono, the constant, or a product of
// such. Returns its position mask.
std::optional<std::uint64_t> as_monomial(const FactoredExpr& e) {
  switch (e.kind()) {
    case FactoredExpr::Kind::Mono:
      return e.mono().mask();
    case FactoredExpr::Kind::One:
      return 0;
    case FactoredExpr::Kind::Product: {
      std::uint64_t acc = 0;
      for (const auto& c : e.children()) {
        auto m = as_monomial(c);
        if (!m) return std::nullopt;
        acc |= *m;
      }
      return acc;
    }
    case FactoredExpr::Kind::Sum:
      return std::nullopt;
  }
  return std::nullopt;
}

// A sum of distinct degree-1 monomials; returns the union of positions.
std::optional<std::uint64_t> as_singles(const FactoredExpr& sum) {
  std::uint64_t acc = 0;
  for (const auto& c : sum.children()) {
    auto m = as_monomial(c);
    if (!m || std::popcount(*m) != 1) return std::nullopt;
    if (acc & *m) return std::nullopt;
    acc |= *m;
  }
  return acc;
}

// A sum of exactly two distinct monomials (the constant counts as X^empty).
std::optional<std::pair<std::uint64_t, std::uint64_t>> as_mono_pair(const FactoredExpr& sum) {
  if (sum.children().size() != 2) return std::nullopt;
  auto a = as_monomial(sum.children()[0]);
  auto b = as_monomial(sum.children()[1]);
  if (!a || !b || *a == *b) return std::nullopt;
  return std::make_pair(*a, *b);
}

std::optional<PatternHit> match_product(const FactoredExpr& e, int n) {
  FlatProduct fp;
  flatten_product(e, fp);
  if (fp.zero) return std::nullopt;
  PatternHit hit;
  hit.n = n;
  if (fp.sums.empty()) {
    hit.family = Family::SingleMonomial;
    hit.I = fp.prefix;
    return hit;
  }
  if (fp.sums.size() == 1) {
    const FactoredExpr& s = *fp.sums[0];
    if (auto singles = as_singles(s)) {
      if (*singles & fp.prefix) return std::nullopt;
      hit.family = Family::MonoTimesLinear;
      hit.I = fp.prefix;
      hit.J = *singles;
      return hit;
    }
    if (auto pair = as_mono_pair(s)) {
      auto [J, K] = *pair;
      if (fp.prefix == 0) return std::nullopt;  // bare X^J + X^K is not a family
      if ((fp.prefix & J) || (fp.prefix & K) || (J & K)) return std::nullopt;
      hit.I = fp.prefix;
      hit.J = J;
      hit.K = K;
      hit.family = (fp.prefix | J | K) == full_mask(n) ? Family::MonoTimesMonoPair
                                                       : Family::PaddedMonoTimesMonoPair;
      return hit;
    }
    return std::nullopt;
  }
  if (fp.sums.size() == 2 && fp.prefix == 0) {
    for (int a = 0; a < 2; ++a) {
      auto pair = as_mono_pair(*fp.sums[a]);
      auto lin = as_singles(*fp.sums[1 - a]);
      if (!pair || !lin) continue;
      auto [I1, I2] = *pair;
      if ((I1 & I2) || (I1 & *lin) || (I2 & *lin)) return std::nullopt;
      if (*lin == 0) return std::nullopt;
      hit.family = Family::PairTimesLinear;
      hit.I1 = I1;
      hit.I2 = I2;
      hit.J = *lin;
      return hit;
    }
  }
  return std::nullopt;
}

std::optional<PatternHit> match_sum(const FactoredExpr& e, int n) {
  const auto& ch = e.children();
  if (ch.empty()) return std::nullopt;
  PatternHit hit;
  hit.n = n;
  if (auto singles = as_singles(e)) {
    if (*singles == full_mask(n)) {
      hit.family = Family::LinearSum;
      hit.J = *singles;
    } else {
      hit.family = Family::MonoTimesLinear;  // X^empty times the partial sum
      hit.I = 0;
      hit.J = *singles;
    }
    return hit;
  }
  if (ch.size() == 2) {
    auto h1 = match_family(ch[0], n);
    auto h2 = match_family(ch[1], n);
    if (h1 && h2 && h1->family == Family::MonoTimesLinear &&
        h2->family == Family::MonoTimesLinear && (h1->I | h1->J) == full_mask(n) &&
        (h2->I | h2->J) == full_mask(n) && ((pc(h1->I) ^ pc(h2->I)) & 1)) {
      hit.family = Family::ParitySplit;
      hit.I = h1->I;
      hit.J = h1->J;
      hit.Iprime = h2->I;
      hit.Jprime = h2->J;
      return hit;
    }
  }
  // X_n + P with the last variable isolated in its own linear term.
  std::uint64_t xn = std::uint64_t{1} << (n - 1);
  int bare = 0;
  std::uint64_t rest_vars = 0;
  for (const auto& c : ch) {
    if (c.kind() == FactoredExpr::Kind::Mono && c.mono().mask() == xn)
      ++bare;
    else
      rest_vars |= vars_of(c);
  }
  if (bare == 1 && !(rest_vars & xn)) {
    hit.family = Family::XnPlusP;
    return hit;
  }
  return std::nullopt;
}

}  // namespace

std::optional<PatternHit> match_family(const FactoredExpr& e, int n) {
  if (n < 1 || n > kMaxVars) return std::nullopt;
  if (e.max_pos() >= n) return std::nullopt;
  PatternHit hit;
  hit.n = n;
  switch (e.kind()) {
    case FactoredExpr::Kind::One:
      hit.family = Family::SingleMonomial;
      hit.I = 0;
      return hit;
    case FactoredExpr::Kind::Mono:
      hit.family = Family::SingleMonomial;
      hit.I = e.mono().mask();
      return hit;
    case FactoredExpr::Kind::Product:
      return match_product(e, n);
    case FactoredExpr::Kind::Sum:
      return match_sum(e, n);
  }
  return std::nullopt;
}

std::uint64_t weight_of_hit(const PatternHit& hit) {
  switch (hit.family) {
    case Family::SingleMonomial: return weight_single_monomial(hit.I, hit.n);
    case Family::LinearSum: return weight_linear_sum(hit.n);
    case Family::XnPlusP: return weight_xn_plus_p(hit.n);
    case Family::MonoTimesLinear: return weight_mono_times_linear(hit.I, hit.n);
    case Family::PairTimesLinear:
      return weight_pair_times_linear(pc(hit.I1), pc(hit.I2), hit.n);
    case Family::ParitySplit: return weight_parity_split(pc(hit.I), pc(hit.Iprime), hit.n);
    case Family::MonoTimesMonoPair:
    case Family::PaddedMonoTimesMonoPair:
      return weight_mono_times_mono_pair(hit.I, hit.J, hit.K, hit.n);
  }
  throw Error(Errc::domain, "unknown family");
}

SparsePoly mu_of_hit(const PatternHit& hit, const FactoredExpr& e) {
  switch (hit.family) {
    case Family::SingleMonomial: return mu_single_monomial(hit.I, hit.n);
    case Family::LinearSum: return mu_linear_sum(hit.J, hit.n);
    case Family::XnPlusP: {
      std::uint64_t xn = std::uint64_t{1} << (hit.n - 1);
      std::vector<FactoredExpr> rest;
      bool dropped = false;
      for (const auto& c : e.children()) {
        if (!dropped && c.kind() == FactoredExpr::Kind::Mono && c.mono().mask() == xn) {
          dropped = true;
          continue;
        }
        rest.push_back(c);
      }
      SparsePoly inner = FactoredExpr::sum(std::move(rest)).expand(hit.n - 1);
      return mu_xn_plus_p(inner);
    }
    case Family::MonoTimesLinear: return mu_mono_times_linear(hit.I, hit.J, hit.n);
    case Family::PairTimesLinear:
      return mu_pair_times_linear(hit.I1, hit.I2, hit.J, hit.n);
    case Family::ParitySplit:
      return mu_parity_split(hit.I, hit.J, hit.Iprime, hit.Jprime, hit.n);
    case Family::MonoTimesMonoPair:
    case Family::PaddedMonoTimesMonoPair:
      return mu_mono_times_mono_pair(hit.I, hit.J, hit.K, hit.n);
  }
  throw Error(Errc::domain, "unknown family");
}

std::optional<FastWeight> fast_weight(const FactoredExpr& e, int n) {
  auto hit = match_family(e, n);
  if (!hit) return std::nullopt;
  return FastWeight{weight_of_hit(*hit), hit->family};
}

SparsePoly fast_mu(const FactoredExpr& e, int n) {
  if (auto hit = match_family(e, n)) return mu_of_hit(*hit, e);
  return mu_full(e.expand(n), Algo::Auto).poly;
}

namespace {

std::vector<const FactoredExpr*> summands_of(const FactoredExpr& e) {
  std::vector<const FactoredExpr*> out;
  if (e.kind() == FactoredExpr::Kind::Sum)
    for (const auto& c : e.children()) out.push_back(&c);
  else
    out.push_back(&e);
  return out;
}

bool is_bare_single(const FactoredExpr& e) {
  auto m = as_monomial(e);
  return m && std::popcount(*m) == 1;
}

}  // namespace

std::uint64_t estimate_ops(const FactoredExpr& e, int n) {
  std::uint64_t total = 0;
  bool have_singles = false;
  for (const FactoredExpr* s : summands_of(e)) {
    if (is_bare_single(*s)) {
      have_singles = true;  // pooled into one linear block below
      continue;
    }
    auto hit = match_family(*s, n);
    if (hit)
      total += weight_of_hit(*hit);
    else
      total += static_cast<std::uint64_t>(n) << (n - 1);  // butterfly bound for this summand
  }
  if (have_singles) total += std::uint64_t{1} << (n - 1);
  return total;
}

BlockStructure analyze_blocks(const FactoredExpr& e, int n) {
  BlockStructure bs;
  for (const FactoredExpr* s : summands_of(e)) {
    if (is_bare_single(*s)) {
      ++bs.linear_terms;
      continue;
    }
    SparsePoly p = s->expand(n);
    if (p.empty()) {
      ++bs.other_blocks;
      continue;
    }
    int d = degree(p);
    if (d != valuation(p))
      ++bs.other_blocks;  // not homogeneous
    else if (d == 2)
      ++bs.deg2_blocks;
    else if (d == 3)
      ++bs.deg3_blocks;
    else if (d == 4)
      ++bs.deg4_blocks;
    else
      ++bs.other_blocks;
  }
  return bs;
}

}  // namespace mobius::fastpath
