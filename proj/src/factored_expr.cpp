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

#include "mobius/factored_expr.hpp"

#include <algorithm>
#include <unordered_set>

namespace mobius {

namespace {

// Accumulates mask parities; products of Boolean factors union their masks.
void expand_into(const FactoredExpr& e, std::unordered_set<std::uint64_t>& acc);

void toggle(std::unordered_set<std::uint64_t>& acc, std::uint64_t m) {
  auto it = acc.find(m);
  if (it != acc.end())
    acc.erase(it);
  else
    acc.insert(m);
}

void expand_into(const FactoredExpr& e, std::unordered_set<std::uint64_t>& acc) {
  switch (e.kind()) {
    case FactoredExpr::Kind::One:
      toggle(acc, 0);
      return;
    case FactoredExpr::Kind::Mono:
      toggle(acc, e.mono().mask());
      return;
    case FactoredExpr::Kind::Sum:
      for (const auto& c : e.children()) expand_into(c, acc);
      return;
    case FactoredExpr::Kind::Product: {
      std::unordered_set<std::uint64_t> prod{0};  // start from the constant 1
      for (const auto& c : e.children()) {
        std::unordered_set<std::uint64_t> factor;
        expand_into(c, factor);
        std::unordered_set<std::uint64_t> next;
        next.reserve(prod.size() * factor.size() + 1);
        for (std::uint64_t a : prod)
          for (std::uint64_t b : factor) toggle(next, a | b);
        prod = std::move(next);
      }
      for (std::uint64_t m : prod) toggle(acc, m);
      return;
    }
  }
}

}  // namespace

int FactoredExpr::max_pos() const {
  switch (kind_) {
    case Kind::Mono:
      return mono_.max_pos();
    case Kind::One:
      return -1;
    default: {
      int best = -1;
      for (const auto& c : children_) best = std::max(best, c.max_pos());
      return best;
    }
  }
}

SparsePoly FactoredExpr::expand(int nvars) const {
  std::unordered_set<std::uint64_t> acc;
  expand_into(*this, acc);
  std::vector<std::uint64_t> masks(acc.begin(), acc.end());
  return SparsePoly::from_masks(std::move(masks), nvars);
}

}  // namespace mobius
