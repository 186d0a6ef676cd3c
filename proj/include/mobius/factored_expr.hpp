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

#include <vector>

#include "mobius/sparse_poly.hpp"

namespace mobius {

/// Expression tree of sums and products of monomials and the constant 1.
/// The tree preserves the user's parenthesization; it is never expanded
/// before pattern matching. The zero polynomial is the empty sum.
class FactoredExpr {
 public:
  enum class Kind { Sum, Product, Mono, One };

  static FactoredExpr sum(std::vector<FactoredExpr> children) {
    FactoredExpr e;
    e.kind_ = Kind::Sum;
    e.children_ = std::move(children);
    return e;
  }
  static FactoredExpr product(std::vector<FactoredExpr> children) {
    FactoredExpr e;
    e.kind_ = Kind::Product;
    e.children_ = std::move(children);
    return e;
  }
  static FactoredExpr monomial(Monomial m) {
    FactoredExpr e;
    e.kind_ = Kind::Mono;
    e.mono_ = m;
    return e;
  }
  static FactoredExpr one() {
    FactoredExpr e;
    e.kind_ = Kind::One;
    return e;
  }
  static FactoredExpr zero() { return sum({}); }

  Kind kind() const { return kind_; }
  const std::vector<FactoredExpr>& children() const { return children_; }
  Monomial mono() const { return mono_; }
  bool is_zero() const { return kind_ == Kind::Sum && children_.empty(); }

  /// Largest variable position mentioned anywhere in the tree; -1 if none.
  int max_pos() const;

  /// Expands modulo 2 and modulo repeated positions (x*x = x) into the
  /// canonical sparse polynomial over nvars variables.
  SparsePoly expand(int nvars) const;

 private:
  Kind kind_ = Kind::Sum;
  std::vector<FactoredExpr> children_;
  Monomial mono_;
};

}  // namespace mobius
