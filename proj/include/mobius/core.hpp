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

#include "mobius/dense_form.hpp"
#include "mobius/sparse_poly.hpp"

namespace mobius {

/// Reed-Muller split of P at one position: p0 holds the monomials without
/// X_i, p1 the cofactor of X_i. Neither part mentions position i and
/// P = p0 + X_i * p1 reproduces the input.
struct RMSplit {
  SparsePoly p0;
  SparsePoly p1;
  int pos = 0;
};

/// Reads an ANF-role bit vector as a polynomial: X^u present iff bit k(u)
/// is set. Throws a representation error on a truth-table input.
SparsePoly dense_to_sparse(const DenseForm& d);

/// Inverse of dense_to_sparse; the result has role ANF and length 2^nvars.
DenseForm sparse_to_dense(const SparsePoly& p);

RMSplit decompose(const SparsePoly& p, int pos);

/// Hamming weight of a truth table. Role must be TruthTable.
std::uint64_t weight(const DenseForm& d);

/// Max/min monomial degree; kNegInfinity for the zero polynomial.
int degree(const SparsePoly& p);
int valuation(const SparsePoly& p);

/// P-bar with P + P-bar = prod (1+X_i) over the declared nvars: the
/// complement of the monomial set inside the full 2^n universe. Only
/// available while 2^n fits the dense capacity.
SparsePoly complement(const SparsePoly& p);

/// Evaluates the Boolean function at a point given as a bitmask over
/// exactly npoint = p.nvars() coordinates.
int evaluate(const SparsePoly& p, std::uint64_t point, int npoint);

}  // namespace mobius
