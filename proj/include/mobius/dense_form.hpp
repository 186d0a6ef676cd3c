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

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mobius/errors.hpp"
#include "mobius/monomial.hpp"

namespace mobius {

/// How to read a 2^n bit vector: as the characteristic function of monomials
/// (ANF) or of minterms (truth table).
enum class Role : std::uint8_t { Anf, TruthTable };

inline const char* role_name(Role r) { return r == Role::Anf ? "anf" : "tt"; }

/// Bit vector of length 2^n. Bit k encodes the point/monomial u with
/// k = sum u_i 2^(i-1), i.e. position i contributes 2^i under the 0-based
/// internal numbering.
class DenseForm {
 public:
  DenseForm(int nvars, Role role) : nvars_(check(nvars)), role_(role) {
    words_.assign(word_count(nvars_), 0);
  }

  int nvars() const { return nvars_; }
  Role role() const { return role_; }
  std::uint64_t size() const { return std::uint64_t{1} << nvars_; }

  bool bit(std::uint64_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
  void set_bit(std::uint64_t k, bool v) {
    std::uint64_t m = std::uint64_t{1} << (k & 63);
    if (v)
      words_[k >> 6] |= m;
    else
      words_[k >> 6] &= ~m;
  }

  void flip_role() { role_ = role_ == Role::Anf ? Role::TruthTable : Role::Anf; }
  void set_role(Role r) { role_ = r; }

  std::uint64_t popcount() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const DenseForm&, const DenseForm&) = default;

 private:
  static int check(int n) {
    if (n < 0) throw Error(Errc::domain, "dense form needs n >= 0");
    if (n > kMaxDenseVars)
      throw Error(Errc::capacity,
                  "dense form capped at n <= " + std::to_string(kMaxDenseVars) +
                      ", got " + std::to_string(n));
    return n;
  }
  static std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
  }

  std::vector<std::uint64_t> words_;
  int nvars_;
  Role role_;
};

}  // namespace mobius
