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

#include <cstddef>
#include <string>
#include <string_view>

#include "mobius/dense_form.hpp"
#include "mobius/factored_expr.hpp"
#include "mobius/sparse_poly.hpp"

namespace mobius {

enum class Indexing { OneBased, ZeroBased };

/// Byte range into the parsed input, for diagnostics.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, SourceSpan span)
      : Error(Errc::parse, msg + " at " + std::to_string(span.begin) + ".." +
                               std::to_string(span.end)),
        span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

/// Grammar:  expr := term ('+' term)*
///           term := factor ('*' factor)*
///           factor := 'X'<digits> | '1' | '(' expr ')'
/// Whitespace (including newlines) is insignificant; '*' is mandatory
/// between factors; '0' is accepted only as a complete expression.
FactoredExpr parse_poly(std::string_view text, Indexing indexing = Indexing::OneBased);

/// "anf:<bits>" | "tt:<bits>" | "<role>:hex:n=<int>:<hexdigits>".
/// Binary payloads must have power-of-two length; leftmost character is k=0.
DenseForm parse_dense(std::string_view text);

std::string serialize(const SparsePoly& p, Indexing indexing = Indexing::OneBased);
std::string serialize(const FactoredExpr& e, Indexing indexing = Indexing::OneBased);
std::string serialize(const DenseForm& d);      // canonical "anf:0101" form
std::string serialize_hex(const DenseForm& d);  // "anf:hex:n=2:a" form

/// A corpus file: optional '#'-prefixed header lines (#indexing=<0|1>,
/// #n=<int>, plain comments), then one polynomial expression.
struct CorpusFile {
  FactoredExpr expr;
  int nvars = 0;
  Indexing indexing = Indexing::OneBased;
};

CorpusFile parse_corpus(std::string_view text,
                        Indexing default_indexing = Indexing::OneBased);
CorpusFile load_corpus(const std::string& path,
                       Indexing default_indexing = Indexing::OneBased);

}  // namespace mobius
