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

#include "mobius/parser.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mobius {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Indexing indexing) : text_(text), indexing_(indexing) {}

  FactoredExpr parse() {
    skip_ws();
    // '0' is the zero polynomial, accepted only as a complete expression.
    if (!eof() && peek() == '0') {
      std::size_t at = pos_;
      ++pos_;
      skip_ws();
      if (!eof()) fail("'0' is only valid as a complete expression", {at, pos_});
      return FactoredExpr::zero();
    }
    FactoredExpr e = parse_expr();
    skip_ws();
    if (!eof()) fail("trailing input after expression", {pos_, pos_ + 1});
    return e;
  }

 private:
  FactoredExpr parse_expr() {
    std::vector<FactoredExpr> terms;
    terms.push_back(parse_term());
    skip_ws();
    while (!eof() && peek() == '+') {
      ++pos_;
      terms.push_back(parse_term());
      skip_ws();
    }
    if (terms.size() == 1) return std::move(terms.front());
    return FactoredExpr::sum(std::move(terms));
  }

  FactoredExpr parse_term() {
    std::vector<FactoredExpr> factors;
    factors.push_back(parse_factor());
    skip_ws();
    while (!eof() && peek() == '*') {
      ++pos_;
      factors.push_back(parse_factor());
      skip_ws();
    }
    if (factors.size() == 1) return std::move(factors.front());
    return FactoredExpr::product(std::move(factors));
  }

  FactoredExpr parse_factor() {
    skip_ws();
    if (eof()) fail("expected a factor, found end of input", {pos_, pos_});
    char c = peek();
    if (c == '(') {
      ++pos_;
      FactoredExpr e = parse_expr();
      skip_ws();
      if (eof() || peek() != ')') fail("missing ')'", {pos_, pos_ + 1});
      ++pos_;
      return e;
    }
    if (c == '1') {
      ++pos_;
      return FactoredExpr::one();
    }
    if (c == 'X' || c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a variable index after 'X'", {at, pos_});
      std::uint64_t idx = 0;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        idx = idx * 10 + (peek() - '0');
        if (idx > 1000) fail("variable index too large", {at, pos_ + 1});
        ++pos_;
      }
      int pos = 0;
      if (indexing_ == Indexing::OneBased) {
        if (idx == 0) fail("index 0 is invalid under one-based indexing", {at, pos_});
        if (idx > kMaxVars) fail("variable index beyond 64 positions", {at, pos_});
        pos = static_cast<int>(idx) - 1;
      } else {
        if (idx >= kMaxVars) fail("variable index beyond 64 positions", {at, pos_});
        pos = static_cast<int>(idx);
      }
      return FactoredExpr::monomial(Monomial::var(pos));
    }
    fail(std::string("unexpected character '") + c + "'", {pos_, pos_ + 1});
  }

  [[noreturn]] void fail(const std::string& msg, SourceSpan span) {
    throw ParseError(msg, span);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  Indexing indexing_;
  std::size_t pos_ = 0;
};

int log2_exact(std::size_t len) {
  int n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  return (std::size_t{1} << n) == len ? n : -1;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

DenseForm parse_dense_payload(std::string_view payload, Role role, std::size_t offset) {
  if (payload.substr(0, 4) == "hex:") {
    // <role>:hex:n=<int>:<digits>; digit j encodes bits 4j..4j+3, bit 4j at
    // the nibble's least significant position.
    std::string_view rest = payload.substr(4);
    if (rest.substr(0, 2) != "n=")
      throw ParseError("hex form needs explicit n=<int>", {offset, offset + payload.size()});
    rest = rest.substr(2);
    std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("hex form needs ':' after n=<int>", {offset, offset + payload.size()});
    int n = 0;
    for (char c : rest.substr(0, colon)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad n in hex form", {offset, offset + payload.size()});
      n = n * 10 + (c - '0');
      if (n > 64) break;
    }
    if (n > kMaxDenseVars)
      throw Error(Errc::capacity, "dense form capped at n <= " + std::to_string(kMaxDenseVars));
    std::string_view digits = rest.substr(colon + 1);
    std::uint64_t size = std::uint64_t{1} << n;
    std::size_t expect = size <= 4 ? 1 : size / 4;
    if (digits.size() != expect)
      throw ParseError("hex payload length does not match n", {offset, offset + payload.size()});
    DenseForm d(n, role);
    for (std::size_t j = 0; j < digits.size(); ++j) {
      int v = hex_digit(digits[j]);
      if (v < 0) throw ParseError("invalid hex digit", {offset, offset + payload.size()});
      for (int b = 0; b < 4; ++b) {
        std::uint64_t k = 4 * j + b;
        bool bit = (v >> b) & 1;
        if (k >= size) {
          if (bit) throw ParseError("hex payload sets bits beyond 2^n", {offset, offset + payload.size()});
          continue;
        }
        d.set_bit(k, bit);
      }
    }
    return d;
  }
  int n = log2_exact(payload.size());
  if (payload.empty() || n < 0)
    throw ParseError("dense payload length must be a power of two, got " +
                         std::to_string(payload.size()),
                     {offset, offset + payload.size()});
  if (n > kMaxDenseVars)
    throw Error(Errc::capacity, "dense form capped at n <= " + std::to_string(kMaxDenseVars));
  DenseForm d(n, role);
  for (std::size_t k = 0; k < payload.size(); ++k) {
    char c = payload[k];
    if (c != '0' && c != '1')
      throw ParseError(std::string("invalid bit character '") + c + "'",
                       {offset + k, offset + k + 1});
    d.set_bit(k, c == '1');  // leftmost character is k = 0
  }
  return d;
}

}  // namespace

FactoredExpr parse_poly(std::string_view text, Indexing indexing) {
  return PolyParser(text, indexing).parse();
}

DenseForm parse_dense(std::string_view text) {
  if (text.substr(0, 4) == "anf:") return parse_dense_payload(text.substr(4), Role::Anf, 4);
  if (text.substr(0, 3) == "tt:")
    return parse_dense_payload(text.substr(3), Role::TruthTable, 3);
  throw ParseError("dense forms need an 'anf:' or 'tt:' prefix", {0, text.size()});
}

namespace {

std::string mono_text(Monomial m, Indexing indexing) {
  if (m.is_one()) return "1";
  std::string out;
  std::uint64_t mask = m.mask();
  bool first = true;
  while (mask) {
    int pos = std::countr_zero(mask);
    mask &= mask - 1;
    if (!first) out += '*';
    first = false;
    out += 'X';
    out += std::to_string(indexing == Indexing::OneBased ? pos + 1 : pos);
  }
  return out;
}

}  // namespace

std::string serialize(const SparsePoly& p, Indexing indexing) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (Monomial m : p.monomials()) {
    if (!first) out += " + ";
    first = false;
    out += mono_text(m, indexing);
  }
  return out;
}

std::string serialize(const FactoredExpr& e, Indexing indexing) {
  switch (e.kind()) {
    case FactoredExpr::Kind::One:
      return "1";
    case FactoredExpr::Kind::Mono:
      return mono_text(e.mono(), indexing);
    case FactoredExpr::Kind::Sum: {
      if (e.children().empty()) return "0";
      std::string out;
      bool first = true;
      for (const auto& c : e.children()) {
        if (!first) out += " + ";
        first = false;
        out += serialize(c, indexing);
      }
      return out;
    }
    case FactoredExpr::Kind::Product: {
      std::string out;
      bool first = true;
      for (const auto& c : e.children()) {
        if (!first) out += '*';
        first = false;
        if (c.kind() == FactoredExpr::Kind::Sum)
          out += "(" + serialize(c, indexing) + ")";
        else
          out += serialize(c, indexing);
      }
      return out;
    }
  }
  return {};
}

std::string serialize(const DenseForm& d) {
  std::string out = role_name(d.role());
  out += ':';
  for (std::uint64_t k = 0, size = d.size(); k < size; ++k) out += d.bit(k) ? '1' : '0';
  return out;
}

std::string serialize_hex(const DenseForm& d) {
  static const char* digits = "0123456789abcdef";
  std::string out = role_name(d.role());
  out += ":hex:n=" + std::to_string(d.nvars()) + ":";
  std::uint64_t size = d.size();
  std::size_t count = size <= 4 ? 1 : size / 4;
  for (std::size_t j = 0; j < count; ++j) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      std::uint64_t k = 4 * j + b;
      if (k < size && d.bit(k)) v |= 1 << b;
    }
    out += digits[v];
  }
  return out;
}

CorpusFile parse_corpus(std::string_view text, Indexing default_indexing) {
  CorpusFile out;
  out.indexing = default_indexing;
  int declared_n = -1;
  std::string body;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] == '#') {
      std::string_view h = line.substr(first + 1);
      while (!h.empty() && (h.front() == ' ' || h.front() == '\t')) h.remove_prefix(1);
      if (h.substr(0, 9) == "indexing=") {
        if (h.substr(9, 1) == "0")
          out.indexing = Indexing::ZeroBased;
        else if (h.substr(9, 1) == "1")
          out.indexing = Indexing::OneBased;
        else
          throw ParseError("bad #indexing header", {pos, eol});
      } else if (h.substr(0, 2) == "n=") {
        declared_n = 0;
        for (char c : h.substr(2)) {
          if (c == ' ' || c == '\t' || c == '\r') break;
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad #n header", {pos, eol});
          declared_n = declared_n * 10 + (c - '0');
        }
      }
      // other '#' lines are comments
    } else {
      body.append(line);
      body += '\n';
    }
    pos = eol + 1;
  }
  out.expr = parse_poly(body, out.indexing);
  out.nvars = std::max(declared_n, out.expr.max_pos() + 1);
  if (out.nvars < 1) out.nvars = 1;
  return out;
}

CorpusFile load_corpus(const std::string& path, Indexing default_indexing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse, "cannot open corpus file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), default_indexing);
}

}  // namespace mobius
