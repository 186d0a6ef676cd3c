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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mobius/core.hpp"
#include "mobius/fastpath.hpp"
#include "mobius/parser.hpp"
#include "test_support.hpp"

using namespace mobius;
using test::poly;

TEST_CASE("parse_poly builds the factored tree") {
  FactoredExpr e = parse_poly("X1 + X1*X2");
  REQUIRE(e.kind() == FactoredExpr::Kind::Sum);
  REQUIRE(e.children().size() == 2);
  CHECK(e.children()[0].kind() == FactoredExpr::Kind::Mono);
  CHECK(e.children()[1].kind() == FactoredExpr::Kind::Product);
  CHECK(e.expand(2) == SparsePoly({Monomial(0b01), Monomial(0b11)}, 2));

  FactoredExpr fac = parse_poly("X1*X2*(X4+X5)");
  CHECK(fac.kind() == FactoredExpr::Kind::Product);
  CHECK(fac.expand(5).size() == 2);

  // X^2 = X: repeated factors collapse
  CHECK(parse_poly("X1*X1").expand(1) == poly("X1"));
}

TEST_CASE("parser errors carry spans") {
  CHECK_THROWS_AS(parse_poly("X1X2"), ParseError);       // missing '*'
  CHECK_THROWS_AS(parse_poly("X0"), ParseError);         // index 0 under one-based
  CHECK_THROWS_AS(parse_poly("X1 + "), ParseError);
  CHECK_THROWS_AS(parse_poly("(X1"), ParseError);
  CHECK_THROWS_AS(parse_poly("X1*0"), ParseError);       // '0' only as a whole expr
  CHECK_THROWS_AS(parse_poly("0 + X1"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("X65"), ParseError);

  try {
    parse_poly("X1 + @");
  } catch (const ParseError& e) {
    CHECK(e.span().begin == 5);
  }
}

TEST_CASE("zero and indexing variants") {
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("0").expand(1).empty());
  CHECK(parse_poly("X0", Indexing::ZeroBased).expand(1) == poly("X1"));
  CHECK(parse_poly("X12", Indexing::ZeroBased).max_pos() == 12);
}

TEST_CASE("parse_dense accepts binary and hex payloads") {
  DenseForm d = parse_dense("anf:0101");
  CHECK(d.nvars() == 2);
  CHECK(d.role() == Role::Anf);
  CHECK(serialize(d) == "anf:0101");

  DenseForm t = parse_dense("tt:01000100");
  CHECK(t.nvars() == 3);
  CHECK(t.role() == Role::TruthTable);

  CHECK_THROWS_AS(parse_dense("anf:010"), ParseError);
  CHECK_THROWS_AS(parse_dense("0101"), ParseError);
  CHECK_THROWS_AS(parse_dense("anf:01x1"), ParseError);

  CHECK(serialize_hex(d) == "anf:hex:n=2:a");
  CHECK(parse_dense("anf:hex:n=2:a") == d);
  CHECK_THROWS_AS(parse_dense("anf:hex:n=2:abc"), ParseError);
}

TEST_CASE("serialization is canonical") {
  CHECK(serialize(poly("X1*X2 + X1")) == "X1 + X1*X2");
  CHECK(serialize(SparsePoly(3)) == "0");
  CHECK(serialize(sparse_to_dense(poly("X1 + X1*X2"))) == "anf:0101");
  CHECK(serialize(poly("X1", 2), Indexing::ZeroBased) == "X0");

  FactoredExpr e = parse_poly("X1*X2*(X4+X5) + 1");
  CHECK(serialize(e) == "X1*X2*(X4 + X5) + 1");
}

TEST_CASE("parse after serialize is the identity on canonical forms") {
  std::mt19937_64 rng(83);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 1 + int(rng() % 16);
    SparsePoly p = test::random_poly(rng, n, 40);
    CHECK(parse_poly(serialize(p)).expand(n) == p);
  }
  // factored trees round-trip through their serialization too
  for (const char* text : {"X1*X2*(X4+X5)", "(X1+X2)*(X3+X4)", "X1 + X1*X2", "0", "1"}) {
    FactoredExpr e = parse_poly(text);
    CHECK(serialize(parse_poly(serialize(e))) == serialize(e));
  }
  // and dense forms through both payload encodings
  for (int rep = 0; rep < 50; ++rep) {
    int n = int(rng() % 11);
    DenseForm d = test::random_dense(rng, n, rep % 2 ? Role::Anf : Role::TruthTable);
    CHECK(parse_dense(serialize(d)) == d);
    CHECK(parse_dense(serialize_hex(d)) == d);
  }
}

TEST_CASE("corpus files parse with headers") {
  CorpusFile cf = parse_corpus("# comment\n#indexing=0\n#n=4\nX0 + X1*X2\n");
  CHECK(cf.indexing == Indexing::ZeroBased);
  CHECK(cf.nvars == 4);
  CHECK(cf.expr.expand(cf.nvars) == poly("X1 + X2*X3", 4));
}

TEST_CASE("the Achterbahn corpus has the documented block structure") {
  CorpusFile cf = load_corpus(MOBIUS_CORPUS_DIR "/achterbahn.poly");
  CHECK(cf.indexing == Indexing::ZeroBased);
  CHECK(cf.nvars == 13);

  SparsePoly p = cf.expr.expand(cf.nvars);
  CHECK(degree(p) == 4);

  fastpath::BlockStructure bs = fastpath::analyze_blocks(cf.expr, cf.nvars);
  CHECK(bs.linear_terms == 13);
  CHECK(bs.deg2_blocks == 7);
  CHECK(bs.deg3_blocks == 18);
  CHECK(bs.deg4_blocks == 12);
  CHECK(bs.other_blocks == 0);
}
