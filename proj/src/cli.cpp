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

#include "mobius/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mobius/core.hpp"
#include "mobius/fastpath.hpp"
#include "mobius/oracle.hpp"
#include "mobius/parser.hpp"
#include "mobius/transforms.hpp"

namespace mobius::cli {

namespace {

using nlohmann::ordered_json;

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && issp(s[i])) ++i;
  return s.substr(i);
}

SparsePoly poly_of_bits(const DenseForm& d) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t k = 0, size = d.size(); k < size; ++k)
    if (d.bit(k)) masks.push_back(k);
  return SparsePoly::from_masks(std::move(masks), d.nvars());
}

std::string bits_payload(const DenseForm& d) {
  std::string out;
  out.reserve(d.size());
  for (std::uint64_t k = 0, size = d.size(); k < size; ++k) out += d.bit(k) ? '1' : '0';
  return out;
}

struct InputData {
  std::optional<DenseForm> dense;
  std::optional<FactoredExpr> expr;
  Indexing indexing = Indexing::OneBased;
  int nvars = 1;
  std::string label;
};

// The positional argument is a path when a file exists at it, inline text
// otherwise; "-" or nothing reads stdin.
InputData resolve_input(const std::string& raw, std::optional<int> n_flag,
                        Indexing default_indexing, std::istream& stdin_stream) {
  InputData in;
  std::string text;
  if (raw.empty() || raw == "-") {
    text = slurp(stdin_stream);
    in.label = "stdin";
  } else if (std::filesystem::exists(raw)) {
    std::ifstream f(raw, std::ios::binary);
    text = slurp(f);
    in.label = std::filesystem::path(raw).stem().string();
  } else {
    text = raw;
    in.label = raw;
  }
  std::string trimmed = trim(text);
  if (trimmed.rfind("anf:", 0) == 0 || trimmed.rfind("tt:", 0) == 0) {
    in.dense = parse_dense(trimmed);
    in.nvars = in.dense->nvars();
    if (n_flag && *n_flag != in.nvars)
      throw Error(Errc::domain, "--n conflicts with the dense payload length");
    return in;
  }
  CorpusFile cf = parse_corpus(text, default_indexing);
  in.indexing = cf.indexing;
  in.nvars = cf.nvars;
  if (n_flag) {
    if (*n_flag < cf.expr.max_pos() + 1)
      throw Error(Errc::domain, "--n smaller than the largest variable used");
    in.nvars = std::max(*n_flag, 1);
  }
  in.expr = std::move(cf.expr);
  return in;
}

Algo algo_from(const std::string& s) {
  if (s == "rbm") return Algo::RecursiveButterfly;
  if (s == "ibm") return Algo::IterativeButterfly;
  if (s == "vec") return Algo::ExclusiveMultVector;
  if (s == "list") return Algo::ExclusiveMultList;
  if (s == "greedy") return Algo::GreedyList;
  return Algo::Auto;
}

bool dense_algo(Algo a) {
  return a == Algo::RecursiveButterfly || a == Algo::IterativeButterfly ||
         a == Algo::ExclusiveMultVector;
}

DenseForm run_dense(Algo a, const DenseForm& d, OpCounter* c) {
  switch (a) {
    case Algo::RecursiveButterfly: return mobius_recursive(d, c);
    case Algo::ExclusiveMultVector: return mobius_vector(d, c);
    default: return mobius_iterative(d, c);
  }
}

std::vector<int> parse_order(const std::string& csv, Indexing indexing, int n) {
  std::vector<int> order;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw Error(Errc::domain, "empty entry in --order");
    int idx = 0;
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(Errc::domain, "--order entries must be variable numbers");
      idx = idx * 10 + (c - '0');
    }
    int pos = indexing == Indexing::OneBased ? idx - 1 : idx;
    if (pos < 0 || pos >= n) throw Error(Errc::domain, "--order variable outside [n]");
    order.push_back(pos);
  }
  return order;
}

// ---------------------------------------------------------------------------
// transform

struct TransformOpts {
  std::string input;
  std::string algo = "auto";
  std::string out = "auto";
  std::optional<int> n;
  int indexing = 1;
  std::string order;
};

int cmd_transform(const TransformOpts& o, std::istream& in, std::ostream& out) {
  Indexing idx = o.indexing == 0 ? Indexing::ZeroBased : Indexing::OneBased;
  InputData data = resolve_input(o.input, o.n, idx, in);
  Algo algo = algo_from(o.algo);

  std::optional<DenseForm> dense_result;
  SparsePoly poly_result;
  if (data.dense) {
    if (!o.order.empty()) {
      auto order = parse_order(o.order, data.indexing, data.nvars);
      poly_result = mobius_list_ordered(poly_of_bits(*data.dense), order);
      DenseForm bits = sparse_to_dense(poly_result);
      bits.set_role(data.dense->role() == Role::Anf ? Role::TruthTable : Role::Anf);
      dense_result = std::move(bits);
    } else if (dense_algo(algo) || algo == Algo::Auto) {
      Algo a = algo == Algo::Auto ? Algo::IterativeButterfly : algo;
      dense_result = run_dense(a, *data.dense, nullptr);
      poly_result = poly_of_bits(*dense_result);
    } else {
      MuResult r = mu_full(poly_of_bits(*data.dense), algo);
      poly_result = std::move(r.poly);
      DenseForm bits = sparse_to_dense(poly_result);
      bits.set_role(data.dense->role() == Role::Anf ? Role::TruthTable : Role::Anf);
      dense_result = std::move(bits);
    }
  } else {
    SparsePoly p = data.expr->expand(data.nvars);
    if (!o.order.empty()) {
      auto order = parse_order(o.order, data.indexing, data.nvars);
      poly_result = mobius_list_ordered(p, order);
    } else if (dense_algo(algo)) {
      DenseForm d = sparse_to_dense(p);
      dense_result = run_dense(algo, d, nullptr);
      poly_result = poly_of_bits(*dense_result);
    } else {
      poly_result = mu_full(p, algo).poly;
    }
  }

  std::string how = o.out;
  if (how == "auto") how = data.dense ? "dense" : "poly";
  if (how == "poly") {
    out << serialize(poly_result, data.indexing) << "\n";
    return kExitOk;
  }
  DenseForm bits = dense_result ? *dense_result : sparse_to_dense(poly_result);
  const char* label = how == "anf"  ? "anf"
                      : how == "tt" ? "tt"
                                    : role_name(bits.role());
  out << label << ":" << bits_payload(bits) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// weight

struct WeightOpts {
  std::string input;
  std::string method = "transform";
  std::optional<int> n;
  int indexing = 1;
};

std::uint64_t weight_by_transform(const InputData& data) {
  if (data.dense) {
    if (data.dense->role() == Role::TruthTable) return data.dense->popcount();
    return mobius_iterative(*data.dense).popcount();
  }
  return mu_full(data.expr->expand(data.nvars), Algo::Auto).poly.size();
}

int cmd_weight(const WeightOpts& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Indexing idx = o.indexing == 0 ? Indexing::ZeroBased : Indexing::OneBased;
  InputData data = resolve_input(o.input, o.n, idx, in);
  std::uint64_t w = 0;
  if (o.method == "naive") {
    if (data.dense && data.dense->role() == Role::TruthTable)
      w = data.dense->popcount();
    else {
      if (data.nvars > oracle::kMaxOracleVars)
        throw Error(Errc::capacity, "the naive method is capped at n <= " +
                                        std::to_string(oracle::kMaxOracleVars));
      SparsePoly p = data.dense ? poly_of_bits(*data.dense) : data.expr->expand(data.nvars);
      w = oracle::weight_naive(p);
    }
  } else if (o.method == "fastpath") {
    std::optional<fastpath::FastWeight> fw;
    if (data.expr) fw = fastpath::fast_weight(*data.expr, data.nvars);
    if (fw) {
      err << "family: " << fastpath::family_name(fw->family);
      if (fw->family == fastpath::Family::MonoTimesMonoPair ||
          fw->family == fastpath::Family::PaddedMonoTimesMonoPair) {
        auto hit = fastpath::match_family(*data.expr, data.nvars);
        err << " (as-published weight: "
            << fastpath::weight_mono_times_mono_pair_as_published(hit->I, hit->J, hit->K,
                                                                  hit->n)
            << ")";
      }
      err << "\n";
      w = fw->weight;
    } else {
      err << "warning: no fast-path family matched; falling back to transform\n";
      w = weight_by_transform(data);
    }
  } else {
    w = weight_by_transform(data);
  }
  out << w << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  int n = 4;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 42;
  bool exhaustive = false;
  bool inject_fault = false;
};

DenseForm dense_from_value(int n, std::uint64_t value) {
  DenseForm d(n, Role::Anf);
  for (std::uint64_t k = 0, size = d.size(); k < size; ++k)
    d.set_bit(k, (value >> k) & 1);
  return d;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.n < 1 || o.n > oracle::kMaxOracleVars)
    throw Error(Errc::capacity, "verify needs 1 <= n <= 16");
  if (o.exhaustive && o.n > 4)
    throw Error(Errc::capacity, "exhaustive verification is limited to n <= 4");

  std::mt19937_64 rng(o.seed);
  std::uint64_t count = o.exhaustive ? (std::uint64_t{1} << (std::uint64_t{1} << o.n))
                                     : o.samples;
  const Algo algos[] = {Algo::RecursiveButterfly, Algo::IterativeButterfly,
                        Algo::ExclusiveMultVector, Algo::ExclusiveMultList,
                        Algo::GreedyList};
  for (std::uint64_t s = 0; s < count; ++s) {
    DenseForm d(o.n, Role::Anf);
    if (o.exhaustive) {
      d = dense_from_value(o.n, s);
    } else {
      for (auto& word : d.words()) word = rng();
      if (o.n < 6) d.words()[0] &= (std::uint64_t{1} << d.size()) - 1;
    }
    SparsePoly p = poly_of_bits(d);
    SparsePoly expected = oracle::mobius_naive(p);
    for (Algo a : algos) {
      SparsePoly got = mu_full(p, a).poly;
      if (o.inject_fault && s == 0 && a == Algo::IterativeButterfly)
        got = xor_add(got, SparsePoly({Monomial::one()}, o.n));
      if (got != expected) {
        out << "DIVERGENCE input=" << serialize(d) << " algo=" << algo_name(a)
            << " expected=" << serialize(expected) << " got=" << serialize(got) << "\n";
        return kExitDivergence;
      }
    }
  }
  out << "verify n=" << o.n << " mode=" << (o.exhaustive ? "exhaustive" : "random")
      << " functions=" << count << " algorithms=5 divergences=0\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOpts {
  std::string corpus;
  std::string input;
  std::string corpus_file = "corpus/achterbahn.poly";
  int n = 8;
  std::uint64_t samples = 10;
  std::uint64_t seed = 42;
  std::string order;
  bool json = true;
  bool timings = false;
};

double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

class Bench {
 public:
  Bench(std::ostream& out, bool timings) : out_(out), timings_(timings) {}

  void run_all(const std::string& label, const SparsePoly& p,
               const std::vector<int>* order) {
    std::optional<SparsePoly> expected;
    if (p.nvars() <= oracle::kMaxOracleVars) expected = oracle::mobius_naive(p);
    const Algo algos[] = {Algo::RecursiveButterfly, Algo::IterativeButterfly,
                          Algo::ExclusiveMultVector, Algo::ExclusiveMultList,
                          Algo::GreedyList};
    for (Algo a : algos) emit_run(label, p, a, nullptr, expected);
    if (order) emit_run(label, p, Algo::ExclusiveMultList, order, expected);
  }

  void emit_run(const std::string& label, const SparsePoly& p, Algo a,
                const std::vector<int>* order, const std::optional<SparsePoly>& expected) {
    OpCounter c;
    auto t0 = std::chrono::steady_clock::now();
    SparsePoly got;
    if (order) {
      got = mobius_list_ordered(p, *order, &c);
    } else {
      MuResult r = mu_full(p, a);
      got = std::move(r.poly);
      c = std::move(r.counter);
    }
    auto t1 = std::chrono::steady_clock::now();
    bool is_dense = dense_algo(a);
    ordered_json line;
    line["input"] = label;
    line["n"] = p.nvars();
    line["algorithm"] = order ? "list_ordered" : algo_name(a);
    if (order) {
      ordered_json ord = ordered_json::array();
      for (int pos : *order) ord.push_back(pos + 1);  // one-based in reports
      line["order"] = ord;
    }
    line["op_count"] = is_dense ? c.xors : c.list_mods;
    line["op_unit"] = is_dense ? "xor" : "list_mod";
    if (!is_dense) line["sum_poly_sizes"] = c.sum_poly_sizes();
    if (expected) line["agreement"] = got == *expected;
    if (timings_)
      line["wall_ms"] =
          std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
              .count();
    out_ << line.dump() << "\n";
  }

  void emit_estimate(const std::string& label, const FactoredExpr& e, int n) {
    ordered_json line;
    line["input"] = label;
    line["n"] = n;
    line["algorithm"] = "fastpath_estimate";
    line["op_count"] = fastpath::estimate_ops(e, n);
    line["op_unit"] = "emitted_term";
    out_ << line.dump() << "\n";
  }

  void emit_summary(const std::string& label, std::uint64_t butterfly,
                    std::uint64_t estimate) {
    ordered_json line;
    line["input"] = label;
    ordered_json s;
    s["butterfly_xors"] = butterfly;
    s["fastpath_estimate"] = estimate;
    s["savings_pct"] = round4(100.0 * (1.0 - double(estimate) / double(butterfly)));
    line["summary"] = s;
    out_ << line.dump() << "\n";
  }

 private:
  std::ostream& out_;
  bool timings_;
};

int cmd_bench(const BenchOpts& o, std::istream& in, std::ostream& out) {
  Bench bench(out, o.timings);
  if (o.corpus == "achterbahn" || (!o.corpus_file.empty() && o.corpus.empty() &&
                                   o.input.empty())) {
    CorpusFile cf = load_corpus(o.corpus_file);
    SparsePoly p = cf.expr.expand(cf.nvars);
    bench.run_all("achterbahn", p, nullptr);
    bench.emit_estimate("achterbahn", cf.expr, cf.nvars);
    std::uint64_t butterfly = std::uint64_t(cf.nvars) << (cf.nvars - 1);
    bench.emit_summary("achterbahn", butterfly, fastpath::estimate_ops(cf.expr, cf.nvars));
    return kExitOk;
  }
  if (o.corpus == "random") {
    std::mt19937_64 rng(o.seed);
    if (o.n < 1 || o.n > kMaxVars) throw Error(Errc::domain, "bench --n out of range");
    for (std::uint64_t s = 0; s < o.samples; ++s) {
      std::uint64_t terms = 1 + rng() % (2 * o.n + 1);
      std::vector<std::uint64_t> masks;
      std::uint64_t full = o.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << o.n) - 1;
      for (std::uint64_t t = 0; t < terms; ++t) masks.push_back(rng() & full);
      SparsePoly p = SparsePoly::from_masks(std::move(masks), o.n);
      bench.run_all("random[" + std::to_string(s) + "]", p, nullptr);
    }
    return kExitOk;
  }
  // explicit input expression or file
  InputData data = resolve_input(o.input, std::nullopt, Indexing::OneBased, in);
  SparsePoly p = data.dense ? poly_of_bits(*data.dense) : data.expr->expand(data.nvars);
  std::optional<std::vector<int>> order;
  if (!o.order.empty()) order = parse_order(o.order, data.indexing, data.nvars);
  bench.run_all(data.label, p, order ? &*order : nullptr);
  if (data.expr) {
    bench.emit_estimate(data.label, *data.expr, data.nvars);
    std::uint64_t butterfly = std::uint64_t(data.nvars) << (data.nvars - 1);
    bench.emit_summary(data.label, butterfly,
                       fastpath::estimate_ops(*data.expr, data.nvars));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Mobius-transform toolkit for Boolean functions"};
  app.require_subcommand(1);

  TransformOpts topt;
  auto* t = app.add_subcommand("transform", "Apply the Mobius transform once");
  t->add_option("input", topt.input, "file path, inline text, or '-' for stdin");
  t->add_option("--algo", topt.algo, "algorithm")
      ->check(CLI::IsMember({"rbm", "ibm", "vec", "list", "greedy", "auto"}));
  t->add_option("--out", topt.out, "output form")
      ->check(CLI::IsMember({"poly", "anf", "tt", "auto"}));
  t->add_option("--n", topt.n, "force the variable count");
  t->add_option("--indexing", topt.indexing, "variable numbering of inline text (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  t->add_option("--order", topt.order, "forced list order, e.g. 2,1,3");

  WeightOpts wopt;
  auto* w = app.add_subcommand("weight", "Hamming weight of a Boolean function");
  w->add_option("input", wopt.input, "file path, inline text, or '-' for stdin");
  w->add_option("--method", wopt.method, "how to compute the weight")
      ->check(CLI::IsMember({"fastpath", "transform", "naive"}));
  w->add_option("--n", wopt.n, "force the variable count");
  w->add_option("--indexing", wopt.indexing, "variable numbering of inline text (0 or 1)")
      ->check(CLI::IsMember({0, 1}));

  VerifyOpts vopt;
  auto* v = app.add_subcommand("verify", "Differential test of all algorithms vs the oracle");
  v->add_option("--n", vopt.n, "variable count (<= 16)")->required();
  v->add_option("--samples", vopt.samples, "random functions to test");
  v->add_option("--seed", vopt.seed, "random seed");
  v->add_flag("--exhaustive", vopt.exhaustive, "test every ANF (n <= 4)");
  v->add_flag("--inject-fault", vopt.inject_fault, "harness self-test")->group("");

  BenchOpts bopt;
  auto* b = app.add_subcommand("bench", "Operation-count reports as JSON lines");
  b->add_option("--corpus", bopt.corpus, "named corpus")
      ->check(CLI::IsMember({"achterbahn", "random"}));
  b->add_option("input", bopt.input, "explicit input instead of a corpus");
  b->add_option("--corpus-file", bopt.corpus_file, "path of the achterbahn corpus");
  b->add_option("--n", bopt.n, "variable count for the random corpus");
  b->add_option("--samples", bopt.samples, "random corpus size");
  b->add_option("--seed", bopt.seed, "random seed");
  b->add_option("--order", bopt.order, "also run the forced list order");
  b->add_flag("--json", bopt.json, "emit JSON lines (the default)");
  b->add_flag("--timings", bopt.timings, "include wall_ms (not byte-deterministic)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (t->parsed()) return cmd_transform(topt, in, out);
    if (w->parsed()) return cmd_weight(wopt, in, out, err);
    if (v->parsed()) return cmd_verify(vopt, out);
    if (b->parsed()) return cmd_bench(bopt, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::capacity: return kExitCapacity;
      default: return kExitParse;
    }
  }
  return kExitUsage;
}

}  // namespace mobius::cli
