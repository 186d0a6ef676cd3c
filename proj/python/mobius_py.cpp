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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mobius/core.hpp"
#include "mobius/fastpath.hpp"
#include "mobius/oracle.hpp"
#include "mobius/parser.hpp"
#include "mobius/transforms.hpp"

namespace py = pybind11;
using namespace mobius;

namespace {

Indexing indexing_from(int i) { return i == 0 ? Indexing::ZeroBased : Indexing::OneBased; }

Algo algo_from(const std::string& s) {
  if (s == "rbm") return Algo::RecursiveButterfly;
  if (s == "ibm") return Algo::IterativeButterfly;
  if (s == "vec") return Algo::ExclusiveMultVector;
  if (s == "list") return Algo::ExclusiveMultList;
  if (s == "greedy") return Algo::GreedyList;
  if (s == "auto") return Algo::Auto;
  throw Error(Errc::domain, "unknown algorithm: " + s);
}

SparsePoly expand_text(const std::string& text, int n, int indexing) {
  FactoredExpr e = parse_poly(text, indexing_from(indexing));
  int nvars = n >= 0 ? n : std::max(e.max_pos() + 1, 1);
  return e.expand(nvars);
}

py::dict counter_dict(const OpCounter& c) {
  py::dict d;
  d["xors"] = c.xors;
  d["list_mods"] = c.list_mods;
  d["per_step"] = c.per_step;
  d["poly_sizes"] = c.poly_sizes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mobius, m) {
  m.doc() = "Mobius transforms of Boolean functions: ANF, truth table and "
            "polynomial form conversions with operation counting";

  py::register_exception<Error>(m, "MobiusError");

  py::class_<SparsePoly>(m, "SparsePoly")
      .def(py::init<int>(), py::arg("nvars") = 0)
      .def_property_readonly("nvars", &SparsePoly::nvars)
      .def("__len__", &SparsePoly::size)
      .def("__eq__", [](const SparsePoly& a, const SparsePoly& b) { return a == b; })
      .def("__str__", [](const SparsePoly& p) { return serialize(p); })
      .def("__repr__",
           [](const SparsePoly& p) { return "SparsePoly('" + serialize(p) + "')"; })
      .def("masks",
           [](const SparsePoly& p) {
             std::vector<std::uint64_t> out;
             for (Monomial mm : p.monomials()) out.push_back(mm.mask());
             return out;
           })
      .def("degree", [](const SparsePoly& p) { return degree(p); })
      .def("valuation", [](const SparsePoly& p) { return valuation(p); });

  m.def(
      "parse",
      [](const std::string& text, int n, int indexing) {
        return expand_text(text, n, indexing);
      },
      py::arg("text"), py::arg("n") = -1, py::arg("indexing") = 1,
      "Parse a polynomial expression and expand it to its canonical form.");

  m.def(
      "mu",
      [](const std::string& text, int n, const std::string& algo, int indexing) {
        MuResult r = mu_full(expand_text(text, n, indexing), algo_from(algo));
        return py::make_tuple(r.poly, counter_dict(r.counter));
      },
      py::arg("text"), py::arg("n") = -1, py::arg("algo") = "auto",
      py::arg("indexing") = 1,
      "Mobius transform of a polynomial given as text; returns (poly, counters).");

  m.def(
      "mu_poly",
      [](const SparsePoly& p, const std::string& algo) {
        MuResult r = mu_full(p, algo_from(algo));
        return py::make_tuple(r.poly, counter_dict(r.counter));
      },
      py::arg("poly"), py::arg("algo") = "auto");

  m.def(
      "mu_dense",
      [](const std::string& text, const std::string& algo) {
        DenseForm d = parse_dense(text);
        DenseForm out = algo == "rbm"   ? mobius_recursive(d)
                        : algo == "vec" ? mobius_vector(d)
                                        : mobius_iterative(d);
        return serialize(out);
      },
      py::arg("text"), py::arg("algo") = "ibm",
      "Butterfly transform of an 'anf:...'/'tt:...' bit string.");

  m.def(
      "weight",
      [](const std::string& text, int n, const std::string& method,
         int indexing) -> std::uint64_t {
        if (text.rfind("anf:", 0) == 0 || text.rfind("tt:", 0) == 0) {
          DenseForm d = parse_dense(text);
          if (d.role() == Role::TruthTable) return d.popcount();
          return mobius_iterative(d).popcount();
        }
        FactoredExpr e = parse_poly(text, indexing_from(indexing));
        int nvars = n >= 0 ? n : std::max(e.max_pos() + 1, 1);
        if (method == "naive") return oracle::weight_naive(e.expand(nvars));
        if (method == "fastpath") {
          auto fw = fastpath::fast_weight(e, nvars);
          if (fw) return fw->weight;
        }
        return mu_full(e.expand(nvars), Algo::Auto).poly.size();
      },
      py::arg("text"), py::arg("n") = -1, py::arg("method") = "transform",
      py::arg("indexing") = 1);

  m.def(
      "match_family",
      [](const std::string& text, int n, int indexing) -> py::object {
        FactoredExpr e = parse_poly(text, indexing_from(indexing));
        int nvars = n >= 0 ? n : std::max(e.max_pos() + 1, 1);
        auto hit = fastpath::match_family(e, nvars);
        if (!hit) return py::none();
        return py::str(fastpath::family_name(hit->family));
      },
      py::arg("text"), py::arg("n") = -1, py::arg("indexing") = 1);

  m.def(
      "estimate_ops",
      [](const std::string& text, int n, int indexing) {
        FactoredExpr e = parse_poly(text, indexing_from(indexing));
        int nvars = n >= 0 ? n : std::max(e.max_pos() + 1, 1);
        return fastpath::estimate_ops(e, nvars);
      },
      py::arg("text"), py::arg("n") = -1, py::arg("indexing") = 1);

  m.def(
      "load_corpus_text",
      [](const std::string& text) {
        CorpusFile cf = parse_corpus(text);
        return py::make_tuple(serialize(cf.expr, cf.indexing), cf.nvars,
                              cf.indexing == Indexing::ZeroBased ? 0 : 1);
      },
      py::arg("text"), "Parse a corpus file body; returns (expr_text, n, indexing).");

  m.def(
      "mobius_naive", [](const SparsePoly& p) { return oracle::mobius_naive(p); },
      py::arg("poly"), "Brute-force reference transform (n <= 16).");
}
