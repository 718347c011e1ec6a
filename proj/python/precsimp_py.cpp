// Copyright 2026 The precsimp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Weights cross the boundary as fractions.Fraction; any
// value Fraction() accepts (int, str, float, Decimal) is taken on input.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <tuple>
#include <vector>

#include "precsimp/dcs_io.hpp"
#include "precsimp/decomposition.hpp"
#include "precsimp/distance.hpp"
#include "precsimp/error.hpp"
#include "precsimp/redundancy.hpp"
#include "precsimp/reduction.hpp"
#include "precsimp/verify.hpp"

namespace py = pybind11;
using namespace precsimp;

namespace {

using PyEdge = std::tuple<Node, Node>;
using PyEdgeList = std::vector<PyEdge>;

py::object fraction_type() {
  return py::module_::import("fractions").attr("Fraction");
}

Weight to_weight(const py::handle& value) {
  py::object f = fraction_type()(value);
  return Weight::parse(py::str(f).cast<std::string>());
}

py::object to_fraction(const Weight& w) {
  py::object as_int = py::module_::import("builtins").attr("int");
  return fraction_type()(as_int(w.numerator().str()), as_int(w.denominator().str()));
}

EdgeSet to_edge_set(const PyEdgeList& edges) {
  EdgeSet out;
  for (const auto& [i, j] : edges) out.insert(Edge{i, j});
  return out;
}

PyEdgeList to_py(const EdgeSet& edges) {
  PyEdgeList out;
  for (const Edge& e : edges) out.emplace_back(e.from, e.to);
  return out;
}

RepresentativePolicy policy_from(const std::string& name) {
  if (name == "smallest") return RepresentativePolicy::kSmallest;
  if (name == "largest") return RepresentativePolicy::kLargest;
  throw py::value_error("representative must be 'smallest' or 'largest'");
}

PrecedenceGraph make_graph(int n, const py::iterable& edges) {
  std::vector<RawEdge> raw;
  for (const py::handle& item : edges) {
    auto t = item.cast<py::sequence>();
    if (t.size() != 3) throw py::value_error("edges are (i, j, weight) triples");
    raw.push_back({t[0].cast<Node>(), t[1].cast<Node>(), to_weight(t[2])});
  }
  return normalize(n, raw).graph;
}

py::list edge_triples(const PrecedenceGraph& g) {
  py::list out;
  for (const auto& [e, w] : g.edges()) out.append(py::make_tuple(e.from, e.to, to_fraction(w)));
  return out;
}

}  // namespace

PYBIND11_MODULE(precsimp, m) {
  m.doc() = "Redundancy removal and equivalent reduction for difference constraints";

  // Leaked on purpose: the translator may run until interpreter shutdown.
  static py::handle error_type =
      PyErr_NewException("precsimp.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = error_type(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<PrecedenceGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           "Build from (i, j, c) triples meaning x_i - x_j <= c. Parallel "
           "constraints keep the smallest c; nonnegative self-loops are dropped.")
      .def_property_readonly("n", &PrecedenceGraph::n)
      .def_property_readonly("edges", &edge_triples)
      .def("weight", [](const PrecedenceGraph& g, Node i, Node j) {
        return to_fraction(g.weight(Edge{i, j}));
      })
      .def("without", [](const PrecedenceGraph& g, const PyEdgeList& edges) {
        return g.without(to_edge_set(edges));
      })
      .def("to_dcs", [](const PrecedenceGraph& g) { return serialize_dcs(g); })
      .def("__len__", &PrecedenceGraph::size)
      .def("__contains__", [](const PrecedenceGraph& g, const PyEdge& e) {
        return g.contains(Edge{std::get<0>(e), std::get<1>(e)});
      })
      .def(py::self == py::self)
      .def("__repr__", [](const PrecedenceGraph& g) {
        return "<precsimp.Graph n=" + std::to_string(g.n()) +
               " edges=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_dcs", [](const std::string& text) { return parse_dcs(text).graph; },
        py::arg("text"));
  m.def("read_dcs", [](const std::filesystem::path& p) { return read_dcs_file(p).graph; },
        py::arg("path"));

  m.def(
      "min_walk_weights",
      [](const PrecedenceGraph& g) {
        DistanceMatrix d = min_walk_weights(g);
        py::list rows;
        for (Node i = 1; i <= g.n(); ++i) {
          py::list row;
          for (Node j = 1; j <= g.n(); ++j) {
            const auto& v = d.at(i, j);
            row.append(v ? to_fraction(*v) : py::none());
          }
          rows.append(row);
        }
        return rows;
      },
      py::arg("graph"),
      "n x n list; entry [i-1][j-1] is d_ij, or None when j is unreachable.");

  m.def(
      "equivalence_classes",
      [](const PrecedenceGraph& g, const std::string& representative) {
        Partition p = equivalence_classes(min_walk_weights(g), policy_from(representative));
        return std::make_tuple(p.classes, p.rep);
      },
      py::arg("graph"), py::arg("representative") = "smallest",
      "Returns (classes, representatives).");

  m.def(
      "find_redundant_edges",
      [](const PrecedenceGraph& g) {
        return to_py(find_redundant_edges(g, min_walk_weights(g)));
      },
      py::arg("graph"));

  m.def(
      "is_redundant_edge_set",
      [](const PrecedenceGraph& g, const PyEdgeList& edges) {
        return is_redundant_edge_set(g, to_edge_set(edges));
      },
      py::arg("graph"), py::arg("edges"));

  m.def(
      "max_redundant_edge_set",
      [](const PrecedenceGraph& g, std::size_t exact_limit, bool allow_heuristic,
         const std::string& representative) {
        SolverConfig cfg;
        cfg.exact_limit = exact_limit;
        cfg.allow_heuristic = allow_heuristic;
        cfg.representative = policy_from(representative);
        RedundantEdgeSet r = max_redundant_edge_set(g, cfg);
        return std::make_tuple(to_py(r.edges), r.certified);
      },
      py::arg("graph"), py::arg("exact_limit") = 20, py::arg("allow_heuristic") = true,
      py::arg("representative") = "smallest",
      "Returns (edges, certified).");

  m.def(
      "equivalent_reduction",
      [](const PrecedenceGraph& g, const std::string& representative) {
        return equivalent_reduction(g, policy_from(representative)).reduced;
      },
      py::arg("graph"), py::arg("representative") = "smallest");

  m.def(
      "condensation",
      [](const PrecedenceGraph& g, const std::string& representative) {
        Decomposition dec = decompose(g, policy_from(representative));
        py::dict edges;
        for (const auto& [e, w] : dec.condensed.edges) {
          edges[py::make_tuple(e.from, e.to)] = to_fraction(w);
        }
        return py::make_tuple(dec.condensed.nodes, edges);
      },
      py::arg("graph"), py::arg("representative") = "smallest",
      "Returns (representatives, {(u, v): weight}) keyed by representative ids.");

  m.def(
      "systems_equivalent",
      [](const PrecedenceGraph& a, const PrecedenceGraph& b) -> py::object {
        EquivalenceReport r = systems_equivalent(a, b);
        if (r.equivalent) return py::make_tuple(true, py::none());
        const EquivalenceWitness& w = *r.witness;
        return py::make_tuple(
            false, py::make_tuple(py::make_tuple(w.edge.from, w.edge.to),
                                  w.side == Side::kA ? "a" : "b"));
      },
      py::arg("a"), py::arg("b"),
      "Returns (equivalent, witness); witness is ((i, j), 'a' | 'b') or None.");

  m.def(
      "brute_force_max_redundant",
      [](const PrecedenceGraph& g, std::size_t limit) {
        BruteForceResult r = brute_force_max_redundant(g, limit);
        std::vector<PyEdgeList> sets;
        for (const EdgeSet& s : r.sets) sets.push_back(to_py(s));
        return std::make_tuple(r.size, sets);
      },
      py::arg("graph"), py::arg("limit") = 16);
}
