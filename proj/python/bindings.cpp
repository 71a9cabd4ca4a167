// Copyright 2026 The topolayout Authors.
//
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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <string>
#include <vector>

#include "topolayout/error.hpp"
#include "topolayout/pipeline.hpp"

namespace py = pybind11;
using namespace topolayout;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

PointSet to_point_set(const DoubleArray& array) {
  const auto info = array.request();
  if (info.ndim != 2) throw py::value_error("points must be a 2-D array of shape (n, d)");
  const auto n = static_cast<std::size_t>(info.shape[0]);
  const auto d = static_cast<std::size_t>(info.shape[1]);
  const auto* data = static_cast<const double*>(info.ptr);
  return PointSet(n, d, std::vector<double>(data, data + n * d));
}

py::array_t<double> coords_array(const std::vector<Point2>& coords) {
  py::array_t<double> out({static_cast<py::ssize_t>(coords.size()), py::ssize_t{2}});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    view(i, 0) = coords[i].x;
    view(i, 1) = coords[i].y;
  }
  return out;
}

PersistenceDiagram to_diagram(const DoubleArray& array) {
  const auto info = array.request();
  if (info.ndim != 2 || (info.shape[0] > 0 && info.shape[1] != 2)) {
    throw py::value_error("diagrams must be arrays of shape (k, 2)");
  }
  PersistenceDiagram d;
  auto view = array.unchecked<2>();
  for (py::ssize_t i = 0; i < info.shape[0]; ++i) d.pairs.push_back({view(i, 0), view(i, 1)});
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of topolayout";

  static py::exception<Error> error_type(m, "TopolayoutError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error_type.ptr(),
                      py::make_tuple(py::str(e.what()), kind).ptr());
    }
  });

  py::class_<SpanningTree>(m, "SpanningTree")
      .def_readonly("n", &SpanningTree::n)
      .def_readonly("total_weight", &SpanningTree::total_weight)
      .def_readonly("bridge_edges", &SpanningTree::bridge_edges)
      .def_property_readonly("l_max", &SpanningTree::max_edge_weight)
      .def_property_readonly("edges",
                             [](const SpanningTree& t) {
                               std::vector<std::tuple<PointId, PointId, double>> out;
                               out.reserve(t.edges.size());
                               for (const auto& e : t.edges) out.emplace_back(e.u, e.v, e.w);
                               return out;
                             })
      .def("to_text", &tree_to_text)
      .def("to_json", [](const SpanningTree& t) { return dump(tree_to_json(t)); })
      .def_static("parse", [](const std::string& text) { return parse_tree(text); });

  py::class_<Hierarchy>(m, "Hierarchy")
      .def_property_readonly("eta", [](const Hierarchy& h) { return h.simplified.eta; })
      .def_property_readonly("components_of_interest",
                             [](const Hierarchy& h) { return h.simplified.components_of_interest; })
      .def("members", [](const Hierarchy& h, NodeId id) { return h.tree.members(id); })
      .def("to_json", [](const Hierarchy& h) { return dump(hierarchy_to_json(h)); });

  m.def(
      "exact_emst",
      [](const DoubleArray& points) {
        PointSet ps = to_point_set(points);
        py::gil_scoped_release release;
        return exact_emst(ps);
      },
      py::arg("points"));

  m.def(
      "amst",
      [](const DoubleArray& points, double alpha, std::size_t R, std::size_t L,
         std::size_t passes, std::uint64_t seed) {
        PointSet ps = to_point_set(points);
        VamanaParams params;
        params.alpha = alpha;
        params.R = R;
        params.L = L;
        params.passes = passes;
        params.seed = seed;
        py::gil_scoped_release release;
        return amst(ps, params);
      },
      py::arg("points"), py::arg("alpha") = 1.3, py::arg("R") = 100, py::arg("L") = 100,
      py::arg("passes") = 2, py::arg("seed") = 0);

  m.def("resolve_eta", &resolve_eta, py::arg("eta"), py::arg("n"));

  m.def(
      "hierarchy",
      [](const SpanningTree& tree, std::size_t eta) { return build_hierarchy(tree, eta); },
      py::arg("tree"), py::arg("eta"));

  m.def(
      "project",
      [](const SpanningTree& tree, const Hierarchy& hierarchy,
         std::optional<std::vector<NodeId>> selected, double c, double alpha_max) {
        ScalingParams params;
        params.c = c;
        params.alpha_max = alpha_max;
        params.validate();
        const Projection p =
            selected ? project(tree, hierarchy, *selected, params)
                     : project_all(tree, hierarchy, params);
        return py::make_tuple(coords_array(p.layout.coords), dump(projection_to_json(p)));
      },
      py::arg("tree"), py::arg("hierarchy"), py::arg("selected") = py::none(),
      py::arg("c") = 2.0, py::arg("alpha_max") = std::numeric_limits<double>::infinity());

  m.def(
      "metrics_report",
      [](const SpanningTree& approx, const SpanningTree& exact, double order, bool normalized,
         const std::string& ground) {
        MetricsOptions options;
        options.order = order;
        options.normalized = normalized;
        options.ground = parse_ground_metric(ground);
        return dump(metrics_report(approx, exact, options));
      },
      py::arg("approx"), py::arg("exact"), py::arg("order") = 1.0,
      py::arg("normalized") = false, py::arg("ground_metric") = "linf");

  m.def(
      "bottleneck_distance",
      [](const DoubleArray& a, const DoubleArray& b, const std::string& ground) {
        return bottleneck_distance(to_diagram(a), to_diagram(b), parse_ground_metric(ground));
      },
      py::arg("a"), py::arg("b"), py::arg("ground_metric") = "linf");

  m.def(
      "wasserstein_distance",
      [](const DoubleArray& a, const DoubleArray& b, double order, const std::string& ground) {
        return wasserstein_distance(to_diagram(a), to_diagram(b), order,
                                    parse_ground_metric(ground));
      },
      py::arg("a"), py::arg("b"), py::arg("order") = 1.0, py::arg("ground_metric") = "linf");
}
