// Copyright 2026 The qmatch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmatch/classifier.hpp"
#include "qmatch/harness.hpp"
#include "qmatch/io.hpp"
#include "qmatch/learning.hpp"
#include "qmatch/universal.hpp"
#include "qmatch/verify.hpp"

namespace py = pybind11;
using namespace qmatch;

namespace {

py::list pom_elements(const POM &pom) {
    py::list out;
    for (const auto &e : pom.elements()) {
        py::dict d;
        d["label"] = e.label;
        d["guess"] = e.guess ? py::cast(*e.guess) : py::none();
        d["matrix"] = e.op.matrix();
        out.append(d);
    }
    return out;
}

py::object optional_float(const std::optional<double> &v) {
    return v ? py::cast(*v) : py::none();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum template matching: score operators, optimal POMs and simulations";

    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def("r_n", &r_n, py::arg("n_inputs"));
    m.def("score_operator_w",
          [](int n, double g) { return score_operator_w(n, g).matrix(); }, py::arg("n_inputs"),
          py::arg("g"));
    m.def("delta_w",
          [](int n, double big, double small) { return delta_w(n, big, small).matrix(); },
          py::arg("n_inputs"), py::arg("big_theta"), py::arg("small_theta"));
    m.def("classifier_pom",
          [](int n, double theta) { return pom_elements(classifier_pom(ClassifierSpec(n, theta))); },
          py::arg("n_inputs"), py::arg("theta"));
    m.def("classifier_expected_score", &classifier_expected_score, py::arg("n_inputs"),
          py::arg("g1"), py::arg("g2"), py::arg("theta"));

    m.def("learning_score_operator",
          [](int n, int k, double theta) { return learning_score_operator(n, k, theta).matrix(); },
          py::arg("n_inputs"), py::arg("k_copies"), py::arg("theta"));
    m.def("learning_pom",
          [](const std::string &kind, std::size_t grid) {
              return pom_elements(make_learning_strategy(parse_learning_kind(kind), grid).pom);
          },
          py::arg("kind") = "discrete_three", py::arg("grid_points") = 64);
    m.def("learning_strategy_score",
          [](const std::string &kind, int n) {
              return strategy_score(make_learning_strategy(parse_learning_kind(kind)), n);
          },
          py::arg("kind"), py::arg("n_inputs"));
    m.def("semiclassical_max_score", &semiclassical_max_score, py::arg("n_inputs"));

    m.def("score_operator_wi",
          [](int n, int k, int i) { return score_operator_wi({n, k}, i).matrix(); },
          py::arg("n_inputs"), py::arg("k_copies"), py::arg("class_index"));
    m.def("universal_pom",
          [](int n, int k) {
              return pom_elements(k == 1 ? universal_pom_k1(n)
                                         : universal_solver_numeric({n, k}).pom);
          },
          py::arg("n_inputs"), py::arg("k_copies") = 1);
    m.def("universal_score_analytic", &universal_score_analytic, py::arg("n_inputs"));
    m.def("universal_score_numeric",
          [](int n, int k) { return universal_solver_numeric({n, k}).score; },
          py::arg("n_inputs"), py::arg("k_copies"));

    m.def("baseline_k_infinity", &baseline_k_infinity, py::arg("n_inputs"));
    m.def("minimum_quadrature_points", &minimum_quadrature_points, py::arg("n_inputs"),
          py::arg("k_copies"));
    m.def("quadrature_w_of_g",
          [](int n, double g, std::size_t points) {
              return quadrature_w_of_g(n, g, {points}).matrix();
          },
          py::arg("n_inputs"), py::arg("g"), py::arg("points_per_angle"));

    m.def("score_curve",
          [](int n_min, int n_max, int k) {
              py::list out;
              for (const auto &r : score_curve(n_min, n_max, k)) {
                  py::dict d;
                  d["N"] = r.n_inputs;
                  d["K"] = r.k_copies;
                  d["semiclassical"] = optional_float(r.semiclassical);
                  d["universal"] = optional_float(r.universal);
                  d["universal_is_numeric"] = r.universal_is_numeric;
                  d["baseline_k_infinity"] = r.baseline_k_infinity;
                  out.append(d);
              }
              return out;
          },
          py::arg("n_min"), py::arg("n_max"), py::arg("k_copies") = 1);

    m.def("simulate",
          [](int n, int k, const std::string &strategy, std::uint64_t samples, std::uint64_t seed,
             bool with_quadrature, unsigned workers) {
              const SimulationConfig config{n, k, SimulationStrategy::parse(strategy), samples, seed};
              ScoreReport r;
              {
                  py::gil_scoped_release release;
                  r = simulate(config, {workers, with_quadrature});
              }
              py::dict d;
              d["N"] = n;
              d["K"] = k;
              d["strategy"] = config.strategy.name();
              d["samples"] = samples;
              d["seed"] = seed;
              d["analytic"] = optional_float(r.analytic);
              d["quadrature"] = optional_float(r.quadrature);
              d["mc_mean"] = r.monte_carlo_mean;
              d["mc_stderr"] = r.monte_carlo_stderr;
              return d;
          },
          py::arg("n_inputs"), py::arg("k_copies") = 1, py::arg("strategy") = "universal",
          py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("with_quadrature") = true,
          py::arg("workers") = 0);

    m.def("verify",
          [](const std::string &suite) {
              py::list out;
              for (const auto &c : run_suite(parse_verify_suite(suite))) {
                  py::dict d;
                  d["name"] = c.name;
                  d["passed"] = c.passed;
                  d["residual"] = c.residual;
                  d["tolerance"] = c.tolerance;
                  out.append(d);
              }
              return out;
          },
          py::arg("suite"));

    m.def("pom_json",
          [](const std::string &which, int n, int k, double theta, const std::string &kind,
             std::size_t grid) { return pom_to_json(make_pom_dump(which, n, k, theta, kind, grid)); },
          py::arg("which"), py::arg("n_inputs") = 1, py::arg("k_copies") = 1, py::arg("theta") = 0.0,
          py::arg("learning_kind") = "discrete_three", py::arg("grid_points") = 64);
    m.def("pom_roundtrip",
          [](const std::string &text) { return pom_to_json(pom_from_json(text)); },
          py::arg("json_text"), "Parse a POM dump and serialize it again.");
}
