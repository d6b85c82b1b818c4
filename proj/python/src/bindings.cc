// Copyright 2026 The qsearch Authors
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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsearch/closed_form.h"
#include "qsearch/errors.h"
#include "qsearch/experiments.h"
#include "qsearch/hybrid.h"
#include "qsearch/oracle.h"
#include "qsearch/search.h"
#include "qsearch/state_vector.h"

namespace py = pybind11;
using namespace qsearch;

namespace {

py::object to_python(const nlohmann::ordered_json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::array_t<Amplitude> amplitudes_of(const StateVector &state) {
    auto amps = state.amplitudes();
    py::array_t<Amplitude> out(static_cast<py::ssize_t>(amps.size()));
    std::copy(amps.begin(), amps.end(), out.mutable_data());
    return out;
}

py::dict run_result_dict(const RunResult &r) {
    py::dict d;
    d["found_index"] = r.found_index;
    d["is_solution"] = r.is_solution;
    d["oracle_calls"] = r.oracle_calls;
    d["classical_checks"] = r.classical_checks;
    d["branch"] = std::string(branch_name(r.branch));
    d["q_used"] = r.q_used;
    d["seed"] = r.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector simulation of multi-match quantum search";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PolicyError>(m, "PolicyError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<StateVector>(m, "StateVector")
        .def_static("zero", &StateVector::zero, py::arg("num_qubits"))
        .def_static(
            "from_amplitudes",
            [](std::vector<Amplitude> amps) { return StateVector::from_amplitudes(std::move(amps)); },
            py::arg("amplitudes"))
        .def_property_readonly("num_qubits", &StateVector::num_qubits)
        .def("__len__", &StateVector::size)
        .def("amplitudes", &amplitudes_of)
        .def("apply_x", &StateVector::apply_x, py::arg("qubit"), py::return_value_policy::reference_internal)
        .def("apply_hadamard", &StateVector::apply_hadamard, py::arg("qubit"),
             py::return_value_policy::reference_internal)
        .def(
            "apply_controlled_not",
            [](StateVector &s, std::vector<std::size_t> controls, std::size_t target) -> StateVector & {
                return s.apply_controlled_not(controls, target);
            },
            py::arg("controls"), py::arg("target"), py::return_value_policy::reference_internal)
        .def("append_qubit", &StateVector::append_qubit, py::return_value_policy::reference_internal)
        .def("diffusion", [](StateVector &s, std::size_t m) -> StateVector & { return diffusion(s, m); },
             py::arg("over_qubits"), py::return_value_policy::reference_internal)
        .def("marginal_probabilities", &StateVector::marginal_probabilities, py::arg("first_n"))
        .def("norm_squared", &StateVector::norm_squared);

    py::class_<OracleSpec>(m, "OracleSpec")
        .def(py::init<std::size_t, std::vector<uint64_t>>(), py::arg("n"), py::arg("marked"))
        .def_property_readonly("n", &OracleSpec::n)
        .def_property_readonly("size", &OracleSpec::size)
        .def_property_readonly("num_marked", &OracleSpec::num_marked)
        .def_property_readonly("marked",
                               [](const OracleSpec &o) {
                                   auto span = o.marked();
                                   return std::vector<uint64_t>(span.begin(), span.end());
                               })
        .def("evaluate", &OracleSpec::evaluate, py::arg("i"))
        .def("__repr__", [](const OracleSpec &o) {
            return "OracleSpec(n=" + std::to_string(o.n()) + ", num_marked=" + std::to_string(o.num_marked()) + ")";
        });
    m.def("parse_marked_spec", &parse_marked_spec, py::arg("text"), py::arg("n"));
    m.def("random_oracle", &random_oracle, py::arg("n"), py::arg("num_marked"), py::arg("seed"));

    py::class_<PreparedSearchState>(m, "PreparedSearchState")
        .def_property_readonly("n", [](const PreparedSearchState &p) { return p.n; })
        .def_property_readonly("q_applied", [](const PreparedSearchState &p) { return p.q_applied; })
        .def_property_readonly("branch", [](const PreparedSearchState &p) { return std::string(branch_name(p.branch)); })
        .def_property_readonly("oracle_calls", [](const PreparedSearchState &p) { return p.oracle.superposed_calls(); })
        .def_property_readonly("num_qubits", [](const PreparedSearchState &p) { return p.state.num_qubits(); })
        .def("amplitudes", [](const PreparedSearchState &p) { return amplitudes_of(p.state); })
        .def("success_probability", [](const PreparedSearchState &p) { return success_probability(p); })
        .def(
            "run",
            [](PreparedSearchState &p, uint64_t seed) {
                Rng rng(seed);
                return run_result_dict(run_and_verify(p, rng));
            },
            py::arg("seed"));

    m.def("younes_once", [](const OracleSpec &spec) { return younes_once(CountingOracle(spec)); }, py::arg("oracle"));
    m.def("younes_iterated", [](const OracleSpec &spec, std::size_t q) { return younes_iterated(CountingOracle(spec), q); },
          py::arg("oracle"), py::arg("q"));
    m.def("grover", [](const OracleSpec &spec, std::size_t q) { return grover(CountingOracle(spec), q); },
          py::arg("oracle"), py::arg("q"));

    m.def(
        "hybrid_search",
        [](const OracleSpec &spec, std::optional<uint64_t> known_m, std::size_t younes_q, std::size_t verify_retries,
           uint64_t seed) {
            HybridPolicy policy;
            policy.known_m = known_m;
            policy.younes_q = younes_q;
            policy.verify_retries = verify_retries;
            CountingOracle oracle(spec);
            Rng rng(seed);
            return run_result_dict(search(oracle, policy, rng));
        },
        py::arg("oracle"), py::arg("known_m") = py::none(), py::arg("younes_q") = 3, py::arg("verify_retries") = 3,
        py::arg("seed") = 0);
    m.def("dispatch_known", [](uint64_t N, uint64_t M) { return std::string(branch_name(dispatch_known(N, M))); },
          py::arg("N"), py::arg("M"));
    m.def("grover_iteration_count", &grover_iteration_count, py::arg("N"), py::arg("M"));

    m.def("p_success_once", &p_success_once, py::arg("N"), py::arg("M"));
    m.def("p_success_once_ratio", &p_success_once_ratio, py::arg("ratio"));
    m.def("p_success_iterated", &p_success_iterated, py::arg("N"), py::arg("M"), py::arg("q"));
    m.def("p_success_iterated_ratio", &p_success_iterated_ratio, py::arg("ratio"), py::arg("q"));
    m.def("p_grover", &p_grover, py::arg("N"), py::arg("M"), py::arg("q"));
    m.def("p_grover_ratio", &p_grover_ratio, py::arg("ratio"), py::arg("q"));
    m.def("b0_closed", &b0_closed, py::arg("N"), py::arg("M"), py::arg("q"));
    m.def(
        "amplitude_ladder",
        [](uint64_t N, uint64_t M, std::size_t q) {
            auto l = amplitude_ladder(N, M, q);
            py::dict d;
            d["a"] = l.a_list;
            d["b"] = l.b_list;
            d["means"] = l.mean_history;
            d["success_probability"] = l.success_probability();
            return d;
        },
        py::arg("N"), py::arg("M"), py::arg("q"));
    m.def("average_p_once", &average_p_once, py::arg("N"));
    m.def("average_p_classical", &average_p_classical, py::arg("N"));
    m.def("average_p_grover", &average_p_grover, py::arg("N"), py::arg("q"));
    m.def("grover_sum_identity", &grover_sum_identity, py::arg("N"), py::arg("k"));
    m.def("iterations_lower_bound", &iterations_lower_bound, py::arg("N"), py::arg("M"), py::arg("target_p"));
    m.def("exact_iterations", &exact_iterations, py::arg("N"), py::arg("M"), py::arg("target_p"));
    m.def("coverage_fraction", &coverage_fraction, py::arg("q"), py::arg("threshold_p") = 0.5);
    m.def(
        "min_p_over_upper_range",
        [](std::size_t q) {
            auto r = min_p_over_upper_range(q);
            return py::make_tuple(r.ratio, r.probability);
        },
        py::arg("q"));

    m.def(
        "table1",
        [](std::size_t n_max, bool simulate) {
            py::list rows;
            for (const auto &r : table1(n_max, simulate)) {
                py::dict d;
                d["n"] = r.n;
                d["N"] = r.N;
                d["max_p"] = r.max_p;
                d["min_p"] = r.min_p;
                d["avg_p"] = r.avg_p;
                d["avg_alt_closed_form"] = r.avg_alt_closed_form;
                if (simulate) {
                    d["sim_max_p"] = *r.sim_max_p;
                    d["sim_min_p"] = *r.sim_min_p;
                    d["sim_avg_p"] = *r.sim_avg_p;
                }
                rows.append(d);
            }
            return rows;
        },
        py::arg("n_max") = 6, py::arg("simulate") = false);
    m.def(
        "sweep",
        [](int figure, std::size_t points) {
            auto t = sweep(figure, points);
            py::dict d;
            d["columns"] = t.columns;
            d["rows"] = t.rows;
            return d;
        },
        py::arg("figure"), py::arg("points"));
    m.def(
        "simulate",
        [](std::string_view algorithm, std::size_t n, std::string marked, uint64_t seed, uint64_t shots,
           std::optional<std::size_t> q) {
            ExperimentConfig config;
            config.algorithm = parse_algorithm(algorithm);
            config.n = n;
            config.marked_spec = std::move(marked);
            config.seed = seed;
            config.shots = shots;
            config.q = q;
            SimulationReport report;
            {
                py::gil_scoped_release release;
                report = simulate(config);
            }
            return to_python(report.to_json());
        },
        py::arg("algorithm"), py::arg("n"), py::arg("marked"), py::arg("seed"), py::arg("shots"),
        py::arg("q") = py::none());
    m.def(
        "hybrid_bench",
        [](std::size_t n, std::string marked, bool known_m, uint64_t seed, uint64_t shots) {
            ExperimentConfig config;
            config.n = n;
            config.marked_spec = std::move(marked);
            config.seed = seed;
            config.shots = shots;
            HybridReport report;
            {
                py::gil_scoped_release release;
                report = hybrid_bench(config, known_m);
            }
            return to_python(report.to_json());
        },
        py::arg("n"), py::arg("marked"), py::arg("known_m") = false, py::arg("seed") = 0, py::arg("shots") = 1);
    m.def(
        "predict",
        [](std::string_view model, std::size_t n, std::optional<uint64_t> mm, std::optional<std::size_t> q) {
            return to_python(predict(model, n, mm, q));
        },
        py::arg("model"), py::arg("n"), py::arg("m") = py::none(), py::arg("q") = py::none());
}
