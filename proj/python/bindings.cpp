#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "szegedy/circuit.hpp"
#include "szegedy/circuit_io.hpp"
#include "szegedy/errors.hpp"
#include "szegedy/markov.hpp"
#include "szegedy/oracle.hpp"
#include "szegedy/pagerank.hpp"
#include "szegedy/simulator.hpp"
#include "szegedy/synth.hpp"
#include "szegedy/walk_spec.hpp"

namespace py = pybind11;
using namespace szegedy;

namespace {

TransitionMatrix as_transition(const Eigen::MatrixXd& m) {
  return TransitionMatrix::from_dense(m);
}

// Accepts a JSON string or anything json.dumps can serialize.
WalkSpec as_spec(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return parse_walk_spec(spec.cast<std::string>());
  const py::object dumps = py::module_::import("json").attr("dumps");
  return parse_walk_spec(dumps(spec).cast<std::string>());
}

py::dict report_dict(const VerifyReport& r) {
  py::dict d;
  d["max_deviation"] = r.max_deviation;
  d["leakage"] = r.leakage;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.passed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_szegedy, m) {
  m.doc() = "Szegedy quantum-walk circuit synthesis, verification and quantum PageRank";

  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<SynthesisError>(m, "SynthesisError", invalid.ptr());
  py::register_exception<LeakageError>(m, "LeakageError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  // Markov chains, returned as dense left-stochastic arrays.
  m.def("cycle_graph", [](std::size_t n) { return cycle_graph(n).dense(); }, py::arg("n"));
  m.def("complete_graph", [](std::size_t n) { return complete_graph(n).dense(); },
        py::arg("n"));
  m.def("complete_bipartite",
        [](std::size_t n1, std::size_t n2) { return complete_bipartite(n1, n2).dense(); },
        py::arg("n1"), py::arg("n2"));
  m.def("crown_graph", [](std::size_t n) { return crown_graph(n).dense(); }, py::arg("n"));
  m.def("win_cycles",
        [](std::size_t n1, std::size_t n2) { return win_cycles(n1, n2).dense(); },
        py::arg("n1"), py::arg("n2"));
  m.def("wheel_graph",
        [](std::size_t n_outer, bool directed) {
          return wheel_graph(n_outer, directed).dense();
        },
        py::arg("n_outer"), py::arg("directed") = false,
        "0/1 connectivity matrix; C[i, j] = 1 for a link j -> i.");
  m.def("directed_example8", [] { return directed_example8().dense(); });
  m.def("google_matrix",
        [](const Eigen::MatrixXd& c, double alpha) {
          return google_matrix(ConnectivityMatrix::from_dense(c), alpha).dense();
        },
        py::arg("connectivity"), py::arg("alpha") = 0.85);
  m.def("tensor",
        [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
          return tensor(as_transition(a), as_transition(b)).dense();
        },
        py::arg("p1"), py::arg("p2"));

  // Dense oracle.
  m.def("walk_operator",
        [](const Eigen::MatrixXd& p) { return walk_operator(as_transition(p)).matrix; },
        py::arg("p"), "S (2 Pi - I) on the N^2-dimensional space, index i * N + j.");
  m.def("column_state",
        [](const Eigen::MatrixXd& p, std::size_t i) {
          return column_state(as_transition(p), i);
        },
        py::arg("p"), py::arg("i"));

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("width", &Circuit::width)
      .def("__len__", &Circuit::size)
      .def("gate_count",
           [](const Circuit& c) {
             const GateCount g = gate_count(c);
             py::dict d;
             d["total"] = g.total;
             d["decomposed"] = g.decomposed_estimate;
             return d;
           })
      .def("to_text", [](const Circuit& c) { return to_text(c); })
      .def("to_qasm", [](const Circuit& c) { return to_qasm(c); })
      .def("inverse", [](const Circuit& c) { return dagger(c); })
      .def("unitary", [](const Circuit& c) { return unitary_of(c); })
      .def(
          "apply",
          [](const Circuit& c, const Eigen::VectorXcd& state) {
            std::vector<Amplitude> amps(state.data(), state.data() + state.size());
            const StateVector out =
                apply(c, StateVector::from_amplitudes(c.width(), std::move(amps)));
            const auto a = out.amplitudes();
            return Eigen::VectorXcd(
                Eigen::Map<const Eigen::VectorXcd>(a.data(), static_cast<Eigen::Index>(a.size())));
          },
          py::arg("state"))
      .def_static("from_text", [](const std::string& text) { return parse_circuit(text); },
                  py::arg("text"))
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit width=" + std::to_string(c.width()) +
               " gates=" + std::to_string(c.size()) + ">";
      });

  // Synthesis.
  m.def("synthesize", [](const py::object& spec) { return synthesize(as_spec(spec)); },
        py::arg("spec"), "Walk circuit for a JSON walk spec (str or dict).");
  m.def("spec_matrix",
        [](const py::object& spec) { return transition_matrix(as_spec(spec)).dense(); },
        py::arg("spec"));
  m.def("synth_cycle", [](int n) { return synth_circulant(CirculantGraph::Cycle, n); },
        py::arg("n"), "C_{2^n}.");
  m.def("synth_complete", [](int n) { return synth_circulant(CirculantGraph::Complete, n); },
        py::arg("n"), "K_{2^n}.");
  m.def("synth_k2", &synth_k2);
  m.def("synth_crown", &synth_crown, py::arg("n"));
  m.def("synth_bipartite", &synth_bipartite, py::arg("n1"), py::arg("n2"));
  m.def("synth_win_cycles", &synth_win_cycles, py::arg("n1"), py::arg("n2"));
  m.def("synth_wheel", &synth_wheel, py::arg("m"), py::arg("directed") = false,
        py::arg("alpha") = 0.85);
  m.def("synth_directed8", &synth_directed8, py::arg("alpha") = 0.85);
  m.def("synth_equal_columns",
        [](const Eigen::MatrixXd& p) { return synth_equal_columns(as_transition(p)); },
        py::arg("p"));
  m.def(
      "state_prep",
      [](const std::vector<double>& target, std::uint64_t basis) {
        return state_prep(target, basis).circuit;
      },
      py::arg("target"), py::arg("basis") = 0,
      "Circuit K with K|basis> = sum_k target[k] |k>.");

  m.def(
      "verify",
      [](const Circuit& c, const Eigen::MatrixXd& p, double tol) {
        return report_dict(verify(c, as_transition(p), tol));
      },
      py::arg("circuit"), py::arg("p"), py::arg("tolerance") = kDefaultVerifyTolerance);

  m.def(
      "pagerank",
      [](const Circuit& c, const Eigen::MatrixXd& p, std::size_t steps) {
        const PagerankSeries s = run_pagerank(c, as_transition(p), steps);
        return py::make_tuple(s.instantaneous, s.average);
      },
      py::arg("circuit"), py::arg("p"), py::arg("steps") = kDefaultPagerankSteps,
      "Returns (Q, average): Q[t, j] after t + 1 double steps, average over t.");
}
