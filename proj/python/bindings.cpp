#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "naqcsim/oracle.hpp"
#include "naqcsim/sweep.hpp"
#include "naqcsim/verify.hpp"

namespace py = pybind11;

namespace {

using naqcsim::Complex;
using naqcsim::ComplexMatrix;
using naqcsim::DensityMatrix;

ComplexMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
    const int dim = static_cast<int>(rows.size());
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != dim)
            throw std::invalid_argument("matrix rows must form a square 2x2 or 4x4 grid");
        for (int c = 0; c < dim; ++c)
            m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

std::vector<std::vector<Complex>> matrix_to_rows(const ComplexMatrix& m) {
    std::vector<std::vector<Complex>> rows(static_cast<std::size_t>(m.dim()));
    for (int r = 0; r < m.dim(); ++r) {
        rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(m.dim()));
        for (int c = 0; c < m.dim(); ++c)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
    }
    return rows;
}

naqcsim::PauliAxis parse_axis(const std::string& token) {
    if (token == "x") return naqcsim::PauliAxis::X;
    if (token == "y") return naqcsim::PauliAxis::Y;
    if (token == "z") return naqcsim::PauliAxis::Z;
    throw std::invalid_argument("axis must be one of x, y, z");
}

py::dict result_dict(const naqcsim::NaqcResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["bound"] = r.bound;
    d["violated"] = r.violated;
    std::vector<double> lambdas;
    for (const auto& s : r.config.sharpness_chain) lambdas.push_back(s.lambda());
    d["lambdas"] = lambdas;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sequential unsharp-measurement coherence-advantage simulation";

    m.def("complementarity_bound",
          [](const std::string& measure) {
              return naqcsim::complementarity_bound(naqcsim::parse_measure(measure));
          },
          py::arg("measure"), "Violation bound of a measure: l1, relent, or skew");

    m.def("singlet",
          []() { return matrix_to_rows(naqcsim::singlet().matrix()); },
          "Two-qubit singlet density matrix as nested lists");

    m.def("naqc_value",
          [](const std::vector<std::vector<Complex>>& state, const std::string& measure,
             double alice_sharpness) {
              return naqcsim::naqc_value(DensityMatrix(matrix_from_rows(state)),
                                         naqcsim::parse_measure(measure),
                                         naqcsim::Sharpness(alice_sharpness));
          },
          py::arg("state"), py::arg("measure"), py::arg("alice_sharpness"),
          "Advantage functional of one Alice on a 4x4 state");

    m.def("sequential_naqc",
          [](const std::string& measure, const std::vector<double>& chain) {
              return result_dict(naqcsim::sequential_naqc(
                  naqcsim::singlet(),
                  naqcsim::scenario_from_lambdas(chain, naqcsim::parse_measure(measure))));
          },
          py::arg("measure"), py::arg("chain"),
          "Averaged advantage of the last Alice in a sharpness chain on the singlet");

    m.def("sequential_naqc_state",
          [](const std::vector<std::vector<Complex>>& state, const std::string& measure,
             const std::vector<double>& chain) {
              return result_dict(naqcsim::sequential_naqc(
                  DensityMatrix(matrix_from_rows(state)),
                  naqcsim::scenario_from_lambdas(chain, naqcsim::parse_measure(measure))));
          },
          py::arg("state"), py::arg("measure"), py::arg("chain"),
          "Same as sequential_naqc but on a caller-supplied 4x4 state");

    m.def("coherence",
          [](const std::vector<std::vector<Complex>>& state, const std::string& measure,
             const std::string& basis) {
              return naqcsim::coherence(DensityMatrix(matrix_from_rows(state)),
                                        naqcsim::parse_measure(measure), parse_axis(basis));
          },
          py::arg("state"), py::arg("measure"), py::arg("basis"),
          "Coherence of a 2x2 state in a Pauli eigenbasis");

    m.def("complementarity_sum",
          [](const std::vector<std::vector<Complex>>& state, const std::string& measure) {
              return naqcsim::complementarity_sum(DensityMatrix(matrix_from_rows(state)),
                                                  naqcsim::parse_measure(measure));
          },
          py::arg("state"), py::arg("measure"));

    m.def("von_neumann_entropy",
          [](const std::vector<std::vector<Complex>>& state) {
              return naqcsim::von_neumann_entropy(matrix_from_rows(state));
          },
          py::arg("state"));

    m.def("partial_trace",
          [](const std::vector<std::vector<Complex>>& state, const std::string& traced_out) {
              naqcsim::Subsystem sub;
              if (traced_out == "A" || traced_out == "a")
                  sub = naqcsim::Subsystem::A;
              else if (traced_out == "B" || traced_out == "b")
                  sub = naqcsim::Subsystem::B;
              else
                  throw std::invalid_argument("traced_out must be 'A' or 'B'");
              return matrix_to_rows(
                  naqcsim::partial_trace(DensityMatrix(matrix_from_rows(state)), sub).matrix());
          },
          py::arg("state"), py::arg("traced_out"));

    m.def("luders_nonselective",
          [](const std::vector<std::vector<Complex>>& state, const std::string& axis,
             double sharpness) {
              return matrix_to_rows(naqcsim::luders_nonselective(
                                        DensityMatrix(matrix_from_rows(state)), parse_axis(axis),
                                        naqcsim::Sharpness(sharpness))
                                        .matrix());
          },
          py::arg("state"), py::arg("axis"), py::arg("sharpness"),
          "Non-selective unsharp measurement on qubit A of a 4x4 state");

    m.def("weak_equivalents",
          [](double sharpness) {
              const auto w = naqcsim::weak_equivalents(naqcsim::Sharpness(sharpness));
              return py::make_tuple(w.quality, w.precision);
          },
          py::arg("sharpness"), "(quality F, precision G) of a sharpness value");

    m.def("random_qubit_state",
          [](std::uint64_t seed) {
              return matrix_to_rows(naqcsim::random_qubit_state(seed).matrix());
          },
          py::arg("seed"));

    m.def("threshold",
          [](const std::string& measure, const std::vector<double>& predecessors) {
              const auto m_ = naqcsim::parse_measure(measure);
              const naqcsim::DensityMatrix initial = naqcsim::singlet();
              return naqcsim::oracle::solve_threshold(
                  [&](double l) {
                      std::vector<double> chain = predecessors;
                      chain.push_back(l);
                      return naqcsim::sequential_naqc(
                                 initial, naqcsim::scenario_from_lambdas(chain, m_))
                          .value;
                  },
                  naqcsim::complementarity_bound(m_), 1e-6, 1.0);
          },
          py::arg("measure"), py::arg("predecessors") = std::vector<double>{},
          "Target-Alice sharpness threshold on the singlet, by bisection of the simulation");

    m.def("max_alices",
          [](const std::string& measure, double grid_step) {
              return naqcsim::max_alices(naqcsim::parse_measure(measure), grid_step);
          },
          py::arg("measure"), py::arg("grid_step") = 0.01);

    auto oracle = m.def_submodule("oracle", "Closed-form singlet expressions");
    oracle.def("n1_l1", &naqcsim::oracle::n1_l1, py::arg("l1"));
    oracle.def("n2_l1", &naqcsim::oracle::n2_l1, py::arg("l1"), py::arg("l2"));
    oracle.def("n3_l1", &naqcsim::oracle::n3_l1, py::arg("l1"), py::arg("l2"), py::arg("l3"));
    oracle.def("n1_e", &naqcsim::oracle::n1_e, py::arg("l1"));
    oracle.def("n2_e", &naqcsim::oracle::n2_e, py::arg("l1"), py::arg("l2"));
    oracle.def("n1_s", &naqcsim::oracle::n1_s, py::arg("l1"));
    oracle.def("n2_s", &naqcsim::oracle::n2_s, py::arg("l1"), py::arg("l2"));
    oracle.def("alice2_upper_l1", &naqcsim::oracle::alice2_upper_l1);
    oracle.def("constrained_max",
               [](const std::string& measure, int which_alice) {
                   return naqcsim::oracle::constrained_max(naqcsim::parse_measure(measure),
                                                           which_alice);
               },
               py::arg("measure"), py::arg("which_alice"));
}
