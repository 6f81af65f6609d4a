// Copyright 2026 The cgplab Authors
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


#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "cgplab/cgp.hpp"
#include "cgplab/channel.hpp"
#include "cgplab/coherence.hpp"
#include "cgplab/diffgeo.hpp"
#include "cgplab/errors.hpp"
#include "cgplab/grassmann.hpp"
#include "cgplab/mori.hpp"
#include "cgplab/qubit.hpp"
#include "cgplab/random.hpp"

namespace py = pybind11;
using namespace cgplab;

namespace {

Mori basis_or_computational(const std::optional<Mori>& b, std::size_t d) {
  return b ? *b : computational_mori(d);
}

KrausChannel make_channel(const std::vector<ComplexMatrix>& kraus) {
  return KrausChannel(kraus);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coherence generating power and MASA geometry";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init([](double structural, double equality) {
             Tolerance t{structural, equality};
             t.validate();
             return t;
           }),
           py::arg("structural") = 1e-10, py::arg("equality") = 1e-12)
      .def_readonly("structural", &Tolerance::structural)
      .def_readonly("equality", &Tolerance::equality);

  py::class_<Mori>(m, "Mori")
      .def(py::init<ComplexMatrix, const Tolerance&>(), py::arg("frame"),
           py::arg("tol") = Tolerance{})
      .def_static("computational", &computational_mori, py::arg("dim"))
      .def_static("from_hermitian", &mori_from_hermitian, py::arg("h"), py::arg("gap_tol") = 1e-8,
                  py::arg("tol") = Tolerance{})
      .def_property_readonly("dim", &Mori::dim)
      .def_property_readonly("frame", &Mori::frame)
      .def("projector", &Mori::projector, py::arg("i"))
      .def("canonical", [](const Mori& b) { return canonical_form(b); })
      .def("rotated", [](const Mori& b, const ComplexMatrix& u) { return rotate_mori(u, b); },
           py::arg("u"))
      .def("__repr__", [](const Mori& b) { return "<Mori dim=" + std::to_string(b.dim()) + ">"; });

  m.def("equal_as_masa", &equal_as_masa, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-8);
  m.def("product_mori", &product_mori, py::arg("a"), py::arg("b"));

  m.def("coherence",
        [](const ComplexMatrix& rho, const std::optional<Mori>& b) {
          return coherence(rho, basis_or_computational(b, static_cast<std::size_t>(rho.rows())));
        },
        py::arg("rho"), py::arg("basis") = py::none());

  m.def("cgp_unitary",
        [](const ComplexMatrix& u, const std::optional<Mori>& b) {
          return cgp_unitary(u, basis_or_computational(b, static_cast<std::size_t>(u.rows())));
        },
        py::arg("u"), py::arg("basis") = py::none());
  m.def("cgp_channel",
        [](const std::vector<ComplexMatrix>& kraus, const std::optional<Mori>& b) {
          const KrausChannel t = make_channel(kraus);
          Diagnostics diag;
          const double value = cgp_unital(t, basis_or_computational(b, t.dim()), {}, &diag);
          return py::make_tuple(value, diag.warnings);
        },
        py::arg("kraus"), py::arg("basis") = py::none(),
        "Returns (value, warnings).");
  m.def("estimate_cgp",
        [](const ComplexMatrix& u, const std::optional<Mori>& b, std::size_t n,
           std::uint64_t seed, std::size_t workers) {
          CgpEstimate e;
          {
            py::gil_scoped_release release;
            e = estimate_cgp(u, basis_or_computational(b, static_cast<std::size_t>(u.rows())), n,
                             seed, workers);
          }
          return py::dict(py::arg("mean") = e.mean, py::arg("stderr") = e.std_error,
                          py::arg("samples") = e.samples, py::arg("seed") = e.seed,
                          py::arg("workers") = e.workers);
        },
        py::arg("u"), py::arg("basis") = py::none(), py::arg("samples") = 10000,
        py::arg("seed") = 0, py::arg("workers") = 1);

  m.def("masa_distance",
        [](const Mori& a, const Mori& b, const std::string& method) {
          if (method == "closed") return masa_distance(a, b);
          if (method == "superop") return masa_distance_superop(a, b);
          if (method == "commutator") return masa_distance_commutator(a, b);
          throw InputError("usage", "method must be closed, superop or commutator");
        },
        py::arg("a"), py::arg("b"), py::arg("method") = "closed");
  m.def("overlap_matrix",
        [](const Mori& a, const Mori& b) { return overlap_matrix(a, b).entries(); },
        py::arg("a"), py::arg("b"));
  m.def("abs_det_overlap",
        [](const Mori& a, const Mori& b) { return abs_det_overlap(overlap_matrix(a, b)); },
        py::arg("a"), py::arg("b"));
  m.def("dfs_distance", &dfs_distance, py::arg("a"), py::arg("b"));
  m.def("phi",
        [](const ComplexMatrix& u, const std::optional<Mori>& b) {
          return phi_measure(u, basis_or_computational(b, static_cast<std::size_t>(u.rows())));
        },
        py::arg("u"), py::arg("basis") = py::none());

  m.def("haar_unitary", py::overload_cast<std::size_t, std::uint64_t>(&haar_unitary),
        py::arg("dim"), py::arg("seed"));
  m.def("fourier_unitary", &fourier_unitary, py::arg("dim"));

  m.def("qubit_distance",
        [](const std::array<double, 3>& n, const std::array<double, 3>& k) {
          return qubit_distance(BlochVector(n[0], n[1], n[2]), BlochVector(k[0], k[1], k[2]));
        },
        py::arg("n"), py::arg("m"));
  m.def("qubit_cgp", &qubit_cgp, py::arg("theta"));
  m.def("qubit_dfs", &qubit_dfs, py::arg("psi"));
  m.def("qubit_unitary", &qubit_unitary, py::arg("theta"), py::arg("phi"));

  py::class_<MetricSample>(m, "MetricSample")
      .def_readonly("t", &MetricSample::t)
      .def_readonly("chi", &MetricSample::chi)
      .def_readonly("speed", &MetricSample::speed)
      .def_readonly("fs_speed", &MetricSample::fs_speed);

  m.def("metric_speed",
        [](std::size_t dim, const HamiltonianPath::Generator& h, double t_min, double t_max,
           double t, double step) {
          return metric_speed(HamiltonianPath(dim, h, t_min, t_max), t, step);
        },
        py::arg("dim"), py::arg("hamiltonian"), py::arg("t_min"), py::arg("t_max"), py::arg("t"),
        py::arg("h") = 1e-4,
        "Susceptibilities and speeds of the eigenbasis of hamiltonian(t).");
}
