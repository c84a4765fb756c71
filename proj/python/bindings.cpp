#include "connspec/connection.hpp"
#include "connspec/deformation.hpp"
#include "connspec/errors.hpp"
#include "connspec/hodge.hpp"
#include "connspec/io.hpp"
#include "connspec/isospectral.hpp"
#include "connspec/spectra.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace connspec;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(to_string(v))); }

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    rows.append(row);
  }
  return rows;
}

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<Vertex>> simplex_lists(const Complex& c) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : c) out.push_back(s.vertices());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connection Laplacians of finite simplicial complexes";

  py::register_exception<Error>(m, "ConnspecError", PyExc_ValueError);

  py::class_<Complex>(m, "Complex")
      .def_static("from_facets", &from_facets, py::arg("facets"), py::arg("name") = "")
      .def_static("from_simplices", &from_simplices, py::arg("simplices"), py::arg("name") = "")
      .def_static("from_json", &parse_complex_json, py::arg("text"))
      .def_static("generate",
                  [](const std::string& family, std::size_t n, std::size_t d, double p, std::uint64_t seed) {
                    return generate(parse_family(family), {n, d, p}, seed);
                  },
                  py::arg("family"), py::arg("n") = 0, py::arg("d") = 0, py::arg("p") = 0.5, py::arg("seed") = 0)
      .def("__len__", &Complex::size)
      .def_property_readonly("name", &Complex::name)
      .def_property_readonly("dimension", &Complex::dimension)
      .def_property_readonly("simplices", &simplex_lists)
      .def_property_readonly("f_vector", &Complex::f_vector)
      .def("to_json", [](const Complex& c) { return complex_to_json(c).dump(); })
      .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; })
      .def("__repr__", [](const Complex& c) {
        return "<Complex " + (c.name().empty() ? std::string("?") : c.name()) + " with " + std::to_string(c.size()) +
               " simplices>";
      });

  m.def("euler_characteristic", py::overload_cast<const Complex&>(&euler_characteristic));
  m.def("wu_characteristic", [](const Complex& c, unsigned k) { return wu_characteristic(c, k); }, py::arg("complex"),
        py::arg("k"));
  m.def("connection_matrix", [](const Complex& c) { return to_py(connection_matrix(c).matrix()); });
  m.def("green_function", [](const Complex& c) { return to_py(green(connection_matrix(c)).matrix()); });
  m.def("product_connection_matrix",
        [](const Complex& a, const Complex& b) { return to_py(connection_matrix(product(a, b))); });
  m.def("eigenvalues", [](const Complex& c) { return eigenvalues_symmetric(connection_matrix(c).matrix()).eigenvalues; });
  m.def("inertia", [](const Complex& c) {
    const Inertia in = inertia(connection_matrix(c));
    return py::make_tuple(in.p, in.n, in.z);
  });
  m.def("log_energy", [](const Complex& c) { return log_energy(eigenvalues_symmetric(connection_matrix(c).matrix())); });
  m.def("characteristic_polynomial", [](const Complex& c) {
    const SpectralFingerprint fp = fingerprint(c);
    py::list out;
    for (const auto& v : fp.poly.coefficients()) out.append(to_py(v));
    return out;
  });
  m.def("betti_numbers", py::overload_cast<const Complex&>(&betti_numbers));
  m.def("is_isomorphic", [](const Complex& a, const Complex& b) { return isomorphism_check(a, b); });
  m.def("is_isospectral", &isospectral_check);
  m.def("verify_reference_pairs", [] { return to_py(verify_reference_pairs().to_json()); });
  m.def("track_branches", [](const Complex& c, std::size_t grid) { return to_py(assignment_json(c, track_branches(c, grid))); },
        py::arg("complex"), py::arg("grid_steps") = 64);

  m.attr("__version__") = CONNSPEC_VERSION;
}
