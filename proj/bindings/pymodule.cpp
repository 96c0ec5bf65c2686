#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siegel/dimension.hpp"
#include "siegel/oracle.hpp"
#include "siegel/report.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const siegel::BigInt& n) {
  const std::string s = n.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object to_py_fraction(const siegel::Rational& r) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(siegel::to_fraction_string(r));
}

siegel::QuadField parse_field(const std::string& name) {
  if (name == "gaussian") return siegel::QuadField::Gaussian;
  if (name == "eisenstein") return siegel::QuadField::Eisenstein;
  throw std::invalid_argument("field must be 'gaussian' or 'eisenstein'");
}

siegel::TableFormat parse_format(const std::string& name) {
  if (name == "plain") return siegel::TableFormat::Plain;
  if (name == "csv") return siegel::TableFormat::Csv;
  if (name == "json") return siegel::TableFormat::Json;
  if (name == "latex") return siegel::TableFormat::Latex;
  throw std::invalid_argument("format must be plain, csv, json or latex");
}

py::dict breakdown_dict(const siegel::ContributionBreakdown& b) {
  py::dict out;
  for (std::size_t t = 0; t < b.h.size(); ++t)
    out[("h" + std::to_string(t + 1)).c_str()] = to_py_fraction(b.h[t]);
  for (std::size_t t = 0; t < b.i.size(); ++t)
    out[("i" + std::to_string(t + 1)).c_str()] = to_py_fraction(b.i[t]);
  out["total"] = to_py_fraction(b.total);
  return out;
}

}  // namespace

PYBIND11_MODULE(siegeldim, m) {
  m.doc() =
      "Exact dimensions of vector-valued Siegel cusp forms of degree two "
      "for the arithmetic groups Gamma(D1, D2)";

  py::class_<siegel::Level>(m, "Level")
      .def(py::init(&siegel::make_level), py::arg("d1"), py::arg("d2"))
      .def_readonly("d1", &siegel::Level::D1)
      .def_readonly("d2", &siegel::Level::D2)
      .def_readonly("discriminant", &siegel::Level::D)
      .def_property_readonly(
          "primes", [](const siegel::Level& L) { return L.d.primes; })
      .def("__repr__", [](const siegel::Level& L) {
        return "Level(" + std::to_string(L.D1) + ", " + std::to_string(L.D2) +
               ")";
      });

  m.def(
      "dim_cusp_forms",
      [](siegel::Int k, siegel::Int j, siegel::Int d1, siegel::Int d2) {
        const siegel::Level L = siegel::make_level(d1, d2);
        const siegel::DimensionResult r = siegel::dim_cusp_forms({k, j}, L);
        py::dict out;
        out["dimension"] = to_py_int(r.dimension);
        out["validity"] =
            r.validity == siegel::Validity::Proven ? "proven" : "formal";
        if (j % 2 == 0) out["breakdown"] = breakdown_dict(r.breakdown);
        return out;
      },
      py::arg("k"), py::arg("j"), py::arg("d1"), py::arg("d2"),
      "Dimension of S_{k,j}(Gamma(d1,d2)) with validity label and per-term "
      "breakdown (breakdown omitted for odd j, where the space vanishes).");

  m.def(
      "dim",
      [](siegel::Int k, siegel::Int j, siegel::Int d1, siegel::Int d2) {
        const siegel::Level L = siegel::make_level(d1, d2);
        return to_py_int(siegel::dim_cusp_forms({k, j}, L).dimension);
      },
      py::arg("k"), py::arg("j"), py::arg("d1"), py::arg("d2"),
      "dim S_{k,j}(Gamma(d1,d2)) as a plain integer.");

  m.def(
      "intro_dim",
      [](siegel::Int k, siegel::Int p) {
        return to_py_fraction(siegel::oracle::intro_dim(k, p));
      },
      py::arg("k"), py::arg("p"),
      "Independent closed form for dim S_{k,0}(Gamma(1,2p)), p an odd "
      "prime.");

  m.def(
      "splitting_symbol",
      [](const std::string& field, siegel::Int p) {
        return siegel::splitting_symbol(parse_field(field), p);
      },
      py::arg("field"), py::arg("p"));

  m.def("legendre_symbol", &siegel::legendre_symbol, py::arg("a"),
        py::arg("p"));

  m.def(
      "bracket_eval",
      [](const std::vector<siegel::Int>& values, siegel::Int n) {
        if (values.empty())
          throw std::invalid_argument("bracket_eval: empty period");
        const siegel::Int m_ = static_cast<siegel::Int>(values.size());
        return values[static_cast<std::size_t>(((n % m_) + m_) % m_)];
      },
      py::arg("values"), py::arg("n"),
      "Periodic bracket [a0,...,a_{m-1}; m]_n = a_{n mod m}.");

  m.def(
      "render_table",
      [](siegel::Int d1, siegel::Int d2, siegel::Int k_min, siegel::Int k_max,
         siegel::Int j_min, siegel::Int j_max, const std::string& format,
         bool breakdown) {
        siegel::TableRequest req;
        req.d1 = d1;
        req.d2 = d2;
        req.k_min = k_min;
        req.k_max = k_max;
        req.j_min = j_min;
        req.j_max = j_max;
        req.format = parse_format(format);
        req.include_breakdown = breakdown;
        return siegel::render_table(req);
      },
      py::arg("d1"), py::arg("d2"), py::arg("k_min"), py::arg("k_max"),
      py::arg("j_min"), py::arg("j_max"), py::arg("format") = "csv",
      py::arg("breakdown") = false);

  m.def("verify_golden", [] { return siegel::verify_golden().size(); },
        "Number of embedded reference cells the engine fails to reproduce "
        "(0 means all 960 match).");

  m.def(
      "crosscheck_oracle",
      [](siegel::Int pmax, siegel::Int kmax) {
        return siegel::crosscheck_oracle(pmax, kmax).size();
      },
      py::arg("pmax") = 97, py::arg("kmax") = 40,
      "Number of (p, k) pairs where the engine disagrees with the closed "
      "form (0 means full agreement).");
}
