#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "singspec/error.hpp"
#include "singspec/parser.hpp"
#include "singspec/report.hpp"
#include "singspec/spectrum.hpp"

namespace py = pybind11;
using namespace singspec;

namespace {

// Rationals cross the boundary as "u/v" strings; the Python layer turns
// them into fractions.Fraction.
std::vector<std::pair<std::string, std::int64_t>> terms_of(const FracPoly& f) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& [e, c] : f.terms()) out.emplace_back(e.str(), c);
  return out;
}

WeightVector weights_of(const std::vector<std::string>& ws) {
  std::vector<Rational> out;
  for (const auto& w : ws) out.push_back(Rational::parse(w));
  return WeightVector(out);
}

std::string sp_report(const std::string& poly, const std::vector<std::string>& vars,
                      const std::optional<std::vector<std::string>>& weights) {
  std::optional<WeightVector> w;
  if (weights) w = weights_of(*weights);
  Report r{"sp", run_sp(poly, vars, w), std::nullopt, std::nullopt};
  return r.to_json();
}

std::string nearby_report(const std::string& model_json, const std::string& variant,
                          std::optional<std::int64_t> dim) {
  Report r{"nearby", std::nullopt, run_nearby(parse_model(model_json), "<memory>", variant, dim), std::nullopt};
  return r.to_json();
}

std::string check_report() {
  Report r{"check", std::nullopt, std::nullopt, run_check()};
  return r.to_json();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectra of weighted-homogeneous singularities";

  // Owned by the module for the life of the interpreter.
  static PyObject* error_type = PyErr_NewException("singspec._core.SingspecError", PyExc_ValueError, nullptr);
  m.attr("SingspecError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(std::string(e.kind()) + ": " + e.what());
      exc.attr("kind") = py::str(e.kind());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def("sp_report", &sp_report, py::arg("polynomial"), py::arg("variables"), py::arg("weights") = py::none());
  m.def("nearby_report", &nearby_report, py::arg("model_json"), py::arg("variant") = "total",
        py::arg("dim") = py::none());
  m.def("check_report", &check_report);
  m.def("infer_weights", [](const std::string& poly, const std::vector<std::string>& vars) {
    const WeightVector w = infer_weights(parse_polynomial(poly, vars));
    std::vector<std::string> out;
    for (const auto& wi : w) out.push_back(wi.str());
    return out;
  });
  m.def("sp_product_formula",
        [](const std::vector<std::string>& ws) { return terms_of(sp_product_formula(weights_of(ws))); });
  m.def("fixture_model", [](const std::string& name) {
    if (name == "i2") return fixture_i2_model();
    if (name == "cusp") return fixture_cusp_model();
    throw OutOfRange("unknown fixture '" + name + "'");
  });
}
