#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qaseries/errors.hpp"
#include "qaseries/expr.hpp"
#include "qaseries/io.hpp"
#include "qaseries/local_ring.hpp"
#include "qaseries/pipelines.hpp"
#include "qaseries/series.hpp"
#include "qaseries/weierstrass.hpp"

namespace py = pybind11;
using namespace qaseries;

namespace {

py::object to_fraction(const Coeff& c) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object builtins_int = py::module_::import("builtins").attr("int");
  return fraction(builtins_int(c.get_num().get_str()),
                  builtins_int(c.get_den().get_str()));
}

py::dict coefficients(const Series& s) {
  py::dict out;
  for (const auto& [e, c] : s.terms()) {
    py::tuple key(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
    out[key] = to_fraction(c);
  }
  return out;
}

std::vector<unsigned> expo_list(const Expo& e) {
  return {e.values().begin(), e.values().end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact truncated formal power series: Weierstrass division and "
            "preparation, implicit functions, even/odd decomposition, "
            "holomorphic extension.";

  static py::exception<Error> base_error(m, "Error");
  static py::exception<PreconditionError> precondition_error(
      m, "PreconditionError", base_error.ptr());
  static py::exception<InvariantError> invariant_error(m, "InvariantError",
                                                       base_error.ptr());
  static py::exception<ParseError> parse_error(m, "ParseError",
                                               base_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const PreconditionError& e) {
      precondition_error(e.what());
    } catch (const InvariantError& e) {
      invariant_error(e.what());
    } catch (const Error& e) {
      base_error(e.what());
    }
  });

  py::class_<Series>(m, "Series")
      .def(py::init([](const std::string& expr, std::size_t nvars,
                       unsigned trunc) { return parse_series(expr, nvars, trunc); }),
           py::arg("expr"), py::arg("nvars"), py::arg("trunc"))
      .def_static("from_json",
                  [](const std::string& text) {
                    return series_from_json(nlohmann::json::parse(text));
                  })
      .def_property_readonly("nvars", &Series::nvars)
      .def_property_readonly("trunc", &Series::trunc)
      .def_property_readonly("guaranteed_degree", &Series::guaranteed_degree)
      .def("coefficients", &coefficients)
      .def("is_zero", &Series::is_zero)
      .def("vanishes_to", &Series::vanishes_to)
      .def("to_json", [](const Series& s) { return to_json(s).dump(); })
      .def("__add__", [](const Series& a, const Series& b) { return add(a, b); })
      .def("__sub__", [](const Series& a, const Series& b) { return subtract(a, b); })
      .def("__mul__", [](const Series& a, const Series& b) { return mul(a, b); })
      .def("__neg__", [](const Series& a) { return negate(a); })
      .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
      .def("__str__", [](const Series& s) { return to_string(s); })
      .def("__repr__", [](const Series& s) {
        return "Series('" + to_string(s) + "', nvars=" +
               std::to_string(s.nvars()) + ", trunc=" +
               std::to_string(s.trunc()) + ")";
      });

  m.def("agree_to_degree", &agree_to_degree);
  m.def("invert_unit", &invert_unit);
  m.def("compose", [](const Series& f, const std::vector<Series>& gs) {
    return compose(f, gs);
  });
  m.def("partial_derivative", &partial_derivative);
  m.def("order_in_variable", [](const Series& f, std::size_t k) -> py::object {
    const Order o = order_in_variable(f, k);
    if (o.is_flat()) return py::none();
    return py::int_(o.value());
  }, "Order of f in x_k, or None when FLAT.");
  m.def("substitute_square", &substitute_square);

  py::class_<DistinguishedPoly>(m, "DistinguishedPoly")
      .def_readonly("d", &DistinguishedPoly::d)
      .def_readonly("k", &DistinguishedPoly::k)
      .def_readonly("coeffs", &DistinguishedPoly::coeffs)
      .def("coeff_embedded", &DistinguishedPoly::coeff_embedded)
      .def("expand", [](const DistinguishedPoly& p) { return expand(p); });
  py::class_<DivisionResult>(m, "DivisionResult")
      .def_readonly("quotient", &DivisionResult::quotient)
      .def_readonly("remainder", &DivisionResult::remainder)
      .def_readonly("d", &DivisionResult::d)
      .def_readonly("guaranteed_degree", &DivisionResult::guaranteed_degree);
  py::class_<PreparationResult>(m, "PreparationResult")
      .def_readonly("unit", &PreparationResult::unit)
      .def_readonly("poly", &PreparationResult::poly)
      .def_readonly("guaranteed_degree", &PreparationResult::guaranteed_degree);

  m.def("weierstrass_divide", &weierstrass_divide, py::arg("g"), py::arg("f"),
        py::arg("k"));
  m.def("weierstrass_prepare", &weierstrass_prepare, py::arg("f"), py::arg("k"));

  m.def("implicit_solve", &implicit_solve);
  m.def("monomial_divide", &monomial_divide);
  m.def("even_odd_split", [](const Series& f, std::size_t k) {
    auto parts = even_odd_split(f, k);
    return py::make_tuple(parts.even, parts.odd);
  });
  m.def("halve_exponents", &halve_exponents);

  py::class_<LemmaResult>(m, "LemmaResult")
      .def_readonly("f0", &LemmaResult::f0)
      .def_readonly("f1", &LemmaResult::f1)
      .def_readonly("guaranteed_degree", &LemmaResult::guaranteed_degree);
  py::class_<HoloPair>(m, "HoloPair")
      .def_readonly("u", &HoloPair::u)
      .def_readonly("v", &HoloPair::v)
      .def_readonly("guaranteed_degree", &HoloPair::guaranteed_degree);
  py::class_<CauchyRiemannResidual>(m, "CauchyRiemannResidual")
      .def_readonly("residual1", &CauchyRiemannResidual::du_dx1_minus_dv_dx2)
      .def_readonly("residual2", &CauchyRiemannResidual::du_dx2_plus_dv_dx1)
      .def_readonly("checked_to", &CauchyRiemannResidual::checked_to)
      .def_readonly("passes", &CauchyRiemannResidual::passes);

  m.def("lemma_split", &lemma_split, py::arg("f"), py::arg("k"));
  m.def("normalize_h", [](const Series& h) {
    auto n = normalize_h(h);
    return py::make_tuple(n.normalized, n.correction);
  });
  m.def("holomorphic_extension",
        py::overload_cast<const Series&>(&holomorphic_extension));
  m.def("direct_complexification", &direct_complexification);
  m.def("cauchy_riemann_check", &cauchy_riemann_check);
  m.def("semigroup_check", [](const Series& f, std::size_t k) {
    const PreparationResult prep = weierstrass_prepare(f, k);
    const SemigroupReport report =
        semigroup_check(prep.poly, f, prep.guaranteed_degree);
    py::list rows;
    for (const auto& entry : report.checked) {
      std::vector<std::vector<unsigned>> witness;
      for (const auto& w : entry.witness) witness.push_back(expo_list(w));
      rows.append(py::make_tuple(expo_list(entry.target), entry.member, witness));
    }
    return rows;
  }, "Prepare f in x_k and report (target, member, witness) for supp(P).");
}
