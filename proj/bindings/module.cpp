#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <kolchin/diffdim.hpp>
#include <kolchin/errors.hpp>
#include <kolchin/lattice.hpp>
#include <kolchin/macaulay.hpp>
#include <kolchin/numpoly.hpp>

namespace py = pybind11;

// cpp_int <-> python int, routed through decimal strings so values of any
// size cross the boundary exactly.
namespace pybind11::detail {

template <>
struct type_caster<kolchin::Int> {
  PYBIND11_TYPE_CASTER(kolchin::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = kolchin::Int(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const kolchin::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

int ordering_to_int(std::strong_ordering o) {
  if (o < 0) return -1;
  if (o > 0) return 1;
  return 0;
}

}  // namespace

PYBIND11_MODULE(_kolchin, m) {
  m.doc() =
      "Exact Kolchin dimension polynomials of exponent sets in N_0^m, "
      "minimizing coefficients, Macaulay constants, and the Sit order.";

  py::register_exception<kolchin::ResourceError>(m, "ResourceError");
  py::register_exception<kolchin::CrossCheckError>(m, "CrossCheckError");

  py::class_<kolchin::NumPoly>(m, "NumPoly",
                               "Numerical polynomial in the binomial basis "
                               "C(s+i, i), exact integer coefficients.")
      .def(py::init<>())
      .def(py::init<kolchin::Int>(), py::arg("constant"))
      .def(py::init<std::vector<kolchin::Int>>(), py::arg("ascending"),
           "From coefficients (a_0, ..., a_d) of C(s+i, i).")
      .def_static("from_standard", &kolchin::NumPoly::from_standard,
                  py::arg("descending"), "From the display order (a_d, ..., a_0).")
      .def_static("basis", &kolchin::NumPoly::basis, py::arg("i"),
                  "The basis element C(s+i, i).")
      .def_property_readonly("coeffs", &kolchin::NumPoly::coeffs,
                             "(a_0, ..., a_d)")
      .def_property_readonly("standard", &kolchin::NumPoly::standard,
                             "(a_d, ..., a_0)")
      .def_property_readonly("degree", &kolchin::NumPoly::degree)
      .def("is_zero", &kolchin::NumPoly::is_zero)
      .def("coeff", &kolchin::NumPoly::coeff, py::arg("i"))
      .def("__call__", &kolchin::NumPoly::operator(), py::arg("s"),
           "Exact evaluation at an integer.")
      .def("shifted", &kolchin::NumPoly::shifted, py::arg("amount"),
           "p(s) -> p(s + amount)")
      .def("difference", &kolchin::NumPoly::difference, "p(s) - p(s-1)")
      .def("scaled", &kolchin::NumPoly::scaled, py::arg("factor"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &kolchin::NumPoly::str)
      .def("__repr__",
           [](const kolchin::NumPoly& p) { return "NumPoly(" + p.str() + ")"; });

  m.def("binomial", &kolchin::binomial, py::arg("n"), py::arg("k"),
        "C(n, k) extended to every integer n via the falling factorial.");
  m.def("interpolate", &kolchin::interpolate, py::arg("base"), py::arg("values"),
        "Polynomial of degree <= len(values)-1 through (base+i, values[i]).");

  m.def(
      "minimizing_coefficients",
      [](const kolchin::NumPoly& p) { return kolchin::minimizing_coefficients(p).b; },
      py::arg("p"), "(b_d, ..., b_0)");
  m.def(
      "macaulay_constants",
      [](const kolchin::NumPoly& p) { return kolchin::macaulay_constants(p).c; },
      py::arg("p"), "(c_{d+1}, ..., c_1)");
  m.def(
      "reconstruct",
      [](const std::vector<kolchin::Int>& c) {
        return kolchin::reconstruct(kolchin::MacaulayConstants{c});
      },
      py::arg("constants"),
      "Polynomial with the given Macaulay constants (c_{d+1}, ..., c_1).");
  m.def("is_kolchin", &kolchin::is_kolchin, py::arg("p"),
        "Whether p is a Kolchin dimension polynomial (all b_i >= 0).");
  m.def("macaulay_nondecreasing", &kolchin::macaulay_nondecreasing, py::arg("p"),
        "Equivalent criterion: 0 <= c_{d+1} <= ... <= c_1.");
  m.def(
      "sit_compare",
      [](const kolchin::NumPoly& p, const kolchin::NumPoly& q) {
        return ordering_to_int(kolchin::sit_compare(p, q));
      },
      py::arg("p"), py::arg("q"),
      "Sit order: -1, 0, or 1 (lexicographic on minimizing coefficients).");

  py::class_<kolchin::ExponentSet>(m, "ExponentSet",
                                   "A finite subset of N_0^m given by rows.")
      .def(py::init<>())
      .def(py::init<std::int64_t, std::vector<kolchin::Point>>(), py::arg("m"),
           py::arg("rows"))
      .def_readonly("m", &kolchin::ExponentSet::m)
      .def_readonly("rows", &kolchin::ExponentSet::rows)
      .def(py::self == py::self)
      .def("__repr__", [](const kolchin::ExponentSet& E) {
        std::string s = "ExponentSet(m=" + std::to_string(E.m) + ", rows=[";
        for (std::size_t i = 0; i < E.rows.size(); ++i) {
          if (i) s += ", ";
          s += "(";
          for (std::size_t k = 0; k < E.rows[i].size(); ++k) {
            if (k) s += ",";
            s += std::to_string(E.rows[i][k]);
          }
          s += ")";
        }
        return s + "])";
      });

  m.def("order_of", &kolchin::order_of, py::arg("point"));
  m.def("minimal_elements", &kolchin::minimal_elements, py::arg("E"),
        "The antichain of componentwise-minimal rows.");
  m.def("colon", &kolchin::colon, py::arg("E"), py::arg("e"),
        "Rows mapped by truncated subtraction max(f - e, 0).");
  m.def("count_free_points", &kolchin::count_free_points, py::arg("E"), py::arg("s"),
        py::arg("budget") = kolchin::kDefaultBudget,
        "Number of points of order <= s dominated by no row (enumeration).");
  m.def("stabilization_bound", &kolchin::stabilization_bound, py::arg("E"),
        "Sum over coordinates of the columnwise maximum of the rows.");
  m.def(
      "dimension_polynomial",
      [](const kolchin::ExponentSet& E, std::int64_t budget) {
        return kolchin::dimension_polynomial(E, budget);
      },
      py::arg("E"), py::arg("budget") = kolchin::kDefaultBudget,
      "Kolchin dimension polynomial by verified interpolation of the count.");
  m.def("dimension_polynomial_rec", &kolchin::dimension_polynomial_rec, py::arg("E"),
        "Same polynomial by the algebraic unit-pivot decomposition.");
  m.def("dimension_polynomial_ie", &kolchin::dimension_polynomial_ie, py::arg("E"),
        "Same polynomial by inclusion-exclusion over row subsets.");

  py::class_<kolchin::DifferentialSystem>(
      m, "DifferentialSystem",
      "One exponent set of leading derivatives per differential indeterminate.")
      .def(py::init<std::int64_t, std::vector<kolchin::ExponentSet>>(), py::arg("m"),
           py::arg("sets"))
      .def_readonly("m", &kolchin::DifferentialSystem::m)
      .def_readonly("sets", &kolchin::DifferentialSystem::sets);

  m.def("system_dimension_polynomial", &kolchin::system_dimension_polynomial,
        py::arg("sys"), py::arg("budget") = kolchin::kDefaultBudget,
        "Sum of the members' Kolchin polynomials.");
  m.def("single_equation_poly", &kolchin::single_equation_poly, py::arg("m"),
        py::arg("d"), "C(s+m, m) - C(s+m-d, m)");

  py::class_<kolchin::MinimalCandidate>(m, "MinimalCandidate")
      .def_readonly("constant_macaulay", &kolchin::MinimalCandidate::constant_macaulay)
      .def_readonly("degree_matches", &kolchin::MinimalCandidate::degree_matches)
      .def_readonly("order", &kolchin::MinimalCandidate::order)
      .def("__repr__", [](const kolchin::MinimalCandidate& c) {
        std::string s = "MinimalCandidate(constant_macaulay=";
        s += c.constant_macaulay ? "True" : "False";
        s += ", degree_matches=";
        s += c.degree_matches ? "True" : "False";
        s += ", order=" + (c.order ? c.order->str() : std::string("None")) + ")";
        return s;
      });

  m.def("classify_minimal_candidate", &kolchin::classify_minimal_candidate,
        py::arg("p"), py::arg("m"),
        "Constant-Macaulay and degree facts for the single-equation criterion.");
  m.def("triangular_family", &kolchin::triangular_family, py::arg("m"),
        "Rows with 2 on the diagonal and 1 below it.");
  m.def("triangular_family_alt", &kolchin::triangular_family_alt, py::arg("m"),
        "Variant with first row (2,1,0,...,0).");
  m.def("unbounded_constants_family", &kolchin::unbounded_constants_family,
        py::arg("k"), "{(1,2), (k,1)} in N_0^2, k >= 2.");

  py::class_<kolchin::ReportRow>(m, "ReportRow")
      .def_readonly("m", &kolchin::ReportRow::m)
      .def_readonly("omega", &kolchin::ReportRow::omega)
      .def_readonly("standard", &kolchin::ReportRow::standard)
      .def_property_readonly(
          "minimizing", [](const kolchin::ReportRow& r) { return r.minimizing.b; })
      .def_property_readonly(
          "constants", [](const kolchin::ReportRow& r) { return r.constants.c; })
      .def_readonly("omega_alt", &kolchin::ReportRow::omega_alt)
      .def_readonly("identity_ok", &kolchin::ReportRow::identity_ok)
      .def_readonly("claimed_standard", &kolchin::ReportRow::claimed_standard)
      .def_readonly("claimed_minimizing", &kolchin::ReportRow::claimed_minimizing)
      .def_readonly("standard_matches_claim",
                    &kolchin::ReportRow::standard_matches_claim)
      .def_readonly("minimizing_matches_claim",
                    &kolchin::ReportRow::minimizing_matches_claim);

  m.def(
      "standard_coefficient_report",
      [](std::int64_t m_max, std::int64_t budget) {
        return kolchin::standard_coefficient_report(m_max, budget).rows;
      },
      py::arg("m_max"), py::arg("budget") = kolchin::kDefaultBudget,
      "Oracle-computed invariants of the triangular family for m = 1..m_max, "
      "with the coefficient recursion identity and claim comparisons.");

  m.attr("DEFAULT_BUDGET") = kolchin::kDefaultBudget;
}
