// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csalg/document.hpp"
#include "csalg/maps.hpp"
#include "csalg/pipeline.hpp"
#include "csalg/structure.hpp"

namespace py = pybind11;
using namespace csalg;

namespace {

py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

py::list to_py(const Vec& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const std::vector<Vec>& rows) {
  py::list out;
  for (const auto& r : rows) out.append(to_py(r));
  return out;
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

Vec vec_from_py(const py::sequence& s) {
  Vec v;
  for (const auto& x : s) v.push_back(from_py(x));
  return v;
}

LinearMap map_from_py(const py::sequence& rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) r.push_back(vec_from_py(row.cast<py::sequence>()));
  return LinearMap(Mat::from_rows(r, r.size()));
}

py::dict verification_to_py(const VerificationReport& v) {
  py::dict d;
  d["verdict"] = to_string(v.verdict);
  py::dict checks, spaces, facts;
  for (const auto& c : v.checks) checks[py::str(c.name)] = c.met;
  for (const auto& [k, n] : v.spaces) spaces[py::str(k)] = n;
  for (const auto& [k, b] : v.facts) facts[py::str(k)] = b;
  d["checks"] = checks;
  d["spaces"] = spaces;
  d["facts"] = facts;
  return d;
}

py::tuple pair_to_py(const PairCheck& c) {
  if (c.holds) return py::make_tuple(true, py::none());
  return py::make_tuple(false, py::make_tuple(to_py(c.witness->first.coeffs), to_py(c.witness->second.coeffs)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on finite-dimensional associative algebras";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<AssociativityError>(m, "AssociativityError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def(py::init<std::vector<std::vector<std::size_t>>, std::size_t>(), py::arg("cayley"), py::arg("identity"))
      .def_static("cyclic", &FiniteGroup::cyclic)
      .def_static("dihedral", &FiniteGroup::dihedral)
      .def_static("symmetric", &FiniteGroup::symmetric)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul);

  py::class_<FinAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &FinAlgebra::dim)
      .def_property_readonly("name", &FinAlgebra::name)
      .def_property_readonly("labels", [](const FinAlgebra& a) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.label(i));
        return out;
      })
      .def_property_readonly("is_unital", &FinAlgebra::is_unital)
      .def_property_readonly("is_commutative", &FinAlgebra::is_commutative)
      .def("multiply", [](const FinAlgebra& a, const py::sequence& x, const py::sequence& y) {
        return to_py(a.multiply(vec_from_py(x), vec_from_py(y)));
      })
      .def("to_document", &serialize_algebra)
      .def("__repr__", [](const FinAlgebra& a) {
        return "<Algebra " + a.name() + " dim=" + std::to_string(a.dim()) + ">";
      });

  m.def("matrix_algebra", &build_matrix_algebra, py::arg("n"));
  m.def("group_algebra", &build_group_algebra, py::arg("group"), py::arg("name") = "QG");
  m.def("upper_triangular", &build_upper_triangular, py::arg("n"));
  m.def("direct_product", &direct_product);
  m.def("tensor_product", &tensor_product);
  m.def("adjoin_unit", &adjoin_unit);
  m.def("parse_algebra", [](const std::string& text) { return parse_algebra_document(text); });

  m.def("commutator_subspace", [](const FinAlgebra& a) { return to_py(commutator_subspace(a).basis()); });
  m.def("center", [](const FinAlgebra& a) { return to_py(center(a).basis()); });
  m.def("radical", [](const FinAlgebra& a) { return to_py(radical(a).basis()); });
  m.def("is_semiprime", &is_semiprime);
  m.def("is_commutator_simple", [](const FinAlgebra& a) -> py::tuple {
    const auto r = is_commutator_simple(a);
    if (r.simple) return py::make_tuple(true, py::none());
    return py::make_tuple(false, to_py(r.witness->ideal.basis()));
  });
  m.def("trace_space_dim", [](const FinAlgebra& a) { return trace_functional_space(a).size(); });
  m.def("has_nondegenerate_trace", [](const FinAlgebra& a, std::uint64_t seed, std::size_t trials) {
    const auto r = has_nondegenerate_trace(a, seed, trials);
    switch (r.outcome) {
      case TraceSearch::Outcome::Found: return std::string("found");
      case TraceSearch::Outcome::DefiniteNegative: return std::string("definite-negative");
      case TraceSearch::Outcome::Inconclusive: break;
    }
    return std::string("inconclusive");
  }, py::arg("a"), py::arg("seed") = 0, py::arg("trials") = 20);

  m.def("derivation_dims", [](const FinAlgebra& a) {
    py::dict d;
    d["derivation"] = derivation_space(a).dim();
    d["inner"] = inner_derivation_space(a).dim();
    d["jordan"] = jordan_derivation_space(a).dim();
    d["hypothesis"] = theorem31_hypothesis_space(a).dim();
    return d;
  });
  m.def("verify_theorem31", [](const FinAlgebra& a) { return verification_to_py(verify_theorem31(a)); });
  m.def("verify_theorem41", [](const FinAlgebra& a, const py::sequence& t) {
    return verification_to_py(verify_theorem41(a, map_from_py(t)));
  });
  m.def("transpose_map", [](std::size_t n) { return to_py(LinearMap::transpose_on_matrices(n).matrix.row_list()); });
  m.def("jordan_homomorphism_check", [](const FinAlgebra& a, const py::sequence& t) {
    return pair_to_py(jordan_homomorphism_check(a, map_from_py(t)));
  });
  m.def("multiplicativity_check", [](const FinAlgebra& a, const py::sequence& t, const std::string& mode) {
    if (mode != "homomorphism" && mode != "antihomomorphism") throw UsageError("mode must be homomorphism or antihomomorphism");
    return pair_to_py(multiplicativity_check(
        a, map_from_py(t), mode == "homomorphism" ? Multiplicativity::Homomorphism : Multiplicativity::Antihomomorphism));
  });
  m.def("cubic_condition_check", [](const FinAlgebra& a, const py::sequence& t) {
    return cubic_condition_check(a, map_from_py(t)).holds;
  });
  m.def("local_derivation_test", [](const FinAlgebra& a, const py::sequence& d, std::uint64_t seed,
                                       std::size_t samples) -> py::tuple {
    const auto r = local_derivation_test(a, map_from_py(d), seed, samples);
    if (r.pass) return py::make_tuple(true, py::none());
    return py::make_tuple(false, to_py(r.counterexample->coeffs));
  });

  m.def("run_pipeline", [](const std::string& command, const std::map<std::string, std::string>& options,
                           const std::string& format) -> py::tuple {
    const Report r = run_pipeline(command, options);
    if (command == "gen") return py::make_tuple(*r.document, static_cast<int>(r.status));
    return py::make_tuple(emit_report(r, format == "structured" ? ReportFormat::Structured : ReportFormat::Text),
                          static_cast<int>(r.status));
  }, py::arg("command"), py::arg("options"), py::arg("format") = "text");
}
