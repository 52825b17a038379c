#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metafix/braid.hpp"
#include "metafix/endomorphism.hpp"
#include "metafix/error.hpp"
#include "metafix/fixpoint.hpp"
#include "metafix/fox.hpp"
#include "metafix/report.hpp"

namespace py = pybind11;
using namespace metafix;

namespace {

std::vector<std::vector<std::string>> strings(const LaMatrix& m) { return m.to_strings(); }

std::vector<std::string> strings(const PolyVector& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fixed points of IA-endomorphisms of free metabelian groups (C++ core)";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<DimensionError>(m, "DimensionError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def_static("parse", &LaurentPoly::parse, py::arg("text"), py::arg("nvars"))
      .def_property_readonly("nvars", &LaurentPoly::nvars)
      .def("is_zero", &LaurentPoly::is_zero)
      .def("is_unit", &LaurentPoly::is_unit)
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__neg__", [](const LaurentPoly& a) { return -a; })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; });

  py::class_<Word>(m, "Word")
      .def_static("parse", &Word::parse, py::arg("text"), py::arg("rank"))
      .def_property_readonly("rank", &Word::rank)
      .def("__len__", &Word::length)
      .def("inverse", &Word::inverse)
      .def("exponent_sums", &Word::exponent_sums)
      .def("__mul__", [](const Word& a, const Word& b) { return a * b; })
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__str__", &Word::to_string)
      .def("__repr__", [](const Word& w) { return "Word('" + w.to_string() + "')"; });

  py::class_<Endomorphism>(m, "Endomorphism")
      .def(py::init<std::vector<Word>>(), py::arg("images"))
      .def_static("parse", &Endomorphism::parse, py::arg("text"))
      .def_static("identity", &Endomorphism::identity, py::arg("rank"))
      .def_property_readonly("rank", &Endomorphism::rank)
      .def_property_readonly("images", &Endomorphism::images)
      .def("apply", &Endomorphism::apply)
      .def("is_ia", &Endomorphism::is_ia)
      .def("__str__", &Endomorphism::to_string);

  py::class_<BraidWord>(m, "BraidWord")
      .def_static("parse", &BraidWord::parse, py::arg("text"), py::arg("strands"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def("__len__", &BraidWord::length)
      .def("__mul__", [](const BraidWord& a, const BraidWord& b) { return a * b; })
      .def("inverse", &BraidWord::inverse)
      .def("automorphism", &braid_to_automorphism)
      .def("__str__", &BraidWord::to_string);

  m.def("compose", &compose, py::arg("phi"), py::arg("psi"), "x -> phi(psi(x))");
  m.def("fox_gradient", [](const Word& w) { return strings(fox_gradient(w)); });
  m.def("jacobian", [](const Endomorphism& phi) { return strings(jacobian_abel(phi)); });
  m.def("det_JmI", [](const Endomorphism& phi) {
    return det(jacobian_abel(phi) - LaMatrix::identity(phi.rank(), phi.rank())).to_string();
  });
  m.def("rank_JmI",
        [](const Endomorphism& phi) { return rank(jacobian_abel(phi) - LaMatrix::identity(phi.rank(), phi.rank())); });
  m.def("magnus", [](const Word& w) {
    MagnusElement e = magnus_of_word(w);
    return py::make_tuple(e.abelian(), strings(e.coords()));
  });
  m.def("is_trivial", &is_trivial_in_M, py::arg("word"), "The word is trivial in the free metabelian group");
  m.def("verify_fixed", &verify_fixed, py::arg("phi"), py::arg("g"));
  m.def("normality_check", &normality_check, py::arg("phi"), py::arg("g"));
  m.def("detect_fixed_in_Mprime", &detect_fixed_in_Mprime, py::arg("phi"));
  m.def(
      "detect_fixed_in_coset",
      [](const Endomorphism& phi, const std::vector<int>& a, bool verify) {
        CosetResult c = detect_fixed_in_coset(phi, a, verify);
        return py::make_tuple(std::string(to_string(c.status)), c.witness);
      },
      py::arg("phi"), py::arg("a"), py::arg("verify") = true);
  m.def("gassner_unreduced", [](const BraidWord& b) { return strings(gassner_unreduced(b)); });
  m.def("gassner_reduced", [](const BraidWord& b) { return strings(gassner_reduced(b)); });
  m.def("alexander_vanishes", &alexander_vanishes);

  m.def(
      "analyze_json",
      [](const Endomorphism& phi, int bound, bool verify) { return to_json(analyze(phi, {bound, verify})).dump(); },
      py::arg("phi"), py::arg("bound") = 2, py::arg("verify") = true);
  m.def(
      "analyze_braid_json",
      [](const BraidWord& b, int bound, bool verify) { return to_json(analyze_braid(b, {bound, verify})).dump(); },
      py::arg("braid"), py::arg("bound") = 2, py::arg("verify") = true);
  m.def(
      "reload_json", [](const std::string& s) { return to_json(report_from_json(nlohmann::json::parse(s))).dump(); },
      "Parses a report, re-verifying its witnesses, and serializes it again");
  m.def(
      "selftest",
      [](std::uint64_t seed, std::size_t rounds) {
        std::vector<py::tuple> out;
        for (const auto& c : run_selftest(seed, rounds)) out.push_back(py::make_tuple(c.name, c.cases, c.failures));
        return out;
      },
      py::arg("seed"), py::arg("rounds") = 20);
}
