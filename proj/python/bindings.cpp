#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qkp/cli.hpp"
#include "qkp/grassmannian.hpp"
#include "qkp/verify.hpp"

namespace py = pybind11;

namespace {

using qkp::CartanType;
using qkp::KClass;
using qkp::ParabolicSubset;
using qkp::QKRing;
using json = nlohmann::ordered_json;

py::object to_py(const json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

ParabolicSubset nodes_from(const std::vector<int>& J, int rank) {
  std::vector<int> zero_based;
  for (int j : J) {
    if (j < 1 || j > rank) throw qkp::ParseError("node " + std::to_string(j) + " out of range");
    zero_based.push_back(j - 1);
  }
  return ParabolicSubset(std::move(zero_based), rank);
}

QKRing ring_for(const std::string& type, const std::vector<int>& J) {
  CartanType t = CartanType::parse(type);
  if (!(t == CartanType('A', 2)))
    throw qkp::UnsupportedError("builtin star tables exist for type A2 only");
  return QKRing::build_a2(nodes_from(J, t.rank));
}

}  // namespace

PYBIND11_MODULE(_qkp, m) {
  m.doc() = "exact quantum K-theory of flag manifolds: star products, parabolic "
            "quotients, and the localized affine-Grassmannian dictionary";

  py::register_exception<qkp::Error>(m, "QkpError", PyExc_RuntimeError);
  py::register_exception<qkp::UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
  py::register_exception<qkp::ParseError>(m, "QkpParseError", PyExc_ValueError);

  m.def(
      "root_info",
      [](const std::string& type) {
        auto rs = qkp::RootSystem::make(CartanType::parse(type));
        return to_py(qkp::root_info_doc(*rs));
      },
      py::arg("type"), "Cartan data: rank, Cartan matrix, positive roots, theta.");

  m.def(
      "weyl_length",
      [](const std::string& type, const std::string& element) {
        auto rs = qkp::RootSystem::make(CartanType::parse(type));
        qkp::Int len = qkp::parse_affine_word(rs, element).length();
        return py::module_::import("builtins").attr("int")(len.get_str());
      },
      py::arg("type"), py::arg("element"), "Affine length of a Weyl group element.");

  m.def(
      "weyl_project",
      [](const std::string& type, const std::vector<int>& J, const std::string& element) {
        auto rs = qkp::RootSystem::make(CartanType::parse(type));
        auto w = qkp::parse_affine_word(rs, element);
        return qkp::project_affine(w, nodes_from(J, rs->rank())).to_string();
      },
      py::arg("type"), py::arg("J"), py::arg("element"),
      "Parabolic projection [u t_beta]_J, returned in the element grammar.");

  m.def(
      "product",
      [](const std::string& type, const std::vector<int>& J, const std::string& lhs,
         const std::string& rhs, bool pretty) -> py::object {
        QKRing ring = ring_for(type, J);
        const auto& space = ring.space();
        int u = space->coset->rep_id(qkp::parse_finite_word(space->rs, lhs));
        int v = space->coset->rep_id(qkp::parse_finite_word(space->rs, rhs));
        KClass prod = ring.star(KClass::basis_class(space, u), KClass::basis_class(space, v));
        if (pretty) return py::cast(prod.render());
        return to_py(prod.to_json());
      },
      py::arg("type"), py::arg("J"), py::arg("lhs"), py::arg("rhs"), py::arg("pretty") = false,
      "Star product of two Schubert classes in qK_H(G/P_J).");

  m.def(
      "table",
      [](const std::string& type, const std::vector<int>& J) {
        return to_py(ring_for(type, J).table_to_json());
      },
      py::arg("type"), py::arg("J"), "Full multiplication table document.");

  m.def(
      "verify",
      [](const std::string& suite, uint64_t seed) {
        std::vector<qkp::SuiteReport> reports;
        if (suite == "golden" || suite == "all") reports.push_back(qkp::verify_golden());
        if (suite == "ring" || suite == "all") reports.push_back(qkp::verify_ring_axioms());
        if (suite == "quotient" || suite == "all")
          reports.push_back(qkp::verify_quotients(seed));
        if (reports.empty()) throw qkp::ParseError("unknown suite '" + suite + "'");
        bool ok = true;
        json doc;
        json parts = json::array();
        for (const auto& r : reports) {
          ok = ok && r.ok();
          parts.push_back(r.to_json());
        }
        doc["ok"] = ok;
        doc["suites"] = parts;
        return to_py(doc);
      },
      py::arg("suite") = "all", py::arg("seed") = 0,
      "Run verification suites (golden|ring|quotient|all).");

  m.def(
      "peterson",
      [](const std::string& type, const std::string& element, const std::string& denom,
         const std::vector<int>& J) {
        auto rs = qkp::RootSystem::make(CartanType::parse(type));
        auto w = qkp::parse_affine_word(rs, element);
        auto d = qkp::parse_affine_word(rs, denom);
        if (!d.is_translation())
          throw qkp::ParseError("denom must be a pure translation t[c1,...,cr]");
        qkp::LocalizedGrClass x(qkp::GrClass::basis_class(rs, w), {d.translation()});
        return to_py(qkp::eta_J(x, nodes_from(J, rs->rank())).to_json());
      },
      py::arg("type"), py::arg("element"), py::arg("denom"),
      py::arg("J") = std::vector<int>{},
      "Image of a localized affine-Grassmannian class under eta_J.");

  m.def(
      "translate",
      [](const std::string& type, const std::string& element, const std::string& by) {
        auto rs = qkp::RootSystem::make(CartanType::parse(type));
        auto w = qkp::parse_affine_word(rs, element);
        auto b = qkp::parse_affine_word(rs, by);
        if (!b.is_translation())
          throw qkp::ParseError("by must be a pure translation t[c1,...,cr]");
        auto image =
            qkp::pontryagin_translate(qkp::GrClass::basis_class(rs, w), b.translation());
        json terms = json::array();
        for (const auto& [elt, coeff] : image.sorted_terms())
          terms.push_back(json{{"coeff", coeff.render()}, {"affine", elt.to_string()}});
        return to_py(json{{"terms", terms}});
      },
      py::arg("type"), py::arg("element"), py::arg("by"),
      "Pontryagin product with a translation class.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = qkp::cli_run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line interface in process; returns (code, out, err).");
}
