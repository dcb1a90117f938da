#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kcontact/catalog.hpp"
#include "kcontact/cli.hpp"
#include "kcontact/errors.hpp"
#include "kcontact/extension.hpp"

namespace py = pybind11;
using namespace kcontact;

namespace {

std::vector<std::string> strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_kcontact, m) {
  m.doc() = "Exact contact and K-contact analysis of Lie algebras";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI invocation; returns (exit_code, stdout, stderr).");

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });

  m.def(
      "contact_check",
      [](const std::string& source, const std::string& form) {
        const Document doc = resolve_document(source);
        const ContactVerdict v = is_contact(doc.algebra, doc.form(form));
        return py::make_tuple(v.contact, v.top_coefficient.str());
      },
      py::arg("source"), py::arg("form") = "eta",
      "(is_contact, top coefficient) for a file path or catalog name.");

  m.def(
      "reeb",
      [](const std::string& source, const std::string& form) {
        const Document doc = resolve_document(source);
        return strings(reeb(doc.algebra, doc.form(form)));
      },
      py::arg("source"), py::arg("form") = "eta");

  m.def(
      "is_kcontact",
      [](const std::string& source, const std::string& form, const std::string& metric) {
        const Document doc = resolve_document(source);
        const ContactStructure C = contact_structure(doc.algebra, doc.form(form));
        if (metric.empty()) return is_kcontact(C, construct_associated_metric(C));
        return is_kcontact(C, doc.metric(metric));
      },
      py::arg("source"), py::arg("form") = "eta", py::arg("metric") = "",
      "Empty metric name means the constructed associated metric.");

  m.def(
      "round_trip",
      [](const std::string& source, const std::string& omega) {
        const Document doc = resolve_document(source);
        return round_trip(make_symplectic(doc.algebra, doc.form(omega)));
      },
      py::arg("source"), py::arg("omega") = "omega");

  m.def(
      "skew_normal_form",
      [](const std::vector<std::vector<double>>& rows) {
        Matrix<double> b = Matrix<double>::from_rows(rows);
        const SkewNormalForm nf = skew_normal_form(b);
        std::vector<std::vector<double>> q;
        for (std::size_t i = 0; i < nf.q.rows(); ++i) q.push_back(nf.q.row(i));
        return py::make_tuple(nf.blocks, q, nf.zero_count);
      },
      py::arg("matrix"), "(blocks, Q rows, zero count) with Q B Q^T in block form.");
}
