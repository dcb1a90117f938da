#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "kcontact/forms.hpp"
#include "kcontact/lie_algebra.hpp"
#include "kcontact/metric.hpp"

namespace kcontact {

/// An algebra file: structure constants plus named forms and metrics.
///
/// JSON layout:
///   {"name": "heisenberg3", "field": "real", "dim": 3,
///    "basis": ["e1", "e2", "e3"],
///    "brackets": [{"i": 0, "j": 1, "terms": [[2, "1"]]}],
///    "forms": {"eta": ["0", "0", "1"], "omega": [[0, 1, "1"]]},
///    "metrics": {"g": {"diag": ["1/2", "1/2", "1"]}}}
/// Coefficients are "p/q" or "p/q,r/s" (complex). A metric may also be a
/// full matrix of coefficient strings.
struct Document {
  LieAlgebra algebra;
  std::map<std::string, AlternatingForm> forms;
  std::map<std::string, ExactMetric> metrics;

  const AlternatingForm& form(const std::string& name) const;
  const ExactMetric& metric(const std::string& name) const;
};

/// Parses and validates; Jacobi failures name the first violating triple.
/// Errors are InputError with kinds "syntax", "schema", "parse", "index",
/// "jacobi", "metric", ...
Document parse_document(const std::string& text, bool check_jacobi_identity = true);

Document load_document(const std::filesystem::path& path);

/// Canonical text: reduced coefficients, nonzero terms only, two-space
/// indentation, trailing newline.
std::string serialize_document(const Document& doc);

/// Skew matrix input for the normal form: a JSON array of rows (or
/// {"matrix": rows}); entries are JSON numbers or rational strings.
Matrix<double> parse_float_matrix(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace kcontact
