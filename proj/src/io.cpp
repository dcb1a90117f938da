#include "kcontact/io.hpp"

#include <fstream>
#include <sstream>

#include "json_io.hpp"
#include "kcontact/errors.hpp"

namespace kcontact {

using json = nlohmann::ordered_json;

const AlternatingForm& Document::form(const std::string& name) const {
  auto it = forms.find(name);
  if (it == forms.end()) throw InputError("no form named '" + name + "'", "missing-form");
  return it->second;
}

const ExactMetric& Document::metric(const std::string& name) const {
  auto it = metrics.find(name);
  if (it == metrics.end()) throw InputError("no metric named '" + name + "'", "missing-metric");
  return it->second;
}

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what, "schema");
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(where, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::size_t index_at(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer index");
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= dim) {
    throw InputError(where + ": index " + std::to_string(i) + " out of range for dim " +
                         std::to_string(dim),
                     "index");
  }
  return static_cast<std::size_t>(i);
}

Scalar coefficient_at(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) schema_error(where, "expected a coefficient string \"p/q\" or \"p/q,r/s\"");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what(), e.kind());
  }
}

std::string path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

AlternatingForm parse_form(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array()) schema_error(where, "a form is an array");
  const bool two_form = v.empty() || v.front().is_array();
  if (!two_form) {
    if (v.size() != dim) {
      throw InputError(where + ": 1-form has " + std::to_string(v.size()) +
                           " coefficients, expected " + std::to_string(dim),
                       "dimension");
    }
    Vector c;
    for (std::size_t k = 0; k < dim; ++k) c.push_back(coefficient_at(v[k], path(where, k)));
    return AlternatingForm::from_covector(c);
  }
  AlternatingForm f(dim, 2);
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string w = path(where, t);
    const json& term = v[t];
    if (!term.is_array() || term.size() != 3) schema_error(w, "2-form terms are [i, j, coefficient]");
    const std::size_t i = index_at(term[0], dim, path(w, 0));
    const std::size_t j = index_at(term[1], dim, path(w, 1));
    if (i >= j) throw InputError(w + ": 2-form terms need i < j", "index");
    if (f.terms().count({i, j})) throw InputError(w + ": duplicate term", "duplicate");
    const Scalar c = coefficient_at(term[2], path(w, 2));
    if (!c.is_zero()) f.add_term({i, j}, c);
  }
  return f;
}

ExactMetric parse_metric(const json& v, std::size_t dim, const std::string& where) {
  ExactMetric g{Matrix<Scalar>(dim, dim)};
  if (v.is_object()) {
    const json& d = member(v, "diag", where);
    if (!d.is_array() || d.size() != dim) schema_error(where + ".diag", "expected " + std::to_string(dim) + " entries");
    std::vector<Scalar> diag;
    for (std::size_t k = 0; k < dim; ++k) diag.push_back(coefficient_at(d[k], path(where + ".diag", k)));
    g = diagonal_metric(diag);
  } else if (v.is_array()) {
    if (v.size() != dim) schema_error(where, "expected " + std::to_string(dim) + " rows");
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string w = path(where, i);
      if (!v[i].is_array() || v[i].size() != dim) schema_error(w, "expected " + std::to_string(dim) + " entries");
      for (std::size_t j = 0; j < dim; ++j) g.gram(i, j) = coefficient_at(v[i][j], path(w, j));
    }
  } else {
    schema_error(where, "a metric is {\"diag\": [...]} or a matrix");
  }
  try {
    check_metric(dim, g);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what(), e.kind());
  }
  return g;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col),
                     "syntax");
  }
}

json coefficients(const Vector& v) { return vector_json(v); }

}  // namespace

ordered_json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

ordered_json form_json(const AlternatingForm& f) {
  if (f.degree() == 1) return vector_json(f.covector());
  if (f.degree() != 2) {
    throw InputError("form has degree " + std::to_string(f.degree()) + "; files hold 1- and 2-forms",
                     "degree");
  }
  json terms = json::array();
  for (const auto& [idx, c] : f.terms()) terms.push_back(json::array({idx[0], idx[1], c.str()}));
  return terms;
}

Document parse_document(const std::string& text, bool check_jacobi_identity) {
  const json root = parse_json(text);
  if (!root.is_object()) schema_error("document", "expected a JSON object");

  const json& name = member(root, "name", "document");
  if (!name.is_string()) schema_error("name", "expected a string");
  const json& field_j = member(root, "field", "document");
  Field field;
  if (field_j == "real") {
    field = Field::real;
  } else if (field_j == "complex") {
    field = Field::complex;
  } else {
    schema_error("field", "expected \"real\" or \"complex\"");
  }
  const json& dim_j = member(root, "dim", "document");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1 || dim_j.get<long long>() > 64) {
    schema_error("dim", "expected an integer between 1 and 64");
  }
  const auto dim = dim_j.get<std::size_t>();

  std::vector<std::string> labels;
  if (root.contains("basis")) {
    const json& b = root["basis"];
    if (!b.is_array() || b.size() != dim) schema_error("basis", "expected " + std::to_string(dim) + " labels");
    for (std::size_t k = 0; k < dim; ++k) {
      if (!b[k].is_string()) schema_error(path("basis", k), "expected a string");
      labels.push_back(b[k].get<std::string>());
    }
  }

  std::vector<BracketEntry> brackets;
  if (root.contains("brackets")) {
    const json& bs = root["brackets"];
    if (!bs.is_array()) schema_error("brackets", "expected an array");
    for (std::size_t t = 0; t < bs.size(); ++t) {
      const std::string w = path("brackets", t);
      const std::size_t i = index_at(member(bs[t], "i", w), dim, w + ".i");
      const std::size_t j = index_at(member(bs[t], "j", w), dim, w + ".j");
      if (i >= j) throw InputError(w + ": brackets are listed with i < j", "index");
      Vector image(dim, Scalar(0));
      const json& terms = member(bs[t], "terms", w);
      if (!terms.is_array()) schema_error(w + ".terms", "expected an array");
      for (std::size_t s = 0; s < terms.size(); ++s) {
        const std::string ws = path(w + ".terms", s);
        if (!terms[s].is_array() || terms[s].size() != 2) schema_error(ws, "terms are [k, coefficient]");
        const std::size_t k = index_at(terms[s][0], dim, path(ws, 0));
        image[k] += coefficient_at(terms[s][1], path(ws, 1));
      }
      brackets.push_back({i, j, std::move(image)});
    }
  }

  Document doc{LieAlgebra(name.get<std::string>(), field, dim, labels, std::move(brackets)), {}, {}};
  if (check_jacobi_identity) {
    const auto bad = check_jacobi(doc.algebra);
    if (!bad.empty()) {
      const auto& t = bad.front();
      throw InputError("Jacobi identity fails for basis triple (" + std::to_string(t[0]) + "," +
                           std::to_string(t[1]) + "," + std::to_string(t[2]) + ")",
                       "jacobi");
    }
  }

  if (root.contains("forms")) {
    const json& fs = root["forms"];
    if (!fs.is_object()) schema_error("forms", "expected an object");
    for (const auto& [key, value] : fs.items()) {
      AlternatingForm f = parse_form(value, dim, "forms." + key);
      if (field == Field::real && !f.is_real()) {
        throw InputError("forms." + key + ": complex coefficient in a real algebra", "field");
      }
      doc.forms.emplace(key, std::move(f));
    }
  }
  if (root.contains("metrics")) {
    const json& ms = root["metrics"];
    if (!ms.is_object()) schema_error("metrics", "expected an object");
    for (const auto& [key, value] : ms.items()) doc.metrics.emplace(key, parse_metric(value, dim, "metrics." + key));
  }
  return doc;
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read '" + p.string() + "'", "file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write '" + p.string() + "'", "file");
  out << text;
  if (!out) throw InputError("write to '" + p.string() + "' failed", "file");
}

Document load_document(const std::filesystem::path& p) {
  const std::string text = read_text_file(p);
  try {
    return parse_document(text);
  } catch (const InputError& e) {
    throw InputError(p.string() + ": " + e.what(), e.kind());
  }
}

ordered_json document_json(const Document& doc) {
  const LieAlgebra& L = doc.algebra;
  json root;
  root["name"] = L.name();
  root["field"] = to_string(L.field());
  root["dim"] = L.dim();
  root["basis"] = L.labels();
  json bs = json::array();
  for (const auto& b : L.nonzero_brackets()) {
    json terms = json::array();
    for (std::size_t k = 0; k < b.image.size(); ++k)
      if (!b.image[k].is_zero()) terms.push_back(json::array({k, b.image[k].str()}));
    bs.push_back(json{{"i", b.i}, {"j", b.j}, {"terms", std::move(terms)}});
  }
  root["brackets"] = std::move(bs);
  json fs = json::object();
  for (const auto& [name, f] : doc.forms) fs[name] = form_json(f);
  root["forms"] = std::move(fs);
  json ms = json::object();
  for (const auto& [name, g] : doc.metrics) {
    bool diagonal = true;
    for (std::size_t i = 0; i < g.gram.rows(); ++i)
      for (std::size_t j = 0; j < g.gram.cols(); ++j)
        if (i != j && !g.gram(i, j).is_zero()) diagonal = false;
    if (diagonal) {
      json d = json::array();
      for (std::size_t i = 0; i < g.gram.rows(); ++i) d.push_back(g.gram(i, i).str());
      ms[name] = json{{"diag", std::move(d)}};
    } else {
      json rows = json::array();
      for (std::size_t i = 0; i < g.gram.rows(); ++i) rows.push_back(coefficients(g.gram.row(i)));
      ms[name] = std::move(rows);
    }
  }
  root["metrics"] = std::move(ms);
  return root;
}

std::string serialize_document(const Document& doc) { return document_json(doc).dump(2) + "\n"; }

Matrix<double> parse_float_matrix(const std::string& text) {
  json root = parse_json(text);
  if (root.is_object()) root = member(root, "matrix", "document");
  if (!root.is_array() || root.empty()) schema_error("matrix", "expected a non-empty array of rows");
  const std::size_t n = root.size();
  Matrix<double> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string w = path("matrix", i);
    if (!root[i].is_array() || root[i].size() != n) schema_error(w, "expected " + std::to_string(n) + " entries (square matrix)");
    for (std::size_t j = 0; j < n; ++j) {
      const json& v = root[i][j];
      if (v.is_number()) {
        m(i, j) = v.get<double>();
      } else {
        const Scalar s = coefficient_at(v, path(w, j));
        if (!s.is_real()) throw InputError(path(w, j) + ": complex entry", "field");
        m(i, j) = s.to_double();
      }
    }
  }
  return m;
}

}  // namespace kcontact
