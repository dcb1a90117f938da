#include "kcontact/catalog.hpp"

#include <filesystem>

#include "kcontact/errors.hpp"
#include "kcontact/extension.hpp"

namespace kcontact {

namespace {

struct Term {
  std::size_t i, j, k;
  long num, den;
};

LieAlgebra build(const std::string& name, std::size_t dim, const std::vector<Term>& terms,
                 const std::string& prefix = "e") {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) labels.push_back(prefix + std::to_string(k + 1));
  std::vector<BracketEntry> brackets;
  for (const auto& t : terms) {
    auto it = std::find_if(brackets.begin(), brackets.end(),
                           [&](const BracketEntry& b) { return b.i == t.i && b.j == t.j; });
    if (it == brackets.end()) {
      brackets.push_back({t.i, t.j, Vector(dim, Scalar(0))});
      it = std::prev(brackets.end());
    }
    it->image[t.k] += Scalar(Rational(t.num, t.den));
  }
  return LieAlgebra(name, Field::real, dim, labels, std::move(brackets));
}

AlternatingForm covector(std::size_t dim, const std::vector<std::size_t>& ones) {
  Vector c(dim, Scalar(0));
  for (auto k : ones) c[k] = Scalar(1);
  return AlternatingForm::from_covector(c);
}

AlternatingForm standard_omega(std::size_t dim) {
  AlternatingForm w(dim, 2);
  for (std::size_t k = 0; k + 1 < dim; k += 2) w.add_term({k, k + 1}, Scalar(1));
  return w;
}

ExactMetric half_metric(std::size_t dim) {
  std::vector<Scalar> d(dim, Scalar(Rational(1, 2)));
  d.back() = Scalar(1);
  return diagonal_metric(d);
}

CatalogEntry contact_entry(std::string description, LieAlgebra L, AlternatingForm eta,
                           std::optional<ExactMetric> g) {
  const std::string name = L.name();
  Document doc{std::move(L), {}, {}};
  doc.forms.emplace("eta", std::move(eta));
  if (g) doc.metrics.emplace("g", std::move(*g));
  return {name, std::move(description), EntryKind::contact, std::move(doc)};
}

CatalogEntry symplectic_entry(std::string description, LieAlgebra L, AlternatingForm omega) {
  const std::string name = L.name();
  Document doc{std::move(L), {}, {}};
  doc.forms.emplace("omega", std::move(omega));
  return {name, std::move(description), EntryKind::symplectic, std::move(doc)};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(contact_entry("Heisenberg algebra, dim 3", build("heisenberg3", 3, {{0, 1, 2, 1, 1}}),
                              covector(3, {2}), half_metric(3)));
  out.push_back(contact_entry("Heisenberg algebra, dim 5",
                              build("heisenberg5", 5, {{0, 1, 4, 1, 1}, {2, 3, 4, 1, 1}}),
                              covector(5, {4}), half_metric(5)));
  out.push_back(contact_entry(
      "Heisenberg algebra, dim 7",
      build("heisenberg7", 7, {{0, 1, 6, 1, 1}, {2, 3, 6, 1, 1}, {4, 5, 6, 1, 1}}),
      covector(7, {6}), half_metric(7)));
  out.push_back(contact_entry(
      "su(2): [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2",
      build("su2", 3, {{0, 1, 2, 1, 1}, {1, 2, 0, 1, 1}, {0, 2, 1, -1, 1}}), covector(3, {2}),
      half_metric(3)));
  out.push_back(contact_entry(
      "sl(2,R): [e3,e1]=e1, [e3,e2]=-e2, [e1,e2]=e3",
      build("sl2r", 3, {{0, 2, 0, -1, 1}, {1, 2, 1, 1, 1}, {0, 1, 2, 1, 1}}), covector(3, {2}),
      half_metric(3)));

  LieAlgebra aff = build("aff1_aff1_sympl", 4, {{0, 1, 1, 1, 1}, {2, 3, 3, 1, 1}}, "f");
  const SymplecticAlgebra aff_s = make_symplectic(aff, standard_omega(4));
  ContactExtension ext = central_extension(aff_s);
  LieAlgebra ext_named("aff1_aff1_ext5", ext.algebra.field(), 5, ext.algebra.labels(),
                       ext.algebra.nonzero_brackets());
  out.push_back(contact_entry("central extension of aff(1)+aff(1) by omega = f12 + f34",
                              std::move(ext_named), std::move(ext.eta),
                              diagonal_metric(std::vector<Scalar>(5, Scalar(1)))));

  out.push_back(contact_entry(
      "g3 + aff(1): [e1,e2]=e5, [e2,e5]=-e1, [e3,e4]=e4; ad(e5) is a Jordan block",
      build("nilpotent_nondiag5", 5, {{0, 1, 4, 1, 1}, {1, 4, 0, -1, 1}, {2, 3, 3, 1, 1}}),
      covector(5, {3, 4}), std::nullopt));

  out.push_back(symplectic_entry("abelian R^2, omega = f12", build("r2_sympl", 2, {}, "f"),
                                 standard_omega(2)));
  out.push_back(symplectic_entry("abelian R^4, omega = f12 + f34",
                                 build("r4_sympl", 4, {}, "f"), standard_omega(4)));
  out.push_back(symplectic_entry("aff(1)+aff(1): [f1,f2]=f2, [f3,f4]=f4, omega = f12 + f34",
                                 std::move(aff), standard_omega(4)));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

Document resolve_document(const std::string& file_or_name) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(file_or_name, ec)) return load_document(file_or_name);
  if (const auto* e = find_catalog_entry(file_or_name)) return e->document;
  throw InputError("'" + file_or_name + "' is neither a readable file nor a catalog entry", "file");
}

}  // namespace kcontact
