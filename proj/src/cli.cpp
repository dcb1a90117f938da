#include "kcontact/cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "kcontact/catalog.hpp"
#include "kcontact/errors.hpp"
#include "kcontact/extension.hpp"

namespace kcontact {

namespace {

using json = ordered_json;

struct Result {
  int code = kExitOk;
  json report;
  std::ostringstream text;
};

json start(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::string form_text(const LieAlgebra& L, const AlternatingForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : f.terms()) {
    std::string mono;
    for (std::size_t k = 0; k < idx.size(); ++k) mono += (k ? "^" : "") + L.labels()[idx[k]] + "*";
    std::string coeff;
    if (c.is_one()) {
      coeff = "";
    } else if ((-c).is_one()) {
      coeff = "-";
    } else {
      coeff = c.is_real() ? c.pretty() + " " : "(" + c.pretty() + ") ";
    }
    std::string term = coeff + mono;
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

json polynomial_json(const ScalarPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return json{{"text", p.str()}, {"coefficients", std::move(coeffs)}};
}

json symplectic_json(const SymplecticAlgebra& S) {
  Document d{S.algebra, {}, {}};
  d.forms.emplace("omega", S.omega);
  return document_json(d);
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

ContactStructure contact_from(const Document& doc, const std::string& form, Result& r) {
  r.report["algebra"] = doc.algebra.name();
  r.report["form"] = form;
  return contact_structure(doc.algebra, doc.form(form));
}

/// Contact structure or, when the form is not contact, a verdict-false report.
std::optional<ContactStructure> try_contact(const Document& doc, const std::string& form, Result& r) {
  try {
    return contact_from(doc, form, r);
  } catch (const InputError& e) {
    if (e.kind() != "not-contact") throw;
    r.code = kExitVerdictFalse;
    r.report["contact"] = false;
    r.report["reason"] = e.what();
    r.text << form << " is not a contact form on " << doc.algebra.name() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void cmd_validate(const std::string& file, Result& r) {
  const Document doc = resolve_document(file);
  const LieAlgebra& L = doc.algebra;
  r.report["algebra"] = L.name();
  r.report["field"] = to_string(L.field());
  r.report["dim"] = L.dim();
  r.report["basis"] = L.labels();
  r.report["nonzero_brackets"] = L.nonzero_brackets().size();
  r.report["jacobi"] = "ok";
  json forms = json::object();
  for (const auto& [name, f] : doc.forms) forms[name] = json{{"degree", f.degree()}};
  r.report["forms"] = std::move(forms);
  json metrics = json::array();
  for (const auto& [name, g] : doc.metrics) metrics.push_back(name);
  r.report["metrics"] = std::move(metrics);
  r.text << L.name() << ": " << to_string(L.field()) << " Lie algebra of dimension " << L.dim()
         << ", " << L.nonzero_brackets().size() << " nonzero brackets, Jacobi identity holds\n";
  for (const auto& [name, f] : doc.forms) r.text << "  form " << name << " = " << form_text(L, f) << "\n";
  for (const auto& [name, g] : doc.metrics) r.text << "  metric " << name << " (positive definite)\n";
}

void cmd_contact_check(const std::string& file, const std::string& form, Result& r) {
  const Document doc = resolve_document(file);
  const LieAlgebra& L = doc.algebra;
  const ContactVerdict v = is_contact(L, doc.form(form));
  r.report["algebra"] = L.name();
  r.report["form"] = form;
  r.report["dim"] = L.dim();
  r.report["contact"] = v.contact;
  r.report["top_coefficient"] = v.top_coefficient.str();
  const std::size_t n = (L.dim() - 1) / 2;
  r.text << form << " ^ (d " << form << ")^" << n << " = " << v.top_coefficient.pretty()
         << " (coefficient of the top form)\n";
  r.text << form << (v.contact ? " is" : " is not") << " a contact form on " << L.name() << "\n";
  if (!v.contact) r.code = kExitVerdictFalse;
}

void cmd_reeb(const std::string& file, const std::string& form, Result& r) {
  const Document doc = resolve_document(file);
  const auto C = try_contact(doc, form, r);
  if (!C) return;
  const LieAlgebra& L = C->algebra;
  r.report["contact"] = true;
  r.report["reeb"] = vector_json(C->reeb);
  r.report["reeb_text"] = format_vector(L, C->reeb);
  r.report["d_eta"] = form_json(C->d_eta);
  json hb = json::array();
  for (const auto& v : C->horizontal_basis) hb.push_back(vector_json(v));
  r.report["horizontal_basis"] = std::move(hb);
  r.text << "Reeb field xi = " << format_vector(L, C->reeb) << "\n";
  r.text << "d " << form << " = " << form_text(L, C->d_eta) << "\n";
  r.text << "H = ker " << form << " spanned by:\n";
  for (const auto& v : C->horizontal_basis) r.text << "  " << format_vector(L, v) << "\n";
}

template <class T>
void analysis_body(const ContactStructure& C, const MetricData<T>& g, Result& r) {
  const MainTheoremReport m = analyze_kcontact(C, g);
  const Obstruction obs = kcontact_obstruction(C);
  r.report["dim"] = m.dim;
  r.report["kcontact"] = m.is_kcontact;
  r.report["criteria"] = json{{"h_zero", m.criteria.h_zero}, {"ad_reeb_skew", m.criteria.ad_reeb_skew}};
  r.report["ad_xi_zero"] = m.ad_xi_zero;
  r.report["obstruction"] = json{{"obstructed", obs.obstructed},
                                 {"reason", obs.reason},
                                 {"minimal_polynomial", polynomial_json(obs.minimal_polynomial)}};
  if (m.is_kcontact) {
    r.report["roots_exact"] = m.roots_exact;
    json roots = json::array();
    if (m.roots_exact) {
      for (const auto& a : m.complexification_roots) roots.push_back(a.str());
    } else {
      for (const auto& a : m.approx_roots) roots.push_back(json::array({a.real(), a.imag()}));
    }
    r.report["complexification_roots"] = std::move(roots);
  }
  r.report["quotient"] = m.quotient ? symplectic_json(*m.quotient) : json(nullptr);
  r.report["notes"] = m.notes;

  r.text << C.algebra.name() << " (dim " << m.dim << "): "
         << (m.is_kcontact ? "K-contact" : "not K-contact") << "\n";
  r.text << "  h = 0: " << (m.criteria.h_zero ? "yes" : "no")
         << "; ad(xi) skew on H: " << (m.criteria.ad_reeb_skew ? "yes" : "no") << "\n";
  r.text << "  ad(xi) = 0: " << (m.ad_xi_zero ? "yes" : "no") << "\n";
  r.text << "  minimal polynomial of ad(xi): " << obs.minimal_polynomial.str() << "\n";
  if (obs.obstructed) r.text << "  obstructed: " << obs.reason << "\n";
  if (m.is_kcontact) {
    r.text << "  roots of ad(xi) on the complexification:";
    if (m.roots_exact) {
      for (const auto& a : m.complexification_roots) r.text << " " << a.pretty();
    } else {
      for (const auto& a : m.approx_roots) r.text << " (" << fmt(a.real()) << "," << fmt(a.imag()) << ")";
    }
    r.text << "\n";
  }
  if (m.quotient) {
    r.text << "  symplectic quotient: dim " << m.quotient->algebra.dim()
           << ", omega = " << form_text(m.quotient->algebra, m.quotient->omega) << "\n";
  }
  for (const auto& note : m.notes) r.text << "  note: " << note << "\n";
  if (!m.is_kcontact) r.code = kExitVerdictFalse;
}

void cmd_analyze(const std::string& file, const std::string& form, const std::string& metric,
                 Result& r) {
  const Document doc = resolve_document(file);
  const auto C = try_contact(doc, form, r);
  if (!C) return;
  r.report["contact"] = true;
  if (!metric.empty()) {
    r.report["metric"] = json{{"name", metric}, {"arithmetic", "exact"}};
    analysis_body(*C, doc.metric(metric), r);
  } else {
    r.report["metric"] = json{{"name", "auto"}, {"arithmetic", "binary64"}, {"tolerance", kFloatTolerance}};
    r.text << "metric: constructed associated metric (binary64, tolerance 1e-9)\n";
    analysis_body(*C, construct_associated_metric(*C), r);
  }
}

void cmd_roots(const std::string& file, const std::string& form, Result& r) {
  const Document doc = resolve_document(file);
  const auto C = try_contact(doc, form, r);
  if (!C) return;
  r.report["contact"] = true;
  const bool was_real = !C->algebra.is_complex();
  const ContactStructure CC = was_real ? complexify(*C) : *C;
  r.report["complexified"] = was_real;
  const LieAlgebra& L = CC.algebra;
  RootDecomposition rd = [&] {
    try {
      return root_decomposition(CC);
    } catch (const NotDiagonalizable& e) {
      r.report["diagonalizable"] = false;
      r.report["minimal_polynomial"] = polynomial_json(minimal_polynomial(ad(L, CC.reeb)));
      r.report["reason"] = e.what();
      throw;
    }
  }();
  r.report["diagonalizable"] = true;
  r.report["minimal_polynomial"] = polynomial_json(minimal_polynomial(ad(L, CC.reeb)));
  r.report["exact"] = rd.exact;
  json spaces = json::array();
  if (rd.exact) {
    for (const auto& s : rd.spaces) {
      json basis = json::array();
      json text = json::array();
      for (const auto& v : s.basis) {
        basis.push_back(vector_json(v));
        text.push_back(format_vector(L, v));
      }
      spaces.push_back(json{{"root", s.root.str()}, {"basis", std::move(basis)}, {"basis_text", std::move(text)}});
      r.text << "root " << s.root.pretty() << ":";
      for (const auto& v : s.basis) r.text << "  " << format_vector(L, v);
      r.text << "\n";
    }
    const GradedBracketReport g = verify_graded_bracket(rd);
    r.report["graded_bracket"] = json{{"pairs_checked", g.pairs_checked}, {"resonant_pairs", g.resonant_pairs}};
    r.text << "graded bracket and d eta orthogonality verified on " << g.pairs_checked << " pairs\n";
  } else {
    r.report["notice"] = rd.notice;
    r.text << "notice: " << rd.notice << "\n";
    for (const auto& s : rd.approx_spaces) {
      json basis = json::array();
      for (const auto& v : s.basis) {
        json vec = json::array();
        for (const auto& x : v) vec.push_back(json::array({x.real(), x.imag()}));
        basis.push_back(std::move(vec));
      }
      spaces.push_back(json{{"root", json::array({s.root.real(), s.root.imag()})}, {"basis", std::move(basis)}});
      r.text << "root (" << fmt(s.root.real()) << "," << fmt(s.root.imag()) << "): multiplicity "
             << s.basis.size() << "\n";
    }
  }
  r.report["root_spaces"] = std::move(spaces);
}

void cmd_quotient(const std::string& file, const std::string& form, const std::string& output,
                  Result& r) {
  const Document doc = resolve_document(file);
  const auto C = try_contact(doc, form, r);
  if (!C) return;
  const SymplecticAlgebra S = central_quotient(*C);
  Document out{S.algebra, {}, {}};
  out.forms.emplace("omega", S.omega);
  write_text_file(output, serialize_document(out));
  r.report["output"] = output;
  r.report["quotient"] = document_json(out);
  r.text << "wrote symplectic quotient " << S.algebra.name() << " (dim " << S.algebra.dim()
         << ", omega = " << form_text(S.algebra, S.omega) << ") to " << output << "\n";
}

void cmd_extend(const std::string& file, const std::string& omega, const std::string& output,
                Result& r) {
  const Document doc = resolve_document(file);
  r.report["algebra"] = doc.algebra.name();
  r.report["omega"] = omega;
  const SymplecticAlgebra S = make_symplectic(doc.algebra, doc.form(omega));
  const ContactExtension E = central_extension(S);
  Document out{E.algebra, {}, {}};
  out.forms.emplace("eta", E.eta);
  write_text_file(output, serialize_document(out));
  r.report["output"] = output;
  r.report["extension"] = document_json(out);
  r.text << "wrote central extension " << E.algebra.name() << " (dim " << E.algebra.dim()
         << ", eta = " << form_text(E.algebra, E.eta) << ", Reeb field xi central) to " << output << "\n";
}

void cmd_normal_form(const std::string& file, Result& r) {
  const Matrix<double> B = parse_float_matrix(read_text_file(file));
  const SkewNormalForm nf = skew_normal_form(B);
  const std::size_t n = B.rows();
  const Matrix<double> N = nf.assembled();
  const Matrix<double> I = Matrix<double>::identity(n);
  const double orth = max_abs(nf.q * nf.q.transpose() - I);
  const double recon = max_abs(nf.q.transpose() * N * nf.q - B);
  r.report["size"] = n;
  r.report["blocks"] = nf.blocks;
  r.report["zero_count"] = nf.zero_count;
  json q = json::array();
  for (std::size_t i = 0; i < n; ++i) q.push_back(nf.q.row(i));
  r.report["q"] = std::move(q);
  r.report["orthogonality_residual"] = orth;
  r.report["reconstruction_residual"] = recon;
  r.text << "skew normal form of a " << n << "x" << n << " matrix\n  blocks:";
  for (double b : nf.blocks) r.text << " " << fmt(b);
  r.text << "\n  zero columns: " << nf.zero_count << "\n";
  r.text << "  max |QQ^T - I| = " << fmt(orth) << ", max |Q^T N Q - B| = " << fmt(recon) << "\n";
}

void cmd_catalog_list(Result& r) {
  json entries = json::array();
  for (const auto& e : catalog()) {
    entries.push_back(json{{"name", e.name},
                           {"kind", e.kind == EntryKind::contact ? "contact" : "symplectic"},
                           {"dim", e.document.algebra.dim()},
                           {"description", e.description}});
    r.text << std::left << std::setw(20) << e.name << std::setw(12)
           << (e.kind == EntryKind::contact ? "contact" : "symplectic") << "dim "
           << e.document.algebra.dim() << "  " << e.description << "\n";
  }
  r.report["entries"] = std::move(entries);
}

void cmd_catalog_show(const std::string& name, Result& r) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) throw InputError("no catalog entry named '" + name + "'", "catalog");
  const Document& doc = e->document;
  const LieAlgebra& L = doc.algebra;
  r.report["name"] = e->name;
  r.report["kind"] = e->kind == EntryKind::contact ? "contact" : "symplectic";
  r.report["description"] = e->description;
  r.report["dim"] = L.dim();
  r.report["document"] = document_json(doc);
  r.text << e->name << ": " << e->description << "\n  dim " << L.dim() << ", basis";
  for (const auto& l : L.labels()) r.text << " " << l;
  r.text << "\n";
  for (const auto& b : L.nonzero_brackets()) {
    r.text << "  [" << L.labels()[b.i] << "," << L.labels()[b.j] << "] = " << format_vector(L, b.image) << "\n";
  }
  if (e->kind == EntryKind::contact) {
    const AlternatingForm& eta = doc.form("eta");
    const ContactVerdict v = is_contact(L, eta);
    const ContactStructure C = contact_structure(L, eta);
    const Obstruction obs = kcontact_obstruction(C);
    const bool squarefree = is_squarefree(obs.minimal_polynomial);
    r.report["contact"] = v.contact;
    r.report["top_coefficient"] = v.top_coefficient.str();
    r.report["reeb"] = vector_json(C.reeb);
    r.report["reeb_text"] = format_vector(L, C.reeb);
    r.report["minimal_polynomial"] = polynomial_json(obs.minimal_polynomial);
    r.report["squarefree"] = squarefree;
    r.report["obstruction"] = json{{"obstructed", obs.obstructed}, {"reason", obs.reason}};
    r.text << "  eta = " << form_text(L, eta) << ", contact (top coefficient "
           << v.top_coefficient.pretty() << ")\n";
    r.text << "  Reeb field " << format_vector(L, C.reeb) << "\n";
    r.text << "  minimal polynomial of ad(xi): " << obs.minimal_polynomial.str()
           << (squarefree ? " (squarefree)" : " (not squarefree)") << "\n";
    r.text << "  K-contact obstruction: " << (obs.obstructed ? "Obstructed: " + obs.reason : "NoObstruction") << "\n";
  } else {
    const AlternatingForm& omega = doc.form("omega");
    const SymplecticAlgebra S = make_symplectic(L, omega);
    const bool rt = round_trip(S);
    r.report["symplectic"] = true;
    r.report["round_trip"] = rt;
    r.text << "  omega = " << form_text(L, omega) << ", closed and nondegenerate\n";
    r.text << "  extension/quotient round trip: " << (rt ? "exact" : "FAILED") << "\n";
    if (!rt) throw InvariantViolation("round trip failed on catalog entry " + e->name);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contact and K-contact structures on Lie algebras", "kcontact"};
  app.fallthrough();
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable report on stdout");

  std::string file, form = "eta", omega = "omega", metric, output, name;
  bool auto_metric = false;

  auto* validate = app.add_subcommand("validate", "Parse an algebra file and check Jacobi");
  validate->add_option("FILE", file, "Algebra file or catalog name")->required();

  auto* contact = app.add_subcommand("contact-check", "Decide eta ^ (d eta)^n != 0");
  contact->add_option("FILE", file)->required();
  contact->add_option("--form", form, "1-form name")->capture_default_str();

  auto* reeb_cmd = app.add_subcommand("reeb", "Reeb field and contact distribution");
  reeb_cmd->add_option("FILE", file)->required();
  reeb_cmd->add_option("--form", form)->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "K-contact analysis with an associated metric");
  analyze->add_option("FILE", file)->required();
  analyze->add_option("--form", form)->capture_default_str();
  auto* metric_opt = analyze->add_option("--metric", metric, "Metric name from the file (exact)");
  analyze->add_flag("--auto-metric", auto_metric, "Construct an associated metric (binary64, default)")
      ->excludes(metric_opt);

  auto* roots = app.add_subcommand("roots", "Root decomposition of ad(xi) on the complexification");
  roots->add_option("FILE", file)->required();
  roots->add_option("--form", form)->capture_default_str();

  auto* quotient = app.add_subcommand("quotient", "Symplectic quotient by a central Reeb field");
  quotient->add_option("FILE", file)->required();
  quotient->add_option("--form", form)->capture_default_str();
  quotient->add_option("-o,--output", output, "Output algebra file")->required();

  auto* extend = app.add_subcommand("extend", "Central extension of a symplectic Lie algebra");
  extend->add_option("FILE", file)->required();
  extend->add_option("--omega", omega, "2-form name")->capture_default_str();
  extend->add_option("-o,--output", output, "Output algebra file")->required();

  auto* normal = app.add_subcommand("normal-form", "Orthogonal normal form of a skew matrix");
  normal->add_option("--skew-matrix", file, "JSON matrix file")->required();

  auto* cat = app.add_subcommand("catalog", "Built-in examples");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries");
  auto* cat_show = cat->add_subcommand("show", "Describe one entry");
  cat_show->add_option("NAME", name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (std::find(args.begin(), args.end(), "--json") != args.end()) {
      json j = start("usage");
      j["error"] = json{{"kind", "usage"}, {"message", e.what()}};
      j["exit_code"] = static_cast<int>(kExitInputError);
      out << j.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    }
    return kExitInputError;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();
  if (command == "catalog") command += std::string(" ") + (cat_list->parsed() ? "list" : "show");

  Result r;
  r.report = start(command);
  std::string error_kind, error_message;
  try {
    if (validate->parsed()) cmd_validate(file, r);
    else if (contact->parsed()) cmd_contact_check(file, form, r);
    else if (reeb_cmd->parsed()) cmd_reeb(file, form, r);
    else if (analyze->parsed()) cmd_analyze(file, form, metric, r);
    else if (roots->parsed()) cmd_roots(file, form, r);
    else if (quotient->parsed()) cmd_quotient(file, form, output, r);
    else if (extend->parsed()) cmd_extend(file, omega, output, r);
    else if (normal->parsed()) cmd_normal_form(file, r);
    else if (cat_list->parsed()) cmd_catalog_list(r);
    else if (cat_show->parsed()) cmd_catalog_show(name, r);
  } catch (const NotDiagonalizable& e) {
    r.code = kExitVerdictFalse;
    r.text << e.what() << "\n";
  } catch (const InputError& e) {
    r.code = kExitInputError;
    error_kind = e.kind();
    error_message = e.what();
  } catch (const InvariantViolation& e) {
    r.code = kExitInternalError;
    error_kind = "invariant";
    error_message = e.what();
  } catch (const std::exception& e) {
    r.code = kExitInternalError;
    error_kind = "internal";
    error_message = e.what();
  }

  if (!error_kind.empty()) {
    r.report["error"] = json{{"kind", error_kind}, {"message", error_message}};
  }
  r.report["exit_code"] = r.code;
  if (as_json) {
    out << r.report.dump(2) << "\n";
  } else {
    out << r.text.str();
  }
  if (!error_kind.empty() && !as_json) {
    err << (r.code == kExitInternalError ? "internal invariant violated: " : "error: ")
        << error_message << "\n";
  }
  return r.code;
}

}  // namespace kcontact
