#include "kcontact/extension.hpp"

#include "kcontact/errors.hpp"

namespace kcontact {

namespace {

std::string symplectic_kind(const std::string& violation) {
  if (violation.find("closed") != std::string::npos) return "not-closed";
  if (violation.find("degenerate") != std::string::npos) return "degenerate";
  return "dimension";
}

}  // namespace

std::optional<std::string> symplectic_violation(const LieAlgebra& L, const AlternatingForm& omega) {
  if (omega.dim() != L.dim() || omega.degree() != 2) {
    return "omega must be a 2-form on a " + std::to_string(L.dim()) + "-dimensional algebra";
  }
  if (L.dim() % 2 != 0) return "odd dimension " + std::to_string(L.dim());
  if (rank(form_matrix(omega)) < L.dim()) return std::string("omega is degenerate");
  const AlternatingForm d = ce_differential(L, omega);
  if (!d.is_zero()) {
    const auto& [idx, c] = *d.terms().begin();
    return "omega is not closed: d omega(" + L.labels()[idx[0]] + "," + L.labels()[idx[1]] + "," +
           L.labels()[idx[2]] + ") = " + c.pretty();
  }
  return std::nullopt;
}

SymplecticAlgebra make_symplectic(LieAlgebra L, AlternatingForm omega) {
  if (auto v = symplectic_violation(L, omega)) throw InputError(*v, symplectic_kind(*v));
  return {std::move(L), std::move(omega)};
}

SymplecticAlgebra central_quotient(const ContactStructure& C) {
  const LieAlgebra& g = C.algebra;
  if (!ad(g, C.reeb).is_zero()) {
    throw InputError("Reeb field not central; quotient undefined", "not-central");
  }
  const auto& hb = C.horizontal_basis;
  const std::size_t m = hb.size();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("f" + std::to_string(a + 1));
  std::vector<BracketEntry> brackets;
  AlternatingForm omega(m, 2);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vector v = C.projector * bracket(g, hb[a], hb[b]);
      const auto coords = coordinates_in(hb, v);
      if (!coords) throw InvariantViolation("projected bracket left the horizontal span");
      if (!is_zero_vector(*coords)) brackets.push_back({a, b, *coords});
      const Scalar w = evaluate(C.d_eta, {hb[a], hb[b]});
      if (!w.is_zero()) omega.add_term({a, b}, w);
    }
  LieAlgebra s(g.name() + "_quot", g.field(), m, labels, std::move(brackets));
  if (const auto bad = check_jacobi(s); !bad.empty()) {
    throw InvariantViolation("quotient of '" + g.name() + "' violates Jacobi");
  }
  if (auto v = symplectic_violation(s, omega)) {
    throw InvariantViolation("quotient of '" + g.name() + "' is not symplectic: " + *v);
  }
  return {std::move(s), std::move(omega)};
}

LieAlgebra extension_algebra(const LieAlgebra& s, const AlternatingForm& omega) {
  const std::size_t m = s.dim();
  if (omega.dim() != m || omega.degree() != 2) {
    throw InputError("omega must be a 2-form on the algebra", "degree");
  }
  std::vector<std::string> labels = s.labels();
  labels.push_back("xi");
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector v = s.basis_bracket(i, j);
      v.push_back(Scalar(-2) * omega.coefficient({i, j}));
      if (!is_zero_vector(v)) brackets.push_back({i, j, std::move(v)});
    }
  return LieAlgebra(s.name() + "_ext", s.field(), m + 1, labels, std::move(brackets));
}

ContactExtension central_extension(const SymplecticAlgebra& S) {
  if (auto v = symplectic_violation(S.algebra, S.omega)) throw InputError(*v, symplectic_kind(*v));
  LieAlgebra g = extension_algebra(S.algebra, S.omega);
  const std::size_t m = S.algebra.dim();
  if (!check_jacobi(g).empty()) {
    throw InvariantViolation("extension of closed omega violates Jacobi");
  }
  AlternatingForm eta = AlternatingForm::from_covector(g.basis_vector(m));
  if (!is_contact(g, eta).contact) throw InvariantViolation("extension is not contact");
  if (reeb(g, eta) != g.basis_vector(m)) throw InvariantViolation("extension Reeb field is not xi");
  const AlternatingForm d = ce_differential(g, eta);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (d.coefficient({i, j}) != S.omega.coefficient({i, j})) {
        throw InvariantViolation("d eta differs from omega on the extension");
      }
  return {std::move(g), std::move(eta)};
}

bool round_trip(const SymplecticAlgebra& S) {
  const ContactExtension E = central_extension(S);
  const SymplecticAlgebra Q = central_quotient(contact_structure(E.algebra, E.eta));
  return Q.algebra == S.algebra && Q.omega == S.omega;
}

template <class T>
MainTheoremReport analyze_kcontact(const ContactStructure& C, const MetricData<T>& g) {
  MainTheoremReport r;
  r.dim = C.algebra.dim();
  const auto assoc = association_check(C, g);
  if (!assoc.associated()) {
    throw InputError(std::string("metric is not associated: ") +
                         (assoc.reeb_dual ? "phi^2 != -I + eta (x) xi" : "eta(X) != g(X, xi)"),
                     "not-associated");
  }
  r.is_kcontact = is_kcontact(C, g);
  r.criteria = kcontact_criteria(C, g);
  r.ad_xi_zero = ad(C.algebra, C.reeb).is_zero();
  if (!r.is_kcontact) {
    r.notes.push_back("not K-contact: h != 0");
    return r;
  }

  const Obstruction obs = kcontact_obstruction(C);
  if (obs.obstructed) {
    throw InvariantViolation("K-contact metric exists but ad(xi) is obstructed: " + obs.reason);
  }
  const ContactStructure CC = complexify(C);
  const RootDecomposition rd = root_decomposition(CC);
  r.roots_exact = rd.exact;
  if (rd.exact) {
    r.complexification_roots = rd.roots();
    for (const auto& a : r.complexification_roots)
      if (sgn(a.re()) != 0) {
        throw InvariantViolation("root " + a.pretty() + " of ad(xi) is not purely imaginary");
      }
  } else {
    for (const auto& s : rd.approx_spaces) r.approx_roots.push_back(s.root);
    r.notes.push_back(rd.notice);
  }

  if (r.dim >= 5) {
    r.theorem = verify_reeb_theorem(CC);
    if (!r.ad_xi_zero) {
      throw InvariantViolation("K-contact algebra '" + C.algebra.name() +
                               "' of dimension >= 5 has ad(xi) != 0\n" + dump_contact(C));
    }
    r.quotient = central_quotient(C);
    r.notes.push_back("ad(xi) = 0; quotient is symplectic of dimension " +
                      std::to_string(r.dim - 1));
  } else {
    r.notes.push_back(std::string("n = 1 excluded from the vanishing statement; ad(xi) = 0: ") +
                      (r.ad_xi_zero ? "yes" : "no"));
  }
  return r;
}

template MainTheoremReport analyze_kcontact<Scalar>(const ContactStructure&, const ExactMetric&);
template MainTheoremReport analyze_kcontact<double>(const ContactStructure&, const FloatMetric&);

}  // namespace kcontact
