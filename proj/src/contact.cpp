#include "kcontact/contact.hpp"

#include "kcontact/errors.hpp"

namespace kcontact {

Matrix<Scalar> reeb_system(const LieAlgebra& L, const AlternatingForm& eta) {
  const std::size_t n = L.dim();
  const Matrix<Scalar> d = form_matrix(ce_differential(L, eta));
  Matrix<Scalar> a(n + 1, n);
  const Vector e = eta.covector();
  for (std::size_t i = 0; i < n; ++i) a(0, i) = e[i];
  // d eta(xi, e_j) = sum_i xi_i D(i, j)
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a(1 + j, i) = d(i, j);
  return a;
}

Vector reeb(const LieAlgebra& L, const AlternatingForm& eta) {
  if (eta.degree() != 1 || eta.dim() != L.dim()) {
    throw InputError("contact form must be a 1-form on the algebra", "degree");
  }
  if (L.dim() % 2 == 0) {
    throw InputError("contact requires odd dimension, got " + std::to_string(L.dim()),
                     "dimension");
  }
  Vector rhs(L.dim() + 1, Scalar(0));
  rhs[0] = Scalar(1);
  auto xi = solve_unique(reeb_system(L, eta), rhs);
  if (!xi) {
    throw InputError("no unique Reeb field: eta ^ (d eta)^n vanishes", "not-contact");
  }
  return *xi;
}

ContactStructure contact_structure(const LieAlgebra& L, const AlternatingForm& eta) {
  const auto verdict = is_contact(L, eta);
  if (!verdict.contact) {
    throw InputError("no unique Reeb field: eta ^ (d eta)^n vanishes", "not-contact");
  }
  Vector xi = reeb(L, eta);
  const Vector e = eta.covector();
  Matrix<Scalar> eta_row(1, L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) eta_row(0, i) = e[i];
  auto horizontal = nullspace(eta_row);
  Endomorphism projector = Endomorphism::identity(L.dim()) - outer(xi, e);
  return ContactStructure{L,           eta, ce_differential(L, eta), std::move(xi),
                          std::move(horizontal), std::move(projector)};
}

Decomposition decompose(const ContactStructure& C, const Vector& x) {
  check_dim(C.algebra, x, "decompose argument");
  return {dot(C.eta.covector(), x), C.projector * x};
}

ContactStructure complexify(const ContactStructure& C) {
  const LieAlgebra gc = kcontact::complexify(C.algebra);
  ContactStructure out = contact_structure(gc, complexify_form(C.eta));
  if (out.reeb != C.reeb) {
    throw InvariantViolation("Reeb field of the complexification differs from the real one");
  }
  return out;
}

}  // namespace kcontact
