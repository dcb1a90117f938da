#include "doctest.h"
#include "kcontact/errors.hpp"
#include "support.hpp"

using namespace kcontact;
using kct::Rng;

namespace {

Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

}  // namespace

TEST_CASE("Reeb field solves eta(xi) = 1 and i_xi d eta = 0 exactly") {
  for (const auto* e : kct::contact_entries()) {
    const LieAlgebra& L = e->document.algebra;
    const auto C = kct::catalog_contact(e->name);
    CHECK(evaluate(C.eta, {C.reeb}) == q(1));
    for (std::size_t j = 0; j < L.dim(); ++j) CHECK(evaluate(C.d_eta, {C.reeb, L.basis_vector(j)}).is_zero());
    CHECK(C.horizontal_basis.size() == L.dim() - 1);
    for (const auto& h : C.horizontal_basis) CHECK(evaluate(C.eta, {h}).is_zero());
    CHECK(rank(Matrix<Scalar>::from_columns(C.horizontal_basis, L.dim())) == L.dim() - 1);
  }
}

TEST_CASE("Reeb fields of the named examples") {
  CHECK(kct::catalog_contact("heisenberg5").reeb == unit_vector<Scalar>(5, 4));
  CHECK(kct::catalog_contact("su2").reeb == unit_vector<Scalar>(3, 2));
  CHECK(kct::catalog_contact("sl2r").reeb == unit_vector<Scalar>(3, 2));
  CHECK(kct::catalog_contact("nilpotent_nondiag5").reeb == unit_vector<Scalar>(5, 4));
  CHECK(kct::catalog_contact("aff1_aff1_ext5").reeb == unit_vector<Scalar>(5, 4));
}

TEST_CASE("Reeb system of a non-contact form is rejected") {
  const auto L = LieAlgebra::abelian("abelian3", 3);
  auto eta = AlternatingForm::from_covector({q(0), q(0), q(1)});
  try {
    reeb(L, eta);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.kind() == "not-contact");
    CHECK(std::string(e.what()).find("no unique Reeb field") != std::string::npos);
  }
  CHECK_THROWS_AS(contact_structure(L, eta), InputError);

  const auto* h3 = find_catalog_entry("heisenberg3");
  CHECK_THROWS_AS(reeb(h3->document.algebra, AlternatingForm::from_covector({q(1), q(0), q(0)})),
                  InputError);
  // the Reeb system of a contact form is square-solvable: rank dim
  CHECK(rank(reeb_system(h3->document.algebra, h3->document.form("eta"))) == 3);
}

TEST_CASE("random contact forms have consistent Reeb fields") {
  Rng rng(31);
  for (const auto* e : kct::contact_entries()) {
    const LieAlgebra& L = e->document.algebra;
    for (int t = 0; t < 8; ++t) {
      const auto eta = rng.form(L.dim(), 1, 0.8);
      if (!is_contact(L, eta).contact) {
        CHECK_THROWS_AS(reeb(L, eta), InputError);
        continue;
      }
      const Vector xi = reeb(L, eta);
      CHECK(evaluate(eta, {xi}) == q(1));
      const auto d = ce_differential(L, eta);
      for (std::size_t j = 0; j < L.dim(); ++j) CHECK(evaluate(d, {xi, L.basis_vector(j)}).is_zero());
    }
  }
}

TEST_CASE("X = eta(X) xi + HX recomposes exactly") {
  Rng rng(32);
  for (const auto* e : kct::contact_entries()) {
    const auto C = kct::catalog_contact(e->name);
    for (int t = 0; t < 10; ++t) {
      const Vector x = rng.vector(C.algebra.dim());
      const Decomposition d = decompose(C, x);
      CHECK(add(scale(d.reeb_component, C.reeb), d.horizontal) == x);
      CHECK(evaluate(C.eta, {d.horizontal}).is_zero());
      CHECK(d.reeb_component == evaluate(C.eta, {x}));
      CHECK(C.projector * x == d.horizontal);
    }
    CHECK(C.projector * C.projector == C.projector);
  }
}

TEST_CASE("complexification preserves the Reeb field") {
  for (const auto* e : kct::contact_entries()) {
    const auto C = kct::catalog_contact(e->name);
    const auto CC = complexify(C);
    CHECK(CC.algebra.is_complex());
    CHECK(CC.reeb == C.reeb);
    CHECK(CC.d_eta == C.d_eta);
  }
}
