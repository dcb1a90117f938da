#pragma once

#include <complex>
#include <string>
#include <vector>

#include "kcontact/contact.hpp"
#include "kcontact/polynomial.hpp"

namespace kcontact {

/// Monic minimal polynomial, found as the first linear dependency among
/// I, M, M^2, ... (exact).
ScalarPolynomial minimal_polynomial(const Endomorphism& m);

/// det(t I - M) by Faddeev-LeVerrier (exact).
ScalarPolynomial characteristic_polynomial(const Endomorphism& m);

/// p(M).
Endomorphism evaluate_polynomial(const ScalarPolynomial& p, const Endomorphism& m);

/// Squarefree minimal polynomial.
bool is_diagonalizable(const Endomorphism& m);

/// Roots of p in Q(i), each verified by exact evaluation. Candidates come
/// from a binary64 companion-matrix eigensolve followed by rational
/// reconstruction, so the list may miss roots with huge denominators; it
/// never contains a non-root.
std::vector<Scalar> gaussian_rational_roots(const ScalarPolynomial& p);

struct RootSpace {
  Scalar root;
  /// For the root 0 the basis starts with xi followed by a basis of g_0 ∩ H.
  std::vector<Vector> basis;
};

struct ApproxRootSpace {
  std::complex<double> root;
  std::vector<std::vector<std::complex<double>>> basis;
};

/// Eigenspace decomposition g = sum g_alpha of ad(xi) on a complex contact
/// Lie algebra with diagonalizable ad(xi).
struct RootDecomposition {
  ContactStructure contact;
  bool exact = true;
  std::vector<RootSpace> spaces;               // exact path, roots in lex order
  std::vector<ApproxRootSpace> approx_spaces;  // floating fallback
  std::string notice;                          // set on fallback
  /// Basis of g_0 ∩ H (exact path).
  std::vector<Vector> horizontal_zero_space;

  std::vector<Scalar> roots() const;
  const RootSpace* find(const Scalar& alpha) const;
};

/// Throws NotDiagonalizable when ad(xi) has a repeated factor in its
/// minimal polynomial. Falls back to binary64 eigenvectors (tolerance 1e-9)
/// when the spectrum is not contained in Q(i).
RootDecomposition root_decomposition(const ContactStructure& complex_contact);

struct GradedBracketReport {
  std::size_t pairs_checked = 0;
  /// Pairs with alpha + beta = 0 and d eta(X, Y) != 0 (allowed).
  std::size_t resonant_pairs = 0;
};

/// For every pair of root-space basis vectors X in g_alpha, Y in g_beta:
/// ad(xi)[X, Y] = (alpha + beta)[X, Y], and d eta(X, Y) = 0 unless
/// alpha + beta = 0. Any violation raises InvariantViolation listing all of
/// them. Requires an exact decomposition.
GradedBracketReport verify_graded_bracket(const RootDecomposition& rd);

struct DualPartner {
  Vector y;  // in g_{-alpha}
  Vector z;  // [X, Y] - xi, in g_0 ∩ H
  Scalar alpha;
};

/// Y in g_{-alpha} with eta([X, Y]) = 1, and Z = [X, Y] - xi. X must lie in
/// g_alpha and must not be a multiple of xi (xi brackets trivially with g_0).
DualPartner find_dual_partner(const RootDecomposition& rd, const Vector& x, const Scalar& alpha);

/// (d eta(x_i, y_j)) over bases of g_alpha ∩ H and g_{-alpha} ∩ H.
Matrix<Scalar> dual_pairing_matrix(const RootDecomposition& rd, const Scalar& alpha);

/// Basis vectors of g_alpha that lie in H (all of them for alpha != 0,
/// g_0 ∩ H for alpha = 0).
std::vector<Vector> horizontal_root_basis(const RootDecomposition& rd, const Scalar& alpha);

struct TheoremReport {
  std::size_t n = 0;
  bool diagonalizable = false;
  bool applicable = false;  // diagonalizable and n > 1
  std::vector<std::string> hypothesis_failures;
  bool ad_xi_zero = false;
  bool conclusion_verified = false;
  ScalarPolynomial minimal_polynomial;
  bool roots_exact = true;
  std::vector<Scalar> roots;
  std::vector<std::complex<double>> approx_roots;
};

/// Checks "diagonalizable ad(xi) and n > 1 imply ad(xi) = 0" on one complex
/// contact Lie algebra. If the hypotheses hold and ad(xi) != 0 this throws
/// InvariantViolation with a dump of the algebra; this does happen, e.g. on
/// su(2) + aff(1), where the implication is false.
TheoremReport verify_reeb_theorem(const ContactStructure& complex_contact);

std::string dump_contact(const ContactStructure& C);

}  // namespace kcontact
