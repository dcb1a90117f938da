#pragma once

#include <string>
#include <vector>

#include "kcontact/contact.hpp"
#include "kcontact/matrix.hpp"
#include "kcontact/polynomial.hpp"

namespace kcontact {

/// Inner product g(X, Y) = X^T G Y. Exact metrics use Scalar (real values
/// only); metrics produced by the polar construction use binary64.
template <class T>
struct MetricData {
  Matrix<T> gram;
};

using ExactMetric = MetricData<Scalar>;
using FloatMetric = MetricData<double>;

ExactMetric diagonal_metric(const std::vector<Scalar>& diag);

/// Sylvester criterion (exact), or leading minors > 1e-12 in binary64.
template <class T>
bool is_positive_definite(const Matrix<T>& g);

/// Symmetric, positive definite, matching dimension. InputError otherwise.
template <class T>
void check_metric(std::size_t dim, const MetricData<T>& g);

/// Levi-Civita connection of a left-invariant metric:
/// gamma[i][j] = nabla_{e_i} e_j.
template <class T>
struct Connection {
  std::vector<std::vector<Vec<T>>> gamma;
  const Vec<T>& operator()(std::size_t i, std::size_t j) const { return gamma[i][j]; }
};

template <class T>
Connection<T> levi_civita(const LieAlgebra& L, const MetricData<T>& g);

/// The unique phi with g(X, phi Y) = d eta(X, Y): phi = G^{-1} D.
template <class T>
Matrix<T> compute_phi(const ContactStructure& C, const MetricData<T>& g);

struct AssociationCheck {
  bool reeb_dual = false;    // eta(X) = g(X, xi)
  bool phi_squared = false;  // phi^2 = -I + xi (x) eta
  bool associated() const { return reeb_dual && phi_squared; }
};

template <class T>
AssociationCheck association_check(const ContactStructure& C, const MetricData<T>& g);

template <class T>
bool is_associated(const ContactStructure& C, const MetricData<T>& g) {
  return association_check(C, g).associated();
}

/// Columns nabla_{e_i} xi.
template <class T>
Matrix<T> nabla_reeb(const ContactStructure& C, const Connection<T>& conn);

/// h = (phi nabla xi - I) P, i.e. hX = phi(nabla_X xi) - X on H and h xi = 0.
/// Asserts nabla_X xi = -phi X - phi h X, g-symmetry of h, and h xi = 0.
template <class T>
Matrix<T> compute_h(const ContactStructure& C, const MetricData<T>& g);

struct KContactCriteria {
  bool h_zero = false;
  bool ad_reeb_skew = false;  // g(ad(xi)X, Y) + g(X, ad(xi)Y) = 0 on H
};

/// Both K-contact criteria, without asserting agreement.
template <class T>
KContactCriteria kcontact_criteria(const ContactStructure& C, const MetricData<T>& g);

/// Shared verdict of the two criteria; disagreement is an InvariantViolation.
template <class T>
bool is_kcontact(const ContactStructure& C, const MetricData<T>& g);

template <class T>
struct AssociatedGeometry {
  ContactStructure contact;
  MetricData<T> metric;
  Matrix<T> phi;
  Matrix<T> h;
  Connection<T> connection;
  Matrix<T> nabla_xi;
};

/// Assembles phi, h and the connection after checking association.
template <class T>
AssociatedGeometry<T> associated_geometry(const ContactStructure& C, const MetricData<T>& g);

struct Obstruction {
  bool obstructed = false;
  std::string reason;
  ScalarPolynomial minimal_polynomial;
};

/// Necessary condition for a K-contact metric: ad(xi) diagonalizable over C
/// with purely imaginary spectrum, decided exactly (squarefree test and
/// Sturm sequences). NoObstruction does not imply existence.
Obstruction kcontact_obstruction(const ContactStructure& C);

/// Q B Q^T = blockdiag([[0, b_1], [-b_1, 0]], ..., 0, ..., 0).
struct SkewNormalForm {
  Matrix<double> q;            // orthogonal, rows are the adapted basis
  std::vector<double> blocks;  // descending, > 0
  std::size_t zero_count = 0;

  Matrix<double> assembled() const;
};

/// Requires max |B + B^T| <= 1e-12. Postconditions: |QQ^T - I| <= 1e-12 and
/// |QBQ^T - N| <= 1e-10 (max-entry norms).
SkewNormalForm skew_normal_form(const Matrix<double>& b);

/// A_ab = d eta(h_a, h_b) on the horizontal basis.
Matrix<Scalar> horizontal_form_matrix(const ContactStructure& C);

/// Metric equal to block on H (in horizontal-basis coordinates), with
/// g(xi, xi) = 1 and g(xi, H) = 0.
template <class T>
MetricData<T> metric_from_horizontal_block(const ContactStructure& C, const Matrix<T>& block);

/// Polar construction: seed metric making (horizontal basis, xi)
/// orthonormal, A = phi_0 P, g|_H = P. Binary64; associated within 1e-9.
FloatMetric construct_associated_metric(const ContactStructure& C);

/// Exact associated metric from a symplectic (Darboux) basis of (H, d eta):
/// the Darboux basis together with xi is declared orthonormal.
ExactMetric darboux_associated_metric(const ContactStructure& C);

/// Darboux basis (u_1, v_1, ..., u_n, v_n) of H in horizontal coordinates,
/// d eta(u_k, v_k) = 1.
Matrix<Scalar> darboux_basis(const ContactStructure& C);

/// J with k(X, JY) = omega(X, Y). InputError if omega is degenerate.
Matrix<Scalar> compatible_complex_structure(const AlternatingForm& omega, const ExactMetric& k);

/// True iff the candidate J satisfies J^2 = -I exactly.
bool symplectic_is_associated(const LieAlgebra& s, const AlternatingForm& omega,
                              const ExactMetric& k);

}  // namespace kcontact
