#pragma once

#include <vector>

#include "kcontact/forms.hpp"
#include "kcontact/lie_algebra.hpp"

namespace kcontact {

/// A validated contact Lie algebra (g, eta, xi) with the splitting
/// g = H + <xi>, H = ker eta.
struct ContactStructure {
  LieAlgebra algebra;
  AlternatingForm eta;
  AlternatingForm d_eta;
  Vector reeb;
  /// 2n vectors spanning ker eta, from the kernel's row-echelon basis.
  std::vector<Vector> horizontal_basis;
  /// P = I - xi (x) eta, the projection onto H along xi.
  Endomorphism projector;

  std::size_t n() const { return (algebra.dim() - 1) / 2; }
  const LieAlgebra& lie() const { return algebra; }
};

/// Unique xi with eta(xi) = 1 and d eta(xi, e_j) = 0 for all j. Throws
/// InputError("no unique Reeb field") when the system is singular or
/// inconsistent, which happens exactly when eta is not contact.
Vector reeb(const LieAlgebra& L, const AlternatingForm& eta);

/// Coefficient matrix of the Reeb system: row 0 is eta, row 1 + j is
/// d eta(., e_j).
Matrix<Scalar> reeb_system(const LieAlgebra& L, const AlternatingForm& eta);

ContactStructure contact_structure(const LieAlgebra& L, const AlternatingForm& eta);

struct Decomposition {
  Scalar reeb_component;  // eta(X)
  Vector horizontal;      // P X
};

/// X = eta(X) xi + H X.
Decomposition decompose(const ContactStructure& C, const Vector& x);

/// Contact structure of the complexification; the Reeb field carries over.
ContactStructure complexify(const ContactStructure& C);

}  // namespace kcontact
