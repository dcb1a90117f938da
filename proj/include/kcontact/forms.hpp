#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "kcontact/lie_algebra.hpp"
#include "kcontact/matrix.hpp"
#include "kcontact/scalar.hpp"

namespace kcontact {

using IndexTuple = std::vector<std::size_t>;

/// Alternating k-form stored on strictly increasing index tuples.
///
/// The basis form e_I* = e_{i1}* ^ ... ^ e_{ik}* evaluates to 1 on
/// (e_{i1}, ..., e_{ik}), i.e. evaluation is the determinant of the
/// coordinate minor. A form of degree dim+1 is allowed only as the
/// canonical zero form produced by differentiating a top-degree form.
class AlternatingForm {
 public:
  AlternatingForm(std::size_t dim, std::size_t degree);

  static AlternatingForm from_covector(const Vector& coefficients);
  /// Zero form of the given shape; convenience alias.
  static AlternatingForm zero(std::size_t dim, std::size_t degree) { return {dim, degree}; }

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  bool above_top_degree() const { return degree_ > dim_; }

  /// Adds value * e_{indices}*; indices may come in any order and are sorted
  /// with the matching sign. Repeated indices are rejected.
  void add_term(IndexTuple indices, const Scalar& value);

  /// Coefficient of a strictly increasing tuple.
  Scalar coefficient(const IndexTuple& sorted) const;
  /// Coefficient of an arbitrary tuple, extended by antisymmetry.
  Scalar signed_coefficient(IndexTuple indices) const;

  const std::map<IndexTuple, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;

  /// Coordinates of a 1-form.
  Vector covector() const;

  AlternatingForm& operator+=(const AlternatingForm& o);
  AlternatingForm& operator-=(const AlternatingForm& o);
  AlternatingForm& operator*=(const Scalar& s);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) { return a -= b; }
  friend AlternatingForm operator*(const Scalar& s, AlternatingForm a) { return a *= s; }

  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_shape(const AlternatingForm& o) const;

  std::size_t dim_;
  std::size_t degree_;
  std::map<IndexTuple, Scalar> terms_;  // zero coefficients are never stored
};

/// Sign of the permutation sorting the tuple, 0 if an index repeats.
int sort_with_sign(IndexTuple& indices);

Scalar evaluate(const AlternatingForm& form, std::span<const Vector> args);
Scalar evaluate(const AlternatingForm& form, std::initializer_list<Vector> args);

/// Shuffle-convention wedge: (e1* ^ e2*)(e1, e2) = 1.
AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b);

/// Chevalley-Eilenberg differential on left-invariant forms, normalised so
/// that d(kappa)(X, Y) = -1/2 kappa([X, Y]) on 1-forms:
///   d(kappa)(X_0..X_k) = 1/2 sum_{i<j} (-1)^{i+j} kappa([X_i, X_j], X_0..^i..^j..X_k).
/// The constant 1/2 in every degree keeps d a graded derivation of the
/// shuffle wedge.
AlternatingForm ce_differential(const LieAlgebra& L, const AlternatingForm& form);

struct ContactVerdict {
  bool contact;
  /// Coefficient of eta ^ (d eta)^n on e_1* ^ ... ^ e_{2n+1}*.
  Scalar top_coefficient;
};

/// eta ^ (d eta)^n != 0; requires odd dimension.
ContactVerdict is_contact(const LieAlgebra& L, const AlternatingForm& eta);

/// Gram-style matrix M(i, j) = kappa(e_i, e_j) of a 2-form.
Matrix<Scalar> form_matrix(const AlternatingForm& two_form);
AlternatingForm two_form_from_matrix(const Matrix<Scalar>& m);

/// Complex-linear extension; the coefficients carry over unchanged.
AlternatingForm complexify_form(const AlternatingForm& form);

}  // namespace kcontact
