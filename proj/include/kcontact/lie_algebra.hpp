#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "kcontact/matrix.hpp"
#include "kcontact/scalar.hpp"

namespace kcontact {

enum class Field { real, complex };

std::string to_string(Field f);

/// Coordinates on the ordered basis e_0, ..., e_{dim-1}.
using Vector = Vec<Scalar>;
/// Columns are the images of the basis vectors.
using Endomorphism = Matrix<Scalar>;

/// One stored structure-constant row: [e_i, e_j] = image, with i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vector image;
};

/// Finite-dimensional Lie algebra given by structure constants on a fixed
/// ordered basis. Only the pairs i < j are stored; [e_j, e_i] and [e_i, e_i]
/// are synthesized, so antisymmetry holds by construction. The Jacobi
/// identity is NOT enforced here; see check_jacobi.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, Field field, std::size_t dim,
             std::vector<std::string> labels = {}, std::vector<BracketEntry> brackets = {});

  /// Builds from a dense c[i][j][k] array, rejecting non-antisymmetric input
  /// with an InputError listing the offending pairs.
  static LieAlgebra from_dense(std::string name, Field field,
                               const std::vector<std::vector<Vector>>& c,
                               std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::string name, std::size_t dim, Field field = Field::real);

  const std::string& name() const { return name_; }
  Field field() const { return field_; }
  bool is_complex() const { return field_ == Field::complex; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] for any i, j.
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// c[i][j][k].
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// Nonzero entries with i < j, ascending.
  std::vector<BracketEntry> nonzero_brackets() const;

  bool is_abelian() const;

  Vector zero_vector() const { return Vector(dim_, Scalar(0)); }
  Vector basis_vector(std::size_t k) const { return unit_vector<Scalar>(dim_, k); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.upper_ == b.upper_;
  }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;  // requires i < j

  std::string name_;
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vector> upper_;  // dim*(dim-1)/2 rows, lexicographic (i, j)
};

void check_dim(const LieAlgebra& L, const Vector& v, const char* what = "vector");

/// Bilinear extension of the structure constants.
Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);

using Triple = std::array<std::size_t, 3>;

/// Basis triples i < j < k whose cyclic Jacobi sum is nonzero. Exact.
std::vector<Triple> check_jacobi(const LieAlgebra& L);

/// Matrix of ad(X) = [X, .], columns [X, e_j].
Endomorphism ad(const LieAlgebra& L, const Vector& x);

/// Same structure constants over the Gaussian rationals.
LieAlgebra complexify(const LieAlgebra& L);

/// Structure constants as c[i][j] vectors in the requested arithmetic.
template <class T>
std::vector<std::vector<Vec<T>>> structure_tensor(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<Vec<T>>> c(n, std::vector<Vec<T>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = L.basis_bracket(i, j);
      c[i][j].reserve(n);
      for (const auto& x : v) c[i][j].push_back(NumTraits<T>::from_exact(x));
    }
  return c;
}

std::string format_vector(const LieAlgebra& L, const Vector& v);

}  // namespace kcontact
