#include "kcontact/lie_algebra.hpp"

#include <sstream>

#include "kcontact/errors.hpp"

namespace kcontact {

std::string to_string(Field f) { return f == Field::real ? "real" : "complex"; }

LieAlgebra::LieAlgebra(std::string name, Field field, std::size_t dim,
                       std::vector<std::string> labels, std::vector<BracketEntry> brackets)
    : name_(std::move(name)), field_(field), dim_(dim), labels_(std::move(labels)) {
  if (dim_ == 0) throw InputError("Lie algebra dimension must be at least 1", "dimension");
  if (labels_.empty()) {
    for (std::size_t k = 0; k < dim_; ++k) labels_.push_back("e" + std::to_string(k + 1));
  }
  if (labels_.size() != dim_) {
    throw InputError("expected " + std::to_string(dim_) + " basis labels, got " +
                         std::to_string(labels_.size()),
                     "dimension");
  }
  upper_.assign(dim_ * (dim_ - 1) / 2, Vector(dim_, Scalar(0)));
  std::vector<bool> seen(upper_.size(), false);
  for (auto& b : brackets) {
    if (b.i >= dim_ || b.j >= dim_) {
      throw InputError("bracket index (" + std::to_string(b.i) + "," + std::to_string(b.j) +
                           ") out of range for dimension " + std::to_string(dim_),
                       "index");
    }
    if (b.i >= b.j) {
      throw InputError("bracket entries need i < j, got (" + std::to_string(b.i) + "," +
                           std::to_string(b.j) + ")",
                       "antisymmetry");
    }
    if (b.image.size() != dim_) throw InputError("bracket image has wrong length", "dimension");
    const auto idx = pair_index(b.i, b.j);
    if (seen[idx]) {
      throw InputError("duplicate bracket entry (" + std::to_string(b.i) + "," +
                           std::to_string(b.j) + ")",
                       "duplicate");
    }
    seen[idx] = true;
    for (const auto& x : b.image) {
      if (field_ == Field::real && !x.is_real()) {
        throw InputError("complex structure constant in a real Lie algebra", "field");
      }
    }
    upper_[idx] = std::move(b.image);
  }
}

LieAlgebra LieAlgebra::from_dense(std::string name, Field field,
                                  const std::vector<std::vector<Vector>>& c,
                                  std::vector<std::string> labels) {
  const std::size_t n = c.size();
  std::vector<BracketEntry> entries;
  std::ostringstream bad;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw InputError("structure constants are not n x n x n", "dimension");
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j].size() != n)
        throw InputError("structure constants are not n x n x n", "dimension");
      const Vector& ij = c[i][j];
      const Vector& ji = c[j][i];
      for (std::size_t k = 0; k < n; ++k) {
        if (i <= j && ij[k] != -ji[k]) {
          bad << " (" << i << "," << j << "," << k << ")";
        }
      }
      if (i < j && !is_zero_vector(ij)) entries.push_back({i, j, ij});
    }
  }
  if (!bad.str().empty()) {
    throw InputError("structure constants are not antisymmetric at" + bad.str(), "antisymmetry");
  }
  return LieAlgebra(std::move(name), field, n, std::move(labels), std::move(entries));
}

LieAlgebra LieAlgebra::abelian(std::string name, std::size_t dim, Field field) {
  return LieAlgebra(std::move(name), field, dim);
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // rows for i' < i contribute (dim-1) + (dim-2) + ... + (dim-i)
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw InputError("basis index out of range", "index");
  if (i == j) return zero_vector();
  if (i < j) return upper_[pair_index(i, j)];
  Vector v = upper_[pair_index(j, i)];
  for (auto& x : v) x = -x;
  return v;
}

Scalar LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Scalar(0);
  const Scalar& s = upper_[pair_index(std::min(i, j), std::max(i, j))].at(k);
  return i < j ? s : -s;
}

std::vector<BracketEntry> LieAlgebra::nonzero_brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& v = upper_[pair_index(i, j)];
      if (!is_zero_vector(v)) out.push_back({i, j, v});
    }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : upper_)
    if (!is_zero_vector(v)) return false;
  return true;
}

void check_dim(const LieAlgebra& L, const Vector& v, const char* what) {
  if (v.size() != L.dim()) {
    throw InputError(std::string(what) + " has " + std::to_string(v.size()) +
                         " coordinates, algebra '" + L.name() + "' has dimension " +
                         std::to_string(L.dim()),
                     "dimension");
  }
}

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  check_dim(L, x, "left bracket argument");
  check_dim(L, y, "right bracket argument");
  const std::size_t n = L.dim();
  Vector out = L.zero_vector();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar c = L.structure_constant(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

std::vector<Triple> check_jacobi(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Triple> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = L.basis_vector(i);
        const Vector ej = L.basis_vector(j);
        const Vector ek = L.basis_vector(k);
        Vector sum = bracket(L, L.basis_bracket(i, j), ek);
        sum = add(sum, bracket(L, L.basis_bracket(j, k), ei));
        sum = add(sum, bracket(L, L.basis_bracket(k, i), ej));
        if (!is_zero_vector(sum)) bad.push_back({i, j, k});
      }
  return bad;
}

Endomorphism ad(const LieAlgebra& L, const Vector& x) {
  check_dim(L, x, "ad argument");
  const std::size_t n = L.dim();
  std::vector<Vector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(bracket(L, x, L.basis_vector(j)));
  return Endomorphism::from_columns(cols, n);
}

LieAlgebra complexify(const LieAlgebra& L) {
  if (L.is_complex()) {
    throw InputError("algebra '" + L.name() + "' is already complex", "field");
  }
  return LieAlgebra(L.name() + "_C", Field::complex, L.dim(), L.labels(), L.nonzero_brackets());
}

std::string format_vector(const LieAlgebra& L, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const Scalar& c = v[k];
    std::string coef = c.pretty();
    if (!c.is_real() && sgn(c.re()) != 0) coef = "(" + coef + ")";
    if (coef == "1") {
      coef.clear();
    } else if (coef == "-1") {
      coef = "-";
    } else if (!coef.empty() && coef != "-") {
      coef += "*";
    }
    if (!first) {
      if (!coef.empty() && coef.front() == '-') {
        os << " - ";
        coef.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    os << coef << L.labels()[k];
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace kcontact
