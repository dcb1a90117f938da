#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kcontact/scalar.hpp"

namespace kcontact {

template <class T>
using Vec = std::vector<T>;

/// Arithmetic policy. Exact scalars compare with zero tolerance; binary64
/// uses kFloatTolerance for identity checks and a relative pivot threshold
/// during elimination.
template <class T>
struct NumTraits;

inline constexpr double kFloatTolerance = 1e-9;

template <>
struct NumTraits<Scalar> {
  static constexpr bool exact = true;
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  static double magnitude(const Scalar& x) { return std::abs(x.to_complex()); }
  static Scalar from_exact(const Scalar& x) { return x; }
};

template <>
struct NumTraits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return std::abs(x) <= kFloatTolerance; }
  static double magnitude(double x) { return std::abs(x); }
  static double from_exact(const Scalar& x) { return x.to_double(); }
};

template <class T>
bool approx_zero(const T& x) {
  return NumTraits<T>::is_zero(x);
}

/// Dense row-major matrix. Columns are images of basis vectors when the
/// matrix represents an endomorphism.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<T> column(std::size_t c) const {
    Vec<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vec<T> row(std::size_t r) const {
    return Vec<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!approx_zero(x)) return false;
    return true;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        out(r, c) = NumTraits<U>::from_exact((*this)(r, c));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (NumTraits<T>::exact && approx_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// ---- vector helpers -------------------------------------------------------

template <class T>
Vec<T> unit_vector(std::size_t dim, std::size_t k) {
  Vec<T> v(dim, T(0));
  v.at(k) = T(1);
  return v;
}

template <class T>
Vec<T> add(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec<T> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

template <class T>
Vec<T> sub(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec<T> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

template <class T>
Vec<T> scale(const T& s, Vec<T> v) {
  for (auto& x : v) x *= s;
  return v;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class T>
bool is_zero_vector(const Vec<T>& v) {
  for (const auto& x : v)
    if (!approx_zero(x)) return false;
  return true;
}

template <class T>
Matrix<T> outer(const Vec<T>& col, const Vec<T>& row) {
  Matrix<T> m(col.size(), row.size());
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = col[i] * row[j];
  return m;
}

/// Largest absolute entry.
template <class T>
double max_abs(const Matrix<T>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      best = std::max(best, NumTraits<T>::magnitude(m(i, j)));
  return best;
}

// ---- elimination ----------------------------------------------------------

template <class T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form. Exact scalars take the first nonzero entry as
/// pivot (deterministic); binary64 uses partial pivoting with a threshold
/// relative to the largest input entry.
template <class T>
RowEchelon<T> rref(Matrix<T> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const double threshold = NumTraits<T>::exact ? 0.0 : 1e-12 * std::max(1.0, max_abs(m));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    if constexpr (NumTraits<T>::exact) {
      for (std::size_t i = r; i < rows; ++i)
        if (!m(i, c).is_zero()) {
          best = i;
          break;
        }
    } else {
      double best_mag = threshold;
      for (std::size_t i = r; i < rows; ++i) {
        const double mag = NumTraits<T>::magnitude(m(i, c));
        if (mag > best_mag) {
          best_mag = mag;
          best = i;
        }
      }
    }
    if (best == rows) {
      if constexpr (!NumTraits<T>::exact) {
        for (std::size_t i = r; i < rows; ++i) m(i, c) = T(0);
      }
      continue;
    }
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const T f = m(i, c);
      if (NumTraits<T>::exact ? approx_zero(f) : f == T(0)) continue;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Kernel basis from the reduced row-echelon form, one vector per free
/// column in ascending order. Exact vectors are scaled so their first
/// nonzero coordinate is 1.
template <class T>
std::vector<Vec<T>> nullspace(const Matrix<T>& m) {
  const auto ech = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    if constexpr (NumTraits<T>::exact) {
      for (const auto& x : v) {
        if (!x.is_zero()) {
          const T inv = T(1) / x;
          for (auto& y : v) y *= inv;
          break;
        }
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique solution of A x = b, or nullopt when inconsistent or
/// underdetermined.
template <class T>
std::optional<Vec<T>> solve_unique(const Matrix<T>& a, const Vec<T>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = rref(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  if (ech.pivots.size() != a.cols()) return std::nullopt;
  Vec<T> x(a.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  const auto ech = rref(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    if constexpr (NumTraits<T>::exact) {
      for (std::size_t i = c; i < n; ++i)
        if (!m(i, c).is_zero()) {
          piv = i;
          break;
        }
    } else {
      double best = 0.0;
      for (std::size_t i = c; i < n; ++i)
        if (std::abs(m(i, c)) > best) {
          best = std::abs(m(i, c));
          piv = i;
        }
    }
    if (piv == n) return T(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      const T f = m(i, c) * inv;
      if (f == T(0)) continue;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Coefficients of v on the given independent vectors; nullopt when v is not
/// in their span.
template <class T>
std::optional<Vec<T>> coordinates_in(const std::vector<Vec<T>>& basis, const Vec<T>& v) {
  if (basis.empty()) {
    if (is_zero_vector(v)) return Vec<T>{};
    return std::nullopt;
  }
  return solve_unique(Matrix<T>::from_columns(basis, v.size()), v);
}

}  // namespace kcontact
