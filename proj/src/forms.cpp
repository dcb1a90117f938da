#include "kcontact/forms.hpp"

#include <algorithm>
#include <numeric>

#include "kcontact/errors.hpp"

namespace kcontact {

namespace {

/// Calls fn(tuple) for every strictly increasing tuple of length k in [0, n).
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  IndexTuple idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(static_cast<const IndexTuple&>(idx));
    if (k == 0) return;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

int sort_with_sign(IndexTuple& indices) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t a = 1; a < indices.size(); ++a) {
    for (std::size_t b = a; b > 0 && indices[b - 1] >= indices[b]; --b) {
      if (indices[b - 1] == indices[b]) return 0;
      std::swap(indices[b - 1], indices[b]);
      sign = -sign;
    }
  }
  for (std::size_t a = 1; a < indices.size(); ++a)
    if (indices[a - 1] == indices[a]) return 0;
  return sign;
}

AlternatingForm::AlternatingForm(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree) {
  if (degree > dim + 1) {
    throw InputError("form degree " + std::to_string(degree) + " exceeds dimension " +
                         std::to_string(dim),
                     "degree");
  }
}

AlternatingForm AlternatingForm::from_covector(const Vector& coefficients) {
  AlternatingForm f(coefficients.size(), 1);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (!coefficients[k].is_zero()) f.terms_[{k}] = coefficients[k];
  }
  return f;
}

void AlternatingForm::add_term(IndexTuple indices, const Scalar& value) {
  if (indices.size() != degree_) {
    throw InputError("term of arity " + std::to_string(indices.size()) + " in a " +
                         std::to_string(degree_) + "-form",
                     "degree");
  }
  for (auto i : indices) {
    if (i >= dim_) {
      throw InputError("form index " + std::to_string(i) + " out of range for dimension " +
                           std::to_string(dim_),
                       "index");
    }
  }
  const int sign = sort_with_sign(indices);
  if (sign == 0) throw InputError("repeated index in alternating form term", "index");
  if (value.is_zero()) return;
  Scalar& slot = terms_[indices];
  slot += sign > 0 ? value : -value;
  if (slot.is_zero()) terms_.erase(indices);
}

Scalar AlternatingForm::coefficient(const IndexTuple& sorted) const {
  const auto it = terms_.find(sorted);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar AlternatingForm::signed_coefficient(IndexTuple indices) const {
  const int sign = sort_with_sign(indices);
  if (sign == 0) return Scalar(0);
  const Scalar c = coefficient(indices);
  return sign > 0 ? c : -c;
}

bool AlternatingForm::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_real(); });
}

Vector AlternatingForm::covector() const {
  if (degree_ != 1) throw InputError("covector() needs a 1-form", "degree");
  Vector v(dim_, Scalar(0));
  for (const auto& [idx, c] : terms_) v[idx[0]] = c;
  return v;
}

void AlternatingForm::check_same_shape(const AlternatingForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) {
    throw InputError("forms of different dimension or degree", "degree");
  }
}

AlternatingForm& AlternatingForm::operator+=(const AlternatingForm& o) {
  check_same_shape(o);
  for (const auto& [idx, c] : o.terms_) {
    Scalar& slot = terms_[idx];
    slot += c;
    if (slot.is_zero()) terms_.erase(idx);
  }
  return *this;
}

AlternatingForm& AlternatingForm::operator-=(const AlternatingForm& o) {
  check_same_shape(o);
  for (const auto& [idx, c] : o.terms_) {
    Scalar& slot = terms_[idx];
    slot -= c;
    if (slot.is_zero()) terms_.erase(idx);
  }
  return *this;
}

AlternatingForm& AlternatingForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= s;
  return *this;
}

Scalar evaluate(const AlternatingForm& form, std::span<const Vector> args) {
  if (args.size() != form.degree()) {
    throw InputError("evaluating a " + std::to_string(form.degree()) + "-form on " +
                         std::to_string(args.size()) + " vectors",
                     "arity");
  }
  for (const auto& v : args) {
    if (v.size() != form.dim()) throw InputError("argument dimension mismatch", "dimension");
  }
  const std::size_t k = form.degree();
  Scalar total(0);
  for (const auto& [idx, c] : form.terms()) {
    Matrix<Scalar> minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t col = 0; col < k; ++col) minor(r, col) = args[col][idx[r]];
    const Scalar det = k == 0 ? Scalar(1) : determinant(std::move(minor));
    if (!det.is_zero()) total += c * det;
  }
  return total;
}

Scalar evaluate(const AlternatingForm& form, std::initializer_list<Vector> args) {
  return evaluate(form, std::span<const Vector>(args.begin(), args.size()));
}

AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b) {
  if (a.dim() != b.dim()) throw InputError("wedge of forms on different spaces", "dimension");
  if (a.degree() + b.degree() > a.dim()) {
    throw InputError("wedge degree " + std::to_string(a.degree() + b.degree()) +
                         " exceeds dimension " + std::to_string(a.dim()),
                     "degree");
  }
  AlternatingForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      IndexTuple joined(ia);
      joined.insert(joined.end(), ib.begin(), ib.end());
      IndexTuple probe(joined);
      if (sort_with_sign(probe) == 0) continue;
      out.add_term(std::move(joined), ca * cb);
    }
  }
  return out;
}

AlternatingForm ce_differential(const LieAlgebra& L, const AlternatingForm& form) {
  if (form.dim() != L.dim()) {
    throw InputError("form dimension does not match algebra '" + L.name() + "'", "dimension");
  }
  const std::size_t n = L.dim();
  const std::size_t k = form.degree();
  AlternatingForm out(n, k + 1);
  if (k + 1 > n || form.is_zero()) return out;

  const Scalar half = Scalar(Rational(1, 2));
  for_each_combination(n, k + 1, [&](const IndexTuple& tuple) {
    Scalar value(0);
    for (std::size_t a = 0; a < tuple.size(); ++a) {
      for (std::size_t b = a + 1; b < tuple.size(); ++b) {
        const Vector br = L.basis_bracket(tuple[a], tuple[b]);
        if (is_zero_vector(br)) continue;
        IndexTuple rest;
        rest.reserve(k);
        rest.push_back(0);  // slot for the bracket component
        for (std::size_t q = 0; q < tuple.size(); ++q)
          if (q != a && q != b) rest.push_back(tuple[q]);
        Scalar term(0);
        for (std::size_t m = 0; m < n; ++m) {
          if (br[m].is_zero()) continue;
          rest[0] = m;
          const Scalar c = form.signed_coefficient(rest);
          if (!c.is_zero()) term += br[m] * c;
        }
        if (term.is_zero()) continue;
        if ((a + b) % 2 == 0) {
          value += term;
        } else {
          value -= term;
        }
      }
    }
    if (!value.is_zero()) out.add_term(tuple, half * value);
  });
  return out;
}

ContactVerdict is_contact(const LieAlgebra& L, const AlternatingForm& eta) {
  if (L.dim() % 2 == 0) {
    throw InputError("contact requires odd dimension, got " + std::to_string(L.dim()),
                     "dimension");
  }
  if (eta.degree() != 1 || eta.dim() != L.dim()) {
    throw InputError("contact form must be a 1-form on the algebra", "degree");
  }
  const std::size_t n = (L.dim() - 1) / 2;
  const AlternatingForm d_eta = ce_differential(L, eta);
  AlternatingForm top = eta;
  for (std::size_t p = 0; p < n; ++p) top = wedge(top, d_eta);
  IndexTuple all(L.dim());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const Scalar c = top.coefficient(all);
  return {!c.is_zero(), c};
}

Matrix<Scalar> form_matrix(const AlternatingForm& two_form) {
  if (two_form.degree() != 2) throw InputError("form_matrix needs a 2-form", "degree");
  const std::size_t n = two_form.dim();
  Matrix<Scalar> m(n, n);
  for (const auto& [idx, c] : two_form.terms()) {
    m(idx[0], idx[1]) = c;
    m(idx[1], idx[0]) = -c;
  }
  return m;
}

AlternatingForm two_form_from_matrix(const Matrix<Scalar>& m) {
  if (!m.is_square()) throw InputError("2-form matrix must be square", "dimension");
  const std::size_t n = m.rows();
  AlternatingForm f(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m(i, i).is_zero()) throw InputError("2-form matrix has nonzero diagonal", "antisymmetry");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) != -m(j, i)) throw InputError("2-form matrix is not antisymmetric", "antisymmetry");
      f.add_term({i, j}, m(i, j));
    }
  }
  return f;
}

AlternatingForm complexify_form(const AlternatingForm& form) {
  if (!form.is_real()) throw InputError("complexify_form expects a real form", "field");
  return form;
}

}  // namespace kcontact
