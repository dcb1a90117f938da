#pragma once

// Independent oracles and seeded generators shared by the test binaries.
// The oracles deliberately avoid the library's evaluation and differential
// code paths: everything is expanded over full permutation groups.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kcontact/catalog.hpp"
#include "kcontact/contact.hpp"
#include "kcontact/forms.hpp"
#include "kcontact/lie_algebra.hpp"
#include "kcontact/metric.hpp"

namespace kct {

using namespace kcontact;

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

/// kappa(v_1, ..., v_k) = sum_sigma sgn(sigma) sum_I c_I prod_m v_sigma(m)[I_m].
inline Scalar oracle_evaluate(const AlternatingForm& kappa, const std::vector<Vector>& args) {
  const std::size_t k = args.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(0);
  do {
    const int s = permutation_sign(perm);
    for (const auto& [idx, c] : kappa.terms()) {
      Scalar prod = c;
      for (std::size_t m = 0; m < k && !prod.is_zero(); ++m) prod *= args[perm[m]][idx[m]];
      total += s > 0 ? prod : -prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Chevalley-Eilenberg differential with the uniform 1/2 normalisation,
/// evaluated tuple by tuple: d kappa(X_0..X_k) =
/// 1/2 sum_{i<j} (-1)^{i+j} kappa([X_i, X_j], X_0, .., ^i, .., ^j, .., X_k).
inline Scalar oracle_d_value(const LieAlgebra& L, const AlternatingForm& kappa,
                             const std::vector<Vector>& xs) {
  Scalar total(0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      std::vector<Vector> args{bracket(L, xs[i], xs[j])};
      for (std::size_t m = 0; m < xs.size(); ++m)
        if (m != i && m != j) args.push_back(xs[m]);
      const Scalar v = kappa.degree() == 0 ? Scalar(0) : oracle_evaluate(kappa, args);
      total += ((i + j) % 2 == 0) ? v : -v;
    }
  return total * Scalar(Rational(1, 2));
}

inline void for_each_increasing(std::size_t n, std::size_t k,
                                const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t m = pos; m < k; ++m) idx[m] = idx[m - 1] + 1;
  }
}

/// Oracle coefficients of d kappa on every increasing basis tuple.
inline std::map<std::vector<std::size_t>, Scalar> oracle_d(const LieAlgebra& L,
                                                          const AlternatingForm& kappa) {
  std::map<std::vector<std::size_t>, Scalar> out;
  for_each_increasing(L.dim(), kappa.degree() + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> xs;
    for (auto i : idx) xs.push_back(L.basis_vector(i));
    const Scalar v = oracle_d_value(L, kappa, xs);
    if (!v.is_zero()) out[idx] = v;
  });
  return out;
}

/// Coefficient of eta ^ (d eta)^n on e_1 ^ ... ^ e_{2n+1}, expanded over
/// the full symmetric group: the shuffle product counts each term 2^n times.
inline Scalar oracle_top_coefficient(const LieAlgebra& L, const Vector& eta) {
  const std::size_t dim = L.dim();
  const std::size_t n = (dim - 1) / 2;
  auto d_eta = [&](std::size_t a, std::size_t b) {
    return Scalar(Rational(-1, 2)) * dot(eta, L.basis_bracket(a, b));
  };
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(0);
  do {
    Scalar prod = eta[perm[0]];
    for (std::size_t p = 0; p < n && !prod.is_zero(); ++p) prod *= d_eta(perm[2 * p + 1], perm[2 * p + 2]);
    total += permutation_sign(perm) > 0 ? prod : -prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / Scalar(1L << n);
}

/// Brute-force Jacobi over all ordered triples; reports sorted triples.
inline std::set<std::array<std::size_t, 3>> oracle_jacobi(const LieAlgebra& L) {
  std::set<std::array<std::size_t, 3>> bad;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector a = L.basis_vector(i), b = L.basis_vector(j), c = L.basis_vector(k);
        Vector s = add(add(bracket(L, a, bracket(L, b, c)), bracket(L, b, bracket(L, c, a))),
                       bracket(L, c, bracket(L, a, b)));
        if (!is_zero_vector(s)) {
          std::array<std::size_t, 3> t{i, j, k};
          std::sort(t.begin(), t.end());
          bad.insert(t);
        }
      }
  return bad;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

  Scalar rational(long num = 5, long den = 4) {
    return Scalar(Rational(integer(-num, num), integer(1, den)));
  }
  Scalar gaussian(long num = 3, long den = 3) {
    return Scalar(Rational(integer(-num, num), integer(1, den)), Rational(integer(-num, num), integer(1, den)));
  }

  Vector vector(std::size_t dim, bool complex = false) {
    Vector v;
    for (std::size_t k = 0; k < dim; ++k) v.push_back(complex ? gaussian() : rational());
    return v;
  }

  /// Random k-form; each basis term present with probability density.
  AlternatingForm form(std::size_t dim, std::size_t degree, double density = 0.6, bool complex = false) {
    AlternatingForm f(dim, degree);
    if (degree == 0) return f;
    for_each_increasing(dim, degree, [&](const std::vector<std::size_t>& idx) {
      if (coin(density)) {
        const Scalar c = complex ? gaussian() : rational();
        if (!c.is_zero()) f.add_term(idx, c);
      }
    });
    return f;
  }

  std::mt19937_64& engine() { return eng_; }

  Scalar rational_nonzero(long num, long den) {
    Scalar s(0);
    while (s.is_zero()) s = rational(num, den);
    return s;
  }

 private:
  std::mt19937_64 eng_;
};

/// Basis of the closed 2-forms: nullspace of d on the basis 2-forms.
inline std::vector<AlternatingForm> closed_two_form_basis(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<std::size_t>> pairs, triples;
  for_each_increasing(n, 2, [&](const std::vector<std::size_t>& idx) { pairs.push_back(idx); });
  for_each_increasing(n, 3, [&](const std::vector<std::size_t>& idx) { triples.push_back(idx); });
  Matrix<Scalar> d(std::max<std::size_t>(triples.size(), 1), pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    AlternatingForm f(n, 2);
    f.add_term(pairs[c], Scalar(1));
    const auto df = oracle_d(L, f);
    for (std::size_t r = 0; r < triples.size(); ++r) {
      auto it = df.find(triples[r]);
      if (it != df.end()) d(r, c) = it->second;
    }
  }
  std::vector<AlternatingForm> out;
  for (const auto& v : nullspace(d)) {
    AlternatingForm f(n, 2);
    for (std::size_t c = 0; c < pairs.size(); ++c)
      if (!v[c].is_zero()) f.add_term(pairs[c], v[c]);
    out.push_back(std::move(f));
  }
  return out;
}

inline bool oracle_closed(const LieAlgebra& L, const AlternatingForm& w) { return oracle_d(L, w).empty(); }

inline bool nondegenerate(const AlternatingForm& w) { return rank(form_matrix(w)) == w.dim(); }

/// Nondegenerate 2-form; closed ones are random combinations of the closed
/// basis, the others are unrestricted random forms.
inline AlternatingForm random_nondegenerate_two_form(const LieAlgebra& L, Rng& rng, bool closed) {
  const auto basis = closed_two_form_basis(L);
  while (true) {
    AlternatingForm w(L.dim(), 2);
    if (closed) {
      for (const auto& b : basis) w += rng.rational(3, 2) * b;
    } else {
      w = rng.form(L.dim(), 2, 0.7);
    }
    if (nondegenerate(w)) return w;
  }
}

inline std::vector<const CatalogEntry*> contact_entries() {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (e.kind == EntryKind::contact) out.push_back(&e);
  return out;
}

inline std::vector<const CatalogEntry*> symplectic_entries() {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (e.kind == EntryKind::symplectic) out.push_back(&e);
  return out;
}

inline ContactStructure catalog_contact(const std::string& name) {
  const auto* e = find_catalog_entry(name);
  return contact_structure(e->document.algebra, e->document.form("eta"));
}

/// Exact associated metric: the Darboux metric conjugated by `steps`
/// symplectic transvections x -> x + c omega(v, x) v of (H, d eta).
inline ExactMetric random_associated_metric(const ContactStructure& C, Rng& rng, int steps) {
  const Matrix<Scalar> A = horizontal_form_matrix(C);
  const std::size_t m = A.rows();
  const auto binv = *inverse(darboux_basis(C));
  Matrix<Scalar> S = binv.transpose() * binv;
  for (int s = 0; s < steps; ++s) {
    Vector v;
    for (std::size_t k = 0; k < m; ++k) v.push_back(Scalar(rng.integer(-1, 1)));
    const Scalar c(Rational(rng.integer(-2, 2), rng.integer(1, 2)));
    const Matrix<Scalar> M = Matrix<Scalar>::identity(m) + outer(v, A.transpose() * v) * c;
    S = M.transpose() * S * M;
  }
  return metric_from_horizontal_block(C, S);
}

/// Catalog metric, Darboux metric, `extra` random exact metrics.
inline std::vector<ExactMetric> exact_metrics(const CatalogEntry& e, const ContactStructure& C,
                                              Rng& rng, int extra) {
  std::vector<ExactMetric> out;
  for (const auto& [name, g] : e.document.metrics) out.push_back(g);
  out.push_back(darboux_associated_metric(C));
  for (int k = 0; k < extra; ++k) out.push_back(random_associated_metric(C, rng, 1 + k % 3));
  return out;
}

}  // namespace kct
