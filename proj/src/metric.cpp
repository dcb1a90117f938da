#include "kcontact/metric.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kcontact/errors.hpp"
#include "kcontact/spectral.hpp"

namespace kcontact {

namespace {

template <class T>
Vec<T> convert(const Vector& v) {
  Vec<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(NumTraits<T>::from_exact(x));
  return out;
}

void require_real(const ContactStructure& C) {
  if (C.algebra.is_complex()) {
    throw InputError("metric geometry is defined on real contact algebras only", "field");
  }
}

template <class T>
T g_product(const Matrix<T>& G, const Vec<T>& u, const Vec<T>& v) {
  return dot(u, G * v);
}

Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

Matrix<double> from_eigen(const Eigen::MatrixXd& m) {
  Matrix<double> out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

}  // namespace

ExactMetric diagonal_metric(const std::vector<Scalar>& diag) {
  ExactMetric g{Matrix<Scalar>(diag.size(), diag.size())};
  for (std::size_t i = 0; i < diag.size(); ++i) g.gram(i, i) = diag[i];
  return g;
}

template <class T>
bool is_positive_definite(const Matrix<T>& g) {
  if (!g.is_square()) return false;
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    Matrix<T> minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
    const T det = determinant(std::move(minor));
    if constexpr (NumTraits<T>::exact) {
      if (!det.is_real() || sgn(det.re()) <= 0) return false;
    } else {
      if (!(det > 1e-12)) return false;
    }
  }
  return true;
}

template <class T>
void check_metric(std::size_t dim, const MetricData<T>& g) {
  const auto& G = g.gram;
  if (G.rows() != dim || G.cols() != dim) {
    throw InputError("metric is " + std::to_string(G.rows()) + "x" + std::to_string(G.cols()) +
                         ", algebra has dimension " + std::to_string(dim),
                     "dimension");
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if constexpr (NumTraits<T>::exact) {
        if (!G(i, j).is_real()) throw InputError("metric has complex entries", "metric");
        if (G(i, j) != G(j, i)) throw InputError("metric is not symmetric", "metric");
      } else {
        if (std::abs(G(i, j) - G(j, i)) > kFloatTolerance)
          throw InputError("metric is not symmetric", "metric");
      }
    }
  if (!is_positive_definite(G)) throw InputError("metric is not positive definite", "metric");
}

template <class T>
Connection<T> levi_civita(const LieAlgebra& L, const MetricData<T>& g) {
  const std::size_t n = L.dim();
  check_metric(n, g);
  const auto& G = g.gram;
  const auto ginv = inverse(G);
  if (!ginv) throw InputError("metric is singular", "metric");
  const auto c = structure_tensor<T>(L);
  // g(v, e_m) = sum_p v_p G(p, m)
  auto g_with_basis = [&](const Vec<T>& v, std::size_t m) {
    T acc(0);
    for (std::size_t p = 0; p < n; ++p) acc += v[p] * G(p, m);
    return acc;
  };
  const T minus_half = T(-1) / T(2);
  Connection<T> conn{std::vector<std::vector<Vec<T>>>(n, std::vector<Vec<T>>(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec<T> rhs(n, T(0));
      for (std::size_t k = 0; k < n; ++k) {
        rhs[k] = minus_half * (g_with_basis(c[j][k], i) + g_with_basis(c[i][k], j) +
                               g_with_basis(c[j][i], k));
      }
      conn.gamma[i][j] = *ginv * rhs;
    }
  return conn;
}

template <class T>
Matrix<T> compute_phi(const ContactStructure& C, const MetricData<T>& g) {
  require_real(C);
  check_metric(C.algebra.dim(), g);
  const auto ginv = inverse(g.gram);
  if (!ginv) throw InputError("metric is singular", "metric");
  return *ginv * form_matrix(C.d_eta).cast<T>();
}

template <class T>
AssociationCheck association_check(const ContactStructure& C, const MetricData<T>& g) {
  const Matrix<T> phi = compute_phi(C, g);
  const std::size_t n = C.algebra.dim();
  const Vec<T> xi = convert<T>(C.reeb);
  const Vec<T> eta = convert<T>(C.eta.covector());
  AssociationCheck out;
  out.reeb_dual = is_zero_vector(sub(g.gram * xi, eta));
  const Matrix<T> target = outer(xi, eta) - Matrix<T>::identity(n);
  out.phi_squared = (phi * phi - target).is_zero();
  return out;
}

template <class T>
Matrix<T> nabla_reeb(const ContactStructure& C, const Connection<T>& conn) {
  const std::size_t n = C.algebra.dim();
  const Vec<T> xi = convert<T>(C.reeb);
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (approx_zero(xi[j])) continue;
      for (std::size_t k = 0; k < n; ++k) out(k, i) += xi[j] * conn(i, j)[k];
    }
  return out;
}

namespace {

template <class T>
void assert_nabla_reeb_identity(const ContactStructure& C, const MetricData<T>& g, const Matrix<T>& phi,
                     const Matrix<T>& h, const Matrix<T>& nabla_xi) {
  const std::size_t n = C.algebra.dim();
  const Matrix<T> residual = nabla_xi + phi + phi * h;
  if (!residual.is_zero()) {
    throw InvariantViolation("nabla_X xi != -phi X - phi h X on algebra '" + C.algebra.name() + "'");
  }
  const Matrix<T> gh = g.gram * h;
  if (!(gh - gh.transpose()).is_zero()) {
    throw InvariantViolation("h is not g-symmetric on algebra '" + C.algebra.name() + "'");
  }
  if (!is_zero_vector(h * convert<T>(C.reeb))) {
    throw InvariantViolation("h xi != 0 on algebra '" + C.algebra.name() + "'");
  }
  (void)n;
}

}  // namespace

template <class T>
AssociatedGeometry<T> associated_geometry(const ContactStructure& C, const MetricData<T>& g) {
  require_real(C);
  const auto check = association_check(C, g);
  if (!check.associated()) {
    throw InputError(std::string("metric is not associated: ") +
                         (check.reeb_dual ? "phi^2 != -I + eta (x) xi" : "eta(X) != g(X, xi)"),
                     "not-associated");
  }
  const std::size_t n = C.algebra.dim();
  AssociatedGeometry<T> geo{C, g, compute_phi(C, g), Matrix<T>(n, n), levi_civita(C.algebra, g),
                            Matrix<T>(n, n)};
  geo.nabla_xi = nabla_reeb(C, geo.connection);
  geo.h = (geo.phi * geo.nabla_xi - Matrix<T>::identity(n)) * C.projector.cast<T>();
  assert_nabla_reeb_identity(C, g, geo.phi, geo.h, geo.nabla_xi);
  return geo;
}

template <class T>
Matrix<T> compute_h(const ContactStructure& C, const MetricData<T>& g) {
  return associated_geometry(C, g).h;
}

template <class T>
KContactCriteria kcontact_criteria(const ContactStructure& C, const MetricData<T>& g) {
  const Matrix<T> h = compute_h(C, g);
  KContactCriteria out;
  out.h_zero = h.is_zero();
  const Matrix<T> adxi = ad(C.algebra, C.reeb).cast<T>();
  std::vector<Vec<T>> basis;
  for (const auto& v : C.horizontal_basis) basis.push_back(convert<T>(v));
  out.ad_reeb_skew = true;
  for (std::size_t a = 0; a < basis.size() && out.ad_reeb_skew; ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      const T s = g_product(g.gram, adxi * basis[a], basis[b]) +
                  g_product(g.gram, basis[a], adxi * basis[b]);
      if (!approx_zero(s)) {
        out.ad_reeb_skew = false;
        break;
      }
    }
  return out;
}

template <class T>
bool is_kcontact(const ContactStructure& C, const MetricData<T>& g) {
  const auto crit = kcontact_criteria(C, g);
  if (crit.h_zero != crit.ad_reeb_skew) {
    throw InvariantViolation(std::string("K-contact criteria disagree on '") + C.algebra.name() +
                             "': h = 0 is " + (crit.h_zero ? "true" : "false") +
                             ", ad(xi)|H g-skew is " + (crit.ad_reeb_skew ? "true" : "false"));
  }
  return crit.h_zero;
}

Obstruction kcontact_obstruction(const ContactStructure& C) {
  require_real(C);
  Obstruction out;
  out.minimal_polynomial = minimal_polynomial(ad(C.algebra, C.reeb));
  const auto m = real_part_if_real(out.minimal_polynomial);
  if (!m) throw InvariantViolation("real ad(xi) has a non-real minimal polynomial");
  if (!is_squarefree(*m)) {
    out.obstructed = true;
    out.reason = "ad(xi) is not diagonalizable: minimal polynomial " + m->str() +
                 " is not squarefree (nontrivial Jordan block)";
    return out;
  }
  const auto test = purely_imaginary_roots(*m);
  if (!test.purely_imaginary) {
    out.obstructed = true;
    out.reason = test.reason;
  }
  return out;
}

Matrix<double> SkewNormalForm::assembled() const {
  const std::size_t n = 2 * blocks.size() + zero_count;
  Matrix<double> out(n, n);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    out(2 * k, 2 * k + 1) = blocks[k];
    out(2 * k + 1, 2 * k) = -blocks[k];
  }
  return out;
}

SkewNormalForm skew_normal_form(const Matrix<double>& input) {
  if (!input.is_square()) throw InputError("skew normal form needs a square matrix", "dimension");
  const std::size_t n = input.rows();
  if (max_abs(input + input.transpose()) > 1e-12) {
    throw InputError("matrix is not skew-symmetric within 1e-12", "not-skew");
  }
  SkewNormalForm out;
  if (n == 0) return out;
  const Eigen::MatrixXd B = to_eigen(input);
  Eigen::RealSchur<Eigen::MatrixXd> schur(B);
  const Eigen::MatrixXd& U = schur.matrixU();
  const Eigen::MatrixXd& T = schur.matrixT();
  const double zero_tol = 1e-12 * std::max(1.0, B.cwiseAbs().maxCoeff());

  struct Pair {
    double b;
    Eigen::VectorXd first, second;
  };
  std::vector<Pair> pairs;
  std::vector<Eigen::VectorXd> zeros;
  const auto nn = static_cast<Eigen::Index>(n);
  for (Eigen::Index k = 0; k < nn;) {
    if (k + 1 < nn && T(k + 1, k) != 0.0) {
      const double upper = T(k, k + 1);
      const double b = 0.5 * (std::abs(upper) + std::abs(T(k + 1, k)));
      if (b <= zero_tol) {
        zeros.push_back(U.col(k));
        zeros.push_back(U.col(k + 1));
      } else if (upper > 0) {
        pairs.push_back({b, U.col(k), U.col(k + 1)});
      } else {
        pairs.push_back({b, U.col(k + 1), U.col(k)});
      }
      k += 2;
    } else {
      zeros.push_back(U.col(k));
      k += 1;
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.b > b.b; });

  Eigen::MatrixXd Q(nn, nn);
  Eigen::Index row = 0;
  for (const auto& p : pairs) {
    out.blocks.push_back(p.b);
    Q.row(row++) = p.first.transpose();
    Q.row(row++) = p.second.transpose();
  }
  for (const auto& z : zeros) Q.row(row++) = z.transpose();
  out.zero_count = zeros.size();
  out.q = from_eigen(Q);

  const double orth = (Q * Q.transpose() - Eigen::MatrixXd::Identity(nn, nn)).cwiseAbs().maxCoeff();
  const double recon = (Q * B * Q.transpose() - to_eigen(out.assembled())).cwiseAbs().maxCoeff();
  if (orth > 1e-12 || recon > 1e-10) {
    throw InvariantViolation("skew normal form residual too large (orthogonality " +
                             std::to_string(orth) + ", reconstruction " + std::to_string(recon) +
                             ")");
  }
  return out;
}

Matrix<Scalar> horizontal_form_matrix(const ContactStructure& C) {
  const auto& hb = C.horizontal_basis;
  Matrix<Scalar> a(hb.size(), hb.size());
  for (std::size_t i = 0; i < hb.size(); ++i)
    for (std::size_t j = 0; j < hb.size(); ++j) a(i, j) = evaluate(C.d_eta, {hb[i], hb[j]});
  return a;
}

template <class T>
MetricData<T> metric_from_horizontal_block(const ContactStructure& C, const Matrix<T>& block) {
  require_real(C);
  const std::size_t dim = C.algebra.dim();
  const std::size_t h = C.horizontal_basis.size();
  if (block.rows() != h || block.cols() != h) {
    throw InputError("horizontal block must be " + std::to_string(h) + "x" + std::to_string(h),
                     "dimension");
  }
  std::vector<Vec<T>> cols;
  for (const auto& v : C.horizontal_basis) cols.push_back(convert<T>(v));
  cols.push_back(convert<T>(C.reeb));
  const auto einv = inverse(Matrix<T>::from_columns(cols, dim));
  if (!einv) throw InvariantViolation("horizontal basis and xi are not a basis");
  Matrix<T> adapted(dim, dim);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) adapted(i, j) = block(i, j);
  adapted(h, h) = T(1);
  Matrix<T> G = einv->transpose() * adapted * *einv;
  if constexpr (!NumTraits<T>::exact) {
    G = (G + G.transpose()) * 0.5;
  }
  return {std::move(G)};
}

FloatMetric construct_associated_metric(const ContactStructure& C) {
  require_real(C);
  const Eigen::MatrixXd A = to_eigen(horizontal_form_matrix(C).cast<double>());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A.transpose() * A);
  const Eigen::MatrixXd P = solver.operatorSqrt();
  FloatMetric g = metric_from_horizontal_block(C, from_eigen(P));
  const auto check = association_check(C, g);
  if (!check.associated()) {
    throw InvariantViolation("polar construction did not produce an associated metric within 1e-9");
  }
  return g;
}

Matrix<Scalar> darboux_basis(const ContactStructure& C) {
  const Matrix<Scalar> A = horizontal_form_matrix(C);
  const std::size_t m = A.rows();
  auto omega = [&](const Vector& u, const Vector& v) { return dot(u, A * v); };
  std::vector<Vector> pool;
  for (std::size_t k = 0; k < m; ++k) pool.push_back(unit_vector<Scalar>(m, k));
  std::vector<Vector> out;
  while (!pool.empty()) {
    Vector u = pool.front();
    pool.erase(pool.begin());
    auto it = std::find_if(pool.begin(), pool.end(),
                           [&](const Vector& w) { return !omega(u, w).is_zero(); });
    if (it == pool.end()) throw InvariantViolation("d eta is degenerate on H");
    Vector v = scale(Scalar(1) / omega(u, *it), *it);
    pool.erase(it);
    for (auto& w : pool) {
      const Scalar wv = omega(w, v);
      const Scalar wu = omega(w, u);
      w = add(sub(w, scale(wv, u)), scale(wu, v));
    }
    out.push_back(std::move(u));
    out.push_back(std::move(v));
  }
  return Matrix<Scalar>::from_columns(out, m);
}

ExactMetric darboux_associated_metric(const ContactStructure& C) {
  require_real(C);
  const auto binv = inverse(darboux_basis(C));
  if (!binv) throw InvariantViolation("Darboux basis is singular");
  const Matrix<Scalar> block = binv->transpose() * *binv;
  return metric_from_horizontal_block(C, block);
}

Matrix<Scalar> compatible_complex_structure(const AlternatingForm& omega, const ExactMetric& k) {
  const std::size_t n = omega.dim();
  check_metric(n, k);
  const Matrix<Scalar> W = form_matrix(omega);
  if (rank(W) < n) throw InputError("omega is degenerate", "degenerate");
  const auto kinv = inverse(k.gram);
  if (!kinv) throw InputError("metric is singular", "metric");
  return *kinv * W;
}

bool symplectic_is_associated(const LieAlgebra& s, const AlternatingForm& omega,
                              const ExactMetric& k) {
  if (omega.dim() != s.dim() || omega.degree() != 2) {
    throw InputError("omega must be a 2-form on the algebra", "degree");
  }
  const Matrix<Scalar> J = compatible_complex_structure(omega, k);
  return J * J == Matrix<Scalar>::identity(s.dim()) * Scalar(-1);
}

#define KCONTACT_INSTANTIATE(T)                                                              \
  template bool is_positive_definite<T>(const Matrix<T>&);                                   \
  template void check_metric<T>(std::size_t, const MetricData<T>&);                          \
  template Connection<T> levi_civita<T>(const LieAlgebra&, const MetricData<T>&);            \
  template Matrix<T> compute_phi<T>(const ContactStructure&, const MetricData<T>&);          \
  template AssociationCheck association_check<T>(const ContactStructure&,                    \
                                                 const MetricData<T>&);                      \
  template Matrix<T> nabla_reeb<T>(const ContactStructure&, const Connection<T>&);           \
  template Matrix<T> compute_h<T>(const ContactStructure&, const MetricData<T>&);            \
  template KContactCriteria kcontact_criteria<T>(const ContactStructure&,                    \
                                                 const MetricData<T>&);                      \
  template bool is_kcontact<T>(const ContactStructure&, const MetricData<T>&);               \
  template AssociatedGeometry<T> associated_geometry<T>(const ContactStructure&,             \
                                                        const MetricData<T>&);               \
  template MetricData<T> metric_from_horizontal_block<T>(const ContactStructure&,            \
                                                         const Matrix<T>&);

KCONTACT_INSTANTIATE(Scalar)
KCONTACT_INSTANTIATE(double)

#undef KCONTACT_INSTANTIATE

}  // namespace kcontact
