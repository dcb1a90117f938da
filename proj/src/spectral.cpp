#include "kcontact/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "kcontact/errors.hpp"

namespace kcontact {

namespace {

Vector flatten(const Endomorphism& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

void require_square(const Endomorphism& m) {
  if (!m.is_square() || m.rows() == 0) throw InputError("expected a nonempty square matrix", "dimension");
}

/// Best rational approximation with bounded denominator (continued
/// fractions), or nullopt when none is within tol.
std::optional<Rational> reconstruct(double x, long max_den = 1000000, double tol = 1e-7) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool neg = x < 0;
  double r = std::abs(x);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = r;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(frac);
    if (a > 1e12) break;
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0;
    const long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - r) < 1e-13 * std::max(1.0, r)) break;
    const double rem = frac - a;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - r) > tol * std::max(1.0, r))
    return std::nullopt;
  Rational q(p1, q1);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Eigen::MatrixXcd to_eigen(const Endomorphism& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  return out;
}

std::vector<Scalar> sorted_unique(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string format_matrix(const Endomorphism& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).pretty();
    os << "]\n";
  }
  return os.str();
}

}  // namespace

ScalarPolynomial minimal_polynomial(const Endomorphism& m) {
  require_square(m);
  const std::size_t n = m.rows();
  std::vector<Vector> powers{flatten(Endomorphism::identity(n))};
  Endomorphism current = Endomorphism::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    const Vector target = flatten(current);
    if (auto coeffs = coordinates_in(powers, target)) {
      // M^k = sum c_j M^j  =>  m(t) = t^k - sum c_j t^j
      std::vector<Scalar> c(k + 1, Scalar(0));
      for (std::size_t j = 0; j < k; ++j) c[j] = -(*coeffs)[j];
      c[k] = Scalar(1);
      return ScalarPolynomial(std::move(c));
    }
    powers.push_back(target);
  }
  throw InvariantViolation("no polynomial of degree <= n annihilates the matrix");
}

ScalarPolynomial characteristic_polynomial(const Endomorphism& m) {
  require_square(m);
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = Scalar(1);
  Endomorphism mk = Endomorphism::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Endomorphism am = m * mk;
    Scalar trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Scalar(static_cast<long>(k));
    mk = am + Endomorphism::identity(n) * c[n - k];
  }
  return ScalarPolynomial(std::move(c));
}

Endomorphism evaluate_polynomial(const ScalarPolynomial& p, const Endomorphism& m) {
  require_square(m);
  const std::size_t n = m.rows();
  Endomorphism acc(n, n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + Endomorphism::identity(n) * *it;
  return acc;
}

bool is_diagonalizable(const Endomorphism& m) { return is_squarefree(minimal_polynomial(m)); }

std::vector<Scalar> gaussian_rational_roots(const ScalarPolynomial& p) {
  if (p.degree() <= 0) return {};
  const ScalarPolynomial monic = p.monic();
  const auto d = static_cast<Eigen::Index>(monic.degree());
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i)
    companion(i, d - 1) = -monic.coefficient(static_cast<std::size_t>(i)).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Scalar> roots;
  for (Eigen::Index i = 0; i < d; ++i) {
    const std::complex<double> z = solver.eigenvalues()(i);
    const auto re = reconstruct(z.real());
    const auto im = reconstruct(z.imag());
    if (!re || !im) continue;
    Scalar candidate(*re, *im);
    if (monic(candidate).is_zero()) roots.push_back(std::move(candidate));
  }
  return sorted_unique(std::move(roots));
}

std::vector<Scalar> RootDecomposition::roots() const {
  std::vector<Scalar> out;
  for (const auto& s : spaces) out.push_back(s.root);
  return out;
}

const RootSpace* RootDecomposition::find(const Scalar& alpha) const {
  for (const auto& s : spaces)
    if (s.root == alpha) return &s;
  return nullptr;
}

RootDecomposition root_decomposition(const ContactStructure& C) {
  const LieAlgebra& L = C.algebra;
  if (!L.is_complex()) {
    throw InputError("root decomposition needs a complex contact Lie algebra; complexify first",
                     "field");
  }
  const std::size_t dim = L.dim();
  const Endomorphism adxi = ad(L, C.reeb);
  const ScalarPolynomial m = minimal_polynomial(adxi);
  if (!is_squarefree(m)) {
    throw NotDiagonalizable("ad(xi) is not diagonalizable: minimal polynomial " + m.str() +
                            " has a repeated factor");
  }

  RootDecomposition rd{C, true, {}, {}, {}, {}};
  const auto roots = gaussian_rational_roots(m);
  const Vector eta = C.eta.covector();

  if (static_cast<long>(roots.size()) == m.degree()) {
    rd.exact = true;
    for (const auto& alpha : roots) {
      Endomorphism shifted = adxi - Endomorphism::identity(dim) * alpha;
      RootSpace space{alpha, {}};
      if (alpha.is_zero()) {
        Matrix<Scalar> stacked(dim + 1, dim);
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) stacked(i, j) = shifted(i, j);
        for (std::size_t j = 0; j < dim; ++j) stacked(dim, j) = eta[j];
        rd.horizontal_zero_space = nullspace(stacked);
        space.basis.push_back(C.reeb);
        for (const auto& v : rd.horizontal_zero_space) space.basis.push_back(v);
      } else {
        space.basis = nullspace(shifted);
      }
      rd.spaces.push_back(std::move(space));
    }

    // invariants
    std::size_t total = 0;
    bool has_zero = false;
    for (const auto& s : rd.spaces) {
      total += s.basis.size();
      if (s.root.is_zero()) has_zero = true;
      for (const auto& v : s.basis) {
        if (adxi * v != scale(s.root, v)) {
          throw InvariantViolation("root vector fails ad(xi) v = alpha v for alpha = " +
                                   s.root.pretty());
        }
        if (!s.root.is_zero() && !dot(eta, v).is_zero()) {
          throw InvariantViolation("root space for nonzero alpha = " + s.root.pretty() +
                                   " is not horizontal");
        }
      }
    }
    if (total != dim) throw InvariantViolation("root spaces do not span the algebra");
    if (!has_zero) throw InvariantViolation("0 is not a root although xi is in g_0");
    return rd;
  }

  // Spectrum not contained in Q(i): binary64 eigenvectors.
  rd.exact = false;
  rd.notice =
      "spectrum of ad(xi) is not contained in the Gaussian rationals; eigenvectors computed in "
      "binary64 with tolerance 1e-9 (conditioning not certified)";
  const Eigen::MatrixXcd M = to_eigen(adxi);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M, false);
  std::vector<std::complex<double>> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(values.begin(), values.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  const double scale_m = std::max(1.0, M.cwiseAbs().maxCoeff());
  std::vector<std::complex<double>> centers;
  for (const auto& z : values) {
    bool merged = false;
    for (auto& c : centers)
      if (std::abs(c - z) < 1e-6 * scale_m) merged = true;
    if (!merged) centers.push_back(z);
  }
  std::size_t total = 0;
  for (const auto& alpha : centers) {
    const Eigen::MatrixXcd shifted =
        M - alpha * Eigen::MatrixXcd::Identity(M.rows(), M.cols());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    ApproxRootSpace space{alpha, {}};
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (sv(k) > 1e-8 * scale_m) continue;
      Eigen::VectorXcd v = svd.matrixV().col(k);
      const double vmax = v.cwiseAbs().maxCoeff();
      const double residual = (M * v - alpha * v).cwiseAbs().maxCoeff();
      if (residual > 1e-9 * vmax) {
        throw InvariantViolation("floating eigenvector residual exceeds 1e-9");
      }
      space.basis.emplace_back(v.data(), v.data() + v.size());
    }
    total += space.basis.size();
    rd.approx_spaces.push_back(std::move(space));
  }
  if (total != dim) throw InvariantViolation("floating eigenspaces do not span the algebra");
  return rd;
}

namespace {

void require_exact(const RootDecomposition& rd) {
  if (!rd.exact) {
    throw InputError("operation needs an exact root decomposition; " + rd.notice, "inexact");
  }
}

}  // namespace

GradedBracketReport verify_graded_bracket(const RootDecomposition& rd) {
  require_exact(rd);
  const LieAlgebra& L = rd.contact.algebra;
  const Endomorphism adxi = ad(L, rd.contact.reeb);
  GradedBracketReport report;
  std::vector<std::string> violations;
  for (const auto& sa : rd.spaces) {
    for (const auto& sb : rd.spaces) {
      const Scalar sum = sa.root + sb.root;
      for (const auto& x : sa.basis) {
        for (const auto& y : sb.basis) {
          ++report.pairs_checked;
          const Vector z = bracket(L, x, y);
          if (adxi * z != scale(sum, z)) {
            violations.push_back("ad(xi)[X,Y] != (alpha+beta)[X,Y] for X=" + format_vector(L, x) +
                                 ", Y=" + format_vector(L, y));
          }
          const Scalar d = evaluate(rd.contact.d_eta, {x, y});
          if (!sum.is_zero() && !d.is_zero()) {
            violations.push_back("d eta(X,Y) = " + d.pretty() + " with alpha+beta = " +
                                 sum.pretty() + " for X=" + format_vector(L, x) +
                                 ", Y=" + format_vector(L, y));
          }
          if (sum.is_zero() && !d.is_zero()) ++report.resonant_pairs;
        }
      }
    }
  }
  if (!violations.empty()) {
    std::string msg = "graded bracket identity violated:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw InvariantViolation(msg);
  }
  return report;
}

std::vector<Vector> horizontal_root_basis(const RootDecomposition& rd, const Scalar& alpha) {
  require_exact(rd);
  if (alpha.is_zero()) return rd.horizontal_zero_space;
  const RootSpace* s = rd.find(alpha);
  return s ? s->basis : std::vector<Vector>{};
}

DualPartner find_dual_partner(const RootDecomposition& rd, const Vector& x, const Scalar& alpha) {
  require_exact(rd);
  const ContactStructure& C = rd.contact;
  const LieAlgebra& L = C.algebra;
  check_dim(L, x, "dual partner argument");
  if (is_zero_vector(x)) throw InputError("dual partner of the zero vector", "input");
  if (bracket(L, C.reeb, x) != scale(alpha, x)) {
    throw InputError("vector " + format_vector(L, x) + " is not in g_" + alpha.pretty(), "input");
  }
  if (is_zero_vector(C.projector * x)) {
    throw InputError("vector is a multiple of xi, which brackets trivially with g_0", "input");
  }
  const auto partners = horizontal_root_basis(rd, -alpha);
  const Vector eta = C.eta.covector();
  for (const auto& w : partners) {
    const Scalar pairing = dot(eta, bracket(L, x, w));
    if (pairing.is_zero()) continue;
    DualPartner out;
    out.alpha = alpha;
    out.y = scale(Scalar(1) / pairing, w);
    out.z = sub(bracket(L, x, out.y), C.reeb);
    if (!is_zero_vector(bracket(L, C.reeb, out.z)) || !dot(eta, out.z).is_zero()) {
      throw InvariantViolation("[X,Y] - xi is not in g_0 ∩ H for X=" + format_vector(L, x));
    }
    return out;
  }
  throw InvariantViolation("no Y in g_" + (-alpha).pretty() + " with eta([X,Y]) = 1 for X=" +
                           format_vector(L, x));
}

Matrix<Scalar> dual_pairing_matrix(const RootDecomposition& rd, const Scalar& alpha) {
  const auto xs = horizontal_root_basis(rd, alpha);
  const auto ys = horizontal_root_basis(rd, -alpha);
  Matrix<Scalar> m(xs.size(), ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) m(i, j) = evaluate(rd.contact.d_eta, {xs[i], ys[j]});
  return m;
}

std::string dump_contact(const ContactStructure& C) {
  const LieAlgebra& L = C.algebra;
  std::ostringstream os;
  os << "algebra " << L.name() << " (" << to_string(L.field()) << ", dim " << L.dim() << ")\n";
  for (const auto& b : L.nonzero_brackets()) {
    os << "  [" << L.labels()[b.i] << "," << L.labels()[b.j] << "] = " << format_vector(L, b.image)
       << "\n";
  }
  os << "eta = (";
  const Vector e = C.eta.covector();
  for (std::size_t k = 0; k < e.size(); ++k) os << (k ? ", " : "") << e[k].pretty();
  os << ")\nxi = " << format_vector(L, C.reeb) << "\nad(xi) =\n" << format_matrix(ad(L, C.reeb));
  return os.str();
}

TheoremReport verify_reeb_theorem(const ContactStructure& C) {
  if (!C.algebra.is_complex()) {
    throw InputError("the Reeb theorem check runs on complex contact algebras; complexify first",
                     "field");
  }
  TheoremReport r;
  r.n = C.n();
  const Endomorphism adxi = ad(C.algebra, C.reeb);
  r.minimal_polynomial = minimal_polynomial(adxi);
  r.diagonalizable = is_squarefree(r.minimal_polynomial);
  r.ad_xi_zero = adxi.is_zero();
  if (!r.diagonalizable) {
    r.hypothesis_failures.push_back("not diagonalizable: minimal polynomial " +
                                    r.minimal_polynomial.str() + " is not squarefree");
  }
  if (r.n <= 1) r.hypothesis_failures.push_back("n=1 exclusion: dimension 3");
  r.applicable = r.diagonalizable && r.n > 1;

  if (r.diagonalizable) {
    const RootDecomposition rd = root_decomposition(C);
    r.roots_exact = rd.exact;
    if (rd.exact) {
      r.roots = rd.roots();
    } else {
      for (const auto& s : rd.approx_spaces) r.approx_roots.push_back(s.root);
    }
  }

  if (r.applicable) {
    if (!r.ad_xi_zero) {
      std::ostringstream os;
      os << "diagonalizable ad(xi) with n = " << r.n
         << " > 1 but ad(xi) != 0; minimal polynomial " << r.minimal_polynomial.str() << "\n"
         << dump_contact(C);
      throw InvariantViolation(os.str());
    }
    r.conclusion_verified = true;
  }
  return r;
}

}  // namespace kcontact
