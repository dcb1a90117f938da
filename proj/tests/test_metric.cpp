#include <Eigen/Dense>

#include "doctest.h"
#include "kcontact/errors.hpp"
#include "support.hpp"

using namespace kcontact;
using kct::Rng;

namespace {

Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

template <class T>
Vec<T> conv(const Vector& v) {
  Vec<T> out;
  for (const auto& x : v) out.push_back(NumTraits<T>::from_exact(x));
  return out;
}

/// nabla_{e_i} xi from the Koszul formula, solved independently of the
/// library connection.
template <class T>
Vec<T> koszul_nabla_xi(const ContactStructure& C, const Matrix<T>& G, std::size_t i) {
  const LieAlgebra& L = C.algebra;
  const std::size_t n = L.dim();
  auto g = [&](const Vector& a, const Vector& b) { return dot(conv<T>(a), G * conv<T>(b)); };
  const Vector ei = L.basis_vector(i);
  Vec<T> rhs(n, T(0));
  for (std::size_t k = 0; k < n; ++k) {
    const Vector ek = L.basis_vector(k);
    rhs[k] = T(1) / T(2) *
             (g(bracket(L, ei, C.reeb), ek) - g(bracket(L, C.reeb, ek), ei) + g(bracket(L, ek, ei), C.reeb));
  }
  return *inverse(G) * rhs;
}

template <class T>
double residual(const Matrix<T>& m) {
  if constexpr (NumTraits<T>::exact) {
    return m.is_zero() ? 0.0 : 1.0;
  } else {
    return max_abs(m);
  }
}

/// Nabla formula, g-symmetry of h, h xi = 0, g-skewness of phi.
template <class T>
void check_nabla_reeb_identity(const ContactStructure& C, const MetricData<T>& g, double tol) {
  const auto geo = associated_geometry(C, g);
  const std::size_t n = C.algebra.dim();
  const Matrix<T>& G = g.gram;
  std::vector<Vec<T>> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(koszul_nabla_xi(C, G, i));
  const Matrix<T> nabla = Matrix<T>::from_columns(cols, n);
  CHECK(residual(nabla - geo.nabla_xi) <= tol);
  CHECK(residual(nabla + geo.phi + geo.phi * geo.h) <= tol);
  const Matrix<T> gh = G * geo.h;
  CHECK(residual(gh - gh.transpose()) <= tol);
  Matrix<T> hxi(n, 1);
  const Vec<T> v = geo.h * conv<T>(C.reeb);
  for (std::size_t k = 0; k < n; ++k) hxi(k, 0) = v[k];
  CHECK(residual(hxi) <= tol);
  const Matrix<T> gphi = G * geo.phi;
  CHECK(residual(gphi + gphi.transpose()) <= tol);
}

Matrix<double> random_orthogonal(Rng& rng, std::size_t n) {
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.real(-1, 1);
  const Eigen::MatrixXd qm = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
  Matrix<double> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = qm(i, j);
  return out;
}

}  // namespace

TEST_CASE("phi and h on the Heisenberg algebra with g = diag(1/2,1/2,1)") {
  const auto C = kct::catalog_contact("heisenberg3");
  const auto& g = find_catalog_entry("heisenberg3")->document.metric("g");
  const auto phi = compute_phi(C, g);
  CHECK(phi * unit_vector<Scalar>(3, 0) == unit_vector<Scalar>(3, 1));
  CHECK(phi * unit_vector<Scalar>(3, 1) == scale(q(-1), unit_vector<Scalar>(3, 0)));
  CHECK(is_zero_vector(phi * C.reeb));
  CHECK(is_associated(C, g));
  CHECK(compute_h(C, g).is_zero());
  CHECK(is_kcontact(C, g));
}

TEST_CASE("associated metric checks reject bad metrics") {
  const auto C = kct::catalog_contact("heisenberg3");
  CHECK_FALSE(is_associated(C, diagonal_metric({q(1), q(1), q(1)})));
  CHECK_FALSE(is_associated(C, diagonal_metric({q(1, 2), q(1, 2), q(2)})));
  CHECK_THROWS_AS(compute_h(C, diagonal_metric({q(1), q(1), q(1)})), InputError);
  CHECK_THROWS_AS(check_metric(3, diagonal_metric({q(1), q(-1), q(1)})), InputError);
  CHECK_THROWS_AS(check_metric(2, diagonal_metric({q(1), q(1), q(1)})), InputError);
  ExactMetric asym = diagonal_metric({q(1), q(1), q(1)});
  asym.gram(0, 1) = q(1, 3);
  CHECK_THROWS_AS(check_metric(3, asym), InputError);
}

TEST_CASE("Levi-Civita connection is torsion free and metric") {
  Rng rng(51);
  for (const auto* e : kct::contact_entries()) {
    const auto C = kct::catalog_contact(e->name);
    const ExactMetric g = kct::random_associated_metric(C, rng, 2);
    const auto conn = levi_civita(C.algebra, g);
    const std::size_t n = C.algebra.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(sub(conn(i, j), conn(j, i)) == C.algebra.basis_bracket(i, j));
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar lhs = dot(conn(i, j), g.gram * C.algebra.basis_vector(k)) +
                             dot(C.algebra.basis_vector(j), g.gram * conn(i, k));
          CHECK(lhs.is_zero());
        }
      }
  }
}

TEST_CASE("nabla xi = -phi - phi h on catalog metrics, exact and floating") {
  Rng rng(52);
  for (const auto* e : kct::contact_entries()) {
    const auto C = kct::catalog_contact(e->name);
    for (const auto& g : kct::exact_metrics(*e, C, rng, 3)) check_nabla_reeb_identity(C, g, 0.0);
    check_nabla_reeb_identity(C, construct_associated_metric(C), 1e-9);
  }
}

TEST_CASE("the two K-contact criteria agree") {
  Rng rng(53);
  for (const auto* e : kct::contact_entries()) {
    const auto C = kct::catalog_contact(e->name);
    for (const auto& g : kct::exact_metrics(*e, C, rng, 3)) {
      const auto k = kcontact_criteria(C, g);
      CHECK(k.h_zero == k.ad_reeb_skew);
    }
    const auto k = kcontact_criteria(C, construct_associated_metric(C));
    CHECK(k.h_zero == k.ad_reeb_skew);
  }
  const auto su2 = kct::catalog_contact("su2");
  CHECK(is_kcontact(su2, find_catalog_entry("su2")->document.metric("g")));
  CHECK_FALSE(ad(su2.algebra, su2.reeb).is_zero());
  const auto sl2 = kct::catalog_contact("sl2r");
  CHECK_FALSE(is_kcontact(sl2, find_catalog_entry("sl2r")->document.metric("g")));
  CHECK_FALSE(compute_h(sl2, find_catalog_entry("sl2r")->document.metric("g")).is_zero());
}

TEST_CASE("K-contact obstruction") {
  const auto sl = kcontact_obstruction(kct::catalog_contact("sl2r"));
  CHECK(sl.obstructed);
  CHECK(sl.reason.find("not purely imaginary") != std::string::npos);
  CHECK_FALSE(kcontact_obstruction(kct::catalog_contact("su2")).obstructed);
  CHECK_FALSE(kcontact_obstruction(kct::catalog_contact("heisenberg5")).obstructed);
  const auto nd = kcontact_obstruction(kct::catalog_contact("nilpotent_nondiag5"));
  CHECK(nd.obstructed);
  CHECK(nd.reason.find("not squarefree") != std::string::npos);
  CHECK_THROWS_AS(kcontact_obstruction(complexify(kct::catalog_contact("su2"))), InputError);
}

TEST_CASE("constructed and Darboux metrics are associated") {
  for (const auto* e : kct::contact_entries()) {
    const auto C = kct::catalog_contact(e->name);
    CHECK(is_associated(C, construct_associated_metric(C)));
    CHECK(is_associated(C, darboux_associated_metric(C)));
    const auto B = darboux_basis(C);
    const auto A = horizontal_form_matrix(C);
    const auto std_form = B.transpose() * A * B;
    for (std::size_t k = 0; k < std_form.rows(); k += 2) {
      CHECK(std_form(k, k + 1) == q(1));
      CHECK(std_form(k + 1, k) == q(-1));
    }
  }
}

TEST_CASE("skew normal form of a known block matrix") {
  const auto b = Matrix<double>::from_rows({{0, 3, 0, 0}, {-3, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  const auto nf = skew_normal_form(b);
  REQUIRE(nf.blocks.size() == 2);
  CHECK(nf.blocks[0] == doctest::Approx(3.0));
  CHECK(nf.blocks[1] == doctest::Approx(1.0));
  CHECK(nf.zero_count == 0);
  CHECK(max_abs(nf.q * b * nf.q.transpose() - nf.assembled()) <= 1e-10);

  const auto zero = skew_normal_form(Matrix<double>(3, 3));
  CHECK(zero.blocks.empty());
  CHECK(zero.zero_count == 3);

  CHECK_THROWS_AS(skew_normal_form(Matrix<double>::from_rows({{0, 1}, {1, 0}})), InputError);
}

TEST_CASE("skew normal form recovers random block structures") {
  Rng rng(54);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 9));
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n / 2)));
    std::vector<double> blocks;
    for (std::size_t m = 0; m < k; ++m) blocks.push_back(rng.real(0.1, 5.0));
    std::sort(blocks.rbegin(), blocks.rend());
    Matrix<double> N(n, n);
    for (std::size_t m = 0; m < k; ++m) {
      N(2 * m, 2 * m + 1) = blocks[m];
      N(2 * m + 1, 2 * m) = -blocks[m];
    }
    const Matrix<double> O = random_orthogonal(rng, n);
    Matrix<double> B = O.transpose() * N * O;
    B = (B - B.transpose()) * 0.5;
    const auto nf = skew_normal_form(B);
    REQUIRE(nf.blocks.size() == k);
    for (std::size_t m = 0; m < k; ++m) CHECK(std::abs(nf.blocks[m] - blocks[m]) <= 1e-10);
    CHECK(nf.zero_count == n - 2 * k);
    CHECK(max_abs(nf.q * nf.q.transpose() - Matrix<double>::identity(n)) <= 1e-12);
    CHECK(max_abs(nf.q.transpose() * nf.assembled() * nf.q - B) <= 1e-10);
  }
}

TEST_CASE("compatible complex structure on symplectic algebras") {
  const auto& r4 = find_catalog_entry("r4_sympl")->document;
  const auto identity = diagonal_metric({q(1), q(1), q(1), q(1)});
  CHECK(symplectic_is_associated(r4.algebra, r4.form("omega"), identity));
  CHECK_FALSE(symplectic_is_associated(r4.algebra, r4.form("omega"), diagonal_metric({q(2), q(1), q(1), q(1)})));
  AlternatingForm degenerate(4, 2);
  degenerate.add_term({0, 1}, q(1));
  CHECK_THROWS_AS(compatible_complex_structure(degenerate, identity), InputError);
}
