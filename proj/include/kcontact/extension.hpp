#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcontact/contact.hpp"
#include "kcontact/metric.hpp"
#include "kcontact/spectral.hpp"

namespace kcontact {

/// Even-dimensional Lie algebra with a closed nondegenerate 2-form.
struct SymplecticAlgebra {
  LieAlgebra algebra;
  AlternatingForm omega;
};

/// Empty when (L, omega) is symplectic, otherwise the first violated
/// invariant ("odd dimension", "omega is degenerate", "omega is not closed").
std::optional<std::string> symplectic_violation(const LieAlgebra& L, const AlternatingForm& omega);

/// Validating constructor; InputError names the violated invariant.
SymplecticAlgebra make_symplectic(LieAlgebra L, AlternatingForm omega);

/// g / <xi> on the images of the horizontal basis, omega = d eta there.
/// Requires ad(xi) = 0.
SymplecticAlgebra central_quotient(const ContactStructure& C);

struct ContactExtension {
  LieAlgebra algebra;
  AlternatingForm eta;
};

/// s + <xi> with [X, Y] = [X, Y]_s - 2 omega(X, Y) xi and eta = xi^*.
/// The adjoined xi is the last basis vector.
ContactExtension central_extension(const SymplecticAlgebra& S);

/// Same bracket for an arbitrary 2-form, without any validation. Jacobi
/// holds exactly when omega is closed.
LieAlgebra extension_algebra(const LieAlgebra& s, const AlternatingForm& omega);

/// central_quotient(central_extension(S)) reproduces S exactly.
bool round_trip(const SymplecticAlgebra& S);

struct MainTheoremReport {
  bool is_kcontact = false;
  std::size_t dim = 0;
  KContactCriteria criteria;
  bool ad_xi_zero = false;
  std::optional<SymplecticAlgebra> quotient;
  bool roots_exact = true;
  std::vector<Scalar> complexification_roots;
  std::vector<std::complex<double>> approx_roots;
  std::optional<TheoremReport> theorem;
  std::vector<std::string> notes;
};

/// K-contact analysis: criteria, spectrum of the complexified Reeb adjoint,
/// vanishing of ad(xi) and the symplectic quotient in dimension >= 5.
/// Non-associated metrics are an InputError; any failed internal assertion
/// is an InvariantViolation.
template <class T>
MainTheoremReport analyze_kcontact(const ContactStructure& C, const MetricData<T>& g);

}  // namespace kcontact
