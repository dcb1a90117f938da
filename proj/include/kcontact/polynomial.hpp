#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcontact/scalar.hpp"

namespace kcontact {

inline bool coeff_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool coeff_is_zero(const Scalar& x) { return x.is_zero(); }
inline std::string coeff_text(const Rational& x) { return to_string(x); }
inline std::string coeff_text(const Scalar& x) { return x.pretty(); }

/// Univariate polynomial over a field (Rational or Gaussian rational),
/// coefficients in ascending degree, trailing zeros trimmed.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<F> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial monomial(std::size_t degree, F coeff = F(1)) {
    std::vector<F> c(degree + 1, F(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }
  static Polynomial constant(F v) { return Polynomial({std::move(v)}); }
  static Polynomial variable() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coefficients() const { return c_; }
  F coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& leading() const { return c_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial out(*this);
    const F lead = leading();
    for (auto& x : out.c_) x /= lead;
    return out;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  F operator()(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem(a);
    if (a.degree() < b.degree()) return {Polynomial(), rem};
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), F(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
      const F f = rem.leading() / b.leading();
      q[shift] = f;
      for (std::size_t k = 0; k < b.c_.size(); ++k) rem.c_[shift + k] -= f * b.c_[k];
      rem.c_.pop_back();  // leading term cancels exactly
      rem.trim();
    }
    return {Polynomial(std::move(q)), rem};
  }

  /// "t^3 + t", "t^2 - 1/2 t", ...
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (coeff_is_zero(c_[k])) continue;
      std::string coef = coeff_text(c_[k]);
      bool negative = !coef.empty() && coef.front() == '-' &&
                      coef.find_first_of("+-", 1) == std::string::npos;
      if (negative) coef.erase(0, 1);
      if (coef.find_first_of("+-", 1) != std::string::npos) coef = "(" + coef + ")";
      if (!out.empty()) {
        out += negative ? " - " : " + ";
      } else if (negative) {
        out += "-";
      }
      std::string mono;
      if (k >= 1) mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      if (k == 0) {
        out += coef;
      } else if (coef == "1") {
        out += mono;
      } else {
        out += coef + " " + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Monic gcd.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// True when p has no repeated root, i.e. gcd(p, p') is constant.
template <class F>
bool is_squarefree(const Polynomial<F>& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

using RationalPolynomial = Polynomial<Rational>;
using ScalarPolynomial = Polynomial<Scalar>;

/// Rational coefficients of a Gaussian-rational polynomial, if all are real.
std::optional<RationalPolynomial> real_part_if_real(const ScalarPolynomial& p);
ScalarPolynomial to_scalar_polynomial(const RationalPolynomial& p);

/// Canonical Sturm sequence p, p', -rem(p_{k-2}, p_{k-1}), ...
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Number of sign changes of the sequence evaluated at x (zeros skipped).
int sign_changes_at(const std::vector<RationalPolynomial>& seq, const Rational& x);
int sign_changes_at_pos_infinity(const std::vector<RationalPolynomial>& seq);
int sign_changes_at_neg_infinity(const std::vector<RationalPolynomial>& seq);

/// Distinct real roots in (a, +infinity).
int count_real_roots_above(const RationalPolynomial& p, const Rational& a);
/// Distinct real roots on the whole line.
int count_real_roots(const RationalPolynomial& p);

/// Result of the exact purely-imaginary-spectrum test on a squarefree
/// minimal polynomial m(t) = t^delta p(t).
struct ImaginarySpectrumTest {
  bool purely_imaginary;
  std::string reason;
};

/// All roots of the (squarefree, real-coefficient) polynomial lie on the
/// imaginary axis: p must be even and q(s) with p(t) = q(-t^2) must have
/// only positive real roots, counted with Sturm sequences.
ImaginarySpectrumTest purely_imaginary_roots(const RationalPolynomial& m);

}  // namespace kcontact
