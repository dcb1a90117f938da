#include "kcontact/polynomial.hpp"

#include "kcontact/errors.hpp"

namespace kcontact {

std::optional<RationalPolynomial> real_part_if_real(const ScalarPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    if (!x.is_real()) return std::nullopt;
    c.push_back(x.re());
  }
  return RationalPolynomial(std::move(c));
}

ScalarPolynomial to_scalar_polynomial(const RationalPolynomial& p) {
  std::vector<Scalar> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return ScalarPolynomial(std::move(c));
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    RationalPolynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sign_changes_at(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  for (const auto& p : seq) signs.push_back(sgn(p(x)));
  return count_changes(signs);
}

int sign_changes_at_pos_infinity(const std::vector<RationalPolynomial>& seq) {
  std::vector<int> signs;
  for (const auto& p : seq) signs.push_back(p.is_zero() ? 0 : sgn(p.leading()));
  return count_changes(signs);
}

int sign_changes_at_neg_infinity(const std::vector<RationalPolynomial>& seq) {
  std::vector<int> signs;
  for (const auto& p : seq) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    const int s = sgn(p.leading());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_changes(signs);
}

int count_real_roots_above(const RationalPolynomial& p, const Rational& a) {
  if (p.degree() <= 0) return 0;
  const auto seq = sturm_sequence(p);
  // Sturm counts roots in (a, b]; a root exactly at a is excluded.
  return sign_changes_at(seq, a) - sign_changes_at_pos_infinity(seq);
}

int count_real_roots(const RationalPolynomial& p) {
  if (p.degree() <= 0) return 0;
  const auto seq = sturm_sequence(p);
  return sign_changes_at_neg_infinity(seq) - sign_changes_at_pos_infinity(seq);
}

ImaginarySpectrumTest purely_imaginary_roots(const RationalPolynomial& m) {
  if (m.is_zero()) throw InputError("zero polynomial has no spectrum", "polynomial");
  if (!is_squarefree(m)) return {false, "polynomial " + m.str() + " is not squarefree"};

  std::size_t delta = 0;
  while (coeff_is_zero(m.coefficient(delta))) ++delta;
  std::vector<Rational> p(m.coefficients().begin() + static_cast<std::ptrdiff_t>(delta),
                          m.coefficients().end());
  for (std::size_t k = 1; k < p.size(); k += 2) {
    if (sgn(p[k]) != 0) {
      return {false, "spectrum not purely imaginary: " + m.str() +
                         " is not t^d times an even polynomial"};
    }
  }
  // p(t) = sum a_{2k} t^{2k} = q(-t^2) with q_k = (-1)^k a_{2k}
  std::vector<Rational> q;
  for (std::size_t k = 0; 2 * k < p.size(); ++k) q.push_back(k % 2 == 0 ? p[2 * k] : Rational(-p[2 * k]));
  const RationalPolynomial qs(std::move(q));
  const int wanted = static_cast<int>(qs.degree());
  const int positive = count_real_roots_above(qs, Rational(0));
  if (positive != wanted) {
    return {false, "spectrum not purely imaginary: " + m.str() + " has " +
                       std::to_string(wanted - positive) +
                       " root pair(s) off the imaginary axis"};
  }
  return {true, ""};
}

}  // namespace kcontact
