#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kcontact {

using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Rejects q = 0, decimals and
/// whitespace. The result is canonical.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Gaussian rational re + i*im with arbitrary precision components.
/// Real scalars are those with im == 0; both components stay canonical.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// "p/q" for real values, "p/q,r/s" for complex ones.
  static Scalar parse(std::string_view text);
  static Scalar imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  Rational norm_squared() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  /// Real part as binary64; callers are responsible for checking is_real().
  double to_double() const { return re_.get_d(); }

  /// File syntax; round-trips through parse().
  std::string str() const;
  /// Human form: "1/2", "-i", "1/2-3/4i".
  std::string pretty() const;

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Total order (real part, then imaginary part) for deterministic output.
bool lex_less(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace kcontact
