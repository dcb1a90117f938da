#include "kcontact/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "kcontact/errors.hpp"

namespace kcontact {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed coefficient '" + std::string(text) + "'", "parse");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw InputError("zero denominator in coefficient '" + std::string(text) + "'",
                     "parse");
  }
  if (text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Scalar Scalar::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return Scalar(parse_rational(text));
  return Scalar(parse_rational(text.substr(0, comma)),
                parse_rational(text.substr(comma + 1)));
}

std::string Scalar::str() const {
  if (is_real()) return to_string(re_);
  return to_string(re_) + "," + to_string(im_);
}

std::string Scalar::pretty() const {
  if (is_real()) return to_string(re_);
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = to_string(im_) + "i";
  }
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) > 0) im_part = "+" + im_part;
  return to_string(re_) + im_part;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm_squared();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

bool lex_less(const Scalar& a, const Scalar& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.pretty(); }

}  // namespace kcontact
