#include "xaax/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "xaax/errors.hpp"

namespace xaax {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_ = mpq_class(num, 1) / mpq_class(den, 1);
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

mpq_class Scalar::parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

Scalar Scalar::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_rational(text), mpq_class(0)};
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_real()) return {1 / re_, mpq_class(0)};
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Scalar result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  if (sgn(rhs.im_) != 0) im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  if (sgn(rhs.im_) != 0) im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (is_real() && rhs.is_real()) {
    re_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

void Scalar::sub_mul(const Scalar& factor, const Scalar& other) {
  if (factor.is_zero() || other.is_zero()) return;
  if (factor.is_real() && other.is_real()) {
    re_ -= factor.re_ * other.re_;
    return;
  }
  *this -= factor * other;
}

void Scalar::add_mul(const Scalar& factor, const Scalar& other) {
  if (factor.is_zero() || other.is_zero()) return;
  if (factor.is_real() && other.is_real()) {
    re_ += factor.re_ * other.re_;
    return;
  }
  *this += factor * other;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(im_) + "i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag.front() != '-') imag.insert(imag.begin(), '+');
  return rational_to_string(re_) + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace xaax
