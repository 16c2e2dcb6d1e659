#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace xaax {

/// Gaussian rational re + im*i with arbitrary-precision rational parts.
///
/// Both parts are always kept in GMP canonical form (positive denominator,
/// coprime to the numerator), so operator== is structural equality.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  Scalar(mpq_class re, mpq_class im);

  static Scalar i() { return {mpq_class(0), mpq_class(1)}; }

  /// Parses "p/q" for a rational, or "re,im" with each part rational.
  static Scalar parse(std::string_view text);
  /// Parses one rational part "p" or "p/q".
  static mpq_class parse_rational(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  /// *this -= factor * other, without a temporary when both are real.
  void sub_mul(const Scalar& factor, const Scalar& other);
  void add_mul(const Scalar& factor, const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human-readable form: "3", "-1/2", "i", "1/2-3i".
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// "p/q" with q omitted when 1.
std::string rational_to_string(const mpq_class& q);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace xaax
