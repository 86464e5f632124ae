#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace pga {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. All arithmetic is exact.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q" and finite decimals ("0.25" becomes 1/4), with an
  /// optional leading sign. Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_negative() const { return sgn(value_) < 0; }
  bool is_positive() const { return sgn(value_) > 0; }

  Rational abs() const;

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pga
