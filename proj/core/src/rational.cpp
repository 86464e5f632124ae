#include "pga/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace pga {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0)
    throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (sgn(d) == 0)
      throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
    q = mpq_class(n) / mpq_class(d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    q = mpq_class(digits) / mpq_class(scale);
  } else {
    if (!all_digits(body))
      throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(body), 10));
  }
  if (negative) q = -q;
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::abs() const {
  return is_negative() ? Rational(mpq_class(-value_)) : *this;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace pga
