#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "qmlde/errors.hpp"

namespace qmlde {

using Integer = mpz_class;

// Converts to long, throwing if the value does not fit.
long to_long(const Integer& z);

// Exact rational number. Always in lowest terms with positive denominator;
// zero is 0/1. Thin canonicalizing wrapper around mpq_class so the reduced
// invariant can never be violated by construction.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  // Parses "num" or "num/den" in base 10. Throws std::invalid_argument on
  // malformed input, zero_division on a zero denominator.
  static Rational from_string(std::string_view s);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "num/den" in base 10, "/den" omitted when den == 1.
  std::string to_string() const { return v_.get_str(); }

  Rational pow(long e) const;

  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw zero_division("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  // mpq arithmetic keeps canonical form for canonical operands.
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace qmlde
