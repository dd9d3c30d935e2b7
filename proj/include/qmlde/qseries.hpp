#pragma once

#include <vector>

#include "qmlde/rational.hpp"

namespace qmlde {

// Truncated q-expansion with exact rational coefficients and a fractional
// leading exponent on the (1/24)Z lattice:
//
//     f = q^lead_exp * (c_0 + c_1 q + c_2 q^2 + ... + c_N q^N),   c_0 != 0,
//
// where N = trunc_order() and every retained coefficient is exact. All
// operations are pure; truncation propagates by the min rule, so a retained
// coefficient is always the true coefficient of the represented function.
//
// The zero series is a distinguished value (exact zero, no leading exponent).
class QSeries {
 public:
  static constexpr long lattice_den = 24;

  QSeries() : zero_(true) {}

  static QSeries zero() { return QSeries(); }
  static QSeries one(int order) { return constant(1, order); }
  static QSeries constant(const Rational& c, int order);
  static QSeries monomial(const Rational& exponent, const Rational& coeff, int order);
  // Takes ownership of the coefficient list; index n is the coefficient of
  // q^(lead_exp + n). Leading zeros are stripped (the exponent renormalized);
  // an all-zero list yields the zero series.
  static QSeries from_coeffs(const Rational& lead_exp, std::vector<Rational> coeffs);

  bool is_zero() const { return zero_; }
  const Rational& lead_exp() const;
  int trunc_order() const;
  const std::vector<Rational>& coeffs() const;

  // Coefficient at integer offset n from the leading exponent; 0 for n < 0.
  // Throws truncation_exceeded past the retained window.
  Rational coeff(long offset) const;
  // Coefficient of q^e. 0 below the leading exponent or off the integer grid;
  // throws truncation_exceeded for e > lead_exp + trunc_order.
  Rational coefficient_at(const Rational& e) const;
  // Exponent of the last retained coefficient, lead_exp + trunc_order.
  Rational end_exp() const;

  // Lowers the truncation order to `order` (must not exceed the current one).
  QSeries truncated(int order) const;

  QSeries scaled(const Rational& c) const;
  QSeries inverse() const;
  QSeries pow(long e) const;
  // q d/dq: multiplies the coefficient at offset n by (lead_exp + n).
  QSeries derivative() const;
  // Substitutes q -> q^m, m >= 1. Truncation order becomes m * trunc_order.
  QSeries rescale_variable(long m) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a) { return a.scaled(-1); }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const Rational& c) { return a.scaled(c); }
  friend QSeries operator*(const Rational& c, const QSeries& a) { return a.scaled(c); }

  // Structural equality: same zero flag, leading exponent, coefficients and
  // truncation order.
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

 private:
  void normalize();

  bool zero_;
  Rational lead_exp_;
  std::vector<Rational> coeffs_;  // size trunc_order() + 1 when not zero
};

// True when a and b have equal coefficients at every exponent where both are
// known (the overlap of their validity windows). The zero series is known
// everywhere.
bool agree_to_shared_truncation(const QSeries& a, const QSeries& b);

}  // namespace qmlde
