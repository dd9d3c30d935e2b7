#include "qmlde/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmlde {

namespace {

void check_lattice(const Rational& e) {
  if (!(e * Rational(QSeries::lattice_den)).is_integer())
    throw std::invalid_argument("exponent " + e.to_string() + " is off the 1/" +
                                std::to_string(QSeries::lattice_den) + " lattice");
}

}  // namespace

QSeries QSeries::constant(const Rational& c, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  std::vector<Rational> cs(static_cast<size_t>(order) + 1, Rational(0));
  cs[0] = c;
  return from_coeffs(0, std::move(cs));
}

QSeries QSeries::monomial(const Rational& exponent, const Rational& coeff, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  std::vector<Rational> cs(static_cast<size_t>(order) + 1, Rational(0));
  cs[0] = coeff;
  return from_coeffs(exponent, std::move(cs));
}

QSeries QSeries::from_coeffs(const Rational& lead_exp, std::vector<Rational> coeffs) {
  check_lattice(lead_exp);
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  QSeries s;
  s.zero_ = false;
  s.lead_exp_ = lead_exp;
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

void QSeries::normalize() {
  size_t i = 0;
  while (i < coeffs_.size() && coeffs_[i].is_zero()) ++i;
  if (i == coeffs_.size()) {
    *this = QSeries();
    return;
  }
  if (i > 0) {
    lead_exp_ += Rational(static_cast<long>(i));
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(i));
  }
}

const Rational& QSeries::lead_exp() const {
  if (zero_) throw std::logic_error("lead_exp of the zero series");
  return lead_exp_;
}

int QSeries::trunc_order() const {
  if (zero_) throw std::logic_error("trunc_order of the zero series");
  return static_cast<int>(coeffs_.size()) - 1;
}

const std::vector<Rational>& QSeries::coeffs() const {
  if (zero_) throw std::logic_error("coeffs of the zero series");
  return coeffs_;
}

Rational QSeries::coeff(long offset) const {
  if (zero_) return 0;
  if (offset < 0) return 0;
  if (offset >= static_cast<long>(coeffs_.size()))
    throw truncation_exceeded("offset " + std::to_string(offset) + " beyond truncation order " +
                              std::to_string(trunc_order()));
  return coeffs_[static_cast<size_t>(offset)];
}

Rational QSeries::coefficient_at(const Rational& e) const {
  if (zero_) return 0;
  if (e > end_exp())
    throw truncation_exceeded("exponent " + e.to_string() + " beyond retained window ending at " +
                              end_exp().to_string());
  const Rational d = e - lead_exp_;
  if (!d.is_integer() || d.sign() < 0) return 0;
  return coeffs_[static_cast<size_t>(to_long(d.num()))];
}

Rational QSeries::end_exp() const {
  return lead_exp() + Rational(static_cast<long>(trunc_order()));
}

QSeries QSeries::truncated(int order) const {
  if (zero_) return *this;
  if (order < 0 || order > trunc_order())
    throw std::invalid_argument("cannot raise truncation order from " +
                                std::to_string(trunc_order()) + " to " + std::to_string(order));
  QSeries s = *this;
  s.coeffs_.resize(static_cast<size_t>(order) + 1);
  return s;
}

QSeries QSeries::scaled(const Rational& c) const {
  if (zero_ || c.is_zero()) return QSeries();
  QSeries s = *this;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Rational d = b.lead_exp_ - a.lead_exp_;
  if (!d.is_integer())
    throw std::invalid_argument(
        "cannot add series whose leading exponents differ by the non-integer " + d.to_string());
  const long shift = to_long(d.num());  // b starts `shift` offsets after a
  const long a_off = shift >= 0 ? 0 : -shift;
  const long b_off = shift >= 0 ? shift : 0;
  const Rational start = shift >= 0 ? a.lead_exp_ : b.lead_exp_;
  const long end = std::min(a_off + a.trunc_order(), b_off + b.trunc_order());
  std::vector<Rational> cs(static_cast<size_t>(end) + 1, Rational(0));
  for (long i = 0; i <= end; ++i) {
    Rational v = 0;
    if (i >= a_off && i - a_off <= a.trunc_order()) v += a.coeffs_[static_cast<size_t>(i - a_off)];
    if (i >= b_off && i - b_off <= b.trunc_order()) v += b.coeffs_[static_cast<size_t>(i - b_off)];
    cs[static_cast<size_t>(i)] = std::move(v);
  }
  return QSeries::from_coeffs(start, std::move(cs));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.scaled(-1); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.is_zero() || b.is_zero()) return QSeries();
  const int n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Rational> cs(static_cast<size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) cs[static_cast<size_t>(i)] += a.coeffs_[static_cast<size_t>(j)] * b.coeffs_[static_cast<size_t>(i - j)];
  QSeries s;
  s.zero_ = false;
  s.lead_exp_ = a.lead_exp_ + b.lead_exp_;
  s.coeffs_ = std::move(cs);  // leading coefficient a0*b0 != 0, no strip needed
  return s;
}

QSeries QSeries::inverse() const {
  if (zero_) throw zero_division("inverse of the zero series");
  const int n = trunc_order();
  std::vector<Rational> b(static_cast<size_t>(n) + 1, Rational(0));
  const Rational inv0 = Rational(1) / coeffs_[0];
  b[0] = inv0;
  for (int s = 1; s <= n; ++s) {
    Rational acc = 0;
    for (int k = 1; k <= s; ++k) acc += coeffs_[static_cast<size_t>(k)] * b[static_cast<size_t>(s - k)];
    b[static_cast<size_t>(s)] = -acc * inv0;
  }
  QSeries r;
  r.zero_ = false;
  r.lead_exp_ = -lead_exp_;
  r.coeffs_ = std::move(b);
  return r;
}

QSeries QSeries::pow(long e) const {
  if (e == 0) return one(zero_ ? 0 : trunc_order());
  if (zero_) {
    if (e < 0) throw zero_division("negative power of the zero series");
    return QSeries();
  }
  if (e < 0) return inverse().pow(-e);
  QSeries base = *this;
  QSeries acc = one(trunc_order());
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

QSeries QSeries::derivative() const {
  if (zero_) return QSeries();
  std::vector<Rational> cs(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    cs[i] = coeffs_[i] * (lead_exp_ + Rational(static_cast<long>(i)));
  return from_coeffs(lead_exp_, std::move(cs));
}

QSeries QSeries::rescale_variable(long m) const {
  if (m < 1) throw std::invalid_argument("rescale factor must be a positive integer");
  if (zero_ || m == 1) return *this;
  std::vector<Rational> cs(static_cast<size_t>(m) * static_cast<size_t>(trunc_order()) + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) cs[i * static_cast<size_t>(m)] = coeffs_[i];
  QSeries s;
  s.zero_ = false;
  s.lead_exp_ = lead_exp_ * Rational(m);
  s.coeffs_ = std::move(cs);
  return s;
}

bool operator==(const QSeries& a, const QSeries& b) {
  if (a.zero_ != b.zero_) return false;
  if (a.zero_) return true;
  return a.lead_exp_ == b.lead_exp_ && a.coeffs_ == b.coeffs_;
}

bool agree_to_shared_truncation(const QSeries& a, const QSeries& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero() || b.is_zero()) {
    // The zero series is exactly zero everywhere; a normalized nonzero series
    // has a nonzero leading coefficient inside its own window.
    return false;
  }
  const Rational lo = std::max(a.lead_exp(), b.lead_exp());
  const Rational hi = std::min(a.end_exp(), b.end_exp());
  // Walk the union of both integer grids inside [lo, hi].
  for (const QSeries* s : {&a, &b}) {
    Rational e = s->lead_exp();
    while (e < lo) e += 1;
    for (; e <= hi; e += 1)
      if (a.coefficient_at(e) != b.coefficient_at(e)) return false;
  }
  return true;
}

}  // namespace qmlde
