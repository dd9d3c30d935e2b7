// Shared test helpers: independent oracles and random-series generators.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "qmlde/qseries.hpp"

namespace qmlde::test {

// Eta product coefficients prod (1-q^n) by the pentagonal number theorem:
// sum_{k in Z} (-1)^k q^{k(3k-1)/2}. Independent of the library's product loop.
inline std::vector<long> pentagonal_eta(int order) {
  std::vector<long> v(static_cast<size_t>(order) + 1, 0);
  for (long k = -order - 1; k <= order + 1; ++k) {
    const long g = k * (3 * k - 1) / 2;
    if (g < 0 || g > order) continue;
    v[static_cast<size_t>(g)] += (k % 2 == 0) ? 1 : -1;
  }
  return v;
}

// Naive exact polynomial in q^(1/24): a map from 24*exponent to coefficient.
// Finite support, every coefficient exact, no truncation bookkeeping at all.
using NaivePoly = std::map<long, Rational>;

inline NaivePoly naive_from(const QSeries& s) {
  NaivePoly p;
  if (s.is_zero()) return p;
  const long base = to_long((s.lead_exp() * Rational(24)).num());
  for (int n = 0; n <= s.trunc_order(); ++n) {
    const Rational c = s.coeff(n);
    if (!c.is_zero()) p[base + 24L * n] = c;
  }
  return p;
}

inline NaivePoly naive_add(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly r = a;
  for (const auto& [e, c] : b) {
    r[e] += c;
    if (r[e].is_zero()) r.erase(e);
  }
  return r;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      r[ea + eb] += ca * cb;
      if (r[ea + eb].is_zero()) r.erase(ea + eb);
    }
  return r;
}

inline NaivePoly naive_scale(const NaivePoly& a, const Rational& c) {
  NaivePoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, x] : a) r[e] = x * c;
  return r;
}

inline NaivePoly naive_deriv(const NaivePoly& a) {
  NaivePoly r;
  for (const auto& [e, x] : a) {
    const Rational c = x * Rational(e, 24);
    if (!c.is_zero()) r[e] = c;
  }
  return r;
}

inline NaivePoly naive_rescale(const NaivePoly& a, long m) {
  NaivePoly r;
  for (const auto& [e, x] : a) r[e * m] = x;
  return r;
}

// First `terms` coefficients of 1/a by long division (a has nonzero lowest
// term). Returned polynomial is exact on its support window.
inline NaivePoly naive_invert(const NaivePoly& a, int terms) {
  NaivePoly r;
  if (a.empty()) throw std::invalid_argument("naive_invert of zero");
  const long lead = a.begin()->first;
  const Rational inv0 = Rational(1) / a.begin()->second;
  std::vector<Rational> av(static_cast<size_t>(terms), Rational(0));
  for (const auto& [e, c] : a) {
    const long off = (e - lead) / 24;
    if ((e - lead) % 24 == 0 && off < terms) av[static_cast<size_t>(off)] = c;
  }
  std::vector<Rational> bv(static_cast<size_t>(terms), Rational(0));
  bv[0] = inv0;
  for (int s = 1; s < terms; ++s) {
    Rational acc = 0;
    for (int k = 1; k <= s; ++k) acc += av[static_cast<size_t>(k)] * bv[static_cast<size_t>(s - k)];
    bv[static_cast<size_t>(s)] = -acc * inv0;
  }
  for (int s = 0; s < terms; ++s)
    if (!bv[static_cast<size_t>(s)].is_zero()) r[-lead + 24L * s] = bv[static_cast<size_t>(s)];
  return r;
}

inline Rational naive_at(const NaivePoly& p, const Rational& e) {
  const auto it = p.find(to_long((e * Rational(24)).num()));
  return it == p.end() ? Rational(0) : it->second;
}

// Every retained coefficient of s must equal the oracle's value.
inline bool matches_naive(const QSeries& s, const NaivePoly& p) {
  if (s.is_zero()) return p.empty();
  for (int n = 0; n <= s.trunc_order(); ++n) {
    const Rational e = s.lead_exp() + Rational(static_cast<long>(n));
    if (s.coeff(n) != naive_at(p, e)) return false;
  }
  return true;
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational small_rational() {
    const long den = pick(1, 4);
    long num = pick(-9, 9);
    return Rational(num, den);
  }

  Rational nonzero_small_rational() {
    Rational r = small_rational();
    while (r.is_zero()) r = small_rational();
    return r;
  }

  // Nonzero series with the given exponent (fractional class fixed by caller
  // so sums stay representable) and truncation order.
  QSeries series(const Rational& lead_exp, int order) {
    std::vector<Rational> cs(static_cast<size_t>(order) + 1);
    cs[0] = nonzero_small_rational();
    for (size_t i = 1; i < cs.size(); ++i) cs[i] = small_rational();
    return QSeries::from_coeffs(lead_exp, std::move(cs));
  }

  Rational lattice_exponent() { return Rational(pick(-24, 24), 24); }

 private:
  std::mt19937 gen_;
};

}  // namespace qmlde::test
