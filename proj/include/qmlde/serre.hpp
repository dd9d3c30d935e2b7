#pragma once

#include "qmlde/qseries.hpp"

namespace qmlde {

// A q-expansion together with the modular weight it carries for derivation
// purposes. The weight is bookkeeping; it is not derivable from the series.
struct WeightedSeries {
  QSeries series;
  Rational weight;
};

// Serre derivation of weight k: theta_k(f) = q df/dq - (k/12) E_2 f.
// Maps weight-k forms to weight-(k+2) forms; k may be any rational.
QSeries serre_deriv(const Rational& k, const QSeries& f);

// i-th iterated Serre derivation,
//   theta_k^i = theta_{k+2(i-1)} o ... o theta_{k+2} o theta_k,
// with theta_k^0 the identity.
QSeries iterated_serre(const Rational& k, int times, const QSeries& f);

// Formal Serre derivation: partial_k(f) = q df/dq + k G~_2 f. Agrees with
// serre_deriv for every k because G~_2 = -E_2/12.
QSeries formal_partial(const Rational& k, const QSeries& f);

inline QSeries serre_deriv(const WeightedSeries& f) { return serre_deriv(f.weight, f.series); }
inline WeightedSeries iterated_serre(const WeightedSeries& f, int times) {
  return {iterated_serre(f.weight, times, f.series), f.weight + Rational(2L * times)};
}

}  // namespace qmlde
