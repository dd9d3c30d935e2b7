#include "qmlde/serre.hpp"

#include "qmlde/modforms.hpp"

namespace qmlde {

QSeries serre_deriv(const Rational& k, const QSeries& f) {
  if (f.is_zero()) return f;
  if (k.is_zero()) return f.derivative();
  const QSeries e2 = eisenstein_e(2, f.trunc_order());  // truncation matched to the operand
  return f.derivative() - (e2 * f).scaled(k / Rational(12));
}

QSeries iterated_serre(const Rational& k, int times, const QSeries& f) {
  if (times < 0) throw std::invalid_argument("iteration count must be nonnegative");
  QSeries g = f;
  Rational w = k;
  for (int i = 0; i < times; ++i, w += 2) g = serre_deriv(w, g);
  return g;
}

QSeries formal_partial(const Rational& k, const QSeries& f) {
  if (f.is_zero()) return f;
  if (k.is_zero()) return f.derivative();
  const QSeries g2 = zhu_g(2, f.trunc_order());
  return f.derivative() + (g2 * f).scaled(k);
}

}  // namespace qmlde
