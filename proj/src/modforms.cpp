#include "qmlde/modforms.hpp"

#include <map>

#include "qmlde/errors.hpp"

namespace qmlde {

Integer sigma(int k, long n) {
  if (k < 0) throw std::invalid_argument("sigma exponent must be nonnegative");
  if (n < 1) throw std::invalid_argument("sigma argument must be positive");
  Integer acc = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    acc += p;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
      acc += p;
    }
  }
  return acc;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be nonnegative");
  std::vector<Rational> b(static_cast<size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
      acc += Rational(binom) * b[static_cast<size_t>(j)];
    }
    b[static_cast<size_t>(m)] = -acc / Rational(m + 1);
  }
  return b[static_cast<size_t>(n)];
}

namespace {

Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void check_even_weight(int weight) {
  if (weight < 2 || weight % 2 != 0)
    throw invalid_weight("Eisenstein weight must be an even integer >= 2, got " + std::to_string(weight));
}

}  // namespace

QSeries eisenstein_e(int weight, int order) {
  check_even_weight(weight);
  const Rational c = Rational(-2 * weight) / bernoulli(weight);
  std::vector<Rational> cs(static_cast<size_t>(order) + 1);
  cs[0] = 1;
  for (long n = 1; n <= order; ++n) cs[static_cast<size_t>(n)] = c * Rational(sigma(weight - 1, n));
  return QSeries::from_coeffs(0, std::move(cs));
}

QSeries zhu_g(int weight, int order) {
  check_even_weight(weight);
  const Rational a0 = -bernoulli(weight) / Rational(factorial(weight));
  const Rational c = Rational(2) / Rational(factorial(weight - 1));
  std::vector<Rational> cs(static_cast<size_t>(order) + 1);
  cs[0] = a0;
  for (long n = 1; n <= order; ++n) cs[static_cast<size_t>(n)] = c * Rational(sigma(weight - 1, n));
  return QSeries::from_coeffs(0, std::move(cs));
}

QSeries eta(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  // prod_{n=1}^{order} (1 - q^n); factors beyond `order` cannot touch the window.
  std::vector<Rational> cs(static_cast<size_t>(order) + 1);
  cs[0] = 1;
  for (long n = 1; n <= order; ++n)
    for (long i = order; i >= n; --i) cs[static_cast<size_t>(i)] -= cs[static_cast<size_t>(i - n)];
  return QSeries::from_coeffs(Rational(1, 24), std::move(cs));
}

QSeries delta(int order) { return eta(order).pow(24); }

QSeries e2_level2(int order) {
  const QSeries e2 = eisenstein_e(2, order);
  return e2.rescale_variable(2).scaled(2) - e2;
}

int legendre3(long d) {
  if (d < 1) throw std::invalid_argument("legendre3 argument must be positive");
  switch (d % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

QSeries e1_level3(int order, E1Variant variant) {
  std::vector<Rational> cs(static_cast<size_t>(order) + 1);
  cs[0] = 1;
  for (long n = 1; n <= order; ++n) {
    Integer acc = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      Integer term = legendre3(d);
      if (variant == E1Variant::printed_divisor_square) term *= Integer(n / d) * Integer(n / d);
      acc += term;
    }
    cs[static_cast<size_t>(n)] = Rational(6) * Rational(acc);
  }
  return QSeries::from_coeffs(0, std::move(cs));
}

std::optional<NamedForm> named_form(std::string_view name, int order, E1Variant variant) {
  if (name == "E2") return NamedForm{FormName::E2, 2, 1, eisenstein_e(2, order)};
  if (name == "E4") return NamedForm{FormName::E4, 4, 0, eisenstein_e(4, order)};
  if (name == "E6") return NamedForm{FormName::E6, 6, 0, eisenstein_e(6, order)};
  if (name == "Gt2") return NamedForm{FormName::Gt2, 2, 1, zhu_g(2, order)};
  if (name == "Gt4") return NamedForm{FormName::Gt4, 4, 0, zhu_g(4, order)};
  if (name == "Gt6") return NamedForm{FormName::Gt6, 6, 0, zhu_g(6, order)};
  if (name == "eta") return NamedForm{FormName::Eta, Rational(1, 2), 0, eta(order)};
  if (name == "delta") return NamedForm{FormName::Delta, 12, 0, delta(order)};
  if (name == "E2^(2)" || name == "E2(2)") return NamedForm{FormName::E2Level2, 2, 1, e2_level2(order)};
  if (name == "E1^(3)" || name == "E1(3)")
    return NamedForm{FormName::E1Level3, 1, 0, e1_level3(order, variant)};
  return std::nullopt;
}

const std::vector<std::string>& named_form_names() {
  static const std::vector<std::string> names = {"E2",  "E4",    "E6",     "Gt2",    "Gt4",
                                                 "Gt6", "eta",   "delta",  "E2^(2)", "E1^(3)"};
  return names;
}

}  // namespace qmlde
