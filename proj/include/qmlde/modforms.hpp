#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qmlde/qseries.hpp"

namespace qmlde {

// Divisor power sum sigma_k(n) = sum_{d | n} d^k.
Integer sigma(int k, long n);

// Bernoulli number B_n (B_1 = -1/2 convention), by the standard recursion
// sum_{j=0}^{m} C(m+1, j) B_j = 0.
Rational bernoulli(int n);

// Normalized Eisenstein series of even weight w >= 2, constant term 1:
//   E_w = 1 - (2w / B_w) sum_{n>=1} sigma_{w-1}(n) q^n,
// so E_2 = 1 - 24 sum sigma_1 q^n, E_4 = 1 + 240 sum sigma_3 q^n,
// E_6 = 1 - 504 sum sigma_5 q^n.
QSeries eisenstein_e(int weight, int order);

// Rational-normalized Eisenstein coefficients
//   G~_w = -B_w / w! + (2 / (w-1)!) sum_{n>=1} sigma_{w-1}(n) q^n,
// the normalization for which G~_2 = -E_2 / 12.
QSeries zhu_g(int weight, int order);

// Dedekind eta: q^{1/24} prod_{n>=1} (1 - q^n), by the truncated product.
QSeries eta(int order);

// Discriminant: eta^24 = q prod (1-q^n)^24.
QSeries delta(int order);

// Level-2 quasi-modular combination 2 E_2(2tau) - E_2(tau).
QSeries e2_level2(int order);

// Legendre symbol (d/3): 0, 1, -1 for d = 0, 1, 2 mod 3.
int legendre3(long d);

// Weight-one level-3 Eisenstein series. The weight_one_eisenstein variant is
//   1 + 6 sum_{n>=1} ( sum_{d|n} (d/3) ) q^n;
// printed_divisor_square replaces the summand by (d/3) (n/d)^2. The two differ
// from q^2 on; only the first solves the G2 character equation.
enum class E1Variant { weight_one_eisenstein, printed_divisor_square };
QSeries e1_level3(int order, E1Variant variant = E1Variant::weight_one_eisenstein);

enum class FormName { E2, E4, E6, Gt2, Gt4, Gt6, Eta, Delta, E2Level2, E1Level3 };

struct NamedForm {
  FormName name;
  Rational weight;              // eta has weight 1/2
  int quasi_modular_depth = 0;  // E2-degree: 1 for E2 and E2^(2)
  QSeries series;
};

// Looks up a form by canonical name (E2, E4, E6, Gt2, Gt4, Gt6, eta, delta,
// E2^(2), E1^(3)); returns nullopt for unknown names.
std::optional<NamedForm> named_form(std::string_view name, int order,
                                    E1Variant variant = E1Variant::weight_one_eisenstein);

// The canonical form names accepted by named_form, for diagnostics.
const std::vector<std::string>& named_form_names();

}  // namespace qmlde
