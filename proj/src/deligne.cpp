#include "qmlde/deligne.hpp"

#include <array>
#include <stdexcept>

#include "qmlde/errors.hpp"

namespace qmlde {

std::string to_string(DeligneLabel label) {
  switch (label) {
    case DeligneLabel::A1: return "A1";
    case DeligneLabel::A2: return "A2";
    case DeligneLabel::G2: return "G2";
    case DeligneLabel::D4: return "D4";
    case DeligneLabel::F4: return "F4";
    case DeligneLabel::E6: return "E6";
    case DeligneLabel::E7: return "E7";
    case DeligneLabel::E8: return "E8";
  }
  throw std::logic_error("unknown label");
}

std::optional<DeligneLabel> label_from_string(std::string_view s) {
  static const std::array<DeligneLabel, 8> all = {DeligneLabel::A1, DeligneLabel::A2, DeligneLabel::G2,
                                                  DeligneLabel::D4, DeligneLabel::F4, DeligneLabel::E6,
                                                  DeligneLabel::E7, DeligneLabel::E8};
  for (auto l : all)
    if (to_string(l) == s) return l;
  return std::nullopt;
}

Rational deligne_dim(const Rational& h_dual) {
  const Rational den = h_dual + Rational(6);
  if (den.is_zero()) throw zero_division("dim g has a pole at h_dual = -6");
  return Rational(2) * (h_dual + Rational(1)) * (Rational(5) * h_dual - Rational(6)) / den;
}

Rational dim_l2theta(const Rational& h_dual) {
  const Rational d1 = h_dual + Rational(12), d2 = h_dual + Rational(6);
  if (d1.is_zero() || d2.is_zero())
    throw zero_division("dim L(2theta) has poles at h_dual = -12 and -6");
  return Rational(5) * h_dual * h_dual * (Rational(2) * h_dual + Rational(3)) *
         (Rational(5) * h_dual - Rational(6)) / (d1 * d2);
}

namespace {

DeligneEntry make_entry(DeligneLabel label, int h, bool admissible) {
  DeligneEntry e;
  e.label = label;
  e.h_dual = h;
  e.level = Rational(-h, 6) - Rational(1);
  e.central_charge = Rational(-2 * h - 2);
  const Rational dg = deligne_dim(Rational(h));
  const Rational dl = dim_l2theta(Rational(h));
  if (!dg.is_integer() || !dl.is_integer())
    throw std::logic_error("non-integer dimension for " + to_string(label));
  e.dim_g = dg.num();
  e.dim_l2theta = dl.num();
  e.admissible = admissible;
  e.quasi_modular_depth_positive = !admissible;
  return e;
}

}  // namespace

const std::vector<DeligneEntry>& registry() {
  static const std::vector<DeligneEntry> entries = {
      make_entry(DeligneLabel::A1, 2, true),  make_entry(DeligneLabel::A2, 3, true),
      make_entry(DeligneLabel::G2, 4, true),  make_entry(DeligneLabel::D4, 6, false),
      make_entry(DeligneLabel::F4, 9, true),  make_entry(DeligneLabel::E6, 12, false),
      make_entry(DeligneLabel::E7, 18, false), make_entry(DeligneLabel::E8, 30, false),
  };
  return entries;
}

const DeligneEntry& entry(DeligneLabel label) {
  for (const auto& e : registry())
    if (e.label == label) return e;
  throw std::logic_error("unknown label");
}

QSeries character_closed_form(const DeligneEntry& e, int order, E1Variant variant) {
  // Over-provision past the requested order: the E6/E7/E8 numerators cancel
  // 1, 2 and 4 leading offsets before the vacuum exponent appears.
  const int w = order + 6;
  const QSeries et = eta(w);
  QSeries chi;
  switch (e.label) {
    case DeligneLabel::A1:
      chi = et.rescale_variable(3).pow(3) * et.pow(-3);
      break;
    case DeligneLabel::A2:
      chi = et.rescale_variable(2).pow(8) * et.pow(-8);
      break;
    case DeligneLabel::G2:
      chi = e1_level3(w, variant) * et.rescale_variable(3).pow(6) * et.pow(-8);
      break;
    case DeligneLabel::D4:
      chi = eisenstein_e(4, w).derivative().scaled(Rational(1, 240)) * et.pow(-10);
      break;
    case DeligneLabel::F4:
      chi = e2_level2(w) * et.rescale_variable(2).pow(24) * et.pow(-28);
      break;
    case DeligneLabel::E6: {
      const QSeries e4p = eisenstein_e(4, w).derivative().scaled(Rational(1, 240));
      chi = (eisenstein_e(6, w) * e4p * et.pow(-22) - et.pow(2)).scaled(Rational(-1, 462));
      break;
    }
    case DeligneLabel::E7: {
      const QSeries e4p = eisenstein_e(4, w).derivative().scaled(Rational(1, 240));
      const QSeries e6 = eisenstein_e(6, w);
      const QSeries dlt = et.pow(24);
      const QSeries inv34 = et.pow(-34);
      // Delta P_2(E6 / sqrt(Delta)) = E6^2 + 462 Delta
      chi = ((e6 * e6 + dlt.scaled(462)) * e4p * inv34 - dlt * e6 * inv34)
                .scaled(Rational(1, 204204));
      break;
    }
    case DeligneLabel::E8: {
      const QSeries e4p = eisenstein_e(4, w).derivative().scaled(Rational(1, 240));
      const QSeries e6 = eisenstein_e(6, w);
      const QSeries dlt = et.pow(24);
      const QSeries inv58 = et.pow(-58);
      const QSeries e6sq = e6 * e6;
      // Delta^2 P_4(E6 / sqrt(Delta)) = E6^4 + 1341 E6^2 Delta + 201894 Delta^2
      const QSeries p_part = e6sq * e6sq + (e6sq * dlt).scaled(1341) + (dlt * dlt).scaled(201894);
      // Delta^{5/2} Q_4(E6 / sqrt(Delta)) = E6^3 Delta + 879 E6 Delta^2
      const QSeries q_part = e6sq * e6 * dlt + (e6 * dlt * dlt).scaled(879);
      chi = (p_part * e4p * inv58 - q_part * inv58).scaled(Rational(1L, 38818159380L));
      break;
    }
  }
  return chi.truncated(order);
}

FrobeniusSolution character_via_mlde(const DeligneEntry& e, int order) {
  return frobenius_solve(deligne_mlde(e.h_dual), Rational(e.h_dual + 1, 12), order);
}

CharacterReport verify_character(const DeligneEntry& e, int order, E1Variant variant) {
  if (order < 1) throw std::invalid_argument("verification order must be at least 1");
  CharacterReport report;
  report.entry = e;
  report.closed_form = character_closed_form(e, order, variant);
  report.mlde_solution = character_via_mlde(e, order);
  report.checked_order = order;
  if (e.label == DeligneLabel::G2) report.e1l3_variant = variant;

  int agree = -1;
  if (!report.closed_form.is_zero() &&
      report.closed_form.lead_exp() == report.mlde_solution.exponent) {
    agree = order;
    for (int i = 0; i <= order; ++i) {
      if (report.closed_form.coeff(i) != report.mlde_solution.coeffs[static_cast<size_t>(i)]) {
        agree = i - 1;
        break;
      }
    }
  }
  report.agree_to_order = agree;
  report.first_coefficient = report.closed_form.is_zero() ? Rational(0) : report.closed_form.coeff(1);
  return report;
}

}  // namespace qmlde
