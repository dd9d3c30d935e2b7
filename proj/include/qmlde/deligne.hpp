#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmlde/mlde.hpp"
#include "qmlde/modforms.hpp"
#include "qmlde/qseries.hpp"

namespace qmlde {

enum class DeligneLabel { A1, A2, G2, D4, F4, E6, E7, E8 };

std::string to_string(DeligneLabel label);
std::optional<DeligneLabel> label_from_string(std::string_view s);

// One algebra of the exceptional chain A1 < A2 < G2 < D4 < F4 < E6 < E7 < E8
// with the invariants of its level -h/6-1 simple affine vertex algebra.
struct DeligneEntry {
  DeligneLabel label;
  int h_dual = 0;              // dual Coxeter number
  Rational level;              // -h_dual/6 - 1
  Rational central_charge;     // -2 h_dual - 2
  Integer dim_g;               // 2 (h+1)(5h-6) / (h+6)
  Integer dim_l2theta;         // 5 h^2 (2h+3)(5h-6) / ((h+12)(h+6))
  bool admissible = false;                  // true for A1, A2, G2, F4
  bool quasi_modular_depth_positive = false;  // true for D4, E6, E7, E8
};

const std::vector<DeligneEntry>& registry();
const DeligneEntry& entry(DeligneLabel label);

// dim g = 2 (h+1)(5h-6) / (h+6), exact; pole at h = -6.
Rational deligne_dim(const Rational& h_dual);

// dim L(2 theta) = 5 h^2 (2h+3)(5h-6) / ((h+12)(h+6)), exact; poles at -6, -12.
Rational dim_l2theta(const Rational& h_dual);

// The closed-form character expanded to order N past its leading exponent
// (h+1)/12. Square roots of the discriminant are eliminated algebraically
// before expansion, so everything stays on the integer lattice. The variant
// selects the E1^(3) convention for G2 and is ignored elsewhere.
QSeries character_closed_form(const DeligneEntry& e, int order,
                              E1Variant variant = E1Variant::weight_one_eisenstein);

// The vacuum-type solution of the associated second-order equation at the
// larger indicial root (h+1)/12.
FrobeniusSolution character_via_mlde(const DeligneEntry& e, int order);

struct CharacterReport {
  DeligneEntry entry;
  QSeries closed_form;
  FrobeniusSolution mlde_solution;
  int checked_order = 0;
  // Last offset through which the two expansions agree: the full checked
  // order, or the first disagreement offset minus one (-1: nothing agrees).
  int agree_to_order = 0;
  Rational first_coefficient;  // coefficient one offset past the leading 1
  std::optional<E1Variant> e1l3_variant;  // set for G2 only
};

CharacterReport verify_character(const DeligneEntry& e, int order,
                                 E1Variant variant = E1Variant::weight_one_eisenstein);

}  // namespace qmlde
