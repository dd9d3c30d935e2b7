#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qmlde/deligne.hpp"
#include "qmlde/errors.hpp"
#include "qmlde/scan.hpp"

using namespace qmlde;

TEST_CASE("registry") {
  const auto& all = registry();
  REQUIRE(all.size() == 8);

  const auto& a1 = entry(DeligneLabel::A1);
  CHECK(a1.h_dual == 2);
  CHECK(a1.level == Rational(-4, 3));
  CHECK(a1.central_charge == Rational(-6));
  CHECK(a1.dim_g == 3);
  CHECK(a1.dim_l2theta == 5);

  const auto& e8 = entry(DeligneLabel::E8);
  CHECK(e8.h_dual == 30);
  CHECK(e8.level == Rational(-6));
  CHECK(e8.central_charge == Rational(-62));
  CHECK(e8.dim_g == 248);
  CHECK(e8.dim_l2theta == 27000);

  const auto& e7 = entry(DeligneLabel::E7);
  CHECK(e7.h_dual == 18);
  CHECK(e7.level == Rational(-4));
  CHECK(e7.central_charge == Rational(-38));
  CHECK(e7.dim_g == 133);

  CHECK(entry(DeligneLabel::F4).admissible);
  CHECK(!entry(DeligneLabel::D4).admissible);
  CHECK(entry(DeligneLabel::D4).quasi_modular_depth_positive);
  CHECK(!entry(DeligneLabel::G2).quasi_modular_depth_positive);

  const std::vector<long> dims = {3, 8, 14, 28, 52, 78, 133, 248};
  const std::vector<long> dims2 = {5, 27, 77, 300, 1053, 2430, 7371, 27000};
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].dim_g == dims[i]);
    CHECK(all[i].dim_l2theta == dims2[i]);
    CHECK(all[i].central_charge == Rational(-2L * all[i].h_dual - 2));
    CHECK(all[i].level == Rational(-all[i].h_dual, 6) - Rational(1));
  }

  CHECK(label_from_string("E6") == DeligneLabel::E6);
  CHECK(!label_from_string("B2").has_value());
}

TEST_CASE("dimension formulas") {
  CHECK(deligne_dim(2) == Rational(3));
  CHECK(deligne_dim(12) == Rational(78));
  CHECK(deligne_dim(30) == Rational(248));
  CHECK(deligne_dim(24) == Rational(190));
  CHECK(deligne_dim(Rational(7, 2)) == Rational(2L * 9 * 23, 2L * 19));  // generic rational value
  CHECK_THROWS_AS(deligne_dim(-6), zero_division);

  CHECK(dim_l2theta(2) == Rational(5));
  CHECK(dim_l2theta(4) == Rational(77));
  CHECK(dim_l2theta(30) == Rational(27000));
  CHECK_THROWS_AS(dim_l2theta(-12), zero_division);
}

TEST_CASE("closed-form characters") {
  const auto& a1 = entry(DeligneLabel::A1);
  const QSeries chi_a1 = character_closed_form(a1, 3);
  CHECK(chi_a1.lead_exp() == Rational(1, 4));
  CHECK(chi_a1.coeff(0) == Rational(1));
  CHECK(chi_a1.coeff(1) == Rational(3));
  CHECK(chi_a1.coeff(2) == Rational(9));
  CHECK(chi_a1.coeff(3) == Rational(19));

  const QSeries chi_d4 = character_closed_form(entry(DeligneLabel::D4), 2);
  CHECK(chi_d4.lead_exp() == Rational(7, 12));
  CHECK(chi_d4.coeff(0) == Rational(1));
  CHECK(chi_d4.coeff(1) == Rational(28));

  const QSeries chi_e6 = character_closed_form(entry(DeligneLabel::E6), 2);
  CHECK(chi_e6.lead_exp() == Rational(13, 12));
  CHECK(chi_e6.coeff(0) == Rational(1));
  CHECK(chi_e6.coeff(1) == Rational(78));

  const QSeries chi_f4 = character_closed_form(entry(DeligneLabel::F4), 2);
  CHECK(chi_f4.lead_exp() == Rational(5, 6));
  CHECK(chi_f4.coeff(1) == Rational(52));

  const QSeries chi_e7 = character_closed_form(entry(DeligneLabel::E7), 2);
  CHECK(chi_e7.lead_exp() == Rational(19, 12));
  CHECK(chi_e7.coeff(0) == Rational(1));
  CHECK(chi_e7.coeff(1) == Rational(133));

  const QSeries chi_e8 = character_closed_form(entry(DeligneLabel::E8), 2);
  CHECK(chi_e8.lead_exp() == Rational(31, 12));
  CHECK(chi_e8.coeff(0) == Rational(1));
  CHECK(chi_e8.coeff(1) == Rational(248));
}

TEST_CASE("characters via the equation") {
  CHECK(character_via_mlde(entry(DeligneLabel::G2), 2).coeffs ==
        std::vector<Rational>{1, 14, 92});
  CHECK(character_via_mlde(entry(DeligneLabel::A2), 1).coeffs == std::vector<Rational>{1, 8});
  CHECK(character_via_mlde(entry(DeligneLabel::E7), 1).coeffs == std::vector<Rational>{1, 133});
}

TEST_CASE("verification reports") {
  const CharacterReport f4 = verify_character(entry(DeligneLabel::F4), 60);
  CHECK(f4.agree_to_order == 60);
  CHECK(f4.first_coefficient == Rational(52));
  CHECK(!f4.e1l3_variant.has_value());

  const CharacterReport g2 = verify_character(entry(DeligneLabel::G2), 60);
  CHECK(g2.agree_to_order == 60);
  REQUIRE(g2.e1l3_variant.has_value());
  CHECK(*g2.e1l3_variant == E1Variant::weight_one_eisenstein);

  const CharacterReport g2p =
      verify_character(entry(DeligneLabel::G2), 60, E1Variant::printed_divisor_square);
  CHECK(g2p.agree_to_order == 1);
  CHECK(g2p.closed_form.coeff(2) == Rational(110));
  CHECK(g2p.mlde_solution.coeffs[2] == Rational(92));

  for (const auto& e : registry()) {
    const CharacterReport r = verify_character(e, 60);
    CHECK(r.agree_to_order == 60);
    CHECK(r.closed_form.lead_exp() == Rational(e.h_dual + 1, 12));
    CHECK(r.closed_form.lead_exp() == -e.central_charge / Rational(24));
    CHECK(r.closed_form.coeff(0) == Rational(1));
    CHECK(r.first_coefficient == Rational(e.dim_g));
    for (int n = 0; n <= 60; ++n) {
      const Rational c = r.closed_form.coeff(n);
      CHECK(c.is_integer());
      CHECK(c.sign() >= 0);
    }
  }
}

TEST_CASE("character exponents sit on the plus candidate branch") {
  for (const auto& e : registry()) {
    const Rational k(e.h_dual - 1);
    const auto& plus = candidate_list_plus();
    CHECK(std::find(plus.begin(), plus.end(), k) != plus.end());
  }
}
