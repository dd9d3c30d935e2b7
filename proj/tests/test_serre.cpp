#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmlde/modforms.hpp"
#include "qmlde/serre.hpp"
#include "support.hpp"

using namespace qmlde;
using namespace qmlde::test;

TEST_CASE("ramanujan identities") {
  const int n = 200;
  const QSeries e4 = eisenstein_e(4, n);
  const QSeries e6 = eisenstein_e(6, n);
  CHECK(serre_deriv(4, e4) == e6.scaled(Rational(-1, 3)));
  CHECK(serre_deriv(6, e6) == (e4 * e4).scaled(Rational(-1, 2)));
  CHECK(serre_deriv(12, delta(n)).is_zero());
}

TEST_CASE("iterated derivation") {
  const QSeries et = eta(40);
  CHECK(iterated_serre(Rational(7, 3), 0, et) == et);
  CHECK(iterated_serre(12, 1, delta(40)).is_zero());

  // weight-0 double step expands to D^2 - (1/6) E2 D
  Rng rng(5150);
  for (int i = 0; i < 10; ++i) {
    const QSeries f = rng.series(rng.lattice_exponent(), 12);
    const QSeries df = f.derivative();
    const QSeries expected = df.derivative() - (eisenstein_e(2, 12) * df).scaled(Rational(1, 6));
    CHECK(agree_to_shared_truncation(iterated_serre(0, 2, f), expected));
  }

  // composition splits: theta^{i+j}_k = theta^j_{k+2i} after theta^i_k
  Rng rng2(31337);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      const Rational k = rng2.small_rational();
      const QSeries f = rng2.series(rng2.lattice_exponent(), 10);
      CHECK(iterated_serre(k, i + j, f) ==
            iterated_serre(k + Rational(2L * i), j, iterated_serre(k, i, f)));
    }
}

TEST_CASE("formal derivation coincides with the E2 form") {
  const std::vector<Rational> weights = {Rational(0), Rational(1), Rational(4), Rational(13, 4)};
  std::vector<QSeries> corpus = {eisenstein_e(2, 80), eisenstein_e(4, 80), eta(80), delta(80)};
  Rng rng(99);
  for (int i = 0; i < 6; ++i) corpus.push_back(rng.series(rng.lattice_exponent(), 40));
  for (const auto& k : weights)
    for (const auto& f : corpus) CHECK(formal_partial(k, f) == serre_deriv(k, f));

  const QSeries et = eta(30);
  CHECK(formal_partial(0, et) == et.derivative());
  CHECK(formal_partial(12, delta(30)).is_zero());
}

TEST_CASE("weight-carrying wrapper") {
  const WeightedSeries e4{eisenstein_e(4, 30), 4};
  CHECK(serre_deriv(e4) == eisenstein_e(6, 30).scaled(Rational(-1, 3)));
  const WeightedSeries twice = iterated_serre(e4, 2);
  CHECK(twice.weight == Rational(8));
  CHECK(twice.series == iterated_serre(4, 2, e4.series));
}

TEST_CASE("leibniz across weights") {
  Rng rng(2718);
  for (int i = 0; i < 25; ++i) {
    const Rational a = rng.small_rational();
    const Rational b = rng.small_rational();
    const QSeries f = rng.series(rng.lattice_exponent(), 14);
    const QSeries g = rng.series(rng.lattice_exponent(), 14);
    CHECK(agree_to_shared_truncation(serre_deriv(a + b, f * g),
                                     serre_deriv(a, f) * g + f * serre_deriv(b, g)));
  }
}

TEST_CASE("indicial action on the leading term") {
  // leading coefficient of theta_k applied to q^lambda (1 + O(q)) is lambda - k/12
  Rng rng(1618);
  for (int i = 0; i < 25; ++i) {
    const Rational k = rng.small_rational();
    const Rational lambda = rng.lattice_exponent();
    std::vector<Rational> cs(8, Rational(0));
    cs[0] = 1;
    for (size_t j = 1; j < cs.size(); ++j) cs[j] = rng.small_rational();
    const QSeries f = QSeries::from_coeffs(lambda, std::move(cs));
    const QSeries g = serre_deriv(k, f);
    const Rational expected = lambda - k / Rational(12);
    if (expected.is_zero()) {
      CHECK((g.is_zero() || g.lead_exp() > lambda));
    } else {
      CHECK(g.lead_exp() == lambda);
      CHECK(g.coeff(0) == expected);
    }
  }
}
