// Property suites shared by the unit tests and the acceptance runner. Each
// suite returns a list of failure descriptions (empty = pass).
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "qmlde/json_io.hpp"
#include "qmlde/modforms.hpp"
#include "qmlde/qseries.hpp"
#include "qmlde/serre.hpp"
#include "support.hpp"

namespace qmlde::test {

// Ring axioms on random series, exact to shared truncation, plus the inverse
// law mul(a, invert(a)) = 1.
inline std::vector<std::string> ring_axiom_suite(int rounds, unsigned seed) {
  std::vector<std::string> failures;
  Rng rng(seed);
  auto fail = [&](const std::string& what, int round) {
    failures.push_back(what + " failed in round " + std::to_string(round));
  };
  for (int round = 0; round < rounds; ++round) {
    // One fractional class per round keeps every sum representable.
    const Rational base = rng.lattice_exponent();
    const QSeries a = rng.series(base + Rational(rng.pick(0, 3)), static_cast<int>(rng.pick(3, 10)));
    const QSeries b = rng.series(base + Rational(rng.pick(0, 3)), static_cast<int>(rng.pick(3, 10)));
    const QSeries c = rng.series(base + Rational(rng.pick(0, 3)), static_cast<int>(rng.pick(3, 10)));

    if (!agree_to_shared_truncation((a + b) + c, a + (b + c))) fail("add associativity", round);
    if (!agree_to_shared_truncation(a + b, b + a)) fail("add commutativity", round);
    if (!agree_to_shared_truncation((a * b) * c, a * (b * c))) fail("mul associativity", round);
    if (!agree_to_shared_truncation(a * b, b * a)) fail("mul commutativity", round);
    if (!agree_to_shared_truncation(a * (b + c), a * b + a * c)) fail("distributivity", round);
    if (!agree_to_shared_truncation(a * a.inverse(), QSeries::one(a.trunc_order())))
      fail("mul(a, invert(a)) = 1", round);
  }
  return failures;
}

// applyD is a derivation and rescaling is a ring homomorphism.
inline std::vector<std::string> derivation_suite(int rounds, unsigned seed) {
  std::vector<std::string> failures;
  Rng rng(seed);
  for (int round = 0; round < rounds; ++round) {
    const Rational base = rng.lattice_exponent();
    const QSeries a = rng.series(base, static_cast<int>(rng.pick(3, 10)));
    const QSeries b = rng.series(base + Rational(rng.pick(0, 2)), static_cast<int>(rng.pick(3, 10)));
    if (!agree_to_shared_truncation((a * b).derivative(), a.derivative() * b + a * b.derivative()))
      failures.push_back("Leibniz rule failed in round " + std::to_string(round));
    const long m = rng.pick(1, 3);
    if (a.rescale_variable(m) * b.rescale_variable(m) != (a * b).rescale_variable(m))
      failures.push_back("rescale/mul homomorphism failed in round " + std::to_string(round));
    if (a.rescale_variable(m) + b.rescale_variable(m) != (a + b).rescale_variable(m))
      failures.push_back("rescale/add homomorphism failed in round " + std::to_string(round));
  }
  return failures;
}

// Composite expressions against the naive unlimited-precision oracle on
// small instances (orders <= 20).
inline std::vector<std::string> truncation_soundness_suite(int rounds, unsigned seed) {
  std::vector<std::string> failures;
  Rng rng(seed);
  for (int round = 0; round < rounds; ++round) {
    const Rational base = rng.lattice_exponent();
    const int order = static_cast<int>(rng.pick(8, 20));
    const QSeries a = rng.series(base, order);
    const QSeries b = rng.series(base + Rational(rng.pick(0, 2)), order);
    // c must share the fractional exponent class of a*b to be addable
    const QSeries c = rng.series(base + base + Rational(rng.pick(0, 2)), order);
    const NaivePoly na = naive_from(a), nb = naive_from(b), nc = naive_from(c);

    const QSeries lhs = (a * b + c.scaled(Rational(3, 7))) * a.derivative();
    const NaivePoly oracle =
        naive_mul(naive_add(naive_mul(na, nb), naive_scale(nc, Rational(3, 7))), naive_deriv(na));
    if (!matches_naive(lhs, oracle))
      failures.push_back("product/sum/derivative composite disagreed with the naive oracle in round " +
                         std::to_string(round));

    const QSeries inv = a.inverse() * b.rescale_variable(2);
    const NaivePoly oracle2 =
        naive_mul(naive_invert(na, 3 * order + 2), naive_rescale(nb, 2));
    if (!matches_naive(inv, oracle2))
      failures.push_back("inverse/rescale composite disagreed with the naive oracle in round " +
                         std::to_string(round));
  }
  return failures;
}

// JSON round trips are bit-exact on a corpus including the zero series.
inline std::vector<std::string> json_roundtrip_suite(int rounds, unsigned seed) {
  std::vector<std::string> failures;
  Rng rng(seed);
  auto check = [&](const QSeries& s, const std::string& what) {
    if (qseries_from_json(to_json(s)) != s) failures.push_back("round trip changed " + what);
  };
  check(QSeries::zero(), "the zero series");
  check(eta(40), "eta");
  check(eisenstein_e(2, 40), "E2");
  for (int round = 0; round < rounds; ++round)
    check(rng.series(rng.lattice_exponent(), static_cast<int>(rng.pick(0, 15))),
          "a random series in round " + std::to_string(round));
  return failures;
}

}  // namespace qmlde::test
