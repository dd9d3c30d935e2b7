#include "qmlde/scan.hpp"

#include <algorithm>
#include <numeric>

#include "qmlde/errors.hpp"
#include "qmlde/mlde.hpp"

namespace qmlde {

std::string to_string(Branch b) { return b == Branch::minus ? "minus" : "plus"; }

std::string to_string(FailureKind k) {
  switch (k) {
    case FailureKind::non_integer: return "non_integer";
    case FailureKind::negative: return "negative";
    case FailureKind::resonance_obstruction: return "resonance_obstruction";
  }
  throw std::logic_error("unknown failure kind");
}

ScanResult is_vacuum_type(const Rational& k, Branch branch, int order) {
  ScanResult r;
  r.k = k;
  r.branch = branch;
  r.lambda = branch == Branch::minus ? -k / Rational(12) : (k + Rational(2)) / Rational(12);
  r.checked_order = order;

  const Mlde m = second_order_weight0(k);
  try {
    FrobeniusStepper stepper(m, r.lambda, order);
    for (int s = 1; s <= order; ++s) {
      const Rational& c = stepper.step();
      if (!c.is_integer()) {
        r.failure_offset = s;
        r.failure_kind = FailureKind::non_integer;
        return r;
      }
      if (c.sign() < 0) {
        r.failure_offset = s;
        r.failure_kind = FailureKind::negative;
        return r;
      }
    }
    r.vacuum_type = true;
    const auto& cs = stepper.coeffs();
    const size_t keep = std::min<size_t>(cs.size(), 6);
    r.leading_coeffs.assign(cs.begin(), cs.begin() + static_cast<long>(keep));
  } catch (const logarithmic_obstruction& e) {
    r.failure_offset = e.offset();
    r.failure_kind = FailureKind::resonance_obstruction;
  }
  return r;
}

std::vector<ScanResult> scan_grid(int max_numerator, int max_denominator, Branch branch, int order) {
  if (max_denominator < 1) throw std::invalid_argument("max denominator must be positive");
  if (max_numerator < 1) throw std::invalid_argument("max numerator must be positive");
  std::vector<ScanResult> out;
  for (long q = 1; q <= max_denominator; ++q)
    for (long p = 1; p <= static_cast<long>(max_numerator) * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      out.push_back(is_vacuum_type(Rational(p, q), branch, order));
    }
  std::stable_sort(out.begin(), out.end(), [](const ScanResult& a, const ScanResult& b) {
    if (a.vacuum_type != b.vacuum_type) return a.vacuum_type;
    return a.k < b.k;
  });
  return out;
}

const std::vector<Rational>& candidate_list_minus() {
  static const std::vector<Rational> ks = {Rational(1, 5), Rational(1, 2),  Rational(1),
                                           Rational(7, 5), Rational(2),     Rational(13, 5),
                                           Rational(3),    Rational(7, 2),  Rational(19, 5),
                                           Rational(4)};
  return ks;
}

Rational printed_minus_entry_variant() { return Rational(13, 4); }

const std::vector<Rational>& candidate_list_plus() {
  static const std::vector<Rational> ks = {Rational(1, 5), Rational(1, 2), Rational(1),
                                           Rational(2),    Rational(3),    Rational(5),
                                           Rational(8),    Rational(11),   Rational(17),
                                           Rational(23),   Rational(29),   Rational(53)};
  return ks;
}

CandidateListReport verify_candidate_lists(int order) {
  CandidateListReport report;
  report.all_pass = true;
  for (const auto& k : candidate_list_minus()) {
    report.minus_branch.push_back(is_vacuum_type(k, Branch::minus, order));
    report.all_pass = report.all_pass && report.minus_branch.back().vacuum_type;
  }
  for (const auto& k : candidate_list_plus()) {
    report.plus_branch.push_back(is_vacuum_type(k, Branch::plus, order));
    report.all_pass = report.all_pass && report.plus_branch.back().vacuum_type;
  }
  report.printed_variant = is_vacuum_type(printed_minus_entry_variant(), Branch::minus, order);
  return report;
}

}  // namespace qmlde
