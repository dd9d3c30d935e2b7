#include "qmlde/json_io.hpp"

namespace qmlde {

namespace {

json coeffs_to_json(const std::vector<Rational>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(c.to_string());
  return arr;
}

std::vector<Rational> coeffs_from_json(const json& arr) {
  std::vector<Rational> cs;
  cs.reserve(arr.size());
  for (const auto& c : arr) cs.push_back(Rational::from_string(c.get<std::string>()));
  return cs;
}

}  // namespace

json to_json(const QSeries& s) {
  json j;
  j["lattice_den"] = QSeries::lattice_den;
  if (s.is_zero()) {
    j["coeffs"] = json::array();
    j["trunc"] = 0;
    return j;
  }
  j["lead_exp"] = s.lead_exp().to_string();
  j["coeffs"] = coeffs_to_json(s.coeffs());
  j["trunc"] = s.trunc_order();
  return j;
}

QSeries qseries_from_json(const json& j) {
  if (j.at("lattice_den").get<long>() != QSeries::lattice_den)
    throw std::invalid_argument("unsupported lattice denominator");
  auto cs = coeffs_from_json(j.at("coeffs"));
  if (cs.empty()) return QSeries::zero();
  const auto lead = Rational::from_string(j.at("lead_exp").get<std::string>());
  const int trunc = j.at("trunc").get<int>();
  if (static_cast<size_t>(trunc) + 1 != cs.size())
    throw std::invalid_argument("trunc does not match coefficient count");
  if (cs.front().is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
  return QSeries::from_coeffs(lead, std::move(cs));
}

json to_json(const IndicialData& d) {
  json j;
  j["polynomial"] = coeffs_to_json(d.polynomial);
  j["roots"] = coeffs_to_json(d.roots);
  j["has_irrational_roots"] = d.has_irrational_roots;
  return j;
}

json to_json(const Resonance& r) {
  return json{{"lambda_small", r.lambda_small.to_string()},
              {"lambda_large", r.lambda_large.to_string()},
              {"gap", r.gap}};
}

json to_json(const FrobeniusSolution& sol) {
  json j;
  j["exponent"] = sol.exponent.to_string();
  j["resonant"] = sol.resonant;
  j["obstruction_at"] = sol.obstruction_at ? json(*sol.obstruction_at) : json(nullptr);
  j["coeffs"] = coeffs_to_json(sol.coeffs);
  j["trunc"] = sol.trunc_order;
  if ((sol.exponent * Rational(QSeries::lattice_den)).is_integer()) {
    j["lattice_den"] = QSeries::lattice_den;
    j["lead_exp"] = sol.exponent.to_string();
  }
  return j;
}

json to_json(const DeligneEntry& e) {
  json j;
  j["label"] = to_string(e.label);
  j["h_dual"] = e.h_dual;
  j["level"] = e.level.to_string();
  j["central_charge"] = e.central_charge.to_string();
  j["dim_g"] = e.dim_g.get_str();
  j["dim_l2theta"] = e.dim_l2theta.get_str();
  j["admissible"] = e.admissible;
  j["quasi_modular_depth_positive"] = e.quasi_modular_depth_positive;
  return j;
}

json to_json(const CharacterReport& r) {
  json j;
  j["entry"] = to_json(r.entry);
  j["closed_form"] = to_json(r.closed_form);
  j["mlde_solution"] = to_json(r.mlde_solution);
  j["checked_order"] = r.checked_order;
  j["agree_to_order"] = r.agree_to_order;
  j["agrees"] = r.agree_to_order == r.checked_order;
  j["first_coefficient"] = r.first_coefficient.to_string();
  if (r.e1l3_variant)
    j["e1l3_variant"] = *r.e1l3_variant == E1Variant::weight_one_eisenstein
                            ? "weight_one_eisenstein"
                            : "printed_divisor_square";
  return j;
}

json to_json(const ScanResult& r) {
  json j;
  j["k"] = r.k.to_string();
  j["branch"] = to_string(r.branch);
  j["lambda"] = r.lambda.to_string();
  j["checked_order"] = r.checked_order;
  j["vacuum_type"] = r.vacuum_type;
  j["failure_offset"] = r.failure_offset ? json(*r.failure_offset) : json(nullptr);
  j["failure_kind"] = r.failure_kind ? json(to_string(*r.failure_kind)) : json(nullptr);
  j["leading_coeffs"] = coeffs_to_json(r.leading_coeffs);
  return j;
}

}  // namespace qmlde
