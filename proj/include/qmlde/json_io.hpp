#pragma once

#include <json.hpp>

#include "qmlde/deligne.hpp"
#include "qmlde/mlde.hpp"
#include "qmlde/qseries.hpp"
#include "qmlde/scan.hpp"

namespace qmlde {

using nlohmann::json;

// {"lattice_den": 24, "lead_exp": "p/q", "coeffs": ["c0", ...], "trunc": N};
// rationals are "num/den" decimal strings with "/den" omitted when den = 1.
// The zero series carries empty coeffs and no lead_exp. Round-trips bit-exactly.
json to_json(const QSeries& s);
QSeries qseries_from_json(const json& j);

json to_json(const IndicialData& d);
json to_json(const Resonance& r);
// QSeries schema plus exponent/resonant/obstruction_at; the lattice keys are
// present only when the exponent lies on the 1/24 lattice.
json to_json(const FrobeniusSolution& sol);
json to_json(const DeligneEntry& e);
json to_json(const CharacterReport& r);
json to_json(const ScanResult& r);

}  // namespace qmlde
