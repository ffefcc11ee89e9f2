#pragma once

#include <json.hpp>

#include "knotpoly/chirality.hpp"
#include "knotpoly/knotdb.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// {"terms": [{"v": int, "z": int, "c": "<integer text>"}, ...]} in canonical order.
nlohmann::json poly_json(const LaurentPoly2& p);
nlohmann::json poly_json(const LaurentPoly1& p);
nlohmann::json report_json(const ChiralityReport& r);
nlohmann::json validation_json(const std::vector<ValidationEntry>& entries);

}  // namespace knotpoly
