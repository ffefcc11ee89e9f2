#include "knotpoly/json_io.hpp"

namespace knotpoly {

using nlohmann::json;

json poly_json(const LaurentPoly2& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"v", e.v}, {"z", e.z}, {"c", c.get_str()}});
  return {{"terms", terms}};
}

json poly_json(const LaurentPoly1& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"x", e}, {"c", c.get_str()}});
  return {{"terms", terms}};
}

json report_json(const ChiralityReport& r) {
  json j;
  j["knot"] = r.knot;
  j["homfly"] = poly_json(r.homfly);
  j["kauffman"] = poly_json(r.kauffman);
  j["homfly_self_conjugate"] = r.homfly_self_conjugate;
  j["kauffman_self_conjugate"] = r.kauffman_self_conjugate;
  j["determinant"] = r.determinant.get_str();
  j["determinant_sign"] = r.determinant_sign;
  j["cable_homfly_self_conjugate"] = r.cable_homfly_self_conjugate ? json(*r.cable_homfly_self_conjugate) : json();
  j["chirality_detected"] = r.chirality_detected();
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back({{"invariant", w.invariant}, {"knot", w.on_knot}, {"obverse", w.on_obverse}});
  j["witnesses"] = ws;
  return j;
}

json validation_json(const std::vector<ValidationEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries)
    out.push_back({{"knot", e.knot},
                   {"invariant", e.invariant},
                   {"passed", e.passed},
                   {"expected", e.expected},
                   {"actual", e.actual}});
  return out;
}

}  // namespace knotpoly
