#include "knotpoly/knotdb.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "knotpoly/invariants.hpp"
#include "knotpoly/vassiliev.hpp"

namespace knotpoly {

using nlohmann::json;

namespace {

KnotRecord record_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("knot table entries must be objects");
  KnotRecord r;
  if (!j.contains("name") || !j["name"].is_string() || j["name"].get<std::string>().empty())
    throw std::invalid_argument("knot record without a name");
  r.name = j["name"].get<std::string>();
  if (r.name[0] == '!') throw std::invalid_argument("stored record names may not start with '!': " + r.name);
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "dt" && key != "braid" && key != "crossings" && key != "expected")
      throw std::invalid_argument(r.name + ": unknown field '" + key + "'");
  if (j.contains("dt")) {
    if (!j["dt"].is_array()) throw std::invalid_argument(r.name + ": dt must be an array of integers");
    DTCode code;
    for (const auto& e : j["dt"]) {
      if (!e.is_number_integer()) throw std::invalid_argument(r.name + ": dt must be an array of integers");
      code.push_back(e.get<int>());
    }
    r.dt = std::move(code);
  }
  if (j.contains("braid")) {
    if (!j["braid"].is_string()) throw std::invalid_argument(r.name + ": braid must be text");
    r.braid = parse_braid(j["braid"].get<std::string>());
  }
  if (!r.dt && !r.braid) throw std::invalid_argument(r.name + ": record needs a dt code or a braid");
  if (j.contains("crossings")) {
    if (!j["crossings"].is_number_integer()) throw std::invalid_argument(r.name + ": crossings must be an integer");
    r.crossings = j["crossings"].get<int>();
  } else if (r.dt) {
    r.crossings = static_cast<int>(r.dt->size());
  }
  if (j.contains("expected")) {
    if (!j["expected"].is_object()) throw std::invalid_argument(r.name + ": expected must be an object");
    for (const auto& [key, value] : j["expected"].items()) {
      if (!value.is_string()) throw std::invalid_argument(r.name + ": expected values must be text");
      r.expected[key] = value.get<std::string>();
    }
  }
  if (r.dt) {
    try {
      realize_dt(*r.dt);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(r.name + ": " + e.what());
    }
  }
  return r;
}

json record_to_json(const KnotRecord& r) {
  json j;
  j["name"] = r.name;
  if (r.dt) j["dt"] = *r.dt;
  if (r.braid) j["braid"] = to_string(*r.braid);
  j["crossings"] = r.crossings;
  if (!r.expected.empty()) j["expected"] = r.expected;
  return j;
}

}  // namespace

std::vector<KnotRecord> parse_table(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("knot table is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("knot table must be a JSON array");
  std::vector<KnotRecord> out;
  std::set<std::string> names;
  for (const auto& j : doc) {
    KnotRecord r = record_from_json(j);
    if (!names.insert(r.name).second) throw std::invalid_argument("duplicate knot name " + r.name);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<KnotRecord> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open knot table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

std::string serialize_table(const std::vector<KnotRecord>& records) {
  json doc = json::array();
  for (const auto& r : records) doc.push_back(record_to_json(r));
  return doc.dump(2) + "\n";
}

KnotRecord obverse(const KnotRecord& r) {
  KnotRecord m = r;
  m.name = (!r.name.empty() && r.name[0] == '!') ? r.name.substr(1) : "!" + r.name;
  if (m.dt)
    for (int& e : *m.dt) e = -e;
  if (m.braid) m.braid = mirror(*m.braid);
  for (auto& [key, text] : m.expected) {
    if (key == "homfly") text = conj_homfly(parse_laurent2(text, "v", "z")).to_string("v", "z");
    else if (key == "kauffman") text = conj_kauffman(parse_laurent2(text, "a", "z")).to_string("a", "z");
  }
  return m;
}

KnotRecord resolve(const std::vector<KnotRecord>& table, std::string_view name) {
  const bool obv = !name.empty() && name[0] == '!';
  const std::string_view base = obv ? name.substr(1) : name;
  for (const auto& r : table)
    if (r.name == base) return obv ? obverse(r) : r;
  throw std::out_of_range("unknown knot " + std::string(name));
}

PlanarDiagram record_diagram(const KnotRecord& r) {
  if (r.braid) return braid_closure(*r.braid);
  return realize_dt(*r.dt);
}

LaurentPoly2 record_homfly(const KnotRecord& r, const SkeinConfig& cfg) {
  if (r.braid) return homfly_braid(*r.braid, cfg);
  return homfly(realize_dt(*r.dt), cfg);
}

LaurentPoly2 record_kauffman(const KnotRecord& r, const SkeinConfig& cfg) { return kauffman(record_diagram(r), cfg); }

std::vector<ValidationEntry> validate_table(const std::vector<KnotRecord>& records, const SkeinConfig& cfg) {
  std::vector<ValidationEntry> out;
  for (const auto& r : records) {
    std::optional<LaurentPoly2> hom;
    auto get_homfly = [&]() -> const LaurentPoly2& {
      if (!hom) hom = record_homfly(r, cfg);
      return *hom;
    };
    for (const auto& [key, text] : r.expected) {
      ValidationEntry e{r.name, key, false, text, ""};
      try {
        if (key == "conway") {
          LaurentPoly1 got = conway(get_homfly());
          e.actual = got.to_string("x");
          e.passed = got == parse_laurent1(text, "x");
        } else if (key == "homfly") {
          e.actual = get_homfly().to_string("v", "z");
          e.passed = get_homfly() == parse_laurent2(text, "v", "z");
        } else if (key == "kauffman") {
          LaurentPoly2 got = record_kauffman(r, cfg);
          e.actual = got.to_string("a", "z");
          e.passed = got == parse_laurent2(text, "a", "z");
        } else if (key == "determinant") {
          e.actual = determinant_signed(conway(get_homfly())).get_str();
          e.passed = e.actual == text;
        } else {
          e.actual = "unknown invariant";
        }
      } catch (const std::exception& ex) {
        e.actual = std::string("error: ") + ex.what();
      }
      out.push_back(std::move(e));
    }
    if (r.dt && r.braid) {
      ValidationEntry e{r.name, "dt/braid agreement", false, "", ""};
      try {
        LaurentPoly2 from_dt = homfly(realize_dt(*r.dt), cfg);
        e.expected = get_homfly().to_string("v", "z");
        e.actual = from_dt.to_string("v", "z");
        e.passed = from_dt == get_homfly();
      } catch (const std::exception& ex) {
        e.actual = std::string("error: ") + ex.what();
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace knotpoly
