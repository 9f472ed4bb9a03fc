#pragma once

// JSON views of library values (nlohmann::json).

#include <json.hpp>

#include <string>
#include <vector>

#include "components.hpp"
#include "enumeration.hpp"
#include "moduli.hpp"
#include "orbit.hpp"
#include "origami.hpp"

namespace flatlyap {

using Json = nlohmann::ordered_json;

inline Json to_json(const Origami& o) {
  return Json{{"degree", o.degree()}, {"right", o.right().images()}, {"up", o.up().images()}};
}

inline Origami origami_from_json(const Json& j) {
  require(j.is_object(), "origami JSON must be an object");
  for (const char* f : {"degree", "right", "up"}) require(j.contains(f), std::string("origami JSON lacks '") + f + "'");
  require(j["degree"].is_number_integer(), "degree must be an integer");
  int d = j["degree"].get<int>();
  auto perm = [&](const char* f) {
    const auto& v = j[f];
    require(v.is_array(), std::string("'") + f + "' must be an image array");
    std::vector<int> img;
    for (const auto& x : v) {
      require(x.is_number_integer(), std::string("'") + f + "' must hold integers");
      img.push_back(x.get<int>());
    }
    require(static_cast<int>(img.size()) == d, std::string("'") + f + "' length differs from degree");
    return Permutation(img);
  };
  return Origami(perm("right"), perm("up"));
}

// text or JSON, decided by the first non-blank character
inline Origami parse_origami(std::string_view text) {
  auto k = text.find_first_not_of(" \t\r\n");
  require(k != std::string_view::npos, "empty origami");
  if (text[k] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("bad origami JSON: ") + e.what());
    }
    return origami_from_json(j);
  }
  return parse_origami_text(text);
}

inline Json to_json(const Stratum& s) { return Json(s.orders); }

inline Json to_json(const OrbitSummary& s) {
  Json j{{"degree", s.degree},
         {"stratum", to_json(s.stratum)},
         {"orbit_size", s.orbit_size},
         {"cusp_count", nullptr},
         {"total_hw", to_string(s.total_hw)},
         {"L", to_string(s.L)},
         {"c", to_string(s.c)},
         {"s", to_string(s.s)}};
  if (s.cusp_count) j["cusp_count"] = *s.cusp_count;
  return j;
}

inline Json to_json(const CylinderDecomposition& cyl) {
  Json a = Json::array();
  for (const auto& c : cyl) a.push_back(Json{{"width", c.width}, {"height", c.height}});
  return a;
}

inline Json to_json(const ComponentLabel& l) {
  Json j{{"component", to_string(l.kind)}, {"involution", nullptr}, {"parity", nullptr},
         {"hyperelliptic_locus", l.hyperelliptic_locus}};
  if (l.involution) j["involution"] = l.involution->sigma.images();
  if (l.parity) j["parity"] = to_string(*l.parity);
  return j;
}

inline Json to_json(const DivisorClass& D) {
  Json c = Json::array();
  for (const auto& x : D.c) c.push_back(to_string(x));
  return Json{{"lambda", to_string(D.a)}, {"omega", c}, {"delta0", to_string(D.b0)}};
}

inline Json to_json(const StratumReport& r) {
  Json comps = Json::object();
  for (const auto& [comp, byL] : r.values) {
    Json vals = Json::array();
    for (const auto& [L, w] : byL)
      vals.push_back(Json{{"L", to_string(L)}, {"degree", w.degree}, {"orbit_size", w.orbit_size},
                          {"witness", to_string(origami_from_key(w.origami))}});
    comps[comp] = vals;
  }
  Json orbits = Json::array();
  for (const auto& o : r.orbits)
    orbits.push_back(Json{{"stratum", to_string(r.stratum)}, {"component", o.component}, {"degree", o.degree},
                          {"orbit_size", o.orbit_size}, {"L", to_string(o.L)}, {"c", to_string(o.c)},
                          {"s", to_string(o.s)}, {"witness", to_string(origami_from_key(o.witness))}});
  return Json{{"stratum", to_string(r.stratum)}, {"d_min", r.d_min}, {"d_max", r.d_max}, {"components", comps},
              {"orbits", orbits}};
}

}  // namespace flatlyap
