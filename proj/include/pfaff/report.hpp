#pragma once

// JSON interchange for ladder specs and invariant reports.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pfaff/engine.hpp"
#include "pfaff/error.hpp"
#include "pfaff/families.hpp"
#include "pfaff/formulas.hpp"
#include "pfaff/hvector.hpp"
#include "pfaff/ladder.hpp"

namespace pfaff {

using Json = nlohmann::ordered_json;

inline Json spec_to_json(const LadderIdealSpec& spec) {
  Json corners = Json::array();
  for (const auto& bl : spec.blocks()) corners.push_back({bl.corner.a, bl.corner.b});
  return Json{{"n", spec.n()}, {"corners", corners}, {"t", spec.t()}};
}

/// {"n": int, "corners": [[a,b], ...], "t": [int, ...]}
inline LadderIdealSpec spec_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("corners") || !j.contains("t")) {
      throw Error(ErrorCode::BadSpecFormat, "expected keys n, corners, t");
    }
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> corners;
    for (const auto& c : j.at("corners")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::BadSpecFormat, "a corner is a pair [a, b]");
      corners.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return LadderIdealSpec::make(n, corners, j.at("t").get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadSpecFormat, e.what());
  }
}

inline LadderIdealSpec spec_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadSpecFormat, e.what());
  }
  return spec_from_json(j);
}

enum class Source { Formula, Engine, Oracle };

inline std::string_view source_name(Source s) {
  switch (s) {
    case Source::Formula: return "formula";
    case Source::Engine: return "engine";
    case Source::Oracle: return "oracle";
  }
  return "engine";
}

inline Json hvector_to_json(const HVector& h) { return Json(h.coeffs); }

struct InvariantReport {
  LadderIdealSpec spec;
  int height = 0;
  BigInt multiplicity;
  std::optional<HVector> hvector;
  std::optional<int> regularity;
  Source source = Source::Engine;

  /// sum(h) = e and reg = deg h + 1 whenever both sides are present.
  void validate() const {
    if (hvector && hvector_sum(*hvector) != multiplicity) {
      throw std::logic_error("h-vector " + to_string(*hvector) + " does not sum to " + multiplicity.get_str());
    }
    if (hvector && regularity && *regularity != reg_from_hvector(*hvector)) {
      throw std::logic_error("regularity " + std::to_string(*regularity) + " differs from deg h + 1");
    }
  }

  Json to_json() const {
    Json j;
    j["spec"] = spec_to_json(spec);
    j["height"] = height;
    j["multiplicity"] = multiplicity.get_str();
    j["hvector"] = hvector ? hvector_to_json(*hvector) : Json(nullptr);
    j["regularity"] = regularity ? Json(*regularity) : Json(nullptr);
    j["source"] = source_name(source);
    return j;
  }

  std::string to_text() const {
    std::string s;
    s += "height: " + std::to_string(height) + "\n";
    s += "multiplicity: " + multiplicity.get_str() + "\n";
    s += "hvector: " + (hvector ? to_string(*hvector) : std::string("-")) + "\n";
    s += "regularity: " + (regularity ? std::to_string(*regularity) : std::string("-")) + "\n";
    s += "source: " + std::string(source_name(source)) + "\n";
    return s;
  }
};

/// Invariants of an arbitrary spec from the biliaison engine; the regularity
/// comes from a closed form when the shape has one, else from the h-vector.
inline InvariantReport report_for_spec(const LadderIdealSpec& spec, EngineStats* stats = nullptr) {
  InvariantReport r;
  r.spec = spec;
  const LadderIdealSpec normal = normalize(spec);
  r.height = height(normal);
  r.multiplicity = mult_generic(normal, CornerPolicy::MaxT, stats);
  r.hvector = hvec_generic(normal, CornerPolicy::MaxT);
  r.regularity = closed_regularity(normal).value_or(reg_from_hvector(*r.hvector));
  r.source = Source::Engine;
  r.validate();
  return r;
}

inline std::optional<int> family_regularity(Family f, const FamilyParams& p) {
  switch (f) {
    case Family::M: return reg_closed(RegFamily::M, p.t);
    case Family::SM: return reg_closed(RegFamily::SM, p.t);
    case Family::N:
      if (p.t >= 2) return reg_closed(RegFamily::N, p.t);
      return std::nullopt;
    case Family::Lk:
      if (p.k == 2) return reg_closed(RegFamily::Lt2, p.t);
      return std::nullopt;
    default: return std::nullopt;
  }
}

/// Invariants of a named family: multiplicity and (where available)
/// regularity from the closed formulas, h-vector from the closed sum for M_t
/// and from the engine otherwise.
inline InvariantReport report_for_family(Family f, const FamilyParams& p, EngineStats* stats = nullptr) {
  InvariantReport r;
  r.spec = make_family(f, p);
  const LadderIdealSpec normal = normalize(r.spec);
  r.height = height(normal);
  r.multiplicity = mult_family(f, p);
  r.hvector = f == Family::M ? hvec_Mt(p.t) : hvec_generic(normal, CornerPolicy::MaxT, stats);
  r.regularity = family_regularity(f, p).value_or(reg_from_hvector(*r.hvector));
  r.source = Source::Formula;
  r.validate();
  return r;
}

}  // namespace pfaff
