#pragma once

// JSON forms. Angles are {"num": n, "den": d} meaning (n/d) pi; slopes are
// strings such as "7/3"; segment labels are their enumerator names.

#include "su2cyc/alexander.hpp"
#include "su2cyc/path.hpp"
#include "su2cyc/rep_variety.hpp"
#include "su2cyc/slope.hpp"

#include <json.hpp>

namespace su2cyc {

using json = nlohmann::ordered_json;

void to_json(json& j, const RationalAngle& a);
void from_json(const json& j, RationalAngle& a);
void to_json(json& j, const Slope& s);
void from_json(const json& j, Slope& s);
void to_json(json& j, const PlanePoint& p);
void from_json(const json& j, PlanePoint& p);
void to_json(json& j, const BrokenLine& l);
void from_json(const json& j, BrokenLine& l);
void to_json(json& j, const PiecewisePeriodicFunction& f);
void from_json(const json& j, PiecewisePeriodicFunction& f);
void to_json(json& j, const ExactArc& a);
void from_json(const json& j, ExactArc& a);
void to_json(json& j, const PillowArcSet& s);
void from_json(const json& j, PillowArcSet& s);
void to_json(json& j, const GroupPresentation& g);
void from_json(const json& j, GroupPresentation& g);
void to_json(json& j, const KnotRecord& k);
void from_json(const json& j, KnotRecord& k);
void to_json(json& j, const PairVerdict& v);
void to_json(json& j, const TouchPoint& t);
void to_json(json& j, const PerturbationSchedule& s);
void to_json(json& j, const ObstructionResult& r);
void to_json(json& j, const AxiomsReport& r);

json rational_json(const Rational& r);

/// Parses a JSON document, mapping syntax errors to ParseError.
json parse_json(std::string_view text);

}  // namespace su2cyc
