#include "su2cyc/serialize.hpp"

#include "su2cyc/error.hpp"

namespace su2cyc {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::SchemaError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("field '") + key + "': " + e.what());
  }
}

json check_json(const AxiomCheck& c) {
  return json{{"pass", c.pass}, {"vacuous", c.vacuous}, {"details", c.details}};
}

}  // namespace

json rational_json(const Rational& r) {
  return json{{"num", r.numerator()}, {"den", r.denominator()}};
}

void to_json(json& j, const RationalAngle& a) { j = rational_json(a.multiple()); }

void from_json(const json& j, RationalAngle& a) {
  const auto num = field<std::int64_t>(j, "num");
  const auto den = field<std::int64_t>(j, "den");
  if (den == 0) throw Error(ErrorCode::SchemaError, "zero denominator");
  a = RationalAngle(num, den);
}

void to_json(json& j, const Slope& s) { j = s.to_string(); }

void from_json(const json& j, Slope& s) {
  if (!j.is_string()) throw Error(ErrorCode::SchemaError, "slope must be a string");
  s = parse_slope(j.get<std::string>());
}

void to_json(json& j, const PlanePoint& p) { j = json{{"theta", p.theta}, {"eta", p.eta}}; }

void from_json(const json& j, PlanePoint& p) {
  p.theta = field<RationalAngle>(j, "theta");
  p.eta = field<RationalAngle>(j, "eta");
}

void to_json(json& j, const BrokenLine& l) {
  j = json::object();
  j["first"] = l.first ? json(*l.first) : json(nullptr);
  j["second"] = l.second ? json(*l.second) : json(nullptr);
  j["case"] = to_string(l.path_case);
  j["frame"] = l.frame == PathFrame::Strip ? "strip" : "shifted";
  j["vertices"] = l.vertices;
  json labels = json::array();
  for (auto s : l.labels) labels.push_back(to_string(s));
  j["labels"] = labels;
}

void from_json(const json& j, BrokenLine& l) {
  l = BrokenLine{};
  if (j.contains("first") && !j["first"].is_null()) l.first = j["first"].get<Slope>();
  if (j.contains("second") && !j["second"].is_null()) l.second = j["second"].get<Slope>();
  const auto c = field<std::string>(j, "case");
  if (c == "SignsDiffer") l.path_case = PathCase::SignsDiffer;
  else if (c == "SameSign") l.path_case = PathCase::SameSign;
  else throw Error(ErrorCode::SchemaError, "unknown path case '" + c + "'");
  const auto f = field<std::string>(j, "frame");
  if (f == "strip") l.frame = PathFrame::Strip;
  else if (f == "shifted") l.frame = PathFrame::Shifted;
  else throw Error(ErrorCode::SchemaError, "unknown frame '" + f + "'");
  l.vertices = field<std::vector<PlanePoint>>(j, "vertices");
  for (const auto& s : field<std::vector<std::string>>(j, "labels"))
    l.labels.push_back(parse_segment_label(s));
  if (l.vertices.size() != l.labels.size() + 1)
    throw Error(ErrorCode::SchemaError, "need one label per segment");
}

void to_json(json& j, const PiecewisePeriodicFunction& f) {
  json bp = json::array();
  for (const auto& [x, y] : f.breakpoints()) bp.push_back(json::array({x, y}));
  j = json{{"period", rational_json(2)}, {"parity", "odd"}, {"breakpoints", bp}};
}

void from_json(const json& j, PiecewisePeriodicFunction& f) {
  std::vector<PiecewisePeriodicFunction::Breakpoint> bp;
  for (const auto& e : field<json>(j, "breakpoints")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::SchemaError, "breakpoint must be a pair");
    bp.emplace_back(e[0].get<RationalAngle>(), e[1].get<RationalAngle>());
  }
  f = PiecewisePeriodicFunction(std::move(bp));
}

void to_json(json& j, const ExactArc& a) {
  j = json{{"slope_coeff", json::array({a.c_theta, a.c_eta})},
           {"offset", a.offset},
           {"theta_interval", json::array({a.theta_lo, a.theta_hi})}};
}

void from_json(const json& j, ExactArc& a) {
  const auto c = field<std::vector<std::int64_t>>(j, "slope_coeff");
  if (c.size() != 2 || (c[1] != 1 && c[1] != -1))
    throw Error(ErrorCode::SchemaError, "slope_coeff must be [c_theta, +-1]");
  a.c_theta = c[0];
  a.c_eta = c[1];
  a.offset = field<RationalAngle>(j, "offset");
  const auto iv = field<std::vector<RationalAngle>>(j, "theta_interval");
  if (iv.size() != 2 || !(iv[0] < iv[1]))
    throw Error(ErrorCode::SchemaError, "theta_interval must be [lo, hi] with lo < hi");
  a.theta_lo = iv[0];
  a.theta_hi = iv[1];
}

void to_json(json& j, const PillowArcSet& s) {
  json samples = json::array();
  for (const auto& p : s.samples) samples.push_back(json::array({p.theta, p.eta}));
  j = json{{"provenance", to_string(s.provenance)},
           {"exact_arcs", s.exact_arcs},
           {"samples", samples},
           {"tolerance", s.tolerance},
           {"resolution", s.resolution}};
}

void from_json(const json& j, PillowArcSet& s) {
  s = PillowArcSet{};
  const auto prov = field<std::string>(j, "provenance");
  if (prov == "Exact") s.provenance = Provenance::Exact;
  else if (prov == "Sampled") s.provenance = Provenance::Sampled;
  else throw Error(ErrorCode::SchemaError, "unknown provenance '" + prov + "'");
  if (j.contains("exact_arcs")) s.exact_arcs = j["exact_arcs"].get<std::vector<ExactArc>>();
  if (j.contains("samples")) {
    for (const auto& e : j["samples"]) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::SchemaError, "sample must be a pair");
      s.samples.push_back({e[0].get<double>(), e[1].get<double>()});
    }
  }
  if (j.contains("tolerance")) s.tolerance = j["tolerance"].get<double>();
  if (j.contains("resolution")) s.resolution = j["resolution"].get<double>();
}

void to_json(json& j, const GroupPresentation& g) {
  j = json{{"generators", g.generator_count},
           {"relators", g.relators},
           {"meridian", g.meridian},
           {"longitude", g.longitude}};
}

void from_json(const json& j, GroupPresentation& g) {
  g = GroupPresentation{};
  if (j.contains("generators")) g.generator_count = j["generators"].get<int>();
  g.relators = field<std::vector<Word>>(j, "relators");
  g.meridian = field<Word>(j, "meridian");
  g.longitude = field<Word>(j, "longitude");
  g.validate();
}

void to_json(json& j, const KnotRecord& k) {
  j = json{{"name", k.name},
           {"crossings", k.crossings},
           {"amphichiral", k.amphichiral},
           {"alexander", k.alexander.coeffs()}};
}

void from_json(const json& j, KnotRecord& k) {
  k.name = field<std::string>(j, "name");
  k.crossings = field<int>(j, "crossings");
  k.amphichiral = field<bool>(j, "amphichiral");
  const auto c = field<std::vector<std::int64_t>>(j, "alexander");
  if (c.empty()) throw Error(ErrorCode::SchemaError, "empty alexander polynomial");
  k.alexander = IntPolynomial(c).normalized();
}

void to_json(json& j, const PairVerdict& v) {
  j = json{{"delta", v.delta},
           {"d1", v.d1 ? json(*v.d1) : json(nullptr)},
           {"d2", v.d2 ? json(*v.d2) : json(nullptr)},
           {"su2_bound_ok", v.su2_bound_ok},
           {"so3_bound_ok", v.so3_bound_ok},
           {"odd_pair_ok", v.odd_pair_ok},
           {"sign_rule_ok", v.sign_rule_ok},
           {"so3_sign_rule_ok", v.so3_sign_rule_ok},
           {"gap_sum_class", to_string(v.gap_sum_class)}};
}

void to_json(json& j, const TouchPoint& t) {
  j = json{{"theta0", t.theta0}, {"eta", t.eta}, {"on_set", t.on_set}, {"unity_order", t.unity_order}};
}

void to_json(json& j, const PerturbationSchedule& s) {
  j = json::object();
  j["a"] = s.a;
  j["b"] = s.b;
  j["epsilon"] = s.epsilon;
  j["r0"] = s.r0 ? rational_json(*s.r0) : json(nullptr);
  j["tube_radius"] = s.tube_radius;
  j["g1"] = s.g1;
  j["g2"] = s.g2;
  j["f1_sign"] = s.f1.sign();
  j["f2_sign"] = s.f2.sign();
  j["path"] = s.path;
  j["interior"] = s.interior;
  j["sheared"] = s.sheared;
  if (s.separation) {
    j["separation"] = json{{"margin", s.separation->margin},
                           {"theta", s.separation->theta},
                           {"eta", s.separation->eta}};
  } else {
    j["separation"] = nullptr;
  }
}

void to_json(json& j, const ObstructionResult& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    json e{{"theta", x.theta}, {"eta", x.eta}, {"entire_arc", x.entire_arc}};
    e["arc"] = x.arc ? json(*x.arc) : json(nullptr);
    e["exact"] = x.exact ? json(*x.exact) : json(nullptr);
    w.push_back(e);
  }
  j = json{{"empty", r.empty}, {"witnesses", w}};
}

void to_json(json& j, const AxiomsReport& r) {
  j = json{{"closed", check_json(r.closed)},
           {"translation", check_json(r.translation)},
           {"axis", check_json(r.axis)},
           {"collar", check_json(r.collar)},
           {"collar_exact", r.collar_exact ? json(*r.collar_exact) : json(nullptr)},
           {"collar_width", r.collar_width},
           {"collar_is_estimate", r.collar_is_estimate},
           {"all_pass", r.all_pass()}};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace su2cyc
