#include "su2cyc/audit.hpp"

#include "su2cyc/error.hpp"
#include "su2cyc/path.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#ifndef SU2CYC_DEFAULT_TABLE
#define SU2CYC_DEFAULT_TABLE "data/knots_le10.json"
#endif

namespace su2cyc {

std::vector<KnotRecord> parse_knot_table(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  const json doc = parse_json(text);
  if (!doc.is_array()) throw Error(ErrorCode::SchemaError, "knot table must be a JSON array");
  std::vector<KnotRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    KnotRecord k;
    try {
      k = doc[i].get<KnotRecord>();
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaError, "record " + std::to_string(i) + ": " + e.what());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::SchemaError, "record " + std::to_string(i) + ": " + e.what());
    }
    validate(k);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<KnotRecord> load_knot_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_knot_table(ss.str());
}

const KnotRecord* find_knot(const std::vector<KnotRecord>& table, std::string_view name) {
  for (const auto& k : table)
    if (k.name == name) return &k;
  return nullptr;
}

std::string default_table_path() {
  if (const char* env = std::getenv("SU2CYC_TABLE"); env && *env) return env;
  return SU2CYC_DEFAULT_TABLE;
}

namespace {

AuditReport audit_one(const KnotRecord& k, const AuditOptions& options) {
  AuditReport r;
  r.knot = k.name;
  const auto orders = root_of_unity_orders(k.alexander);
  r.flagged = !orders.empty();
  r.checks.push_back({"root_of_unity_orders", r.flagged ? "flagged" : "clear",
                      json{{"orders", std::vector<std::int64_t>(orders.begin(), orders.end())}}});
  const auto cands = amphichiral_candidates(k.alexander, options.r_max);
  r.checks.push_back({"amphichiral_candidates", cands.empty() ? "none" : "present",
                      json{{"r_max", options.r_max}, {"candidates", cands}}});
  std::vector<std::int64_t> bad;
  for (auto c : cands) {
    const auto h = (c < 0 ? -c : c) / 2;
    bool prime = h >= 2;
    for (std::int64_t d = 2; d * d <= h && prime; ++d) prime = h % d != 0;
    if (prime) bad.push_back(c);
  }
  r.checks.push_back({"prime_2p_exclusion", bad.empty() ? "pass" : "fail", json{{"offending", bad}}});
  return r;
}

}  // namespace

std::vector<AuditReport> audit_amphichiral(const std::vector<KnotRecord>& table,
                                           const AuditOptions& options) {
  std::vector<const KnotRecord*> todo;
  for (const auto& k : table)
    if (options.include_chiral || k.amphichiral) todo.push_back(&k);
  std::vector<AuditReport> out(todo.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(todo.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < todo.size(); i = next++) {
        try {
          out[i] = audit_one(*todo[i], options);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

json to_json(const AuditReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"check_id", c.check_id}, {"verdict", c.verdict}, {"details", c.details}});
  return json{{"record", "audit"}, {"knot", r.knot}, {"checks", checks}, {"flagged", r.flagged}};
}

json audit_summary(const std::vector<AuditReport>& reports) {
  std::vector<std::string> flagged;
  for (const auto& r : reports)
    if (r.flagged) flagged.push_back(r.knot);
  return json{{"record", "audit_summary"}, {"audited", reports.size()}, {"flagged", flagged}};
}

PairCheck check_pair(const Slope& a, const Slope& b, CyclicMode mode, const KnotRecord* knot) {
  PairCheck out;
  const auto v = pair_verdict(a, b);
  json& rec = out.record;
  rec["record"] = "check_pair";
  rec["a"] = a;
  rec["b"] = b;
  rec["mode"] = to_string(mode);
  rec["verdict"] = v;
  rec["km_filter"] = json{{"a", km_filter(a)}, {"b", km_filter(b)}};
  auto& viol = out.violations;
  if (km_filter(a)) viol.push_back("km_filter_a");
  if (km_filter(b)) viol.push_back("km_filter_b");

  json construction{{"status", "skipped"}};
  if (a == b) {
    construction["status"] = "equal_slopes";
  } else if (mode == CyclicMode::SO3) {
    if (!v.so3_bound_ok) viol.push_back("so3_bound");
    if (!v.so3_sign_rule_ok) viol.push_back("so3_sign_rule");
  } else {
    if (!v.su2_bound_ok) viol.push_back("su2_bound");
    if (!v.odd_pair_ok) viol.push_back("odd_pair_bound");
    if (!v.sign_rule_ok) viol.push_back("sign_rule");
    if (a.is_infinite() || b.is_infinite() || a.p == 0 || b.p == 0) {
      construction["status"] = "trivial_slope";
    } else if (v.gap_sum_class == GapSumClass::LessThan2Pi) {
      try {
        construction["path"] = build_path(a, b);
        construction["status"] = "path";
        viol.push_back("gap_sum");
      } catch (const Error& e) {
        construction["status"] = "error";
        construction["error"] = e.what();
      }
    } else if (v.gap_sum_class == GapSumClass::Exactly2Pi) {
      const auto tps = boundary_touch_points(a, b);
      construction["status"] = "boundary";
      construction["touch_points"] = tps;
      if (tps.empty()) viol.push_back("boundary_construction");
      if (knot && !tps.empty()) {
        json kj{{"name", knot->name}, {"alexander", knot->alexander.coeffs()}};
        json roots = json::array();
        bool any = false;
        for (const auto& tp : tps) {
          const bool ok = touchpoint_root_check(tp.theta0, knot->alexander);
          any = any || ok;
          roots.push_back(json{{"theta0", tp.theta0}, {"order", tp.unity_order}, {"root", ok}});
        }
        kj["touchpoint_roots"] = roots;
        if (!any) viol.push_back("touchpoint_roots");
        if (a.p % 2 == 0 && b.p % 2 == 0) {
          const bool ok = even_pair_criterion(a, b, knot->alexander);
          kj["even_pair_criterion"] = ok;
          if (!ok) viol.push_back("even_pair_criterion");
        }
        rec["knot"] = kj;
      }
    }
  }
  rec["construction"] = construction;
  rec["violations"] = viol;
  out.exit_code = viol.empty() ? 0 : 2;
  rec["consistent"] = viol.empty();
  return out;
}

}  // namespace su2cyc
