#pragma once

#include "su2cyc/alexander.hpp"
#include "su2cyc/serialize.hpp"
#include "su2cyc/slope.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace su2cyc {

/// Records of a JSON array file; an empty or blank file is an empty table.
std::vector<KnotRecord> load_knot_table(const std::string& path);
std::vector<KnotRecord> parse_knot_table(std::string_view text);
const KnotRecord* find_knot(const std::vector<KnotRecord>& table, std::string_view name);

/// SU2CYC_TABLE if set, else the table bundled with the sources.
std::string default_table_path();

struct CheckResult {
  std::string check_id;
  std::string verdict;
  json details;
};

struct AuditReport {
  std::string knot;
  std::vector<CheckResult> checks;
  bool flagged = false;
};

struct AuditOptions {
  bool include_chiral = false;
  std::int64_t r_max = 100;
  unsigned threads = 0;
};

/// One report per audited knot, in table order.
std::vector<AuditReport> audit_amphichiral(const std::vector<KnotRecord>& table,
                                           const AuditOptions& options = {});

json to_json(const AuditReport& r);
json audit_summary(const std::vector<AuditReport>& reports);

struct PairCheck {
  int exit_code = 0;  // 0 consistent, 2 violated
  std::vector<std::string> violations;
  json record;
};

/// Slope-pair verdict plus the construction (path, or touch points on the boundary).
PairCheck check_pair(const Slope& a, const Slope& b, CyclicMode mode,
                     const KnotRecord* knot = nullptr);

}  // namespace su2cyc
