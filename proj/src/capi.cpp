#include "su2cyc/su2cyc.h"

#include "su2cyc/audit.hpp"
#include "su2cyc/error.hpp"
#include "su2cyc/path.hpp"
#include "su2cyc/render.hpp"
#include "su2cyc/rep_variety.hpp"
#include "su2cyc/serialize.hpp"

#include <new>
#include <string>

struct su2c_text {
  std::string data;
};

struct su2c_table {
  std::vector<su2cyc::KnotRecord> records;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_code;

void clear_error() {
  g_error.clear();
  g_code.clear();
}

template <class F>
int guarded(F&& f) {
  clear_error();
  try {
    f();
    return SU2C_OK;
  } catch (const su2cyc::Error& e) {
    g_error = e.what();
    g_code = su2cyc::to_string(e.code());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    g_code = "OutOfMemory";
  } catch (const std::exception& e) {
    g_error = e.what();
    g_code = "InternalError";
  }
  return SU2C_ERROR;
}

void require(const void* p, const char* what) {
  if (!p) throw su2cyc::Error(su2cyc::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

su2c_text* make_text(std::string s) { return new su2c_text{std::move(s)}; }

}  // namespace

extern "C" {

const char* su2c_version(void) { return "0.1.0"; }
const char* su2c_last_error(void) { return g_error.c_str(); }
const char* su2c_last_error_code(void) { return g_code.c_str(); }

const char* su2c_text_data(const su2c_text* text) { return text ? text->data.c_str() : ""; }
size_t su2c_text_size(const su2c_text* text) { return text ? text->data.size() : 0; }
void su2c_text_free(su2c_text* text) { delete text; }

const char* su2c_default_table_path(void) {
  thread_local std::string path;
  path = su2cyc::default_table_path();
  return path.c_str();
}

int su2c_table_open(const char* path, su2c_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto t = std::make_unique<su2c_table>();
    t->records = su2cyc::load_knot_table(path ? path : su2cyc::default_table_path());
    *out = t.release();
  });
}

size_t su2c_table_size(const su2c_table* table) { return table ? table->records.size() : 0; }

const char* su2c_table_knot_name(const su2c_table* table, size_t index) {
  if (!table || index >= table->records.size()) return nullptr;
  return table->records[index].name.c_str();
}

void su2c_table_free(su2c_table* table) { delete table; }

int su2c_check_pair(const char* a, const char* b, const char* mode, const su2c_table* table,
                    const char* knot, int* verdict, su2c_text** record) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(verdict, "verdict");
    require(record, "record");
    *record = nullptr;
    const auto m = su2cyc::parse_mode(mode ? mode : "su2");
    const su2cyc::KnotRecord* k = nullptr;
    std::vector<su2cyc::KnotRecord> fallback;
    if (knot) {
      if (!table) fallback = su2cyc::load_knot_table(su2cyc::default_table_path());
      k = su2cyc::find_knot(table ? table->records : fallback, knot);
      if (!k) throw su2cyc::Error(su2cyc::ErrorCode::InvalidArgument, std::string("unknown knot ") + knot);
    }
    const auto res = su2cyc::check_pair(su2cyc::parse_slope(a), su2cyc::parse_slope(b), m, k);
    *verdict = res.exit_code;
    *record = make_text(res.record.dump());
  });
}

int su2c_enumerate_slopes(const char* s0, const char* mode, int64_t q_max, int64_t p_max,
                          su2c_text** jsonl) {
  return guarded([&] {
    require(s0, "s0");
    require(jsonl, "jsonl");
    *jsonl = nullptr;
    const auto base = su2cyc::parse_slope(s0);
    const auto m = su2cyc::parse_mode(mode ? mode : "su2");
    std::string out;
    for (const auto& s : su2cyc::compatible_slopes(base, m, q_max, p_max)) {
      su2cyc::json rec{{"record", "compatible_slope"}, {"s0", base}, {"mode", su2cyc::to_string(m)},
                       {"slope", s}, {"delta", su2cyc::distance(base, s)}};
      out += rec.dump() + "\n";
    }
    *jsonl = make_text(std::move(out));
  });
}

int su2c_audit_table(const su2c_table* table, int include_chiral, int64_t r_max,
                     size_t* flagged_count, su2c_text** jsonl) {
  return guarded([&] {
    require(table, "table");
    require(jsonl, "jsonl");
    *jsonl = nullptr;
    su2cyc::AuditOptions opt;
    opt.include_chiral = include_chiral != 0;
    opt.r_max = r_max;
    const auto reports = su2cyc::audit_amphichiral(table->records, opt);
    std::string out;
    size_t flagged = 0;
    for (const auto& r : reports) {
      out += su2cyc::to_json(r).dump() + "\n";
      flagged += r.flagged ? 1 : 0;
    }
    out += su2cyc::audit_summary(reports).dump() + "\n";
    if (flagged_count) *flagged_count = flagged;
    *jsonl = make_text(std::move(out));
  });
}

int su2c_draw(const char* spec_json, su2c_text** svg) {
  return guarded([&] {
    require(svg, "svg");
    *svg = nullptr;
    su2cyc::DrawSpec spec;
    if (spec_json && *spec_json) {
      const auto j = su2cyc::parse_json(spec_json);
      if (!j.is_object()) throw su2cyc::Error(su2cyc::ErrorCode::SchemaError, "draw spec must be an object");
      try {
        if (j.contains("a")) spec.a = j["a"].get<su2cyc::Slope>();
        if (j.contains("b")) spec.b = j["b"].get<su2cyc::Slope>();
        spec.path = j.value("path", false);
        spec.interior = j.value("interior", false);
        spec.sheared = j.value("sheared", false);
        spec.mirror = j.value("mirror", false);
        spec.width = j.value("width", spec.width);
        spec.height = j.value("height", spec.height);
        if (j.contains("torus_knot")) {
          const auto tk = j["torus_knot"].get<std::vector<std::int64_t>>();
          if (tk.size() != 2) throw su2cyc::Error(su2cyc::ErrorCode::SchemaError, "torus_knot must be [p, q]");
          spec.torus_knot = std::make_pair(tk[0], tk[1]);
        }
      } catch (const su2cyc::json::exception& e) {
        throw su2cyc::Error(su2cyc::ErrorCode::SchemaError, e.what());
      }
    }
    *svg = make_text(su2cyc::render_pillowcase(spec));
  });
}

int su2c_torus_presentation(int64_t p, int64_t q, su2c_text** json) {
  return guarded([&] {
    require(json, "json");
    *json = nullptr;
    *json = make_text(su2cyc::json(su2cyc::torus_knot_presentation(p, q)).dump());
  });
}

int su2c_sample_reps(const char* presentation_json, int grid, double tol, int mirror,
                     size_t* count, su2c_text** jsonl) {
  return guarded([&] {
    require(presentation_json, "presentation_json");
    require(jsonl, "jsonl");
    *jsonl = nullptr;
    su2cyc::GroupPresentation pres;
    try {
      pres = su2cyc::parse_json(presentation_json).get<su2cyc::GroupPresentation>();
    } catch (const su2cyc::json::exception& e) {
      throw su2cyc::Error(su2cyc::ErrorCode::SchemaError, e.what());
    }
    su2cyc::SampleOptions opt;
    opt.grid = grid;
    opt.tol = tol;
    opt.mirror = mirror != 0;
    const auto cloud = su2cyc::sample_reps(pres, opt);
    std::string out;
    for (const auto& s : cloud.samples)
      out += su2cyc::json{{"record", "sample"}, {"theta", s.theta}, {"eta", s.eta}}.dump() + "\n";
    if (count) *count = cloud.samples.size();
    *jsonl = make_text(std::move(out));
  });
}

int su2c_torus_arcs(int64_t p, int64_t q, int mirror, su2c_text** json) {
  return guarded([&] {
    require(json, "json");
    *json = nullptr;
    *json = make_text(su2cyc::json(su2cyc::torus_knot_arcs(p, q, mirror != 0)).dump());
  });
}

int su2c_make_schedule(const char* a, const char* b, const char* arcs_json, su2c_text** json) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(json, "json");
    *json = nullptr;
    std::optional<su2cyc::PillowArcSet> arcs;
    if (arcs_json) {
      try {
        arcs = su2cyc::parse_json(arcs_json).get<su2cyc::PillowArcSet>();
      } catch (const su2cyc::json::exception& e) {
        throw su2cyc::Error(su2cyc::ErrorCode::SchemaError, e.what());
      }
    }
    const auto s = su2cyc::make_schedule(su2cyc::parse_slope(a), su2cyc::parse_slope(b),
                                         arcs ? &*arcs : nullptr);
    *json = make_text(su2cyc::json(s).dump());
  });
}

}  // extern "C"
