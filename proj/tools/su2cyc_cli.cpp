#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "su2cyc/su2cyc.h"

namespace {

constexpr int kExitError = 1;

struct Text {
  su2c_text* p = nullptr;
  ~Text() { su2c_text_free(p); }
  std::string str() const { return std::string(su2c_text_data(p), su2c_text_size(p)); }
};

struct Table {
  su2c_table* p = nullptr;
  ~Table() { su2c_table_free(p); }
};

struct Failure {
  std::string message;
};

void check(int status) {
  if (status != SU2C_OK)
    throw Failure{su2c_last_error()};
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw Failure{"IoError: cannot write " + path};
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// Torus knots known by table name, plus T(p,q) / Tp,q spellings.
std::optional<std::pair<int64_t, int64_t>> torus_knot(const std::string& name) {
  static const std::vector<std::pair<std::string, std::pair<int64_t, int64_t>>> known = {
      {"3_1", {2, 3}}, {"5_1", {2, 5}}, {"7_1", {2, 7}}, {"9_1", {2, 9}}, {"8_19", {3, 4}}, {"10_124", {3, 5}}};
  for (const auto& [n, pq] : known)
    if (n == name) return pq;
  static const std::regex re(R"(T\(?\s*(\d+)\s*,\s*(\d+)\s*\)?)", std::regex::icase);
  std::smatch m;
  if (std::regex_match(name, m, re)) return std::make_pair(std::stoll(m[1]), std::stoll(m[2]));
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"IoError: cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string mode = "su2";
  std::string knot;
  std::string table;
  std::string out;
};

int run_check_pair(const std::vector<std::string>& slopes, const Common& c) {
  if (slopes.size() < 2) throw Failure{"check-pair needs at least two slopes"};
  Table table;
  if (!c.table.empty()) check(su2c_table_open(c.table.c_str(), &table.p));
  Sink sink(c.out);
  int worst = SU2C_CONSISTENT;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      Text rec;
      int verdict = SU2C_CONSISTENT;
      check(su2c_check_pair(slopes[i].c_str(), slopes[j].c_str(), c.mode.c_str(), table.p,
                            c.knot.empty() ? nullptr : c.knot.c_str(), &verdict, &rec.p));
      sink.os() << rec.str() << '\n';
      if (verdict == SU2C_VIOLATED) worst = SU2C_VIOLATED;
    }
  }
  return worst;
}

int run_enumerate(const std::string& s0, const Common& c, int64_t q_max, int64_t p_max) {
  Text out;
  check(su2c_enumerate_slopes(s0.c_str(), c.mode.c_str(), q_max, p_max, &out.p));
  Sink sink(c.out);
  sink.os() << out.str();
  return 0;
}

int run_audit(const Common& c, bool include_chiral, int64_t r_max) {
  Table table;
  check(su2c_table_open(c.table.empty() ? nullptr : c.table.c_str(), &table.p));
  Text out;
  size_t flagged = 0;
  check(su2c_audit_table(table.p, include_chiral ? 1 : 0, r_max, &flagged, &out.p));
  Sink sink(c.out);
  sink.os() << out.str();
  return 0;
}

int run_draw(const std::vector<std::string>& slopes, const Common& c, const std::string& svg_path,
             bool path, bool interior, bool sheared, bool mirror, int width, int height) {
  nlohmann::json spec = nlohmann::json::object();
  if (!slopes.empty()) {
    if (slopes.size() != 2) throw Failure{"draw takes zero or two slopes"};
    spec["a"] = slopes[0];
    spec["b"] = slopes[1];
  }
  spec["path"] = path || interior || sheared;
  spec["interior"] = interior;
  spec["sheared"] = sheared;
  spec["mirror"] = mirror;
  spec["width"] = width;
  spec["height"] = height;
  if (!c.knot.empty()) {
    const auto tk = torus_knot(c.knot);
    if (!tk) throw Failure{"InvalidArgument: no exact arcs for knot " + c.knot};
    spec["torus_knot"] = {tk->first, tk->second};
  }
  Text svg;
  check(su2c_draw(spec.dump().c_str(), &svg.p));
  Sink sink(svg_path.empty() ? c.out : svg_path);
  sink.os() << svg.str();
  return 0;
}

int run_sample(const Common& c, const std::string& presentation, int grid, double tol, bool mirror) {
  Text pres;
  std::string pres_json;
  if (!presentation.empty()) {
    pres_json = read_file(presentation);
  } else {
    if (c.knot.empty()) throw Failure{"sample-reps needs --knot or --presentation"};
    const auto tk = torus_knot(c.knot);
    if (!tk) throw Failure{"InvalidArgument: no presentation known for knot " + c.knot};
    check(su2c_torus_presentation(tk->first, tk->second, &pres.p));
    pres_json = pres.str();
  }
  Text out;
  size_t count = 0;
  check(su2c_sample_reps(pres_json.c_str(), grid, tol, mirror ? 1 : 0, &count, &out.p));
  Sink sink(c.out);
  sink.os() << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2)/SO(3)-cyclic surgery obstructions"};
  app.set_version_flag("--version", std::string(su2c_version()));
  app.require_subcommand(1);

  Common c;
  auto add_common = [&](CLI::App* sub, bool knot, bool table) {
    sub->add_option("--out", c.out, "Output path (default stdout)");
    if (knot) sub->add_option("--knot", c.knot, "Knot name");
    if (table) sub->add_option("--table", c.table, "Knot table (default $SU2CYC_TABLE or bundled)");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", c.mode, "su2 or so3")->check(CLI::IsMember({"su2", "so3"}));
  };

  std::vector<std::string> slopes;
  auto* cp = app.add_subcommand("check-pair", "Check every pair among the given slopes");
  cp->add_option("slopes", slopes, "Slopes p/q or integers")->required();
  add_mode(cp);
  add_common(cp, true, true);

  std::string s0;
  int64_t q_max = 4, p_max = 64;
  auto* en = app.add_subcommand("enumerate-slopes", "Slopes compatible with s0");
  en->add_option("s0", s0, "Base slope")->required();
  en->add_option("--q-max", q_max, "Largest denominator");
  en->add_option("--p-max", p_max, "Largest |numerator|");
  add_mode(en);
  add_common(en, false, false);

  bool include_chiral = false;
  int64_t r_max = 100;
  auto* au = app.add_subcommand("audit-table", "Amphichiral Alexander-polynomial audit");
  au->add_flag("--include-chiral", include_chiral, "Audit chiral records too");
  au->add_option("--r-max", r_max, "Largest |r| listed among candidates");
  add_common(au, false, true);

  std::vector<std::string> draw_slopes;
  std::string svg_path;
  bool path = false, interior = false, sheared = false, mirror = false;
  int width = 720, height = 360;
  auto* dr = app.add_subcommand("draw", "SVG of the strip, lines, lattice, path and arcs");
  dr->add_option("slopes", draw_slopes, "Two slopes");
  dr->add_option("--svg", svg_path, "SVG output path");
  dr->add_flag("--path", path, "Overlay the broken line");
  dr->add_flag("--interior", interior, "Overlay the pushed-off line");
  dr->add_flag("--sheared", sheared, "Sheared frame with the g2 graph");
  dr->add_flag("--mirror", mirror, "Mirror the knot");
  dr->add_option("--width", width);
  dr->add_option("--height", height);
  add_common(dr, true, false);

  std::string presentation;
  int grid = 64;
  double tol = 1e-9;
  bool sample_mirror = false;
  auto* sr = app.add_subcommand("sample-reps", "Sample the image of the representation variety");
  sr->add_option("--presentation", presentation, "Presentation JSON file");
  sr->add_option("--grid", grid, "Seeds per parameter");
  sr->add_option("--tol", tol, "Residual tolerance");
  sr->add_flag("--mirror", sample_mirror, "Mirror the knot");
  add_common(sr, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*cp) return run_check_pair(slopes, c);
    if (*en) return run_enumerate(s0, c, q_max, p_max);
    if (*au) return run_audit(c, include_chiral, r_max);
    if (*dr) return run_draw(draw_slopes, c, svg_path, path, interior, sheared, mirror, width, height);
    if (*sr) return run_sample(c, presentation, grid, tol, sample_mirror);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitError;
  }
  return kExitError;
}
