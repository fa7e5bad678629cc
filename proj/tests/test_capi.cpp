#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <thread>

#include "su2cyc/su2cyc.h"

using nlohmann::json;

namespace {

std::string take(su2c_text* t) {
  std::string s(su2c_text_data(t), su2c_text_size(t));
  su2c_text_free(t);
  return s;
}

std::vector<json> lines(const std::string& jsonl) {
  std::vector<json> out;
  std::istringstream in(jsonl);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(json::parse(l));
  return out;
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(su2c_version()).size() > 0);
  su2c_text* t = nullptr;
  int verdict = -1;
  CHECK(su2c_check_pair("x", "4", "su2", nullptr, nullptr, &verdict, &t) == SU2C_ERROR);
  CHECK(t == nullptr);
  CHECK(std::string(su2c_last_error_code()) == "ParseError");
  CHECK(std::string(su2c_last_error()).find("ParseError") == 0);
  CHECK(su2c_check_pair("3", "4", "u1", nullptr, nullptr, &verdict, &t) == SU2C_ERROR);
  CHECK(su2c_check_pair("3", "4", "su2", nullptr, nullptr, nullptr, &t) == SU2C_ERROR);
  CHECK(std::string(su2c_last_error_code()) == "InvalidArgument");
  su2c_table* tab = nullptr;
  CHECK(su2c_table_open("/nonexistent.json", &tab) == SU2C_ERROR);
  CHECK(tab == nullptr);
  CHECK(std::string(su2c_last_error_code()) == "IoError");
  su2c_text_free(nullptr);
  su2c_table_free(nullptr);
}

TEST_CASE("errors are per thread") {
  su2c_text* t = nullptr;
  int v = 0;
  su2c_check_pair("x", "4", "su2", nullptr, nullptr, &v, &t);
  std::string other;
  std::thread th([&] {
    su2c_table* tab = nullptr;
    su2c_table_open("/nonexistent.json", &tab);
    other = su2c_last_error_code();
  });
  th.join();
  CHECK(other == "IoError");
  CHECK(std::string(su2c_last_error_code()) == "ParseError");
}

TEST_CASE("check pair") {
  su2c_text* t = nullptr;
  int verdict = -1;
  REQUIRE(su2c_check_pair("-3", "4", "su2", nullptr, nullptr, &verdict, &t) == SU2C_OK);
  CHECK(verdict == SU2C_VIOLATED);
  auto rec = json::parse(take(t));
  CHECK(rec["record"] == "check_pair");
  CHECK(rec["consistent"] == false);

  REQUIRE(su2c_check_pair("18", "37/2", "su2", nullptr, nullptr, &verdict, &t) == SU2C_OK);
  CHECK(verdict == SU2C_CONSISTENT);
  take(t);

  su2c_table* tab = nullptr;
  REQUIRE(su2c_table_open(nullptr, &tab) == SU2C_OK);
  CHECK(su2c_table_size(tab) > 20);
  CHECK(std::string(su2c_table_knot_name(tab, 0)) == "3_1");
  CHECK(su2c_table_knot_name(tab, 100000) == nullptr);
  REQUIRE(su2c_check_pair("12", "-12", "su2", tab, "3_1", &verdict, &t) == SU2C_OK);
  rec = json::parse(take(t));
  CHECK(rec["knot"]["name"] == "3_1");
  CHECK(su2c_check_pair("12", "-12", "su2", tab, "no_such_knot", &verdict, &t) == SU2C_ERROR);
  su2c_table_free(tab);
}

TEST_CASE("enumerate, audit, draw") {
  su2c_text* t = nullptr;
  REQUIRE(su2c_enumerate_slopes("5", "so3", 1, 20, &t) == SU2C_OK);
  const auto en = lines(take(t));
  CHECK_FALSE(en.empty());

  su2c_table* tab = nullptr;
  REQUIRE(su2c_table_open(nullptr, &tab) == SU2C_OK);
  size_t flagged = 0;
  REQUIRE(su2c_audit_table(tab, 0, 100, &flagged, &t) == SU2C_OK);
  CHECK(flagged == 2);
  const auto au = lines(take(t));
  REQUIRE_FALSE(au.empty());
  CHECK(au.back()["record"] == "audit_summary");
  CHECK(au.back()["flagged"] == json::array({"8_18", "10_99"}));
  su2c_table_free(tab);

  REQUIRE(su2c_draw(R"({"a":"-3","b":"4","path":true,"torus_knot":[2,3]})", &t) == SU2C_OK);
  const auto svg = take(t);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(su2c_draw("{not json", &t) == SU2C_ERROR);
  CHECK(su2c_draw(R"({"path":true})", &t) == SU2C_ERROR);
}

TEST_CASE("arcs, schedule and sampling") {
  su2c_text* t = nullptr;
  REQUIRE(su2c_torus_arcs(2, 3, 0, &t) == SU2C_OK);
  const auto arcs = take(t);
  CHECK(json::parse(arcs)["exact_arcs"].size() == 2);
  CHECK(su2c_torus_arcs(2, 4, 0, &t) == SU2C_ERROR);
  CHECK(std::string(su2c_last_error_code()) == "NotCoprime");

  REQUIRE(su2c_make_schedule("-3", "4", nullptr, &t) == SU2C_OK);
  CHECK(json::parse(take(t)).contains("g2"));
  CHECK(su2c_make_schedule("-3", "4", arcs.c_str(), &t) == SU2C_ERROR);
  CHECK(std::string(su2c_last_error_code()) == "SeparationFailed");

  REQUIRE(su2c_torus_presentation(2, 3, &t) == SU2C_OK);
  const auto pres = take(t);
  size_t count = 0;
  REQUIRE(su2c_sample_reps(pres.c_str(), 24, 1e-9, 0, &count, &t) == SU2C_OK);
  const auto samples = lines(take(t));
  CHECK(count == samples.size());
  CHECK(count > 20);
  CHECK(su2c_sample_reps(pres.c_str(), 2, 1e-9, 0, &count, &t) == SU2C_ERROR);
}
