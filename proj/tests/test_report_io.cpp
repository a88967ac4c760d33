#include <cmath>

#include "doctest.h"
#include "qsk/report_io.hpp"

using namespace qsk;
using ojson = nlohmann::ordered_json;

namespace {

SuiteResult sample_result(const std::string& name, double residual, bool pass) {
  SuiteResult r;
  r.suite = name;
  r.report.id = name;
  r.report.samples = 3;
  r.report.max_rel_residual = residual;
  r.report.N_terms_used = 60;
  r.report.tol_rel = 1e-10;
  r.report.pass = pass;
  r.report.worst_point = ParamMap{{"x", Complex(0.5, 0.0)}, {"beta", Complex(0.3, -0.1)}};
  r.params = ojson::array({ojson{{"beta", 0.3}}});
  r.grid = ojson{{"x_points", ojson::array({0.1, 0.5})}};
  r.wall_time_ms = 12.5;
  return r;
}

}  // namespace

TEST_CASE("complex values serialize as re/im pairs") {
  const ojson j = complex_json(Complex(1.5, -2.0));
  CHECK(j.dump() == R"({"re":1.5,"im":-2.0})");
}

TEST_CASE("report keys come in a fixed order") {
  const ojson j = report_json(sample_result("rogers_gamma", 1e-13, true));
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "id", "params", "grid", "N_terms", "max_rel_residual",
                                         "worst_point", "pass", "wall_time_ms"});
  CHECK(j["worst_point"]["beta"]["im"].get<double>() == -0.1);
}

TEST_CASE("wall time is zero unless timing is requested") {
  const SuiteResult r = sample_result("a", 0.0, true);
  CHECK(report_json(r)["wall_time_ms"].get<double>() == 0.0);
  CHECK(report_json(r, true)["wall_time_ms"].get<double>() == 12.5);
}

TEST_CASE("infinite residual is written as a string and read back") {
  const std::vector<SuiteResult> rs = {sample_result("broken", INFINITY, false)};
  const ojson doc = reports_json(rs);
  CHECK(doc[0]["max_rel_residual"] == "inf");
  const auto rows = rows_from_json(doc);
  REQUIRE(rows.size() == 1);
  CHECK(std::isinf(rows[0].max_rel_residual));
  CHECK_FALSE(rows[0].pass);
}

TEST_CASE("summary table round-trips through JSON and CSV") {
  const std::vector<SuiteResult> rs = {sample_result("rogers_gamma", 3.25e-14, true),
                                       sample_result("ineq_qpoch_lower", 2.5, false),
                                       sample_result("connection", 1.0 / 3.0, true)};
  std::vector<SummaryRow> direct;
  for (const auto& r : rs) {
    direct.push_back({r.suite, r.report.id, r.report.N_terms_used, r.report.max_rel_residual, r.report.pass});
  }
  const std::string expected = summary_table(direct);
  const ojson reparsed = ojson::parse(reports_json(rs).dump(2));
  CHECK(summary_table(rows_from_json(reparsed)) == expected);
  CHECK(summary_table(rows_from_csv(reports_csv(rs))) == expected);
  CHECK(expected.find("2/3 suites passed") != std::string::npos);
}

TEST_CASE("CSV keeps full double precision") {
  const std::vector<SuiteResult> rs = {sample_result("connection", 0.1 + 0.2, true)};
  const auto rows = rows_from_csv(reports_csv(rs));
  CHECK(rows[0].max_rel_residual == 0.1 + 0.2);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(rows_from_json(ojson::object()), Error);
  CHECK_THROWS_AS(rows_from_csv("header\nonly,two\n"), Error);
}
