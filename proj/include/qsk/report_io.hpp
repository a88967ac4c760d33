#pragma once

// Report serialization: JSON (stable key order), CSV, and the summary table,
// which is always rebuilt from the serialized form so that re-reading a
// report reproduces it exactly.

#include <string>
#include <vector>

#include "json.hpp"
#include "qsk/suites.hpp"

namespace qsk {

nlohmann::ordered_json complex_json(Complex z);
/// Keys in map order, values as {"re", "im"}.
nlohmann::ordered_json params_json(const ParamMap& p);

/// {suite, id, params, grid, N_terms, max_rel_residual, worst_point, pass,
/// wall_time_ms}. Wall time is written as 0 unless `timing` is set.
nlohmann::ordered_json report_json(const SuiteResult& r, bool timing = false);
nlohmann::ordered_json reports_json(const std::vector<SuiteResult>& rs, bool timing = false);

std::string reports_csv(const std::vector<SuiteResult>& rs, bool timing = false);

struct SummaryRow {
  std::string suite;
  std::string id;
  int N_terms = 0;
  double max_rel_residual = 0.0;
  bool pass = false;
};

std::vector<SummaryRow> rows_from_json(const nlohmann::ordered_json& doc);
std::vector<SummaryRow> rows_from_csv(const std::string& text);
std::string summary_table(const std::vector<SummaryRow>& rows);

}  // namespace qsk
