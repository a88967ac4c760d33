#include "qsk/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qsk {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt_residual(double r) {
  if (std::isinf(r)) return "inf";
  if (std::isnan(r)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

std::string fmt_double(double r) {
  if (std::isinf(r)) return r > 0 ? "inf" : "-inf";
  if (std::isnan(r)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", r);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan") return NAN;
  return std::stod(s);
}

}  // namespace

ojson complex_json(Complex z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

ojson params_json(const ParamMap& p) {
  ojson o = ojson::object();
  for (const auto& [k, v] : p) o[k] = complex_json(v);
  return o;
}

ojson report_json(const SuiteResult& r, bool timing) {
  ojson o;
  o["suite"] = r.suite;
  o["id"] = r.report.id;
  o["params"] = r.params;
  ojson grid = r.grid;
  grid["samples"] = r.report.samples;
  grid["converged_fraction"] = r.report.converged_fraction;
  grid["tol_rel"] = r.report.tol_rel;
  if (!r.report.error_sequence.empty()) {
    ojson seq = ojson::array();
    for (double e : r.report.error_sequence) seq.push_back(e);
    grid["error_sequence"] = seq;
  }
  if (!r.report.errors.empty()) grid["errors"] = r.report.errors;
  o["grid"] = grid;
  o["N_terms"] = r.report.N_terms_used;
  // infinity has no JSON literal
  if (std::isfinite(r.report.max_rel_residual)) {
    o["max_rel_residual"] = r.report.max_rel_residual;
  } else {
    o["max_rel_residual"] = fmt_double(r.report.max_rel_residual);
  }
  o["worst_point"] = params_json(r.report.worst_point);
  o["pass"] = r.report.pass;
  o["wall_time_ms"] = timing ? std::round(r.wall_time_ms * 1000.0) / 1000.0 : 0.0;
  return o;
}

ojson reports_json(const std::vector<SuiteResult>& rs, bool timing) {
  ojson a = ojson::array();
  for (const auto& r : rs) a.push_back(report_json(r, timing));
  return a;
}

std::string reports_csv(const std::vector<SuiteResult>& rs, bool timing) {
  std::ostringstream os;
  os << "suite,id,N_terms,max_rel_residual,pass,wall_time_ms,samples,converged_fraction\n";
  for (const auto& r : rs) {
    os << r.suite << ',' << r.report.id << ',' << r.report.N_terms_used << ','
       << fmt_double(r.report.max_rel_residual) << ',' << (r.report.pass ? "true" : "false") << ','
       << fmt_double(timing ? r.wall_time_ms : 0.0) << ',' << r.report.samples << ','
       << fmt_double(r.report.converged_fraction) << '\n';
  }
  return os.str();
}

std::vector<SummaryRow> rows_from_json(const ojson& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::DomainViolation, "report must be a JSON array");
  std::vector<SummaryRow> rows;
  for (const auto& o : doc) {
    SummaryRow r;
    r.suite = o.at("suite").get<std::string>();
    r.id = o.at("id").get<std::string>();
    r.N_terms = o.at("N_terms").get<int>();
    const auto& m = o.at("max_rel_residual");
    r.max_rel_residual = m.is_string() ? parse_double(m.get<std::string>()) : m.get<double>();
    r.pass = o.at("pass").get<bool>();
    rows.push_back(r);
  }
  return rows;
}

std::vector<SummaryRow> rows_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<SummaryRow> rows;
  if (!std::getline(is, line)) return rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() < 5) throw Error(ErrorCode::DomainViolation, "malformed CSV report row");
    SummaryRow r;
    r.suite = f[0];
    r.id = f[1];
    r.N_terms = std::stoi(f[2]);
    r.max_rel_residual = parse_double(f[3]);
    r.pass = f[4] == "true";
    rows.push_back(r);
  }
  return rows;
}

std::string summary_table(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-26s %-26s %7s %12s  %s\n", "suite", "id", "N", "max_rel_res",
                "result");
  os << buf;
  int passed = 0;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-26s %-26s %7d %12s  %s\n", r.suite.c_str(), r.id.c_str(),
                  r.N_terms, fmt_residual(r.max_rel_residual).c_str(), r.pass ? "PASS" : "FAIL");
    os << buf;
    passed += r.pass ? 1 : 0;
  }
  os << passed << '/' << rows.size() << " suites passed\n";
  return os.str();
}

}  // namespace qsk
