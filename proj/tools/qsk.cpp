// qsk: evaluate primitives, run verification suites and integral checks.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsk/hyperseries.hpp"
#include "qsk/polyfamilies.hpp"
#include "qsk/quadrature.hpp"
#include "qsk/report_io.hpp"
#include "qsk/suites.hpp"

namespace {

using namespace qsk;
using ojson = nlohmann::ordered_json;

// Accepts "1.5", "1.5,-2", "1.5-2i", "2i".
Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  auto fail = [&] { return Error(ErrorCode::DomainViolation, "cannot parse number '" + text + "'"); };
  auto whole = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != part.size()) throw fail();
    return v;
  };
  if (s.empty()) throw fail();
  if (auto comma = s.find(','); comma != std::string::npos) {
    return {whole(s.substr(0, comma)), whole(s.substr(comma + 1))};
  }
  if (s.back() != 'i') return {whole(s), 0.0};
  s.pop_back();
  // split at the last sign that is not an exponent sign
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      std::string im = s.substr(k);
      if (im == "+" || im == "-") im += "1";
      return {whole(s.substr(0, k)), whole(im)};
    }
  }
  if (s.empty() || s == "+" || s == "-") return {0.0, s == "-" ? -1.0 : 1.0};
  return {0.0, whole(s)};
}

std::vector<Complex> parse_list(const std::vector<std::string>& items) {
  std::vector<Complex> out;
  for (const auto& s : items) out.push_back(parse_complex(s));
  return out;
}

void print_json(const ojson& j) { std::cout << j.dump(2) << '\n'; }

ojson eval_json(const EvalResult& r) {
  return ojson{{"value", complex_json(r.value)},
               {"terms_used", r.terms_used},
               {"converged", r.converged},
               {"tail_bound", r.tail_bound},
               {"abs_sum", r.abs_sum}};
}

Family require_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw Error(ErrorCode::DomainViolation, "unknown family " + name);
  return *f;
}

std::optional<QBase> optional_base(const std::string& q) {
  if (q.empty()) return std::nullopt;
  return QBase(parse_complex(q));
}

QBase require_base(const std::string& q) {
  if (q.empty()) throw Error(ErrorCode::DomainViolation, "this expression needs --q");
  return QBase(parse_complex(q));
}

// -- eval -----------------------------------------------------------------------

struct EvalArgs {
  std::string kind;
  std::string a, q, beta, x, z, family;
  std::vector<std::string> num, den, params;
  std::optional<int> n;
  bool inf = false;
};

int cmd_eval(const EvalArgs& e, const TruncationPolicy& pol) {
  if (e.kind == "qpoch") {
    if (e.a.empty()) throw Error(ErrorCode::DomainViolation, "qpoch needs --a");
    const Complex a = parse_complex(e.a);
    const QBase q = require_base(e.q);
    if (e.n) {
      EvalResult r;
      r.value = qpoch(a, q, *e.n);
      r.terms_used = std::abs(*e.n);
      print_json(eval_json(r));
    } else if (!e.beta.empty()) {
      print_json(eval_json(qpoch_general(a, q, parse_complex(e.beta), pol)));
    } else {
      print_json(eval_json(qpoch_infinite(a, q, pol)));
    }
    return 0;
  }
  if (e.kind == "phi" || e.kind == "hyp") {
    if (e.z.empty()) throw Error(ErrorCode::DomainViolation, e.kind + " needs --z");
    const Complex z = parse_complex(e.z);
    const EvalResult r = e.kind == "phi"
                             ? phi(PhiSpec{parse_list(e.num), parse_list(e.den), require_base(e.q), z}, pol)
                             : hyp(HypSpec{parse_list(e.num), parse_list(e.den), z}, pol);
    print_json(eval_json(r));
    return r.converged ? 0 : 3;
  }
  if (e.kind == "poly" || e.kind == "weight") {
    if (e.x.empty()) throw Error(ErrorCode::DomainViolation, e.kind + " needs --x");
    const Family f = require_family(e.family);
    if (e.kind == "poly") {
      if (!e.n) throw Error(ErrorCode::DomainViolation, "poly needs --n");
      const PolySpec spec{f, parse_list(e.params), optional_base(e.q)};
      EvalResult r;
      r.value = poly_eval(spec, *e.n, parse_complex(e.x), pol);
      r.terms_used = *e.n + 1;
      print_json(eval_json(r));
    } else {
      const Complex x = parse_complex(e.x);
      if (x.imag() != 0.0) throw Error(ErrorCode::DomainViolation, "weights take a real --x");
      EvalResult r;
      r.value = weight_eval(WeightSpec{f, parse_list(e.params), optional_base(e.q)}, x.real());
      print_json(eval_json(r));
    }
    return 0;
  }
  throw Error(ErrorCode::DomainViolation, "unknown expression kind " + e.kind);
}

// -- verify -------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string format = "json";
  std::string output;
  std::string config;
  bool timing = false;
  std::optional<int> n_terms;
  std::optional<double> tol;
};

// Config keys mirror the flags; flags given on the command line win.
void apply_config(VerifyArgs& v, const CLI::App& sub) {
  std::ifstream in(v.config);
  if (!in) throw Error(ErrorCode::DomainViolation, "cannot read config " + v.config);
  ojson c;
  try {
    c = ojson::parse(in);
  } catch (const std::exception& ex) {
    throw Error(ErrorCode::DomainViolation, std::string("config is not valid JSON: ") + ex.what());
  }
  static const std::vector<std::string> known = {"suites",  "seed",        "threads",   "format",
                                                 "output_path", "timing", "grids", "truncation"};
  for (const auto& [k, _] : c.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      throw Error(ErrorCode::DomainViolation, "unknown config key " + k);
    }
  }
  auto unset = [&](const char* flag) { return sub.count(flag) == 0; };
  if (c.contains("suites") && unset("--suite")) v.suites = c["suites"].get<std::vector<std::string>>();
  if (c.contains("seed") && unset("--seed")) v.seed = c["seed"].get<std::uint64_t>();
  if (c.contains("threads") && unset("--threads")) v.threads = c["threads"].get<int>();
  if (c.contains("format") && unset("--format")) v.format = c["format"].get<std::string>();
  if (c.contains("output_path") && unset("--output")) v.output = c["output_path"].get<std::string>();
  if (c.contains("timing") && unset("--timing")) v.timing = c["timing"].get<bool>();
  if (c.contains("grids")) {
    const auto& g = c["grids"];
    if (g.contains("N_terms") && unset("--N")) v.n_terms = g["N_terms"].get<int>();
    if (g.contains("tol_rel") && unset("--tol")) v.tol = g["tol_rel"].get<double>();
  }
}

TruncationPolicy config_policy(const std::string& path) {
  TruncationPolicy pol;
  if (path.empty()) return pol;
  std::ifstream in(path);
  const ojson c = ojson::parse(in);
  if (c.contains("truncation")) {
    const auto& t = c["truncation"];
    if (t.contains("term_eps")) pol.term_eps = t["term_eps"].get<double>();
    if (t.contains("abs_floor")) pol.abs_floor = t["abs_floor"].get<double>();
    if (t.contains("max_terms")) pol.max_terms = t["max_terms"].get<int>();
    if (t.contains("product_eps")) pol.product_eps = t["product_eps"].get<double>();
  }
  pol.validate();
  return pol;
}

SuiteResult run_guarded(const std::string& name, const SuiteOptions& opt) {
  try {
    return run_suite(name, opt);
  } catch (const std::exception& ex) {
    SuiteResult r;
    r.suite = name;
    r.report.id = name;
    r.report.max_rel_residual = std::numeric_limits<double>::infinity();
    r.report.errors.push_back(ex.what());
    r.params = ojson::object();
    r.grid = ojson::object();
    return r;
  }
}

int cmd_verify(VerifyArgs v, const CLI::App& sub) {
  TruncationPolicy pol;
  if (!v.config.empty()) {
    apply_config(v, sub);
    pol = config_policy(v.config);
  }
  if (v.suites.empty()) v.suites = {"all"};
  if (v.format != "json" && v.format != "csv") {
    throw Error(ErrorCode::DomainViolation, "format must be json or csv");
  }
  const std::vector<std::string> names = expand_suites(v.suites);
  if (const char* env = std::getenv("QSK_THREADS")) {
    try {
      v.threads = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::DomainViolation, "QSK_THREADS must be an integer");
    }
  }
  if (v.threads < 1) throw Error(ErrorCode::DomainViolation, "threads must be at least 1");

  SuiteOptions opt;
  opt.seed = v.seed;
  opt.pol = pol;
  opt.n_terms = v.n_terms;
  opt.tol_rel = v.tol;

  std::vector<SuiteResult> results(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < names.size();) results[i] = run_guarded(names[i], opt);
  };
  const int pool = std::min<int>(v.threads, static_cast<int>(names.size()));
  std::vector<std::thread> threads;
  for (int t = 1; t < pool; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::string text;
  std::vector<SummaryRow> rows;
  if (v.format == "json") {
    const ojson doc = reports_json(results, v.timing);
    text = doc.dump(2) + "\n";
    rows = rows_from_json(doc);
  } else {
    text = reports_csv(results, v.timing);
    rows = rows_from_csv(text);
  }
  const std::string table = summary_table(rows);
  if (v.output.empty()) {
    std::cout << text;
    std::cerr << table;
  } else {
    std::ofstream out(v.output, std::ios::binary);
    if (!out) throw Error(ErrorCode::DomainViolation, "cannot write " + v.output);
    out << text;
    std::cout << table;
  }
  const bool all_pass =
      std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.report.pass; });
  return all_pass ? 0 : 1;
}

// -- integrate ----------------------------------------------------------------

int cmd_integrate(const std::string& cor_name, int n, const std::string& q,
                  const std::map<std::string, std::string>& given) {
  const auto cor = corollary_from_name(cor_name);
  if (!cor) throw Error(ErrorCode::DomainViolation, "unknown corollary " + cor_name);
  const CorollaryInfo& info = corollary_info(*cor);
  ParamMap p;
  // unspecified parameters are zero
  for (const auto& name : info.params) {
    auto it = given.find(name);
    p[name] = it == given.end() || it->second.empty() ? Complex(0.0, 0.0) : parse_complex(it->second);
  }
  for (const auto& [name, value] : given) {
    if (!value.empty() && std::find(info.params.begin(), info.params.end(), name) == info.params.end()) {
      throw Error(ErrorCode::DomainViolation, std::string(info.name) + " takes no parameter " + name);
    }
  }
  const CorollaryReport r = verify_integral_corollary(*cor, n, p, optional_base(q));
  ojson out{{"corollary", info.name},
            {"n", n},
            {"params", params_json(p)},
            {"quadrature", complex_json(r.quadrature)},
            {"closed_form", complex_json(r.closed_form)},
            {"rel_residual", r.rel_residual},
            {"nodes_used", r.nodes_used},
            {"est_error", r.est_error},
            {"pass", r.pass}};
  if (!q.empty()) out["q"] = complex_json(parse_complex(q));
  print_json(out);
  return r.pass ? 0 : 1;
}

// -- summarize ----------------------------------------------------------------

int cmd_summarize(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::DomainViolation, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<SummaryRow> rows;
  if (first != std::string::npos && text[first] == '[') {
    rows = rows_from_json(ojson::parse(text));
  } else {
    rows = rows_from_csv(text);
  }
  std::cout << summary_table(rows);
  return std::all_of(rows.begin(), rows.end(), [](const SummaryRow& r) { return r.pass; }) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-series special functions: evaluation and identity verification"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a primitive");
  eval->add_option("kind", ev.kind, "qpoch | phi | hyp | poly | weight")
      ->required()
      ->check(CLI::IsMember({"qpoch", "phi", "hyp", "poly", "weight"}));
  eval->add_option("--a", ev.a, "qpoch base point");
  eval->add_option("--q", ev.q, "base q");
  eval->add_option("--n", ev.n, "integer length or degree");
  eval->add_option("--beta", ev.beta, "complex length for (a;q)_beta");
  eval->add_option("--num", ev.num, "numerator parameters (repeatable)");
  eval->add_option("--den", ev.den, "denominator parameters (repeatable)");
  eval->add_option("--z", ev.z, "series argument");
  eval->add_option("--family", ev.family, "polynomial family");
  eval->add_option("--p", ev.params, "family parameters in order (repeatable)");
  eval->add_option("--x", ev.x, "evaluation point");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", va.suites, "suite name or 'all' (repeatable)");
  verify->add_option("--seed", va.seed, "sampling seed");
  verify->add_option("--threads", va.threads, "worker threads (QSK_THREADS overrides)");
  verify->add_option("--format", va.format, "json | csv");
  verify->add_option("--output", va.output, "report path (default: standard output)");
  verify->add_option("--config", va.config, "JSON config file");
  verify->add_flag("--timing", va.timing, "record wall times (breaks byte-identical reports)");
  verify->add_option("--N", va.n_terms, "override partial-sum length");
  verify->add_option("--tol", va.tol, "override relative tolerance");

  std::string cor_name, cor_q;
  int cor_n = 0;
  std::map<std::string, std::string> cor_params;
  auto* integrate = app.add_subcommand("integrate", "Check a definite-integral corollary");
  integrate->add_option("--cor", cor_name, "corollary name")->required();
  integrate->add_option("--n", cor_n, "degree");
  integrate->add_option("--q", cor_q, "base q");
  for (const char* name : {"a1", "a2", "a3", "a4", "alpha", "beta", "gamma", "lambda", "mu", "nu", "t", "u"}) {
    integrate->add_option(std::string("--") + name, cor_params[name]);
  }

  auto* list = app.add_subcommand("list-suites", "List suite names");

  std::string summary_path;
  auto* summarize = app.add_subcommand("summarize", "Print the summary table of a saved report");
  summarize->add_option("file", summary_path, "JSON or CSV report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(ev, TruncationPolicy{});
    if (verify->parsed()) return cmd_verify(va, *verify);
    if (integrate->parsed()) return cmd_integrate(cor_name, cor_n, cor_q, cor_params);
    if (list->parsed()) {
      for (const auto& s : suite_names()) std::cout << s << '\n';
      return 0;
    }
    if (summarize->parsed()) return cmd_summarize(summary_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
