#include "qsk/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "qsk/quadrature.hpp"
#include "qsk/report_io.hpp"

namespace qsk {

namespace {

using ojson = nlohmann::ordered_json;

// Uniform doubles from a 64-bit Mersenne twister, bit-for-bit portable.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[rng_() % v.size()];
  }
  Complex in_disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    const double th = uniform(0.0, 2.0 * kPi);
    return std::polar(r, th);
  }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  // FNV-1a so the stream does not depend on the standard library's hash
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-30);
}

Complex C(double x) { return Complex(x, 0.0); }

std::vector<double> cos_grid() {
  std::vector<double> x;
  for (int j = 1; j <= 9; ++j) x.push_back(std::cos(kPi * j / 10.0));
  return x;
}

std::vector<double> interior_grid() {
  std::vector<double> x;
  for (int j = 0; j <= 8; ++j) x.push_back(-0.9 + 0.225 * j);
  return x;
}

ojson samples_json(const std::vector<ParamMap>& s) {
  ojson a = ojson::array();
  for (const auto& p : s) a.push_back(params_json(p));
  return a;
}

ojson points_json(const std::vector<double>& x) {
  ojson a = ojson::array();
  for (double v : x) a.push_back(v);
  return a;
}

struct Context {
  const std::string& name;
  const SuiteOptions& opt;
  Sampler rng;
  SuiteResult out;

  int terms(int dflt) const { return opt.n_terms.value_or(dflt); }
  double tol(double dflt) const { return opt.tol_rel.value_or(dflt); }
};

using SuiteFn = std::function<void(Context&)>;

// -- identity expansions -----------------------------------------------------

std::vector<ParamMap> product(const std::vector<std::pair<std::string, std::vector<double>>>& axes) {
  std::vector<ParamMap> out{ParamMap{}};
  for (const auto& [key, values] : axes) {
    std::vector<ParamMap> next;
    for (const auto& base : out) {
      for (double v : values) {
        ParamMap p = base;
        p[key] = C(v);
        next.push_back(p);
      }
    }
    out = std::move(next);
  }
  return out;
}

void run_expansion(Context& c, IdentityId id, GridSpec g, bool both_vwp_paths = false) {
  g.N_terms = c.terms(g.N_terms);
  g.tol_rel = c.tol(g.tol_rel);
  c.out.params = samples_json(g.param_samples);
  c.out.grid = ojson{{"x_points", points_json(g.x_points)}};
  if (!both_vwp_paths) {
    c.out.report = verify_expansion(id, g, c.opt.pol);
    return;
  }
  ReportBuilder b(identity_info(id).name, g.tol_rel, g.N_terms);
  b.absorb(verify_expansion(id, g, c.opt.pol, false));
  b.absorb(verify_expansion(id, g, c.opt.pol, true));
  c.out.grid["summations"] = ojson::array({"literal", "collapsed"});
  c.out.report = b.finish();
}

GridSpec q_grid(const std::vector<std::pair<std::string, std::vector<double>>>& axes, int N,
                double tol, std::vector<double> x = cos_grid()) {
  GridSpec g;
  g.x_points = std::move(x);
  g.param_samples = product(axes);
  g.N_terms = N;
  g.tol_rel = tol;
  return g;
}

const std::vector<double> kSigned = {-0.3, 0.3, 0.6};
const std::vector<double> kT = {0.1, 0.25, 0.4};
const std::vector<double> kQ2 = {0.3, 0.5};

void suite_rogers_gamma(Context& c) {
  run_expansion(c, IdentityId::RogersGamma,
                q_grid({{"beta", kSigned}, {"gamma", kSigned}, {"t", kT}, {"q", kQ2}}, 60, 1e-10));
}

void suite_rogers_gf(Context& c) {
  run_expansion(c, IdentityId::RogersGf, q_grid({{"beta", kSigned}, {"t", kT}, {"q", kQ2}}, 60, 1e-10));
}

void suite_cqhermite(Context& c) {
  run_expansion(c, IdentityId::CqHermite,
                q_grid({{"beta", {-0.3, 0.0, 0.3, 0.6}}, {"t", kT}, {"q", kQ2}}, 60, 1e-10));
}

void suite_cqhermite_gf(Context& c) {
  run_expansion(c, IdentityId::CqHermiteGf, q_grid({{"t", kT}, {"q", kQ2}}, 60, 1e-10));
}

void suite_chebyshev_q(Context& c) {
  run_expansion(c, IdentityId::ChebyshevQ, q_grid({{"beta", kSigned}, {"t", kT}, {"q", kQ2}}, 60, 1e-10));
}

void suite_cqlegendre(Context& c) {
  run_expansion(c, IdentityId::CqLegendre, q_grid({{"beta", kSigned}, {"t", kT}, {"q", kQ2}}, 60, 1e-10));
}

void suite_aw_rogers(Context& c) {
  run_expansion(c, IdentityId::AwRogers,
                q_grid({{"a1", {0.1}}, {"a2", {0.2}}, {"a3", {0.3}}, {"a4", {0.4}}, {"beta", {0.3, 0.6}},
                        {"t", {0.1, 0.25}}, {"q", {0.5}}},
                       40, 1e-8),
                true);
}

void suite_cqjacobi_rogers(Context& c) {
  const double q = 0.5;
  GridSpec g = q_grid({{"alpha", {0.2, 0.5}}, {"gamma", {0.2, 0.5}}, {"beta", {0.3, 0.6, q}},
                       {"t", {0.1, 0.25}}, {"q", {q}}},
                      40, 1e-8);
  run_expansion(c, IdentityId::CqJacobiRogers, g, true);
  // beta = q collapses the product ratio to 1/(1 - 2xt + t^2) = 1/(2t(z - x)),
  // z = (t + 1/t)/2, the Stieltjes kernel at the Szego image of t
  ReportBuilder b(c.out.report.id, g.tol_rel, g.N_terms);
  b.absorb(c.out.report);
  for (const ParamMap& s : g.param_samples) {
    if (s.at("beta") != C(q)) continue;
    const Complex t = s.at("t");
    const Complex z = (t + 1.0 / t) / 2.0;
    ParamMap p = s;
    p.erase("q");
    for (double x : g.x_points) {
      const Complex lhs = lhs_eval(IdentityId::CqJacobiRogers, p, QBase(q), C(x)).value;
      ParamMap where = s;
      where["x"] = C(x);
      b.add(rel(lhs, 1.0 / (2.0 * t * (z - x))), where);
    }
  }
  c.out.grid["kernel_check"] = "beta = q";
  c.out.report = b.finish();
}

void suite_wilson_limit(Context& c) {
  const double u = 0.5;
  const std::vector<double> xs = {0.5, 1.0, 2.0};
  GridSpec g;
  g.x_points = xs;
  for (int m = 0; m <= 3; ++m) {
    g.param_samples.push_back(ParamMap{{"a1", C(1.0)}, {"a2", C(1.5)}, {"a3", C(0.5)},
                                       {"a4", C(2.0)}, {"u", C(u)}, {"t", C(u + m)}});
  }
  g.N_terms = c.terms(10);
  g.tol_rel = c.tol(1e-8);
  c.out.params = samples_json(g.param_samples);
  c.out.grid = ojson{{"x_points", points_json(xs)}, {"termination", "t - u in {0,1,2,3}"}};
  ReportBuilder b("wilson_limit", g.tol_rel, g.N_terms);
  b.absorb(verify_expansion(IdentityId::WilsonLimit, g, c.opt.pol));
  // coefficients past the termination index must be exactly zero
  for (const ParamMap& s : g.param_samples) {
    const int m = static_cast<int>(std::lround((s.at("t") - s.at("u")).real()));
    for (int n = m + 1; n <= g.N_terms; ++n) {
      const EvalResult r = coefficient(CoeffRequest{IdentityId::WilsonLimit, n, s, std::nullopt, c.opt.pol});
      ParamMap where = s;
      where["n"] = C(n);
      b.add(r.value == Complex(0.0, 0.0) ? 0.0 : INFINITY, where);
    }
  }
  c.out.report = b.finish();
}

void suite_gegen_gf_general(Context& c) {
  run_expansion(c, IdentityId::GegenGfGeneral,
                q_grid({{"alpha", {0.2, 0.5}}, {"gamma", {0.2, 0.5}}, {"beta", {0.3, 0.6}}, {"t", kT}},
                       80, 1e-10));
}

void suite_gegen_gf(Context& c) {
  run_expansion(c, IdentityId::GegenGf, q_grid({{"mu", {0.3, 0.7, 1.5}}, {"t", kT}}, 80, 1e-10));
}

const std::vector<double> kZ = {1.2, 1.8, 2.5};

void suite_jacobi_pow(Context& c) {
  run_expansion(c, IdentityId::JacobiPow,
                q_grid({{"alpha", {0.4, 1.2}}, {"beta", {0.3}}, {"nu", {0.3, 0.9, 1.3}}, {"z", kZ}}, 80,
                       1e-10));
}

void suite_gegen_pow(Context& c) {
  run_expansion(c, IdentityId::GegenPow,
                q_grid({{"mu", {0.3, 0.7, 1.5}}, {"nu", {0.3, 0.9, 1.3}}, {"z", kZ}}, 80, 1e-10));
}

void suite_cheby_pow(Context& c) {
  run_expansion(c, IdentityId::ChebyPow, q_grid({{"nu", {0.3, 0.9, 1.3}}, {"z", kZ}}, 80, 1e-10));
}

void suite_legendre_pow(Context& c) {
  run_expansion(c, IdentityId::LegendrePow, q_grid({{"nu", {0.3, 0.9, 1.3}}, {"z", kZ}}, 80, 1e-10));
}

void suite_heine(Context& c, bool sqrt_form) {
  const std::vector<double> zs = {1.5, 2.0, 3.0};
  const int N = c.terms(80);
  ReportBuilder b(sqrt_form ? "heine_sqrt" : "heine", c.tol(1e-10), N);
  std::vector<ParamMap> samples;
  for (double z : zs) {
    b.absorb(verify_heine_classical(z, N, sqrt_form, c.tol(1e-10)));
    samples.push_back(ParamMap{{"z", C(z)}});
  }
  c.out.params = samples_json(samples);
  c.out.grid = ojson{{"x_points", "19 points on [-0.9, 0.9]"}};
  c.out.report = b.finish();
}

void suite_1mx(Context& c, IdentityId id,
               const std::vector<std::pair<std::string, std::vector<double>>>& axes) {
  auto all = axes;
  all.push_back({"nu", {-1.0, -2.0, -3.0}});
  std::vector<double> x = id == IdentityId::Laguerre1mx ? std::vector<double>{0.5, 1.0, 2.0, 4.0, 8.0}
                                                         : interior_grid();
  run_expansion(c, id, q_grid(all, 10, 1e-10, x));
  c.out.grid["note"] = "terminating nu; non-integer nu is covered by the integral suites";
}

// -- q-product algebra and inequalities -------------------------------------

const std::vector<double> kQ3 = {0.3, 0.5, 0.8};

void suite_qpoch_algebra(Context& c) {
  const int count = 500;
  ReportBuilder b("qpoch_algebra", c.tol(1e-12));
  for (int i = 0; i < count; ++i) {
    const int n = c.rng.integer(0, 12);
    const int k = c.rng.integer(0, 12);
    const Complex a = c.rng.in_disk(0.9);
    const double qv = c.rng.pick(kQ3);
    const Complex beta(c.rng.uniform(-0.9, 3.0), c.rng.uniform(-0.5, 0.5));
    const QBase qb(qv);
    const QBase q2(qv * qv);
    const ParamMap where{{"n", C(n)}, {"k", C(k)}, {"a", a}, {"q", C(qv)}, {"beta", beta}};
    try {
      double r = 0.0;
      const Complex lhs3 = qpoch(a, qb, n + k);
      r = std::max(r, rel(qpoch(a, qb, k) * qpoch(a * qb.pow(k), qb, n), lhs3));
      r = std::max(r, rel(qpoch(a, qb, n) * qpoch(a * qb.pow(n), qb, k), lhs3));
      r = std::max(r, rel(qpoch(a, qb, n) * qpoch(-a, qb, n), qpoch(a * a, q2, n)));
      const Complex sa = std::sqrt(a);
      const Complex sq = std::sqrt(a * qv);
      const Complex rhs5 = qpoch(sa, qb, n) * qpoch(-sa, qb, n) * qpoch(sq, qb, n) *
                           qpoch(-sq, qb, n) / qpoch(a, qb, n);
      r = std::max(r, rel(rhs5, qpoch(a * qb.pow(n), qb, n)));
      const EvalResult lhs6 = qpoch_general(a, qb, beta + double(n));
      const EvalResult tail6 = qpoch_general(a * qb.pow(n), qb, beta);
      r = std::max(r, rel(qpoch(a, qb, n) * tail6.value, lhs6.value));
      b.add(r, where, lhs6.converged && tail6.converged);
    } catch (const Error& e) {
      b.fail(where, e.what());
    }
  }
  c.out.params = ojson{{"count", count},
                       {"n", "0..12"},
                       {"k", "0..12"},
                       {"a", "|a| <= 0.9"},
                       {"beta", "Re in [-0.9, 3), Im in [-0.5, 0.5)"},
                       {"q", kQ3}};
  c.out.grid = ojson{{"seed", c.opt.seed}};
  c.out.report = b.finish();
}

void suite_qbinomial(Context& c) {
  const int count = 100;
  ReportBuilder b("qbinomial", c.tol(1e-12));
  for (int i = 0; i < count; ++i) {
    const Complex a = c.rng.in_disk(0.9);
    const Complex z = c.rng.in_disk(0.8);
    const double qv = c.rng.pick(kQ3);
    const QBase qb(qv);
    const ParamMap where{{"a", a}, {"z", z}, {"q", C(qv)}};
    try {
      const EvalResult s = phi(PhiSpec{{a}, {}, qb, z}, c.opt.pol);
      const Complex prod = qpoch_inf(a * z, qb, c.opt.pol) / qpoch_inf(z, qb, c.opt.pol);
      b.add(rel(s.value, prod), where, s.converged);
    } catch (const Error& e) {
      b.fail(where, e.what());
    }
  }
  c.out.params = ojson{{"count", count}, {"a", "|a| <= 0.9"}, {"z", "|z| <= 0.8"}, {"q", kQ3}};
  c.out.grid = ojson{{"seed", c.opt.seed}};
  c.out.report = b.finish();
}

const std::vector<double> kQIneq = {0.3, 0.7, 0.95};

std::vector<double> steps(double lo, double hi, double h) {
  std::vector<double> v;
  for (int i = 0; lo + i * h <= hi + 1e-12; ++i) v.push_back(lo + i * h);
  return v;
}

// Inequality suites: residual is the relative amount by which the inequality
// fails (0 when it holds); roundoff slack 1e-12.
void finish_inequality(Context& c, ReportBuilder& b, long violations, long checked,
                       ojson params) {
  c.out.params = std::move(params);
  c.out.grid = ojson{{"checked", checked}, {"violations", violations}};
  c.out.report = b.finish();
}

void suite_ineq_lower(Context& c) {
  ReportBuilder b("ineq_qpoch_lower", c.tol(1e-12));
  long bad = 0, total = 0;
  const auto us = steps(0.25, 5.0, 0.25);
  for (double qv : kQIneq) {
    const QBase qb(qv);
    for (double u : us) {
      for (int j = 1; j <= 20; ++j) {
        const double lhs = (qpoch(qb.pow(Complex(u, 0.0)), qb, j) / std::pow(1.0 - qv, j)).real();
        const double rhs = (qnumber(C(u), qb) * qfactorial(j - 1, qb)).real();
        const double r = std::max(0.0, (rhs - lhs) / std::abs(rhs));
        ++total;
        if (r > 1e-12) ++bad;
        b.add(r, ParamMap{{"q", C(qv)}, {"u", C(u)}, {"j", C(j)}});
      }
    }
  }
  finish_inequality(c, b, bad, total,
                    ojson{{"j", "1..20"}, {"u", "0.25..5 step 0.25"}, {"q", kQIneq}});
}

void suite_ineq_ratio(Context& c) {
  ReportBuilder b("ineq_qpoch_ratio", c.tol(1e-12));
  long bad = 0, total = 0;
  const auto us = steps(0.25, 5.0, 0.25);
  for (double qv : kQIneq) {
    const QBase qb(qv);
    for (double u : us) {
      for (int n = 0; n <= 20; ++n) {
        const double lhs = (qpoch(qb.pow(Complex(u, 0.0)), qb, n) / qpoch(C(qv), qb, n)).real();
        const double rhs = std::pow(qnumber(C(1.0 + n), qb).real(), u);
        const double r = std::max(0.0, (lhs - rhs) / std::abs(rhs));
        ++total;
        if (r > 1e-12) ++bad;
        b.add(r, ParamMap{{"q", C(qv)}, {"u", C(u)}, {"n", C(n)}});
      }
    }
  }
  finish_inequality(c, b, bad, total,
                    ojson{{"n", "0..20"}, {"u", "0.25..5 step 0.25"}, {"q", kQIneq}});
}

void suite_ineq_shifted_ratio(Context& c) {
  ReportBuilder b("ineq_qpoch_shifted_ratio", c.tol(1e-12));
  long bad = 0, total = 0;
  const auto us = steps(0.25, 5.0, 0.25);
  const auto vs = steps(0.0, 5.0, 0.25);
  for (double qv : kQIneq) {
    const QBase qb(qv);
    for (double u : us) {
      const double qu = qnumber(C(u), qb).real();
      for (double v : vs) {
        for (int k = 0; k <= 20; ++k) {
          for (int n = 0; n <= 20; ++n) {
            const double lhs = (qpoch(qb.pow(Complex(v + k, 0.0)), qb, n) /
                                qpoch(qb.pow(Complex(u + k, 0.0)), qb, n))
                                   .real();
            const double rhs = std::pow(qnumber(C(n + 1.0), qb).real(), v + 1.0) / qu;
            const double r = std::max(0.0, (lhs - rhs) / std::abs(rhs));
            ++total;
            if (r > 1e-12) ++bad;
            b.add(r, ParamMap{{"q", C(qv)}, {"u", C(u)}, {"v", C(v)}, {"k", C(k)}, {"n", C(n)}});
          }
        }
      }
    }
  }
  finish_inequality(c, b, bad, total,
                    ojson{{"n", "0..20"},
                          {"k", "0..20"},
                          {"u", "0.25..5 step 0.25"},
                          {"v", "0..5 step 0.25"},
                          {"q", kQIneq}});
}

// -- connection, quadratic transformation, limits ---------------------------

void suite_connection(Context& c) {
  const std::vector<double> bg = {0.25, 0.55, -0.4};
  std::vector<double> x;
  for (int j = 0; j <= 10; ++j) x.push_back(std::cos((2.0 * j + 1.0) * kPi / 22.0));
  ReportBuilder b("connection", c.tol(1e-11), 10);
  std::vector<ParamMap> samples;
  for (double qv : kQ3) {
    for (double beta : bg) {
      for (double gamma : bg) {
        b.absorb(verify_connection(10, C(beta), C(gamma), qv, x, c.tol(1e-11)));
        samples.push_back(ParamMap{{"beta", C(beta)}, {"gamma", C(gamma)}, {"q", C(qv)}});
      }
    }
  }
  c.out.params = samples_json(samples);
  c.out.grid = ojson{{"x_points", points_json(x)}, {"n_max", 10}};
  c.out.report = b.finish();
}

void suite_quadratic_transform(Context& c) {
  const int count = 200;
  const double tol = c.tol(1e-10);
  ReportBuilder b("quadratic_transform", tol);
  for (int i = 0; i < count; ++i) {
    const double a = c.rng.uniform(0.05, 0.7);
    const double bb = c.rng.uniform(0.05, 0.7);
    const double t = c.rng.uniform(0.05, 0.4);
    const double qv = c.rng.pick(kQ3);
    b.absorb(verify_quadratic_transform(C(a), C(bb), C(t), qv, c.opt.pol, tol));
  }
  // a = 0 is the q-binomial theorem in q t^2
  for (double qv : kQ3) {
    for (double bb : {0.2, 0.5}) {
      for (double t : {0.1, 0.3}) {
        const QBase qb(qv);
        const ParamMap where{{"a", C(0.0)}, {"b", C(bb)}, {"t", C(t)}, {"q", C(qv)}};
        try {
          const Complex z = qv * t * t;
          const Complex prod = qpoch_inf(bb * z, qb) / qpoch_inf(z, qb);
          const Complex lhs = quadratic_lhs(C(0.0), C(bb), C(t), qb, c.opt.pol).value;
          const Complex rhs = quadratic_rhs(C(0.0), C(bb), C(t), qb, c.opt.pol).value;
          b.add(std::max(rel(lhs, prod), rel(rhs, prod)), where);
        } catch (const Error& e) {
          b.fail(where, e.what());
        }
      }
    }
  }
  c.out.params = ojson{{"count", count},
                       {"a", "[0.05, 0.7)"},
                       {"b", "[0.05, 0.7)"},
                       {"t", "[0.05, 0.4)"},
                       {"q", kQ3},
                       {"reduction", "a = 0"}};
  c.out.grid = ojson{{"seed", c.opt.seed}, {"checks", ojson::array({"lhs = rhs", "t -> -t", "summations agree"})}};
  c.out.report = b.finish();
}

void suite_limit(Context& c, LimitChain chain, std::vector<LimitSetup> setups) {
  const std::vector<double> qs = {0.9, 0.99, 0.999};
  const double tol = c.tol(1e-3);
  VerificationReport merged;
  ojson params = ojson::array();
  std::vector<double> seq(qs.size(), 0.0);
  bool pass = true;
  ReportBuilder b(limit_chain_name(chain), tol);
  for (const auto& s : setups) {
    const VerificationReport r = verify_limit_chain(chain, qs, s, tol);
    pass = pass && r.pass;
    for (std::size_t i = 0; i < seq.size() && i < r.error_sequence.size(); ++i) {
      seq[i] = std::max(seq[i], r.error_sequence[i]);
    }
    b.absorb(r);
    params.push_back(params_json(s.params));
  }
  merged = b.finish();
  merged.error_sequence = seq;
  merged.N_terms_used = setups.front().n_max;
  merged.pass = pass;
  c.out.params = params;
  c.out.grid = ojson{{"q", points_json(qs)}, {"n_max", setups.front().n_max}};
  if (!setups.front().x_points.empty()) c.out.grid["x_points"] = points_json(setups.front().x_points);
  c.out.report = merged;
}

// -- orthogonality and integrals --------------------------------------------

void suite_orthogonality(Context& c) {
  const QBase q5(0.5), q8(0.8);
  const std::vector<std::pair<std::string, WeightSpec>> weights = {
      {"askey_wilson q=0.5", {Family::AskeyWilson, {0.1, 0.2, 0.3, 0.4}, q5}},
      {"askey_wilson q=0.8", {Family::AskeyWilson, {0.1, 0.2, 0.3, 0.4}, q8}},
      {"cq_jacobi q=0.5", {Family::CqJacobi, {0.2, 0.5}, q5}},
      {"cq_jacobi q=0.8", {Family::CqJacobi, {0.2, 0.5}, q8}},
      {"cq_ultraspherical q=0.5", {Family::CqUltraspherical, {0.3}, q5}},
      {"cq_ultraspherical q=0.8", {Family::CqUltraspherical, {0.3}, q8}},
      {"wilson", {Family::Wilson, {1.0, 1.5, 0.5, 2.0}, std::nullopt}},
      {"jacobi", {Family::Jacobi, {0.3, 0.7}, std::nullopt}},
      {"gegenbauer", {Family::Gegenbauer, {0.7}, std::nullopt}},
  };
  const double tol = c.tol(1e-10);
  ReportBuilder b("orthogonality", tol, 8);
  ojson params = ojson::array();
  for (const auto& [label, w] : weights) {
    ojson wp = ojson{{"weight", label}};
    ParamMap pm;
    for (std::size_t i = 0; i < w.params.size(); ++i) pm["p" + std::to_string(i + 1)] = w.params[i];
    wp["params"] = params_json(pm);
    params.push_back(wp);
    for (int m = 0; m <= 8; ++m) {
      for (int n = m; n <= 8; ++n) {
        ParamMap where = pm;
        where["m"] = C(m);
        where["n"] = C(n);
        if (w.q) where["q"] = w.q->value();
        try {
          const OrthogonalityReport r = verify_orthogonality(w, m, n);
          // the diagonal bar is 1e-8; the off-diagonal bar 1e-10
          const double scaled = m == n ? r.rel_residual * (tol / 1e-8) : r.rel_residual;
          b.add(scaled, where);
        } catch (const Error& e) {
          b.fail(where, e.what());
        }
      }
    }
  }
  c.out.params = params;
  c.out.grid = ojson{{"m, n", "0..8"}, {"residual", "off-diagonal / norm; diagonal scaled by 1e-2"}};
  c.out.report = b.finish();
}

void suite_corollary(Context& c, Corollary cor, const std::vector<ParamMap>& samples,
                     int n_max = 8) {
  ReportBuilder b(corollary_info(cor).name, c.tol(1e-8), n_max);
  for (const ParamMap& s : samples) {
    ParamMap p = s;
    p.erase("q");
    const std::optional<QBase> q = sample_base(s);
    for (int n = 0; n <= n_max; ++n) {
      ParamMap where = s;
      where["n"] = C(n);
      try {
        const CorollaryReport r = verify_integral_corollary(cor, n, p, q);
        b.add(r.rel_residual, where);
      } catch (const Error& e) {
        b.fail(where, e.what());
      }
    }
  }
  c.out.params = samples_json(samples);
  c.out.grid = ojson{{"n", "0.." + std::to_string(n_max)}};
  c.out.report = b.finish();
}

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = [] {
    std::map<std::string, SuiteFn> m;
    m["qpoch_algebra"] = suite_qpoch_algebra;
    m["qbinomial"] = suite_qbinomial;
    m["ineq_qpoch_lower"] = suite_ineq_lower;
    m["ineq_qpoch_ratio"] = suite_ineq_ratio;
    m["ineq_qpoch_shifted_ratio"] = suite_ineq_shifted_ratio;
    m["connection"] = suite_connection;
    m["aw_rogers"] = suite_aw_rogers;
    m["cqjacobi_rogers"] = suite_cqjacobi_rogers;
    m["rogers_gamma"] = suite_rogers_gamma;
    m["cqhermite"] = suite_cqhermite;
    m["chebyshev_q"] = suite_chebyshev_q;
    m["cqlegendre"] = suite_cqlegendre;
    m["wilson_limit"] = suite_wilson_limit;
    m["gegen_gf_general"] = suite_gegen_gf_general;
    m["jacobi_pow"] = suite_jacobi_pow;
    m["gegen_pow"] = suite_gegen_pow;
    m["cheby_pow"] = suite_cheby_pow;
    m["legendre_pow"] = suite_legendre_pow;
    m["heine"] = [](Context& c) { suite_heine(c, false); };
    m["heine_sqrt"] = [](Context& c) { suite_heine(c, true); };
    m["jacobi_1mx"] = [](Context& c) {
      suite_1mx(c, IdentityId::Jacobi1mx, {{"alpha", {0.4, 1.2}}, {"beta", {0.3}}});
    };
    m["gegen_1mx"] = [](Context& c) { suite_1mx(c, IdentityId::Gegen1mx, {{"mu", {0.3, 0.7, 1.5}}}); };
    m["cheby_1mx"] = [](Context& c) { suite_1mx(c, IdentityId::Cheby1mx, {}); };
    m["laguerre_1mx"] = [](Context& c) {
      suite_1mx(c, IdentityId::Laguerre1mx, {{"alpha", {0.4, 1.5}}});
    };
    m["rogers_gf"] = suite_rogers_gf;
    m["gegen_gf"] = suite_gegen_gf;
    m["cqhermite_gf"] = suite_cqhermite_gf;
    m["quadratic_transform"] = suite_quadratic_transform;

    const std::vector<double> xs = cos_grid();
    m["limit_pochhammer"] = [](Context& c) {
      suite_limit(c, LimitChain::Pochhammer,
                  {{{{"a", C(1.3)}, {"b", C(0.7)}}, 0, {}},
                   {{{"a", C(0.4)}, {"b", C(-0.6)}}, 0, {}},
                   {{{"a", C(2.2)}, {"b", C(1.5)}}, 0, {}}});
    };
    m["limit_cqjacobi"] = [xs](Context& c) {
      suite_limit(c, LimitChain::CqJacobi, {{{{"alpha", C(0.5)}, {"gamma", C(0.5)}}, 6, xs}});
    };
    m["limit_cqlegendre"] = [xs](Context& c) {
      suite_limit(c, LimitChain::CqLegendre, {{{}, 6, xs}});
    };
    m["limit_cqultra"] = [xs](Context& c) {
      suite_limit(c, LimitChain::CqUltra, {{{{"lambda", C(0.7)}}, 6, xs}});
    };
    m["limit_quadratic"] = [](Context& c) {
      suite_limit(c, LimitChain::QuadraticGauss, {{{{"a", C(0.3)}, {"b", C(0.2)}, {"t", C(0.15)}}, 0, {}}});
    };
    m["orthogonality"] = suite_orthogonality;

    m["aw_int"] = [](Context& c) {
      suite_corollary(c, Corollary::AwInt,
                      product({{"a1", {0.1}}, {"a2", {0.2}}, {"a3", {0.3}}, {"a4", {0.4}},
                               {"beta", {0.3, 0.6}}, {"t", {0.1, 0.25}}, {"q", {0.5}}}));
    };
    m["wilson_int"] = [](Context& c) {
      std::vector<ParamMap> s;
      for (auto [u, t] : std::vector<std::pair<double, double>>{{0.5, 2.5}, {1.2, 0.7}, {0.9, 1.6}}) {
        s.push_back(ParamMap{{"a1", C(1.0)}, {"a2", C(1.5)}, {"a3", C(0.5)}, {"a4", C(2.0)},
                             {"u", C(u)}, {"t", C(t)}});
      }
      suite_corollary(c, Corollary::WilsonInt, s);
    };
    m["cqjacobi_int"] = [](Context& c) {
      suite_corollary(c, Corollary::CqJacobiInt,
                      product({{"alpha", {0.2, 0.5}}, {"gamma", {0.2, 0.5}}, {"beta", {0.6}},
                               {"t", {0.1, 0.25}}, {"q", {0.5}}}));
    };
    m["cqultra_int"] = [](Context& c) {
      suite_corollary(c, Corollary::CqUltraInt,
                      product({{"beta", {-0.3, 0.3}}, {"gamma", {0.5}}, {"t", {0.1, 0.25}}, {"q", {0.5}}}));
    };
    m["gegen_stieltjes"] = [](Context& c) {
      suite_corollary(c, Corollary::GegenStieltjes,
                      product({{"mu", {0.7, 1.5}}, {"lambda", {0.4, 1.2}}, {"t", {0.1, 0.25}}}));
    };
    m["jacobi_1mx_int"] = [](Context& c) {
      std::vector<ParamMap> s;
      for (auto [a, b] : std::vector<std::pair<double, double>>{{0.3, 0.7}, {1.5, -0.5}}) {
        for (double nu : {0.2, 0.5}) s.push_back(ParamMap{{"alpha", C(a)}, {"beta", C(b)}, {"nu", C(nu)}});
      }
      suite_corollary(c, Corollary::Jacobi1mxInt, s);
    };
    m["gegen_1mx_int"] = [](Context& c) {
      suite_corollary(c, Corollary::Gegen1mxInt, product({{"mu", {0.7, 1.5}}, {"nu", {0.2, 0.5}}}));
    };
    m["cheby_1mx_int"] = [](Context& c) {
      // nu = 0.5 violates Re(1/2 - nu) > 0
      suite_corollary(c, Corollary::Cheby1mxInt, product({{"nu", {0.2}}}));
      c.out.grid["skipped"] = ojson::array({ojson{{"nu", 0.5}, {"reason", "needs Re(1/2 - nu) > 0"}}});
    };
    m["laguerre_1mx_int"] = [](Context& c) {
      suite_corollary(c, Corollary::Laguerre1mxInt, product({{"alpha", {0.4, 1.5}}, {"nu", {0.2, 0.5}}}));
    };
    return m;
  }();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "qpoch_algebra", "qbinomial", "ineq_qpoch_lower", "ineq_qpoch_ratio",
      "ineq_qpoch_shifted_ratio", "connection", "rogers_gamma", "rogers_gf", "cqhermite",
      "cqhermite_gf", "chebyshev_q", "cqlegendre", "aw_rogers", "cqjacobi_rogers", "wilson_limit",
      "gegen_gf_general", "gegen_gf", "jacobi_pow", "gegen_pow", "cheby_pow", "legendre_pow",
      "heine", "heine_sqrt", "jacobi_1mx", "gegen_1mx", "cheby_1mx", "laguerre_1mx",
      "quadratic_transform", "limit_pochhammer", "limit_cqjacobi", "limit_cqlegendre",
      "limit_cqultra", "limit_quadratic", "orthogonality", "aw_int", "wilson_int", "cqjacobi_int",
      "cqultra_int", "gegen_stieltjes", "jacobi_1mx_int", "gegen_1mx_int", "cheby_1mx_int",
      "laguerre_1mx_int"};
  return names;
}

bool is_suite(const std::string& name) { return registry().count(name) > 0; }

std::vector<std::string> expand_suites(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : suite_names()) out.push_back(s);
    } else if (is_suite(n)) {
      out.push_back(n);
    } else {
      throw Error(ErrorCode::DomainViolation, "unknown suite " + n);
    }
  }
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::DomainViolation, "unknown suite " + name);
  const auto t0 = std::chrono::steady_clock::now();
  Context c{name, opt, Sampler(suite_seed(opt.seed, name)), {}};
  c.out.suite = name;
  it->second(c);
  c.out.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c.out;
}

}  // namespace qsk
