#include "qsk/verifier.hpp"

#include <cmath>
#include <limits>

namespace qsk {

namespace {

constexpr double kRelFloor = 1e-30;
constexpr std::size_t kMaxErrors = 5;

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), kRelFloor);
}

ParamMap without_base(const ParamMap& sample) {
  ParamMap p = sample;
  p.erase("q");
  return p;
}

ParamMap at(const ParamMap& sample, double x) {
  ParamMap w = sample;
  w["x"] = Complex(x, 0.0);
  return w;
}

}  // namespace

void GridSpec::validate() const {
  if (x_points.empty() || param_samples.empty()) {
    throw Error(ErrorCode::DomainViolation, "grid has no points");
  }
  if (N_terms < 1) throw Error(ErrorCode::DomainViolation, "N_terms must be at least 1");
  if (!(tol_rel > 0.0)) throw Error(ErrorCode::DomainViolation, "tol_rel must be positive");
}

std::optional<QBase> sample_base(const ParamMap& sample) {
  auto it = sample.find("q");
  if (it == sample.end()) return std::nullopt;
  return QBase(it->second.real());
}

ReportBuilder::ReportBuilder(std::string id, double tol_rel, int n_terms) {
  r_.id = std::move(id);
  r_.tol_rel = tol_rel;
  r_.N_terms_used = n_terms;
}

void ReportBuilder::add(double residual, const ParamMap& where, bool converged) {
  ++r_.samples;
  if (converged) ++converged_;
  // NaN counts as the worst possible residual
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  if (r_.samples == 1 || residual > r_.max_rel_residual) {
    r_.max_rel_residual = residual;
    r_.worst_point = where;
  }
}

void ReportBuilder::fail(const ParamMap& where, const std::string& what) {
  add(std::numeric_limits<double>::infinity(), where, false);
  if (r_.errors.size() < kMaxErrors) r_.errors.push_back(what);
}

void ReportBuilder::absorb(const VerificationReport& other) {
  const int before = r_.samples;
  const double before_max = r_.max_rel_residual;
  r_.samples += other.samples;
  converged_ += static_cast<int>(std::lround(other.converged_fraction * other.samples));
  if (other.samples > 0 && (before == 0 || other.max_rel_residual > before_max)) {
    r_.max_rel_residual = other.max_rel_residual;
    r_.worst_point = other.worst_point;
  }
  r_.N_terms_used = std::max(r_.N_terms_used, other.N_terms_used);
  for (const auto& e : other.errors) {
    if (r_.errors.size() < kMaxErrors) r_.errors.push_back(e);
  }
}

VerificationReport ReportBuilder::finish() const {
  VerificationReport r = r_;
  r.converged_fraction = r.samples > 0 ? static_cast<double>(converged_) / r.samples : 0.0;
  r.pass = r.samples > 0 && r.max_rel_residual <= r.tol_rel && converged_ == r.samples;
  return r;
}

VerificationReport verify_expansion(IdentityId id, const GridSpec& grid,
                                    const TruncationPolicy& pol, bool vwp_rewrite) {
  grid.validate();
  ReportBuilder b(identity_info(id).name, grid.tol_rel, grid.N_terms);
  for (const ParamMap& sample : grid.param_samples) {
    const ParamMap params = without_base(sample);
    std::optional<QBase> q;
    std::vector<Complex> coeff(grid.N_terms + 1);
    bool converged = true;
    PolySpec spec;
    try {
      q = sample_base(sample);
      check_request(id, params, q);
      for (int n = 0; n <= grid.N_terms; ++n) {
        const EvalResult c = coefficient(CoeffRequest{id, n, params, q, pol, vwp_rewrite});
        coeff[n] = c.value;
        converged = converged && c.converged;
      }
      spec = target_spec(id, params, q);
    } catch (const Error& e) {
      for (double x : grid.x_points) b.fail(at(sample, x), e.what());
      continue;
    }
    for (double x : grid.x_points) {
      try {
        const Complex lhs = lhs_eval(id, params, q, Complex(x, 0.0), pol).value;
        const std::vector<Complex> p = poly_sequence(spec, grid.N_terms, Complex(x, 0.0));
        Complex sum(0.0, 0.0);
        for (int n = 0; n <= grid.N_terms; ++n) sum += coeff[n] * p[n];
        b.add(rel(sum, lhs), at(sample, x), converged);
      } catch (const Error& e) {
        b.fail(at(sample, x), e.what());
      }
    }
  }
  return b.finish();
}

VerificationReport verify_connection(int n_max, Complex beta, Complex gamma, double q,
                                     const std::vector<double>& x_points, double tol_rel) {
  if (n_max < 0 || n_max > 30) throw Error(ErrorCode::DomainViolation, "needs 0 <= n_max <= 30");
  if (static_cast<int>(x_points.size()) < n_max + 1) {
    throw Error(ErrorCode::DomainViolation, "needs at least n_max+1 points");
  }
  const QBase qb(q);
  const PolySpec lhs_spec{Family::CqUltraspherical, {beta}, qb};
  const PolySpec rhs_spec{Family::CqUltraspherical, {gamma}, qb};
  ReportBuilder b("connection", tol_rel);
  const ParamMap base{{"beta", beta}, {"gamma", gamma}, {"q", Complex(q, 0.0)}};
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Complex> c(n / 2 + 1);
    for (int k = 0; 2 * k <= n; ++k) c[k] = connection_coeff(n, k, beta, gamma, qb);
    for (double x : x_points) {
      ParamMap where = at(base, x);
      where["n"] = Complex(n, 0.0);
      const Complex lhs = poly_eval(lhs_spec, n, Complex(x, 0.0));
      const std::vector<Complex> p = poly_sequence(rhs_spec, n, Complex(x, 0.0));
      Complex rhs(0.0, 0.0);
      double mass = 0.0;
      for (int k = 0; 2 * k <= n; ++k) {
        rhs += c[k] * p[n - 2 * k];
        mass += std::abs(c[k] * p[n - 2 * k]);
      }
      const double scale = std::max({std::abs(lhs), mass, kRelFloor});
      b.add(std::abs(lhs - rhs) / scale, where);
    }
  }
  return b.finish();
}

VerificationReport verify_quadratic_transform(Complex a, Complex b, Complex t, double q,
                                              const TruncationPolicy& pol, double tol_rel) {
  const QBase qb(q);
  const Complex qv = qb.value();
  if (!(std::abs(qv * t * t) < 1.0) || !(std::abs(qv * t) < 1.0)) {
    throw Error(ErrorCode::NonConvergent, "needs |q t^2| < 1 and |q t| < 1");
  }
  ReportBuilder r("quadratic_transform", tol_rel);
  const ParamMap where{{"a", a}, {"b", b}, {"t", t}, {"q", Complex(q, 0.0)}};
  try {
    const EvalResult lhs = quadratic_lhs(a, b, t, qb, pol);
    const EvalResult rhs = quadratic_rhs(a, b, t, qb, pol, false);
    const EvalResult rhs_neg = quadratic_rhs(a, b, -t, qb, pol, false);
    const EvalResult rhs_vwp = quadratic_rhs(a, b, t, qb, pol, true);
    const bool conv = lhs.converged && rhs.converged && rhs_neg.converged && rhs_vwp.converged;
    const double scale = std::max(std::abs(lhs.value), kRelFloor);
    const double res = std::max({std::abs(lhs.value - rhs.value), std::abs(rhs.value - rhs_neg.value),
                                 std::abs(rhs.value - rhs_vwp.value)}) /
                       scale;
    r.add(res, where, conv);
  } catch (const Error& e) {
    r.fail(where, e.what());
  }
  return r.finish();
}

const char* limit_chain_name(LimitChain c) {
  switch (c) {
    case LimitChain::Pochhammer:
      return "limit_pochhammer";
    case LimitChain::CqJacobi:
      return "limit_cqjacobi";
    case LimitChain::CqLegendre:
      return "limit_cqlegendre";
    case LimitChain::CqUltra:
      return "limit_cqultra";
    case LimitChain::QuadraticGauss:
      return "limit_quadratic";
  }
  return "limit";
}

VerificationReport verify_limit_chain(LimitChain chain, const std::vector<double>& q_seq,
                                      const LimitSetup& setup, double tol_final) {
  if (q_seq.empty()) throw Error(ErrorCode::DomainViolation, "empty base sequence");
  for (std::size_t i = 0; i < q_seq.size(); ++i) {
    if (!(q_seq[i] > 0.0 && q_seq[i] < 1.0) || (i > 0 && !(q_seq[i] > q_seq[i - 1]))) {
      throw Error(ErrorCode::DomainViolation, "base sequence must increase inside (0, 1)");
    }
  }
  auto param = [&](const char* k) {
    auto it = setup.params.find(k);
    if (it == setup.params.end()) {
      throw Error(ErrorCode::DomainViolation, std::string("missing parameter ") + k);
    }
    return it->second;
  };

  VerificationReport out;
  out.id = limit_chain_name(chain);
  out.tol_rel = tol_final;
  out.N_terms_used = setup.n_max;
  double worst_final = 0.0;
  ParamMap worst_where;
  bool converged = true;

  for (double qv : q_seq) {
    const QBase qb(qv);
    double err = 0.0;
    ParamMap err_where;
    auto track = [&](double e, ParamMap where) {
      if (std::isnan(e)) e = std::numeric_limits<double>::infinity();
      if (e > err || err_where.empty()) {
        err = std::max(err, e);
        where["q"] = Complex(qv, 0.0);
        err_where = std::move(where);
      }
    };
    try {
      switch (chain) {
        case LimitChain::Pochhammer: {
          const Complex a = param("a"), beta = param("b");
          const EvalResult r = qpoch_general(qb.pow(a), qb, beta);
          converged = converged && r.converged;
          track(rel(r.value / std::pow(1.0 - qv, beta), pochhammer(a, beta)), setup.params);
          break;
        }
        case LimitChain::QuadraticGauss: {
          const Complex a = param("a"), b = param("b"), t = param("t");
          const EvalResult r = phi(
              PhiSpec{{qb.pow(a), qb.pow(b)}, {qb.pow(a - b + 1.0)}, qb, qv * t * t});
          converged = converged && r.converged;
          for (double sgn : {1.0, -1.0}) {
            // the reflected form needs 4|t| < |1 - t|^2
            if (std::abs(4.0 * t) >= std::norm(1.0 + sgn * t)) continue;
            ParamMap where = setup.params;
            where["t"] = sgn * t;
            track(rel(r.value, gauss_quadratic_rhs(a, b, sgn * t).value), where);
          }
          break;
        }
        default: {
          PolySpec approx;
          PolySpec target;
          if (chain == LimitChain::CqJacobi) {
            const Complex al = param("alpha"), ga = param("gamma");
            approx = {Family::CqJacobi, {qb.pow(al + 0.5), qb.pow(ga + 0.5)}, qb};
            target = {Family::Jacobi, {al, ga}, std::nullopt};
          } else if (chain == LimitChain::CqLegendre) {
            approx = {Family::CqLegendre, {}, qb};
            target = {Family::Legendre, {}, std::nullopt};
          } else {
            const Complex lam = param("lambda");
            approx = {Family::CqUltraspherical, {qb.pow(lam)}, qb};
            target = {Family::Gegenbauer, {lam}, std::nullopt};
          }
          // error relative to the sup of the target over the grid, since
          // target zeros can sit on grid points
          std::vector<std::vector<Complex>> pa, pt;
          std::vector<double> scale(setup.n_max + 1, 0.0);
          for (double x : setup.x_points) {
            pa.push_back(poly_sequence(approx, setup.n_max, Complex(x, 0.0)));
            pt.push_back(poly_sequence(target, setup.n_max, Complex(x, 0.0)));
            for (int n = 0; n <= setup.n_max; ++n) scale[n] = std::max(scale[n], std::abs(pt.back()[n]));
          }
          for (std::size_t i = 0; i < setup.x_points.size(); ++i) {
            for (int n = 0; n <= setup.n_max; ++n) {
              ParamMap where = at(setup.params, setup.x_points[i]);
              where["n"] = Complex(n, 0.0);
              track(std::abs(pa[i][n] - pt[i][n]) / std::max(scale[n], 1e-300), where);
            }
          }
          break;
        }
      }
    } catch (const Error& e) {
      err = std::numeric_limits<double>::infinity();
      err_where = setup.params;
      err_where["q"] = Complex(qv, 0.0);
      converged = false;
      if (out.errors.size() < kMaxErrors) out.errors.push_back(e.what());
    }
    out.error_sequence.push_back(err);
    worst_final = err;
    worst_where = err_where;
  }

  bool decreasing = true;
  for (std::size_t i = 1; i < out.error_sequence.size(); ++i) {
    decreasing = decreasing && out.error_sequence[i] < out.error_sequence[i - 1];
  }
  out.samples = static_cast<int>(q_seq.size());
  out.max_rel_residual = worst_final;
  out.worst_point = worst_where;
  out.converged_fraction = converged ? 1.0 : 0.0;
  out.pass = decreasing && converged && worst_final <= tol_final;
  return out;
}

VerificationReport verify_heine_classical(double z, int N, bool reciprocal_sqrt, double tol_rel) {
  if (!(z >= 1.1 && z <= 3.0)) throw Error(ErrorCode::BranchDomain, "needs z in [1.1, 3]");
  GridSpec g;
  for (int j = 0; j <= 18; ++j) g.x_points.push_back(-0.9 + 0.1 * j);
  g.param_samples = {ParamMap{{"z", Complex(z, 0.0)}}};
  g.N_terms = N;
  g.tol_rel = tol_rel;
  return verify_expansion(reciprocal_sqrt ? IdentityId::HeineSqrt : IdentityId::Heine, g);
}

}  // namespace qsk
