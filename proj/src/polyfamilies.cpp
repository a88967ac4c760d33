#include "qsk/polyfamilies.hpp"

#include <cmath>
#include <map>

namespace qsk {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  bool q_family;
  int arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::AskeyWilson, "askey_wilson", true, 4},
    {Family::CqJacobi, "cq_jacobi", true, 2},
    {Family::CqUltraspherical, "cq_ultraspherical", true, 1},
    {Family::CqHermite, "cq_hermite", true, 0},
    {Family::CqLegendre, "cq_legendre", true, 0},
    {Family::Wilson, "wilson", false, 4},
    {Family::Jacobi, "jacobi", false, 2},
    {Family::Gegenbauer, "gegenbauer", false, 1},
    {Family::ChebyshevT, "chebyshev_t", false, 0},
    {Family::Legendre, "legendre", false, 0},
    {Family::Laguerre, "laguerre", false, 1},
};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw Error(ErrorCode::ParameterDomain, "unknown family");
}

// Above this ratio of sum-of-moduli to |sum| the defining series has lost too
// many digits and the recurrence is used instead.
constexpr double kCancellationLimit = 1e4;

const Complex kI(0.0, 1.0);

// AW recurrence; p has size N+1 on return.
std::vector<Complex> aw_sequence(const std::array<Complex, 4>& prm, const QBase& qb, int N,
                                 Complex x) {
  const Complex a = prm[0], b = prm[1], c = prm[2], d = prm[3];
  const Complex abcd = a * b * c * d;
  std::vector<Complex> p(N + 1);
  p[0] = 1.0;
  for (int n = 0; n < N; ++n) {
    const Complex qn = qb.pow(n);
    const Complex qn1 = qb.pow(n - 1);
    const Complex q2n = qb.pow(2 * n);
    const Complex q2n1 = qb.pow(2 * n - 1);
    const Complex An = (1.0 - abcd * qn1) * (1.0 - a * b * qn) * (1.0 - a * c * qn) *
                       (1.0 - a * d * qn) / (a * (1.0 - abcd * q2n1) * (1.0 - abcd * q2n));
    Complex Cn(0.0, 0.0);
    Complex kr(0.0, 0.0);
    if (n > 0) {
      const Complex q2n2 = qb.pow(2 * n - 2);
      Cn = a * (1.0 - qn) * (1.0 - b * c * qn1) * (1.0 - b * d * qn1) * (1.0 - c * d * qn1) /
           ((1.0 - abcd * q2n2) * (1.0 - abcd * q2n1));
      kr = (1.0 - a * b * qn1) * (1.0 - a * c * qn1) * (1.0 - a * d * qn1) / a;
    }
    const Complex pref = (1.0 - abcd * q2n1) * (1.0 - abcd * q2n) / (1.0 - abcd * qn1);
    const Complex prev = n > 0 ? p[n - 1] : Complex(0.0, 0.0);
    p[n + 1] = pref * ((2.0 * x - a - 1.0 / a + An + Cn) * p[n] - Cn * kr * prev);
  }
  return p;
}

std::array<Complex, 4> cq_jacobi_aw_params(Complex alpha, Complex gamma, const QBase& qb) {
  const Complex q = qb.value();
  return {std::sqrt(alpha), -std::sqrt(gamma), -std::sqrt(q * gamma), std::sqrt(q * alpha)};
}

// alpha^{n/2} / (q, -(alpha gamma)^{1/2}, -(q alpha gamma)^{1/2}; q)_n
Complex cq_jacobi_scale(int n, Complex alpha, Complex gamma, const QBase& qb) {
  const Complex q = qb.value();
  const Complex sag = std::sqrt(alpha * gamma);
  const Complex sqag = std::sqrt(q * alpha * gamma);
  return std::pow(std::sqrt(alpha), n) /
         (qpoch(q, qb, n) * qpoch(-sag, qb, n) * qpoch(-sqag, qb, n));
}

std::vector<Complex> wilson_sequence(const std::array<Complex, 4>& prm, int N, Complex x2) {
  const Complex a = prm[0], b = prm[1], c = prm[2], d = prm[3];
  const Complex s = a + b + c + d;
  std::vector<Complex> w(N + 1);
  w[0] = 1.0;
  for (int n = 0; n < N; ++n) {
    const double nd = n;
    const Complex An = (nd + s - 1.0) * (nd + a + b) * (nd + a + c) * (nd + a + d) /
                       ((2.0 * nd + s - 1.0) * (2.0 * nd + s));
    Complex Cn(0.0, 0.0);
    Complex kr(0.0, 0.0);
    if (n > 0) {
      Cn = nd * (nd + b + c - 1.0) * (nd + b + d - 1.0) * (nd + c + d - 1.0) /
           ((2.0 * nd + s - 2.0) * (2.0 * nd + s - 1.0));
      kr = (a + b + nd - 1.0) * (a + c + nd - 1.0) * (a + d + nd - 1.0);
    }
    const Complex pref = (2.0 * nd + s - 1.0) * (2.0 * nd + s) / (nd + s - 1.0);
    const Complex prev = n > 0 ? w[n - 1] : Complex(0.0, 0.0);
    w[n + 1] = pref * ((An + Cn - a * a - x2) * w[n] - Cn * kr * prev);
  }
  return w;
}

std::array<Complex, 4> four(const std::vector<Complex>& v) { return {v[0], v[1], v[2], v[3]}; }

EvalResult scaled(EvalResult r, Complex factor) {
  r.value *= factor;
  r.abs_sum *= std::abs(factor);
  r.tail_bound *= std::abs(factor);
  return r;
}

EvalResult cq_ultra_series(int n, Complex x, Complex beta, const QBase& qb,
                           const TruncationPolicy& pol) {
  const Complex q = qb.value();
  if (beta == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::DenominatorPole, "defining series needs beta != 0");
  }
  const Complex e = exp_i_theta(x);
  PhiSpec spec{{qb.pow(-n), beta}, {qb.pow(1 - n) / beta}, qb, q / (beta * e * e)};
  EvalResult r = phi(spec, pol);
  return scaled(r, qpoch(beta, qb, n) / qpoch(q, qb, n) * std::pow(e, n));
}

}  // namespace

const char* family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(const std::string& name) {
  for (const auto& fi : kFamilies) {
    if (name == fi.name) return fi.family;
  }
  return std::nullopt;
}

bool is_q_family(Family f) { return info(f).q_family; }
int family_arity(Family f) { return info(f).arity; }

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& fi : kFamilies) out.push_back(fi.family);
    return out;
  }();
  return v;
}

void PolySpec::validate() const {
  const FamilyInfo& fi = info(family);
  if (static_cast<int>(params.size()) != fi.arity) {
    throw Error(ErrorCode::ParameterDomain, std::string(fi.name) + " expects " +
                                                std::to_string(fi.arity) + " parameters");
  }
  if (fi.q_family != q.has_value()) {
    throw Error(ErrorCode::ParameterDomain,
                std::string(fi.name) + (fi.q_family ? " needs a base q" : " takes no base q"));
  }
}

Complex exp_i_theta(Complex x) {
  if (x.imag() == 0.0 && std::abs(x.real()) <= 1.0) {
    return {x.real(), std::sqrt(1.0 - x.real() * x.real())};
  }
  Complex w = x + std::sqrt(x * x - 1.0);
  if (std::abs(w) < 1.0) w = 1.0 / w;
  return w;
}

EvalResult poly_eval_series(const PolySpec& spec, int n, Complex x, const TruncationPolicy& pol) {
  spec.validate();
  if (n < 0) throw Error(ErrorCode::ParameterDomain, "degree must be nonnegative");
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::AskeyWilson: {
      const QBase& qb = *spec.q;
      const Complex a = p[0], b = p[1], c = p[2], d = p[3];
      const Complex e = exp_i_theta(x);
      PhiSpec s{{qb.pow(-n), a * b * c * d * qb.pow(n - 1), a * e, a / e},
                {a * b, a * c, a * d},
                qb,
                qb.value()};
      const Complex pre = std::pow(a, -n) * qpoch(a * b, qb, n) * qpoch(a * c, qb, n) *
                          qpoch(a * d, qb, n);
      return scaled(phi(s, pol), pre);
    }
    case Family::CqJacobi: {
      const QBase& qb = *spec.q;
      const Complex q = qb.value();
      const Complex al = p[0], ga = p[1];
      const Complex e = exp_i_theta(x);
      const Complex sa = std::sqrt(al);
      PhiSpec s{{qb.pow(-n), qb.pow(n) * al * ga, sa * e, sa / e},
                {std::sqrt(q) * al, -std::sqrt(al * ga), -std::sqrt(q * al * ga)},
                qb,
                q};
      return scaled(phi(s, pol), qpoch(std::sqrt(q) * al, qb, n) / qpoch(q, qb, n));
    }
    case Family::CqUltraspherical:
      return cq_ultra_series(n, x, p[0], *spec.q, pol);
    case Family::CqHermite: {
      const QBase& qb = *spec.q;
      const Complex e = exp_i_theta(x);
      PhiSpec s{{qb.pow(-n), Complex(0.0, 0.0)}, {}, qb, qb.pow(n) / (e * e)};
      return scaled(phi(s, pol), std::pow(e, n));
    }
    case Family::CqLegendre: {
      const QBase& qb = *spec.q;
      const Complex sq = std::sqrt(qb.value());
      return scaled(cq_ultra_series(n, x, sq, qb, pol), std::pow(qb.value(), 0.25 * n));
    }
    case Family::Wilson: {
      EvalResult r;
      const std::array<Complex, 4> a = four(p);
      r.value = wilson_eval(n, x * x, a);
      r.terms_used = n + 1;
      // abs_sum of the 4F3 terms, scaled like the value
      const Complex s = a[0] + a[1] + a[2] + a[3];
      Complex term(1.0, 0.0);
      double abs_sum = 1.0;
      for (int k = 0; k < n; ++k) {
        const double kd = k;
        term *= (kd - n) * (double(n) + s - 1.0 + kd) * ((a[0] + kd) * (a[0] + kd) + x * x) /
                ((a[0] + a[1] + kd) * (a[0] + a[2] + kd) * (a[0] + a[3] + kd) * (kd + 1.0));
        abs_sum += std::abs(term);
      }
      r.abs_sum = abs_sum * std::abs(rising(a[0] + a[1], n) * rising(a[0] + a[2], n) *
                                     rising(a[0] + a[3], n));
      return r;
    }
    case Family::Jacobi: {
      const Complex al = p[0], be = p[1];
      HypSpec s{{Complex(-n, 0.0), double(n) + al + be + 1.0}, {al + 1.0}, (1.0 - x) / 2.0};
      return scaled(hyp(s, pol), rising(al + 1.0, n) / rising(Complex(1.0, 0.0), n));
    }
    case Family::Gegenbauer: {
      const Complex mu = p[0];
      HypSpec s{{Complex(-n, 0.0), double(n) + 2.0 * mu}, {mu + 0.5}, (1.0 - x) / 2.0};
      return scaled(hyp(s, pol), rising(2.0 * mu, n) / rising(Complex(1.0, 0.0), n));
    }
    case Family::ChebyshevT: {
      HypSpec s{{Complex(-n, 0.0), Complex(n, 0.0)}, {Complex(0.5, 0.0)}, (1.0 - x) / 2.0};
      return hyp(s, pol);
    }
    case Family::Legendre: {
      HypSpec s{{Complex(-n, 0.0), Complex(n + 1.0, 0.0)}, {Complex(1.0, 0.0)}, (1.0 - x) / 2.0};
      return hyp(s, pol);
    }
    case Family::Laguerre: {
      const Complex al = p[0];
      HypSpec s{{Complex(-n, 0.0)}, {al + 1.0}, x};
      return scaled(hyp(s, pol), rising(al + 1.0, n) / rising(Complex(1.0, 0.0), n));
    }
  }
  throw Error(ErrorCode::ParameterDomain, "unknown family");
}

std::vector<Complex> poly_sequence(const PolySpec& spec, int N, Complex x) {
  spec.validate();
  if (N < 0) throw Error(ErrorCode::ParameterDomain, "degree must be nonnegative");
  const auto& p = spec.params;
  std::vector<Complex> v(N + 1);
  v[0] = 1.0;
  auto two_term = [&](auto&& step) {
    for (int n = 0; n < N; ++n) {
      const Complex prev = n > 0 ? v[n - 1] : Complex(0.0, 0.0);
      v[n + 1] = step(n, v[n], prev);
    }
  };
  switch (spec.family) {
    case Family::AskeyWilson:
      return aw_sequence(four(p), *spec.q, N, x);
    case Family::CqJacobi: {
      const QBase& qb = *spec.q;
      v = aw_sequence(cq_jacobi_aw_params(p[0], p[1], qb), qb, N, x);
      for (int n = 0; n <= N; ++n) v[n] *= cq_jacobi_scale(n, p[0], p[1], qb);
      return v;
    }
    case Family::CqUltraspherical:
    case Family::CqLegendre: {
      const QBase& qb = *spec.q;
      const Complex beta = spec.family == Family::CqLegendre ? std::sqrt(qb.value()) : p[0];
      two_term([&](int n, Complex c, Complex cm) {
        return (2.0 * x * (1.0 - beta * qb.pow(n)) * c -
                (1.0 - beta * beta * qb.pow(n - 1)) * cm) /
               (1.0 - qb.pow(n + 1));
      });
      if (spec.family == Family::CqLegendre) {
        for (int n = 0; n <= N; ++n) v[n] *= std::pow(qb.value(), 0.25 * n);
      }
      return v;
    }
    case Family::CqHermite: {
      const QBase& qb = *spec.q;
      two_term([&](int n, Complex h, Complex hm) { return 2.0 * x * h - (1.0 - qb.pow(n)) * hm; });
      return v;
    }
    case Family::Wilson:
      return wilson_sequence(four(p), N, x * x);
    case Family::Jacobi: {
      const Complex a = p[0], b = p[1];
      two_term([&](int n, Complex pn, Complex pm) {
        if (n == 0) return (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
        const double nd = n;
        const Complex s = 2.0 * nd + a + b;
        const Complex c1 = 2.0 * (nd + 1.0) * (nd + a + b + 1.0) * s;
        const Complex c2 = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b);
        const Complex c3 = 2.0 * (nd + a) * (nd + b) * (s + 2.0);
        return (c2 * pn - c3 * pm) / c1;
      });
      return v;
    }
    case Family::Gegenbauer: {
      const Complex mu = p[0];
      two_term([&](int n, Complex c, Complex cm) {
        const double nd = n;
        return (2.0 * (nd + mu) * x * c - (nd + 2.0 * mu - 1.0) * cm) / (nd + 1.0);
      });
      return v;
    }
    case Family::ChebyshevT:
      two_term([&](int n, Complex t, Complex tm) { return n == 0 ? x : 2.0 * x * t - tm; });
      return v;
    case Family::Legendre:
      two_term([&](int n, Complex pn, Complex pm) {
        const double nd = n;
        return ((2.0 * nd + 1.0) * x * pn - nd * pm) / (nd + 1.0);
      });
      return v;
    case Family::Laguerre: {
      const Complex a = p[0];
      two_term([&](int n, Complex l, Complex lm) {
        const double nd = n;
        return ((2.0 * nd + a + 1.0 - x) * l - (nd + a) * lm) / (nd + 1.0);
      });
      return v;
    }
  }
  throw Error(ErrorCode::ParameterDomain, "unknown family");
}

Complex poly_eval_recurrence(const PolySpec& spec, int n, Complex x) {
  if (n < 0) throw Error(ErrorCode::ParameterDomain, "degree must be nonnegative");
  return poly_sequence(spec, n, x)[n];
}

Complex poly_eval(const PolySpec& spec, int n, Complex x, const TruncationPolicy& pol) {
  try {
    const EvalResult r = poly_eval_series(spec, n, x, pol);
    const double mag = std::abs(r.value);
    if (std::isfinite(mag) && r.abs_sum <= kCancellationLimit * mag) return r.value;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DenominatorPole) throw;
  }
  return poly_eval_recurrence(spec, n, x);
}

Complex wilson_eval(int n, Complex x2, const std::array<Complex, 4>& a) {
  if (n < 0) throw Error(ErrorCode::ParameterDomain, "degree must be nonnegative");
  const Complex s = a[0] + a[1] + a[2] + a[3];
  const Complex ab = a[0] + a[1], ac = a[0] + a[2], ad = a[0] + a[3];
  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    const double kd = k;
    const Complex den = (ab + kd) * (ac + kd) * (ad + kd) * (kd + 1.0);
    if (std::abs(den) == 0.0) {
      throw Error(ErrorCode::DenominatorPole, "Wilson 4F3 denominator vanishes");
    }
    term *= (kd - n) * (double(n) + s - 1.0 + kd) * ((a[0] + kd) * (a[0] + kd) + x2) / den;
    sum += term;
  }
  return rising(ab, n) * rising(ac, n) * rising(ad, n) * sum;
}

Complex rgamma(Complex z) {
  if (auto n = as_integer(z); n && *n <= 0) return Complex(0.0, 0.0);
  return std::exp(-log_gamma(z));
}

Complex legendre_q2(Complex nu, Complex mu, Complex z, const TruncationPolicy& pol) {
  if (z.imag() == 0.0 && z.real() <= 1.0) {
    throw Error(ErrorCode::BranchDomain, "z on the cut (-inf, 1]");
  }
  if (!(std::abs(z) > 1.0)) throw Error(ErrorCode::BranchDomain, "needs |z| > 1");
  const Complex s = nu + mu + 1.0;
  if (auto m = as_integer(s); m && *m <= 0) {
    throw Error(ErrorCode::PoleError, "nu + mu + 1 is a nonpositive integer");
  }
  HypSpec h{{s / 2.0, (s + 1.0) / 2.0}, {nu + 1.5}, 1.0 / (z * z)};
  const EvalResult f = hyp(h, pol);
  const Complex pre = std::sqrt(kPi) * std::exp(kI * kPi * mu) * gamma(s) * rgamma(nu + 1.5) *
                      std::pow(z * z - 1.0, mu / 2.0) /
                      (std::pow(2.0, nu + 1.0) * std::pow(z, s));
  return pre * f.value;
}

Complex jacobi_fn_first(Complex g, Complex a, Complex b, Complex z, const TruncationPolicy& pol) {
  if (auto m = as_integer(a + 1.0); m && *m <= 0) {
    throw Error(ErrorCode::PoleError, "alpha + 1 is a nonpositive integer");
  }
  HypSpec h{{-g, a + b + g + 1.0}, {a + 1.0}, (1.0 - z) / 2.0};
  const EvalResult f = hyp(h, pol);
  // Gamma(a+g+1) / (Gamma(a+1) Gamma(g+1))
  Complex pre;
  if (auto n = as_integer(g); n && *n >= 0) {
    pre = rising(a + 1.0, static_cast<int>(*n)) / rising(Complex(1.0, 0.0), static_cast<int>(*n));
  } else {
    pre = gamma(a + g + 1.0) * rgamma(a + 1.0) * rgamma(g + 1.0);
  }
  return pre * f.value;
}

Complex jacobi_fn_second(Complex g, Complex a, Complex b, Complex z, const TruncationPolicy& pol) {
  if (as_integer(a, 1e-12)) {
    throw Error(ErrorCode::IntegerAlphaUnsupported, "csc(pi alpha) is singular");
  }
  const Complex first = -kPi / 2.0 / std::sin(kPi * a) * jacobi_fn_first(g, a, b, z, pol);
  HypSpec h{{g + 1.0, -a - b - g}, {1.0 - a}, (1.0 - z) / 2.0};
  const EvalResult f = hyp(h, pol);
  const Complex pre = std::pow(2.0, a + b - 1.0) * gamma(a) * gamma(b + g + 1.0) *
                      rgamma(a + b + g + 1.0) / (std::pow(z - 1.0, a) * std::pow(z + 1.0, b));
  return first + pre * f.value;
}

Complex jacobi_fn_second_large(Complex g, Complex a, Complex b, Complex z,
                               const TruncationPolicy& pol) {
  if (z.imag() == 0.0 && z.real() <= 1.0) {
    throw Error(ErrorCode::BranchDomain, "z on the cut (-inf, 1]");
  }
  HypSpec h{{g + 1.0, g + b + 1.0}, {2.0 * g + a + b + 2.0}, 2.0 / (1.0 + z)};
  const EvalResult f = hyp(h, pol);
  const Complex pre = std::exp(std::log(2.0) * (g + a + b) + log_gamma(g + a + 1.0) +
                               log_gamma(g + b + 1.0) - log_gamma(2.0 * g + a + b + 2.0)) *
                      std::pow(z - 1.0, -a) * std::pow(z + 1.0, -b - g - 1.0);
  return pre * f.value;
}

TridiagonalMatrix jacobi_matrix_jacobi(int n, double a, double b) {
  TridiagonalMatrix m;
  m.diag.resize(n);
  m.off.resize(n > 0 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    m.diag[k] = k == 0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    if (k == 1) {
      m.off[0] = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((s * s) * (s + 1.0)));
      continue;
    }
    const double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    m.off[k - 1] = std::sqrt(num / den);
  }
  return m;
}

TridiagonalMatrix jacobi_matrix_laguerre(int n, double a) {
  TridiagonalMatrix m;
  m.diag.resize(n);
  m.off.resize(n > 0 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) m.diag[k] = 2.0 * k + a + 1.0;
  for (int k = 1; k < n; ++k) m.off[k - 1] = std::sqrt(k * (k + a));
  return m;
}

}  // namespace qsk
