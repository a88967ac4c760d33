#include "qsk/qcore.hpp"

#include <array>
#include <cmath>

namespace qsk {

QBase::QBase(Complex q) : q_(q) {
  const double m = std::abs(q);
  if (!(m > 0.0 && m < 1.0)) {
    throw Error(ErrorCode::DomainViolation, "base must satisfy 0 < |q| < 1");
  }
}

Complex QBase::pow(int n) const {
  if (n < 0) return 1.0 / pow(-n);
  Complex result(1.0, 0.0);
  Complex base = q_;
  unsigned e = static_cast<unsigned>(n);
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Complex QBase::pow(Complex e) const {
  if (auto n = as_integer(e); n && std::abs(*n) < (1L << 30)) return pow(static_cast<int>(*n));
  return std::exp(e * std::log(q_));
}

void TruncationPolicy::validate() const {
  if (!(term_eps > 0.0) || !(abs_floor >= 0.0) || max_terms < 1 || !(product_eps > 0.0)) {
    throw Error(ErrorCode::DomainViolation, "invalid truncation policy");
  }
}

std::optional<long> as_integer(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return std::nullopt;
  const double r = std::round(z.real());
  if (!std::isfinite(r) || std::abs(z.real() - r) > tol * std::max(1.0, std::abs(r))) {
    return std::nullopt;
  }
  return static_cast<long>(r);
}

Complex qpoch(Complex a, const QBase& q, int n) {
  Complex prod(1.0, 0.0);
  Complex aqk = a;
  for (int k = 0; k < n; ++k) {
    prod *= 1.0 - aqk;
    aqk *= q.value();
  }
  return prod;
}

EvalResult qpoch_infinite(Complex a, const QBase& q, const TruncationPolicy& pol) {
  EvalResult r;
  double mag = std::abs(a);
  if (mag == 0.0) return r;
  Complex prod(1.0, 0.0);
  Complex aqk = a;
  int k = 0;
  while (mag >= pol.product_eps) {
    if (k >= pol.max_terms) {
      r.converged = false;
      break;
    }
    prod *= 1.0 - aqk;
    aqk *= q.value();
    mag = std::abs(aqk);
    ++k;
  }
  r.value = prod;
  r.terms_used = k;
  // |log prod_{j>=N}(1 - a q^j)| <= delta / ((1-|q|)(1-delta)), delta = |a||q|^N
  const double delta = std::min(mag, 0.5);
  const double log_tail = delta / ((1.0 - q.modulus()) * (1.0 - delta));
  r.tail_bound = std::abs(prod) * std::expm1(log_tail);
  return r;
}

Complex qpoch_inf(Complex a, const QBase& q, const TruncationPolicy& pol) {
  EvalResult r = qpoch_infinite(a, q, pol);
  if (!r.converged) throw Error(ErrorCode::NonConvergent, "infinite q-product hit max_terms");
  return r.value;
}

Complex qpoch_pair_inf(Complex a, Complex x, const QBase& q, const TruncationPolicy& pol) {
  Complex prod(1.0, 0.0);
  Complex aqk = a;
  int k = 0;
  while (std::abs(aqk) >= pol.product_eps) {
    if (k++ >= pol.max_terms) {
      throw Error(ErrorCode::NonConvergent, "infinite q-product hit max_terms");
    }
    prod *= 1.0 - 2.0 * aqk * x + aqk * aqk;
    aqk *= q.value();
  }
  return prod;
}

EvalResult qpoch_general(Complex a, const QBase& q, Complex beta, const TruncationPolicy& pol) {
  EvalResult r;
  if (auto n = as_integer(beta); n && std::abs(*n) <= pol.max_terms) {
    if (*n >= 0) {
      r.value = qpoch(a, q, static_cast<int>(*n));
      r.terms_used = static_cast<int>(*n);
      return r;
    }
    // (a;q)_{-m} = 1/(a q^{-m};q)_m
    const int m = static_cast<int>(-*n);
    const Complex den = qpoch(a * q.pow(-m), q, m);
    if (std::abs(den) <= pol.abs_floor) {
      throw Error(ErrorCode::DivisionByVanishingProduct, "(a q^beta;q)_inf vanishes");
    }
    r.value = 1.0 / den;
    r.terms_used = m;
    return r;
  }
  // factor-wise ratio; the two infinite products alone underflow as |q| -> 1
  Complex aqk = a;
  Complex bqk = a * q.pow(beta);
  Complex prod(1.0, 0.0);
  int k = 0;
  double mag = std::max(std::abs(aqk), std::abs(bqk));
  while (mag >= pol.product_eps) {
    if (k >= pol.max_terms) {
      r.converged = false;
      break;
    }
    const Complex den = 1.0 - bqk;
    if (std::abs(den) <= pol.abs_floor) {
      throw Error(ErrorCode::DivisionByVanishingProduct, "(a q^beta;q)_inf vanishes");
    }
    prod *= (1.0 - aqk) / den;
    aqk *= q.value();
    bqk *= q.value();
    mag = std::max(std::abs(aqk), std::abs(bqk));
    ++k;
  }
  r.value = prod;
  r.terms_used = k;
  const double delta = std::min(mag, 0.5);
  r.tail_bound = std::abs(prod) * std::expm1(2.0 * delta / ((1.0 - q.modulus()) * (1.0 - delta)));
  return r;
}

Complex qnumber(Complex z, const QBase& q) {
  return (1.0 - q.pow(z)) / (1.0 - q.value());
}

Complex qfactorial(int n, const QBase& q) {
  Complex r(1.0, 0.0);
  for (int k = 1; k <= n; ++k) r *= qnumber(Complex(k, 0.0), q);
  return r;
}

EvalResult qgamma(Complex x, const QBase& q, const TruncationPolicy& pol) {
  if (auto n = as_integer(x); n && *n <= 0) {
    throw Error(ErrorCode::PoleError, "q-gamma pole at nonpositive integer");
  }
  const EvalResult num = qpoch_infinite(q.value(), q, pol);
  const EvalResult den = qpoch_infinite(q.pow(x), q, pol);
  if (std::abs(den.value) <= pol.abs_floor) {
    throw Error(ErrorCode::PoleError, "(q^x;q)_inf vanishes");
  }
  EvalResult r;
  r.value = std::pow(1.0 - q.value(), 1.0 - x) * num.value / den.value;
  r.terms_used = std::max(num.terms_used, den.terms_used);
  r.converged = num.converged && den.converged;
  r.tail_bound = std::abs(r.value) *
                 (num.tail_bound / std::abs(num.value) + den.tail_bound / std::abs(den.value));
  return r;
}

namespace {

bool is_gamma_pole(Complex z) {
  auto n = as_integer(z);
  return n && *n <= 0;
}

// log sin(pi z), stable for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex w = kPi * z;
  const Complex i(0.0, 1.0);
  if (std::abs(w.imag()) < 30.0) return std::log(std::sin(w));
  if (w.imag() > 0.0) {
    return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(i / 2.0);
  }
  return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) - std::log(2.0 * i);
}

Complex log_gamma_stirling(Complex z) {
  // B_{2k} / (2k (2k-1))
  static constexpr std::array<double, 10> c = {
      1.0 / 12.0,        -1.0 / 360.0,          1.0 / 1260.0,     -1.0 / 1680.0,
      1.0 / 1188.0,      -691.0 / 360360.0,     1.0 / 156.0,      -3617.0 / 122400.0,
      43867.0 / 244188.0, -174611.0 / 125400.0};
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series(0.0, 0.0);
  Complex p = inv;
  for (double ck : c) {
    series += ck * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_gamma_pole(z)) throw Error(ErrorCode::PoleError, "gamma pole at nonpositive integer");
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  Complex shift(1.0, 0.0);
  while (std::abs(z) < 15.0) {
    shift *= z;
    z += 1.0;
  }
  return log_gamma_stirling(z) - std::log(shift);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex gamma_ratio(Complex a, Complex b) {
  if (is_gamma_pole(a)) throw Error(ErrorCode::PoleError, "gamma pole in numerator");
  if (is_gamma_pole(b)) return Complex(0.0, 0.0);
  return std::exp(log_gamma(a) - log_gamma(b));
}

Complex rising(Complex a, int n) {
  Complex r(1.0, 0.0);
  for (int k = 0; k < n; ++k) r *= a + static_cast<double>(k);
  return r;
}

Complex pochhammer(Complex alpha, Complex beta) {
  if (auto m = as_integer(beta); m && std::abs(*m) < (1L << 20)) {
    if (*m >= 0) return rising(alpha, static_cast<int>(*m));
    const Complex den = rising(alpha + beta, static_cast<int>(-*m));
    if (den == Complex(0.0, 0.0)) throw Error(ErrorCode::PoleError, "(alpha)_beta pole");
    return 1.0 / den;
  }
  if (is_gamma_pole(alpha)) throw Error(ErrorCode::PoleError, "Gamma(alpha) is infinite");
  if (beta.real() < 0.0) return 1.0 / pochhammer(alpha + beta, -beta);
  return gamma_ratio(alpha + beta, alpha);
}

}  // namespace qsk
