#include "qsk/hyperseries.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace qsk {

namespace {

constexpr double kPoleTol = 1e-13;

// Terms and partial sums carry extended precision; cancelling series lose
// far less this way.
using Wide = std::complex<long double>;

Wide wide(Complex z) { return Wide(z.real(), z.imag()); }
Complex narrow(Wide z) {
  return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

struct SeriesPlan {
  std::optional<long> stop;
  // asymptotic |term ratio|, used as a floor on the observed ratio
  double asym_ratio = 0.0;
  // positive parametric excess for unit-argument p=q+1 series
  double unit_excess = 0.0;
};

template <class Ratio>
EvalResult sum_series(Ratio&& ratio, const SeriesPlan& plan, const TruncationPolicy& pol) {
  EvalResult r;
  Wide term(1.0L, 0.0L);
  Wide sum(1.0L, 0.0L);
  double abs_sum = 1.0;

  if (plan.stop) {
    const long n = *plan.stop;
    if (n + 1 > pol.max_terms) {
      throw Error(ErrorCode::NonConvergent, "terminating series longer than max_terms");
    }
    for (long k = 0; k < n; ++k) {
      term *= ratio(k);
      sum += term;
      abs_sum += static_cast<double>(std::abs(term));
    }
    r.value = narrow(sum);
    r.terms_used = static_cast<int>(n + 1);
    r.abs_sum = abs_sum;
    return r;
  }

  long k = 0;
  double tail = std::numeric_limits<double>::infinity();
  while (true) {
    if (k + 1 >= pol.max_terms) {
      r.converged = false;
      break;
    }
    const Wide next = term * ratio(k);
    const double prev_mag = static_cast<double>(std::abs(term));
    const double mag = static_cast<double>(std::abs(next));
    term = next;
    sum += term;
    abs_sum += mag;
    ++k;
    if (mag == 0.0) {
      tail = 0.0;
      break;
    }
    const double rr = std::max(mag / prev_mag, plan.asym_ratio);
    if (plan.unit_excess > 0.0) {
      tail = mag * static_cast<double>(k + 1) / plan.unit_excess;
    } else if (rr < 1.0) {
      tail = mag * rr / (1.0 - rr);
    } else {
      tail = std::numeric_limits<double>::infinity();
    }
    const double scale = std::max(static_cast<double>(std::abs(sum)), pol.abs_floor);
    if (tail <= pol.term_eps * scale || (rr < 1.0 && mag <= pol.abs_floor)) break;
  }
  r.value = narrow(sum);
  r.terms_used = static_cast<int>(k + 1);
  r.tail_bound = tail;
  r.abs_sum = abs_sum;
  return r;
}

}  // namespace

std::optional<long> phi_termination(const PhiSpec& spec) {
  std::optional<long> best;
  const double lq = std::log(spec.q.modulus());
  for (const Complex& a : spec.num) {
    const double m = std::abs(a);
    if (m == 0.0) continue;
    const double nd = std::round(std::log(m) / lq * -1.0);
    if (nd < 0.0 || nd > 1e7) continue;
    const long n = static_cast<long>(nd);
    if (std::abs(a * spec.q.pow(static_cast<int>(n)) - 1.0) <= 1e-10) {
      if (!best || n < *best) best = n;
    }
  }
  return best;
}

std::optional<long> hyp_termination(const HypSpec& spec) {
  std::optional<long> best;
  for (const Complex& a : spec.num) {
    if (auto n = as_integer(a, 1e-12); n && *n <= 0) {
      if (!best || -*n < *best) best = -*n;
    }
  }
  return best;
}

EvalResult phi(const PhiSpec& spec, const TruncationPolicy& pol) {
  pol.validate();
  const long r = static_cast<long>(spec.num.size());
  const long s = static_cast<long>(spec.den.size());
  const long power = 1 + s - r;
  const Complex q = spec.q.value();
  const auto stop = phi_termination(spec);

  SeriesPlan plan;
  plan.stop = stop;
  if (!stop && spec.z != Complex(0.0, 0.0)) {
    if (power < 0) {
      throw Error(ErrorCode::NonConvergent,
                  "r > s+1 basic series diverges unless it terminates");
    }
    if (power == 0) {
      if (!(std::abs(spec.z) < 1.0)) {
        throw Error(ErrorCode::NonConvergent, "r = s+1 basic series needs |z| < 1");
      }
      plan.asym_ratio = std::abs(spec.z);
    }
  }
  if (spec.z == Complex(0.0, 0.0)) {
    EvalResult one;
    one.terms_used = 1;
    one.abs_sum = 1.0;
    return one;
  }

  // denominator poles within the summed range
  const long scan = stop ? *stop : std::min<long>(pol.max_terms, 4096);
  for (const Complex& b : spec.den) {
    Complex bqk = b;
    for (long k = 0; k < scan; ++k) {
      if (std::abs(1.0 - bqk) <= kPoleTol) {
        throw Error(ErrorCode::DenominatorPole,
                    "denominator (b;q)_k vanishes at k = " + std::to_string(k + 1));
      }
      bqk *= q;
      if (std::abs(bqk) < 1e-3) break;
    }
  }

  std::vector<Wide> aq(spec.num.begin(), spec.num.end());
  std::vector<Wide> bq(spec.den.begin(), spec.den.end());
  const Wide qw = wide(q);
  const Wide zw = wide(spec.z);
  const Wide one(1.0L, 0.0L);
  Wide qk = one;
  auto ratio = [&](long) {
    Wide num = one;
    Wide den = one;
    for (Wide& a : aq) {
      num *= one - a;
      a *= qw;
    }
    for (Wide& b : bq) {
      den *= one - b;
      b *= qw;
    }
    Wide sign_pow = one;
    for (long p = 0; p < power; ++p) sign_pow *= -qk;
    for (long p = power; p < 0; ++p) sign_pow /= -qk;
    qk *= qw;
    den *= one - qk;
    return num / den * sign_pow * zw;
  };
  return sum_series(ratio, plan, pol);
}

EvalResult hyp(const HypSpec& spec, const TruncationPolicy& pol) {
  pol.validate();
  const long p = static_cast<long>(spec.num.size());
  const long qn = static_cast<long>(spec.den.size());
  const auto stop = hyp_termination(spec);

  if (spec.z == Complex(0.0, 0.0)) {
    EvalResult one;
    one.terms_used = 1;
    one.abs_sum = 1.0;
    return one;
  }

  SeriesPlan plan;
  plan.stop = stop;
  if (!stop) {
    if (p > qn + 1) {
      throw Error(ErrorCode::NonConvergent, "p > q+1 series diverges unless it terminates");
    }
    if (p == qn + 1) {
      const double az = std::abs(spec.z);
      if (az > 1.0) throw Error(ErrorCode::NonConvergent, "p = q+1 series needs |z| <= 1");
      if (az == 1.0) {
        Complex excess(0.0, 0.0);
        for (const Complex& b : spec.den) excess += b;
        for (const Complex& a : spec.num) excess -= a;
        if (spec.z != Complex(1.0, 0.0) || !(excess.real() > 0.0)) {
          throw Error(ErrorCode::NonConvergent,
                      "unit-argument series needs positive parametric excess");
        }
        plan.unit_excess = excess.real();
      }
      plan.asym_ratio = std::min(az, 1.0);
      if (az == 1.0) plan.asym_ratio = 0.0;
    }
  }

  for (const Complex& b : spec.den) {
    if (auto m = as_integer(b, 1e-14); m && *m <= 0) {
      if (!stop || -*m < *stop) {
        throw Error(ErrorCode::DenominatorPole,
                    "denominator (b)_k vanishes at k = " + std::to_string(-*m + 1));
      }
    }
  }

  auto ratio = [&](long k) {
    const long double kd = static_cast<long double>(k);
    Wide num(1.0L, 0.0L);
    Wide den(kd + 1.0L, 0.0L);
    for (const Complex& a : spec.num) num *= wide(a) + kd;
    for (const Complex& b : spec.den) den *= wide(b) + kd;
    return num / den * wide(spec.z);
  };
  return sum_series(ratio, plan, pol);
}

EvalResult vwp_phi87(Complex A, const std::array<Complex, 5>& b, const QBase& q, Complex z,
                     const TruncationPolicy& pol) {
  pol.validate();
  const Complex qv = q.value();
  PhiSpec probe{{A, b[0], b[1], b[2], b[3], b[4]}, {}, q, z};
  const auto stop = phi_termination(probe);
  if (!stop && !(std::abs(z) < 1.0)) {
    throw Error(ErrorCode::NonConvergent, "very-well-poised 8phi7 needs |z| < 1");
  }
  if (std::abs(1.0 - A) <= kPoleTol) {
    throw Error(ErrorCode::DenominatorPole, "very-well-poised series with A = 1");
  }
  std::array<Complex, 5> den;
  for (std::size_t i = 0; i < 5; ++i) {
    if (b[i] == Complex(0.0, 0.0)) {
      throw Error(ErrorCode::DenominatorPole, "very-well-poised parameter is zero");
    }
    den[i] = qv * A / b[i];
  }

  SeriesPlan plan;
  plan.stop = stop;
  plan.asym_ratio = std::abs(z);

  Complex Aqk = A;
  Complex qk(1.0, 0.0);
  std::array<Complex, 5> bqk = b;
  std::array<Complex, 5> dqk = den;
  auto ratio = [&](long) {
    // (1 - A q^{2k+2}) / (1 - A q^{2k}) carries the collapsed pair
    const Complex lead_now = 1.0 - Aqk * qk;
    Complex num = (1.0 - Aqk);
    Complex dd(1.0, 0.0);
    for (std::size_t i = 0; i < 5; ++i) {
      num *= 1.0 - bqk[i];
      dd *= 1.0 - dqk[i];
      bqk[i] *= qv;
      dqk[i] *= qv;
    }
    Aqk *= qv;
    qk *= qv;
    const Complex lead_next = 1.0 - Aqk * qk;
    dd *= 1.0 - qk;
    if (std::abs(dd) <= pol.abs_floor || std::abs(lead_now) <= pol.abs_floor) {
      throw Error(ErrorCode::DenominatorPole, "very-well-poised denominator vanishes");
    }
    return wide(num / dd * (lead_next / lead_now) * z);
  };
  return sum_series(ratio, plan, pol);
}

EvalResult vwp_W(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f,
                 const TruncationPolicy& pol) {
  HypSpec spec{{a, a / 2.0 + 1.0, b, c, d, e, f},
               {a / 2.0, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d, 1.0 + a - e, 1.0 + a - f},
               Complex(1.0, 0.0)};
  return hyp(spec, pol);
}

}  // namespace qsk
