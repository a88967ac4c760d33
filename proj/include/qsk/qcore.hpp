#pragma once

// Scalars and q-calculus primitives: q-shifted factorials, q-numbers,
// q-gamma, complex gamma and generalized Pochhammer symbols.

#include <complex>
#include <optional>

#include "qsk/error.hpp"

namespace qsk {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Base of a q-series. Always satisfies 0 < |q| < 1.
class QBase {
 public:
  explicit QBase(Complex q);
  explicit QBase(double q) : QBase(Complex(q, 0.0)) {}

  Complex value() const noexcept { return q_; }
  double modulus() const noexcept { return std::abs(q_); }
  bool is_real() const noexcept { return q_.imag() == 0.0; }

  /// Principal power q^e = exp(e log q). Integer exponents are formed by
  /// repeated multiplication so that q^n is exact for dyadic q.
  Complex pow(Complex e) const;
  Complex pow(int n) const;

 private:
  Complex q_;
};

/// Stopping rules shared by every infinite sum and product.
struct TruncationPolicy {
  double term_eps = 1e-16;
  double abs_floor = 1e-300;
  int max_terms = 100000;
  double product_eps = 1e-18;

  /// Throws DomainViolation when a field is out of range.
  void validate() const;
};

struct EvalResult {
  Complex value{1.0, 0.0};
  int terms_used = 0;
  bool converged = true;
  /// Estimated absolute truncation error of `value`.
  double tail_bound = 0.0;
  /// Sum of the moduli of the summed terms (series only); abs_sum / |value|
  /// measures cancellation.
  double abs_sum = 0.0;
};

/// Is `z` (numerically) a real integer? Returns it if so.
std::optional<long> as_integer(Complex z, double tol = 0.0);

// q-shifted factorials ------------------------------------------------------

/// (a;q)_n, exact finite product.
Complex qpoch(Complex a, const QBase& q, int n);

/// (a;q)_inf, truncated when |a||q|^N < product_eps.
EvalResult qpoch_infinite(Complex a, const QBase& q, const TruncationPolicy& pol = {});

/// Value of qpoch_infinite; throws NonConvergent if the product did not settle.
Complex qpoch_inf(Complex a, const QBase& q, const TruncationPolicy& pol = {});

/// (a e^{i theta}, a e^{-i theta}; q)_inf with x = cos theta, formed from the
/// real-quadratic factors 1 - 2 a x q^k + a^2 q^{2k} so that no branch of
/// theta is involved.
Complex qpoch_pair_inf(Complex a, Complex x, const QBase& q, const TruncationPolicy& pol = {});

/// (a;q)_beta = (a;q)_inf / (a q^beta;q)_inf. Nonnegative integer beta uses
/// the finite product.
EvalResult qpoch_general(Complex a, const QBase& q, Complex beta, const TruncationPolicy& pol = {});

/// [z]_q = (1 - q^z)/(1 - q).
Complex qnumber(Complex z, const QBase& q);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
Complex qfactorial(int n, const QBase& q);

/// Gamma_q(x) = (1-q)^{1-x} (q;q)_inf / (q^x;q)_inf.
EvalResult qgamma(Complex x, const QBase& q, const TruncationPolicy& pol = {});

// classical gamma and Pochhammer ---------------------------------------------

/// log Gamma(z) on any branch (only exp(log_gamma) is meaningful). Stirling
/// series after upward shifting, reflection for Re z < 1/2.
Complex log_gamma(Complex z);

/// Gamma(z); PoleError at nonpositive integers.
Complex gamma(Complex z);

/// Gamma(a)/Gamma(b) evaluated in log space.
Complex gamma_ratio(Complex a, Complex b);

/// Rising factorial (a)_n for integer n >= 0.
Complex rising(Complex a, int n);

/// (alpha)_beta = Gamma(alpha+beta)/Gamma(alpha); for Re beta < 0 the
/// reciprocal form 1/(alpha+beta)_{-beta}. Integer beta uses products.
Complex pochhammer(Complex alpha, Complex beta);

}  // namespace qsk
