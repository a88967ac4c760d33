#pragma once

// Weights of the orthogonality measures, quadrature rules on them, norms,
// and the definite integrals obtained by projecting the expansions.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsk/expansions.hpp"

namespace qsk {

struct WeightSpec {
  Family family;
  std::vector<Complex> params;
  std::optional<QBase> q;
};

struct IntegralResult {
  Complex value;
  int nodes_used = 0;
  /// |I(2N) - I(N)| at the accepted node count.
  double est_error = 0.0;
  /// Integral of |f| against the same measure.
  double abs_integral = 0.0;
};

/// Weight at x. q-families: w(x)/sqrt(1-x^2) is the measure density; the value
/// returned is w itself. Wilson: x on (0, inf). Classical: the Jacobi-type
/// density. Throws DomainViolation outside the open support.
double weight_eval(const WeightSpec& w, double x);

/// Nodes and weights of an n-point Gauss rule for (1-x)^a (1+x)^b on (-1, 1).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_jacobi(int n, double a, double b);
/// n-point Gauss rule for x^a e^{-x} on (0, inf).
GaussRule gauss_laguerre(int n, double a);

using Integrand = std::function<Complex(double)>;

/// Integral of f against the measure of w.
///   q-families: int_{-1}^{1} f(x) w(x)/sqrt(1-x^2) dx via x = cos theta and
///   a trapezoid rule in theta; Wilson: int_0^inf f(x) W(x) dx on (0, 40+extra];
///   Jacobi/Gegenbauer/Chebyshev/Legendre: Gauss-Jacobi; Laguerre: Gauss-Laguerre.
/// Nodes are doubled from `nodes` until two successive values agree to
/// `rel_tol` of the integral of |f| w; NonConvergent otherwise.
IntegralResult integrate(const Integrand& f, const WeightSpec& w, int nodes = 64,
                         double rel_tol = 1e-13, double extra = 0.0);

/// The integral of p_n^2 against the measure, from the closed-form norm.
Complex norm_closed_form(const WeightSpec& w, int n);

/// Weight of the measure a target family is orthogonal against.
WeightSpec weight_for(const PolySpec& spec);

struct OrthogonalityReport {
  int m = 0;
  int n = 0;
  Complex integral;
  Complex expected;
  /// |integral - expected| over the diagonal scale.
  double rel_residual = 0.0;
  bool pass = false;
};

/// Checks <p_m, p_n> against delta_{mn} times the closed-form norm.
/// Off-diagonal bar 1e-10 relative to sqrt(norm_m norm_n), diagonal 1e-8.
OrthogonalityReport verify_orthogonality(const WeightSpec& w, int m, int n);

enum class Corollary {
  AwInt,
  WilsonInt,
  CqJacobiInt,
  CqUltraInt,
  GegenStieltjes,
  Jacobi1mxInt,
  Gegen1mxInt,
  Cheby1mxInt,
  Laguerre1mxInt,
};

struct CorollaryInfo {
  Corollary id;
  const char* name;
  bool needs_q;
  std::vector<std::string> params;
};

const CorollaryInfo& corollary_info(Corollary c);
std::optional<Corollary> corollary_from_name(const std::string& name);
const std::vector<Corollary>& all_corollaries();

struct CorollaryReport {
  Corollary id;
  int n = 0;
  Complex quadrature;
  Complex closed_form;
  double rel_residual = 0.0;
  int nodes_used = 0;
  double est_error = 0.0;
  bool pass = false;
};

/// Integrates the left side of the corollary at degree n and compares it
/// with the closed form. Bar 1e-8 relative; a vanishing closed form is
/// measured against the integral of |integrand|.
CorollaryReport verify_integral_corollary(Corollary c, int n, const ParamMap& params,
                                          const std::optional<QBase>& q);

}  // namespace qsk
