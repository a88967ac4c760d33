#pragma once

// Expansion coefficients of the generalized generating functions, addressed
// by identity id. Every coefficient already contains its t^n, Neumann factor
// and prefactor, so each identity reads LHS = sum_n coefficient(n) * poly_n.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsk/polyfamilies.hpp"

namespace qsk {

enum class IdentityId {
  AwRogers,
  CqJacobiRogers,
  RogersGamma,
  CqHermite,
  ChebyshevQ,
  CqLegendre,
  WilsonLimit,
  GegenGfGeneral,
  JacobiPow,
  GegenPow,
  ChebyPow,
  LegendrePow,
  Heine,
  HeineSqrt,
  Jacobi1mx,
  Gegen1mx,
  Cheby1mx,
  Laguerre1mx,
  RogersGf,
  GegenGf,
  CqHermiteGf,
};

/// Where the expansion variable lives.
enum class ArgumentKind {
  Interval,   // x in [-1, 1]
  HalfLine,   // x in (0, inf), Laguerre
  WilsonLine  // x real, polynomial in x^2
};

using ParamMap = std::map<std::string, Complex>;

struct IdentityInfo {
  IdentityId id;
  const char* name;
  bool needs_q;
  std::vector<std::string> params;
  Family target;
  ArgumentKind argument;
};

const IdentityInfo& identity_info(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);
const std::vector<IdentityId>& all_identities();

struct CoeffRequest {
  IdentityId id;
  int n = 0;
  ParamMap params;
  std::optional<QBase> q;
  TruncationPolicy pol;
  /// Sum embedded very-well-poised 8phi7 series with the square-root pair
  /// collapsed instead of the literal parameter list.
  bool vwp_rewrite = false;
};

/// Throws DomainViolation when a parameter is missing or out of range.
void check_request(IdentityId id, const ParamMap& params, const std::optional<QBase>& q);

EvalResult coefficient(const CoeffRequest& req);

/// Polynomial family instance the coefficients multiply.
PolySpec target_spec(IdentityId id, const ParamMap& params, const std::optional<QBase>& q);

/// Left-hand side at the expansion variable.
EvalResult lhs_eval(IdentityId id, const ParamMap& params, const std::optional<QBase>& q,
                    Complex x, const TruncationPolicy& pol = {});

/// Coefficient of C_{n-2k}(x; gamma|q) in C_n(x; beta|q).
Complex connection_coeff(int n, int k, Complex beta, Complex gamma, const QBase& q);

/// 2phi1(a, b; qa/b; q, q t^2).
EvalResult quadratic_lhs(Complex a, Complex b, Complex t, const QBase& q,
                         const TruncationPolicy& pol = {});

/// Product prefactor times the very-well-poised 8phi7 in q t.
EvalResult quadratic_rhs(Complex a, Complex b, Complex t, const QBase& q,
                         const TruncationPolicy& pol = {}, bool vwp_rewrite = false);

/// Classical Gauss quadratic transformation limit, both signs of t:
/// (1 -+ t)^{-2a} 2F1(a, a-b+1/2; 2a-2b+1; +-4t/(1 +- t)^2).
EvalResult gauss_quadratic_rhs(Complex a, Complex b, Complex t, const TruncationPolicy& pol = {});

}  // namespace qsk
