#pragma once

// Checks an identity numerically over a grid of parameters and arguments and
// reduces the residuals to a single report.

#include <string>
#include <vector>

#include "qsk/expansions.hpp"

namespace qsk {

/// A parameter sample may carry the base under the key "q" (real part used).
struct GridSpec {
  std::vector<double> x_points;
  std::vector<ParamMap> param_samples;
  int N_terms = 60;
  double tol_rel = 1e-10;

  /// Throws DomainViolation on an empty grid, N_terms < 1 or tol_rel <= 0.
  void validate() const;
};

struct VerificationReport {
  std::string id;
  int samples = 0;
  double max_rel_residual = 0.0;
  /// Parameters of the worst sample, with the argument under "x".
  ParamMap worst_point;
  int N_terms_used = 0;
  double converged_fraction = 1.0;
  double tol_rel = 0.0;
  bool pass = false;
  /// First few per-sample failures, verbatim.
  std::vector<std::string> errors;
  /// Error at each base, for limit chains.
  std::vector<double> error_sequence;
};

/// Running max/fraction reduction. Ties keep the earliest sample, so the
/// result depends only on the order samples are added.
class ReportBuilder {
 public:
  ReportBuilder(std::string id, double tol_rel, int n_terms = 0);

  void add(double residual, const ParamMap& where, bool converged = true);
  void fail(const ParamMap& where, const std::string& what);
  void absorb(const VerificationReport& other);
  VerificationReport finish() const;

 private:
  VerificationReport r_;
  int converged_ = 0;
};

/// LHS against the partial sum of N_terms+1 terms at every sample and x.
VerificationReport verify_expansion(IdentityId id, const GridSpec& grid,
                                    const TruncationPolicy& pol = {}, bool vwp_rewrite = false);

/// Both sides of the connection relation for every n <= n_max at every x,
/// relative to the larger of |LHS| and the sum of |terms| on the right.
VerificationReport verify_connection(int n_max, Complex beta, Complex gamma, double q,
                                     const std::vector<double>& x_points, double tol_rel = 1e-11);

/// 2phi1 side against the product times 8phi7 side, plus the t -> -t
/// invariance of the right side and agreement of the two 8phi7 summations.
VerificationReport verify_quadratic_transform(Complex a, Complex b, Complex t, double q,
                                              const TruncationPolicy& pol = {},
                                              double tol_rel = 1e-10);

enum class LimitChain {
  Pochhammer,       // (q^a;q)_b / (1-q)^b -> (a)_b
  CqJacobi,         // P_n^{(q^{a+1/2}, q^{g+1/2})}(x|q) -> P_n^{(a,g)}(x)
  CqLegendre,       // P_n(x|q) -> P_n(x)
  CqUltra,          // C_n(x; q^l|q) -> C_n^l(x)
  QuadraticGauss,   // 2phi1(q^a, q^b; q^{a-b+1}; q, q t^2) -> quadratic Gauss form
};

const char* limit_chain_name(LimitChain c);

struct LimitSetup {
  ParamMap params;                // chain parameters (a, b / alpha, gamma / lambda / a, b, t)
  int n_max = 6;
  std::vector<double> x_points;   // polynomial chains
};

/// Max error over n <= n_max and x at each base, relative to the target's
/// sup over the x grid for polynomial chains. Passes when the sequence
/// strictly decreases and its last entry is at most tol_final.
VerificationReport verify_limit_chain(LimitChain chain, const std::vector<double>& q_seq,
                                      const LimitSetup& setup, double tol_final = 1e-3);

/// 1/(z-x) (or 1/sqrt(z-x)) against its Legendre (Chebyshev) series on
/// 19 points of [-0.9, 0.9].
VerificationReport verify_heine_classical(double z, int N, bool reciprocal_sqrt,
                                          double tol_rel = 1e-10);

/// Extracts the base from a sample ("q" key), if any.
std::optional<QBase> sample_base(const ParamMap& sample);

}  // namespace qsk
