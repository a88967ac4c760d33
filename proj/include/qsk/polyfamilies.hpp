#pragma once

// Orthogonal polynomial families of the q-Askey and Askey schemes used by the
// expansions, plus Legendre and Jacobi functions of the first/second kind.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsk/hyperseries.hpp"
#include "qsk/qcore.hpp"

namespace qsk {

enum class Family {
  AskeyWilson,
  CqJacobi,
  CqUltraspherical,
  CqHermite,
  CqLegendre,
  Wilson,
  Jacobi,
  Gegenbauer,
  ChebyshevT,
  Legendre,
  Laguerre,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
bool is_q_family(Family f);
int family_arity(Family f);
const std::vector<Family>& all_families();

/// Family tag plus parameters:
///   AskeyWilson, Wilson: a1..a4     CqJacobi: alpha, gamma (rescaled)
///   CqUltraspherical: beta          Jacobi: alpha, beta
///   Gegenbauer: mu                  Laguerre: alpha
struct PolySpec {
  Family family;
  std::vector<Complex> params;
  std::optional<QBase> q;

  /// Throws ParameterDomain on arity or base mismatch.
  void validate() const;
};

/// e^{i theta} for x = cos theta, chosen with |e^{i theta}| >= 1 (Im >= 0 on
/// the unit circle).
Complex exp_i_theta(Complex x);

/// Degree-n member at x (for Wilson, x is the variable whose square enters).
/// Uses the defining hypergeometric sum unless it cancels badly, in which case
/// the three-term recurrence is used.
Complex poly_eval(const PolySpec& spec, int n, Complex x, const TruncationPolicy& pol = {});

/// Defining hypergeometric sum only; abs_sum reports its cancellation.
EvalResult poly_eval_series(const PolySpec& spec, int n, Complex x,
                            const TruncationPolicy& pol = {});

Complex poly_eval_recurrence(const PolySpec& spec, int n, Complex x);

/// Degrees 0..N at x by the three-term recurrence.
std::vector<Complex> poly_sequence(const PolySpec& spec, int N, Complex x);

/// Wilson polynomial W_n(x2; a) from its terminating 4F3.
Complex wilson_eval(int n, Complex x2, const std::array<Complex, 4>& a);

/// Legendre function of the second kind Q_nu^mu(z), |z| > 1, from the
/// 2F1(1/z^2) representation.
Complex legendre_q2(Complex nu, Complex mu, Complex z, const TruncationPolicy& pol = {});

/// Jacobi function of the first kind P_gamma^{(alpha,beta)}(z).
Complex jacobi_fn_first(Complex gamma, Complex alpha, Complex beta, Complex z,
                        const TruncationPolicy& pol = {});

/// Jacobi function of the second kind via the connection with P near z = 1
/// (two 2F1 blocks in (1-z)/2). Throws IntegerAlphaUnsupported for integer alpha.
Complex jacobi_fn_second(Complex gamma, Complex alpha, Complex beta, Complex z,
                         const TruncationPolicy& pol = {});

/// Jacobi function of the second kind from the large-argument 2F1(2/(1+z)),
/// free of cancellation for z > 1 at any degree.
Complex jacobi_fn_second_large(Complex gamma, Complex alpha, Complex beta, Complex z,
                               const TruncationPolicy& pol = {});

/// Symmetric tridiagonal (Jacobi) matrix of the orthonormal Jacobi family on
/// [-1,1] with weight (1-x)^a (1+x)^b: diagonal and off-diagonal entries.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> off;
};
TridiagonalMatrix jacobi_matrix_jacobi(int n, double a, double b);
TridiagonalMatrix jacobi_matrix_laguerre(int n, double a);

/// 1/Gamma(z), zero at the poles of Gamma.
Complex rgamma(Complex z);

}  // namespace qsk
