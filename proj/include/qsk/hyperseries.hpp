#pragma once

// Basic hypergeometric r-phi-s, generalized p-F-q, and Bailey's
// very-well-poised W function.

#include <array>
#include <optional>
#include <vector>

#include "qsk/qcore.hpp"

namespace qsk {

struct PhiSpec {
  std::vector<Complex> num;
  std::vector<Complex> den;
  QBase q;
  Complex z;
};

struct HypSpec {
  std::vector<Complex> num;
  std::vector<Complex> den;
  Complex z;
};

/// Termination index n when some numerator equals q^{-n}.
std::optional<long> phi_termination(const PhiSpec& spec);

/// Termination index n when some numerator equals -n.
std::optional<long> hyp_termination(const HypSpec& spec);

/// r-phi-s with the (-1)^k q^{k(k-1)/2} factor raised to 1+s-r.
/// Throws NonConvergent (divergent, non-terminating) or DenominatorPole.
EvalResult phi(const PhiSpec& spec, const TruncationPolicy& pol = {});

/// Generalized hypergeometric p-F-q.
EvalResult hyp(const HypSpec& spec, const TruncationPolicy& pol = {});

/// Very-well-poised 8-phi-7
///   8phi7(A, q A^{1/2}, -q A^{1/2}, b1..b5; A^{1/2}, -A^{1/2}, qA/b1..qA/b5; q, z)
/// summed with the square-root pair collapsed to (1 - A q^{2k})/(1 - A).
EvalResult vwp_phi87(Complex A, const std::array<Complex, 5>& b, const QBase& q, Complex z,
                     const TruncationPolicy& pol = {});

/// Bailey's W(a; b, c, d, e, f), a very-well-poised 7F6 at unit argument.
EvalResult vwp_W(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f,
                 const TruncationPolicy& pol = {});

}  // namespace qsk
