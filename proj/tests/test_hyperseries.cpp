#include <cmath>

#include "doctest.h"
#include "qsk/hyperseries.hpp"
#include "qsk/polyfamilies.hpp"

using namespace qsk;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("zero argument gives one") {
  const QBase q(0.5);
  CHECK(phi(PhiSpec{{0.3, 0.4}, {0.6}, q, 0.0}).value == Complex(1.0, 0.0));
  CHECK(hyp(HypSpec{{0.3, 0.4}, {0.6}, 0.0}).value == Complex(1.0, 0.0));
}

TEST_CASE("basic series against independent sums") {
  const QBase q(0.5);
  CHECK(rel(phi(PhiSpec{{0.3, 0.4}, {0.6}, q, 0.5}).value, 3.5188319804502322) < 1e-14);
  CHECK(rel(phi(PhiSpec{{0.4}, {}, q, 0.5}).value, 2.2520524674881487) < 1e-14);
  CHECK(rel(phi(PhiSpec{{0.4}, {}, q, 0.5}).value, qpoch_inf(0.2, q) / qpoch_inf(0.5, q)) < 1e-14);
  const EvalResult r =
      phi(PhiSpec{{Complex(0.3, 0.1), 0.5, -0.2}, {0.7, Complex(0.1, -0.4)}, QBase(0.6), Complex(0.2, 0.3)});
  CHECK(rel(r.value, Complex(2.2290934612335235, 1.6639994779701325)) < 1e-14);
  CHECK(r.converged);
}

TEST_CASE("terminating basic series uses exactly n + 1 terms") {
  const QBase q(0.5);
  for (int n : {0, 1, 4, 9}) {
    const EvalResult r = phi(PhiSpec{{q.pow(-n), 0.3, 0.2}, {0.6, 0.7}, q, q.value()});
    CHECK(r.terms_used == n + 1);
  }
  for (int n : {0, 2, 5}) {
    const EvalResult r = hyp(HypSpec{{double(-n), 0.4}, {1.3}, 2.5});
    CHECK(r.terms_used == n + 1);
  }
}

TEST_CASE("Askey-Wilson defining series equals the recurrence at degree one") {
  const QBase q(0.5);
  const double a = 0.1, b = 0.2, c = 0.3, d = 0.4, x = 0.3;
  const Complex e = exp_i_theta(x);
  const EvalResult s = phi(PhiSpec{{q.pow(-1), a * b * c * d, a * e, a / e}, {a * b, a * c, a * d}, q, q.value()});
  const Complex p1 = s.value * qpoch(a * b, q, 1) * qpoch(a * c, q, 1) * qpoch(a * d, q, 1) / a;
  CHECK(rel(p1, poly_eval_recurrence({Family::AskeyWilson, {a, b, c, d}, q}, 1, x)) < 1e-14);
}

TEST_CASE("hypergeometric series") {
  CHECK(rel(hyp(HypSpec{{1.0, 1.0}, {2.0}, 0.5}).value, -std::log(0.5) / 0.5) < 1e-15);
  CHECK(rel(hyp(HypSpec{{0.3, 0.7}, {1.4}, 0.6}).value, 1.131025783665353) < 1e-14);
  CHECK(rel(hyp(HypSpec{{Complex(0.3, 0.2), 0.7}, {Complex(1.4, -0.3)}, Complex(-0.5, 0.4)}).value,
            Complex(0.91253691490292645, -0.017620036217023783)) < 1e-14);
  CHECK(rel(hyp(HypSpec{{}, {1.5}, 2.0}).value, 2.9804061035351677) < 1e-14);
  CHECK(rel(hyp(HypSpec{{}, {}, 1.5}).value, std::exp(1.5)) < 1e-15);
}

TEST_CASE("unit argument with positive excess") {
  const EvalResult r = hyp(HypSpec{{0.3, 0.5, 0.7}, {1.2, 1.9}, 1.0});
  // the tail decays like k^{-excess-1}, so the bar reflects the term budget
  CHECK(rel(r.value, 1.071620397745784) < 1e-9);
  CHECK_THROWS_AS(hyp(HypSpec{{0.3, 0.5, 0.7}, {0.6, 0.8}, 1.0}), Error);
}

TEST_CASE("terminating 2F1 is the explicit cubic") {
  const double b = 0.7, c = 1.9, z = 0.45;
  double sum = 0.0, term = 1.0;
  for (int k = 0; k <= 3; ++k) {
    sum += term;
    term *= (-3.0 + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
  }
  CHECK(rel(hyp(HypSpec{{-3.0, b}, {c}, z}).value, sum) < 1e-15);
}

TEST_CASE("divergent and singular inputs are reported") {
  CHECK_THROWS_AS(hyp(HypSpec{{1.0, 1.0}, {2.0}, 1.5}), Error);
  CHECK_THROWS_AS(hyp(HypSpec{{1.0, 1.0, 1.0}, {2.0}, 0.1}), Error);
  CHECK_THROWS_AS(hyp(HypSpec{{0.5}, {-2.0}, 0.1}), Error);
  CHECK_THROWS_AS(phi(PhiSpec{{0.3, 0.4}, {0.6}, QBase(0.5), 1.2}), Error);
  CHECK_THROWS_AS(phi(PhiSpec{{0.3}, {4.0}, QBase(0.5), 0.1}), Error);
  try {
    hyp(HypSpec{{1.0, 1.0}, {2.0}, 1.5});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonConvergent);
    CHECK(e.exit_code() == 3);
  }
}

TEST_CASE("2phi1 tends to 2F1 as q -> 1") {
  const double a = 0.4, b = 0.7, c = 1.6;
  for (Complex z : {Complex(0.5, 0), Complex(-0.3, 0.2), Complex(0.1, -0.45)}) {
    double prev = INFINITY;
    const Complex target = hyp(HypSpec{{a, b}, {c}, z}).value;
    for (double qv : {0.9, 0.99, 0.999}) {
      const QBase q(qv);
      const double err =
          rel(phi(PhiSpec{{q.pow(Complex(a, 0)), q.pow(Complex(b, 0))}, {q.pow(Complex(c, 0))}, q, z}).value,
              target);
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("q-exponential partial sums") {
  // 0phi0(;;q,z) = (z;q)_inf
  const QBase q(0.5);
  CHECK(rel(phi(PhiSpec{{}, {}, q, 0.3}).value, qpoch_inf(0.3, q)) < 1e-14);
}

TEST_CASE("very-well-poised 8phi7: collapsed pair equals the literal list") {
  const QBase q(0.5);
  const Complex A = 0.3;
  const std::array<Complex, 5> b = {0.2, -0.15, 0.4, Complex(0.1, 0.2), 0.25};
  const Complex sa = std::sqrt(A);
  std::vector<Complex> num = {A, q.value() * sa, -q.value() * sa};
  std::vector<Complex> den = {sa, -sa};
  for (const Complex& bi : b) {
    num.push_back(bi);
    den.push_back(q.value() * A / bi);
  }
  const Complex z = 0.35;
  CHECK(rel(vwp_phi87(A, b, q, z).value, phi(PhiSpec{num, den, q, z}).value) < 1e-13);
}

TEST_CASE("Bailey W equals the 7F6 in its displayed layout") {
  const Complex a = 2.3, b = 0.4, c = 0.7, d = 1.1, e = 0.6;
  for (int n : {0, 1, 2, 5}) {
    const Complex f = -double(n);
    const Complex w = vwp_W(a, b, c, d, e, f).value;
    const Complex direct = hyp(HypSpec{{a, a / 2.0 + 1.0, b, c, d, e, f},
                                       {a / 2.0, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d, 1.0 + a - e, 1.0 + a - f},
                                       1.0})
                               .value;
    CHECK(rel(w, direct) < 1e-13);
    if (n == 0) CHECK(w == Complex(1.0, 0.0));
  }
}

TEST_CASE("Bailey W at f = -2 is the explicit three-term sum") {
  const Complex a = 2.3, b = 0.4, c = 0.7, d = 1.1, e = 0.6, f = -2.0;
  Complex sum = 0.0, term = 1.0;
  const std::array<Complex, 7> num = {a, a / 2.0 + 1.0, b, c, d, e, f};
  const std::array<Complex, 6> den = {a / 2.0, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d, 1.0 + a - e, 1.0 + a - f};
  for (int k = 0; k <= 2; ++k) {
    sum += term;
    Complex r = 1.0 / (k + 1.0);
    for (const Complex& x : num) r *= x + double(k);
    for (const Complex& x : den) r /= x + double(k);
    term *= r;
  }
  CHECK(rel(vwp_W(a, b, c, d, e, f).value, sum) < 1e-14);
}
