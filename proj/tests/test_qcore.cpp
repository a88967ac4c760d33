#include <cmath>
#include <random>

#include "doctest.h"
#include "qsk/hyperseries.hpp"
#include "qsk/polyfamilies.hpp"
#include "qsk/qcore.hpp"

using namespace qsk;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

struct Rng {
  std::mt19937_64 g{20240611};
  double u(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }
  int i(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }
  Complex disk(double r) { return std::polar(r * std::sqrt(u(0, 1)), u(0, 2 * kPi)); }
};

}  // namespace

TEST_CASE("base validation") {
  CHECK_THROWS_AS(QBase(1.0), Error);
  CHECK_THROWS_AS(QBase(0.0), Error);
  CHECK_THROWS_AS(QBase(Complex(0.8, 0.7)), Error);
  CHECK(QBase(0.5).pow(3) == Complex(0.125, 0.0));
}

TEST_CASE("finite q-shifted factorial") {
  const QBase q(0.5);
  CHECK(qpoch(0.5, q, 0) == Complex(1.0, 0.0));
  CHECK(qpoch(1.0, q, 1) == Complex(0.0, 0.0));
  CHECK(rel(qpoch(0.3, q, 3), (1 - 0.3) * (1 - 0.15) * (1 - 0.075)) < 1e-15);
}

TEST_CASE("infinite product") {
  const QBase q(0.5);
  CHECK(qpoch_inf(0.0, q) == Complex(1.0, 0.0));
  CHECK(rel(qpoch_inf(0.5, q), 0.28878809508660242) < 1e-15);
  CHECK(rel(qpoch_inf(0.3, q), 0.51011782663398759) < 1e-15);
  CHECK(rel(qpoch_inf(0.3, q), qpoch(0.3, q, 50)) < 1e-15);
  const EvalResult r = qpoch_infinite(0.3, q);
  CHECK(r.converged);
  CHECK(r.tail_bound < 1e-16);
}

TEST_CASE("pair product matches the product of conjugate factors") {
  const QBase q(0.6);
  const double x = 0.35;
  const Complex e = std::polar(1.0, std::acos(x));
  const Complex a(0.4, 0.2);
  CHECK(rel(qpoch_pair_inf(a, x, q), qpoch_inf(a * e, q) * qpoch_inf(a / e, q)) < 1e-14);
}

TEST_CASE("q-shifted factorial of general length") {
  const QBase q(0.5);
  CHECK(rel(qpoch_general(0.3, q, 4.0).value, qpoch(0.3, q, 4)) < 1e-15);
  CHECK(qpoch_general(0.3, q, 0.0).value == Complex(1.0, 0.0));
  CHECK(rel(qpoch_general(0.2, q, -2.0).value, 1.0 / qpoch(0.2 / 0.25, q, 2)) < 1e-14);
  CHECK(rel(qpoch_general(0.2, q, -2.0).value, 8.3333333333333333) < 1e-14);
  CHECK(rel(qpoch_general(0.3, q, Complex(1.7, 0.2)).value,
            Complex(0.61580501323081018, -0.016758437154990624)) < 1e-14);
}

TEST_CASE("q-numbers, factorials and q-gamma") {
  const QBase q(0.5);
  CHECK(qnumber(1.0, q) == Complex(1.0, 0.0));
  CHECK(qfactorial(0, q) == Complex(1.0, 0.0));
  CHECK(rel(qfactorial(4, q), qpoch(0.5, q, 4) / std::pow(0.5, 4)) < 1e-15);
  CHECK(rel(qnumber(3.5, QBase(0.7)), 2.3767520363293735) < 1e-15);
  CHECK(rel(qgamma(1.0, q).value, 1.0) < 1e-15);
  CHECK(rel(qgamma(2.0, q).value, 1.0) < 1e-15);
  CHECK(rel(qgamma(3.0, QBase(0.9)).value, 1.9) < 1e-14);
  CHECK(rel(qgamma(2.5, q).value, 1.1905936250275275) < 1e-14);
  CHECK(rel(qgamma(Complex(0.3, 0.4), QBase(0.7)).value, Complex(0.93612581133355896, -1.1783702271906666)) <
        1e-13);
}

TEST_CASE("complex gamma") {
  CHECK(rel(qsk::gamma(1.0), 1.0) < 1e-14);
  CHECK(rel(qsk::gamma(0.5), std::sqrt(kPi)) < 1e-15);
  CHECK(rel(qsk::gamma(Complex(1, 1)), Complex(0.49801566811835604, -0.15494982830181069)) < 1e-14);
  CHECK(rel(qsk::gamma(-2.5), -0.94530872048294188) < 1e-14);
  CHECK(rel(qsk::gamma(Complex(0.2, -3)), Complex(0.015958013689259864, 0.0028468328861699048)) < 1e-13);
  CHECK(rel(std::exp(log_gamma(Complex(10, 20))), std::exp(Complex(-1.7029804439565111, 52.660660425584719))) <
        1e-12);
  CHECK_THROWS_AS(qsk::gamma(-3.0), Error);
  CHECK(rgamma(-3.0) == Complex(0.0, 0.0));
}

TEST_CASE("gamma recurrence and reflection") {
  Rng r;
  for (int i = 0; i < 200; ++i) {
    const Complex z(r.u(-6, 6), r.u(-6, 6));
    CHECK(rel(qsk::gamma(z + 1.0), z * qsk::gamma(z)) < 1e-12);
    CHECK(rel(qsk::gamma(z) * qsk::gamma(1.0 - z), kPi / std::sin(kPi * z)) < 1e-11);
  }
}

TEST_CASE("gamma ratio along vertical lines approaches its power law like 1/tau") {
  const Complex a(0.7, 0.0), b(0.2, 0.0);
  std::vector<double> dev;
  for (double tau : {1e2, 1e3, 1e4}) {
    const Complex ratio = gamma_ratio(a + Complex(0, tau), b + Complex(0, tau));
    const Complex model = std::exp(Complex(0, kPi / 2) * (a - b)) * std::pow(tau, a - b);
    dev.push_back(rel(ratio, model));
  }
  for (int i = 1; i < 3; ++i) {
    CHECK(dev[i - 1] / dev[i] > 8.0);
    CHECK(dev[i - 1] / dev[i] < 12.0);
  }
}

TEST_CASE("Pochhammer symbol") {
  CHECK(pochhammer(3.0, 0.0) == Complex(1.0, 0.0));
  CHECK(rel(pochhammer(2.0, 3.0), 24.0) < 1e-15);
  CHECK(rel(pochhammer(0.5, 0.5), 1.0 / std::sqrt(kPi)) < 1e-14);
  CHECK(rel(pochhammer(0.7, 2.6), 2.0672750340176475) < 1e-13);
  CHECK(rel(rising(Complex(0.3, 0.1), 4), pochhammer(Complex(0.3, 0.1), 4.0)) < 1e-14);
}

TEST_CASE("additivity, square base, shift and general-length splitting") {
  Rng r;
  for (int i = 0; i < 300; ++i) {
    const double qv = std::vector<double>{0.3, 0.5, 0.8}[r.i(0, 2)];
    const QBase q(qv), q2(qv * qv);
    const int n = r.i(0, 12), k = r.i(0, 12);
    const Complex a = r.disk(0.9);
    const Complex whole = qpoch(a, q, n + k);
    CHECK(rel(qpoch(a, q, k) * qpoch(a * q.pow(k), q, n), whole) < 1e-13);
    CHECK(rel(qpoch(a * a, q2, n), qpoch(a, q, n) * qpoch(-a, q, n)) < 1e-13);

    const double ar = r.u(0.01, 0.99);
    const int m = r.i(0, 10);
    const double s = std::sqrt(ar), sq = std::sqrt(ar * qv);
    CHECK(rel(qpoch(ar * std::pow(qv, m), q, m) * qpoch(ar, q, m),
              qpoch(s, q, m) * qpoch(-s, q, m) * qpoch(sq, q, m) * qpoch(-sq, q, m)) < 1e-13);

    const Complex beta(r.u(-0.9, 3.0), r.u(-1, 1));
    const int j = r.i(0, 8);
    CHECK(rel(qpoch_general(a, q, beta + double(j)).value,
              qpoch(a, q, j) * qpoch_general(a * q.pow(j), q, beta).value) < 1e-12);
  }
}

TEST_CASE("q-binomial theorem") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const QBase q(std::vector<double>{0.3, 0.5, 0.8}[r.i(0, 2)]);
    const Complex a = r.disk(0.9), z = r.disk(0.8);
    CHECK(rel(phi(PhiSpec{{a}, {}, q, z}).value, qpoch_inf(a * z, q) / qpoch_inf(z, q)) < 1e-12);
  }
}

TEST_CASE("scaled q-shifted factorial tends to the Pochhammer symbol") {
  for (auto [al, be] : std::vector<std::pair<double, double>>{{1.3, 0.7}, {0.4, -0.6}, {2.0, 2.5}}) {
    double prev = INFINITY;
    for (double qv : {0.9, 0.99, 0.999}) {
      const QBase q(qv);
      const Complex scaled = qpoch_general(q.pow(Complex(al, 0)), q, be).value / std::pow(1.0 - qv, be);
      const double err = rel(scaled, pochhammer(al, be));
      CHECK(err * 5.0 <= prev);
      prev = err;
    }
  }
}

TEST_CASE("lower bound on the scaled product holds on the lattice") {
  for (double qv : {0.3, 0.7, 0.95}) {
    const QBase q(qv);
    for (int ui = 1; ui <= 20; ++ui) {
      const double u = 0.25 * ui;
      for (int j = 1; j <= 20; ++j) {
        const double lhs = (qpoch(q.pow(Complex(u, 0)), q, j) / std::pow(1 - qv, j)).real();
        const double rhs = (qnumber(u, q) * qfactorial(j - 1, q)).real();
        CHECK(lhs >= rhs * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("ratio bound holds on the lattice") {
  for (double qv : {0.3, 0.7, 0.95}) {
    const QBase q(qv);
    for (int ui = 1; ui <= 20; ++ui) {
      const double u = 0.25 * ui;
      for (int n = 0; n <= 20; ++n) {
        const double lhs = (qpoch(q.pow(Complex(u, 0)), q, n) / qpoch(qv, q, n)).real();
        CHECK(lhs <= std::pow(qnumber(1.0 + n, q).real(), u) * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("shifted ratio bound has an n = 0 counterexample for u > 1") {
  // at n = 0 the left side is 1 and the right side is 1/[u]_q < 1
  const QBase q(0.7);
  const double u = 2.0, v = 0.0;
  const double lhs = (qpoch(q.pow(Complex(v, 0)), q, 0) / qpoch(q.pow(Complex(u, 0)), q, 0)).real();
  const double rhs = std::pow(qnumber(1.0, q).real(), v + 1) / qnumber(u, q).real();
  CHECK(lhs == 1.0);
  CHECK(rhs < 1.0);
}

TEST_CASE("integer detection") {
  CHECK(as_integer(Complex(-3.0, 0.0)) == -3L);
  CHECK_FALSE(as_integer(Complex(-3.0, 1e-3)).has_value());
  CHECK_FALSE(as_integer(Complex(2.5, 0.0)).has_value());
  CHECK(as_integer(Complex(2.0 + 1e-14, 0.0), 1e-12) == 2L);
}

TEST_CASE("truncation policy validation") {
  TruncationPolicy p;
  CHECK_NOTHROW(p.validate());
  p.term_eps = -1;
  CHECK_THROWS_AS(p.validate(), Error);
  p = {};
  p.max_terms = 0;
  CHECK_THROWS_AS(p.validate(), Error);
}
