#include <cmath>

#include "doctest.h"
#include "qsk/quadrature.hpp"

using namespace qsk;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

const Complex kOne(1.0, 0.0);

}  // namespace

TEST_CASE("five-point Gauss-Legendre rule") {
  const GaussRule r = gauss_jacobi(5, 0.0, 0.0);
  REQUIRE(r.nodes.size() == 5);
  const double x1 = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
  const double x2 = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
  const double w1 = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
  const double w2 = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
  const std::vector<double> nodes = {-x2, -x1, 0.0, x1, x2};
  const std::vector<double> weights = {w2, w1, 128.0 / 225.0, w1, w2};
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(r.nodes[i] - nodes[i]) < 1e-14);
    CHECK(std::abs(r.weights[i] - weights[i]) < 1e-14);
  }
}

TEST_CASE("Gauss rules integrate polynomials exactly") {
  const GaussRule l = gauss_laguerre(8, 0.5);
  double s = 0.0;
  for (std::size_t i = 0; i < l.nodes.size(); ++i) s += l.weights[i] * std::pow(l.nodes[i], 3);
  CHECK(rel(s, std::tgamma(4.5)) < 1e-13);
  CHECK_THROWS_AS(gauss_jacobi(0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(gauss_laguerre(4, -1.5), Error);
}

TEST_CASE("masses of the classical measures") {
  const auto one = [](double) { return kOne; };
  CHECK(rel(integrate(one, {Family::ChebyshevT, {}, std::nullopt}).value, kPi) < 1e-13);
  CHECK(rel(integrate(one, {Family::Jacobi, {0.3, 0.7}, std::nullopt}).value, 1.6309532725293919) < 1e-13);
  CHECK(rel(integrate(one, {Family::Laguerre, {0.5}, std::nullopt}).value, std::tgamma(1.5)) < 1e-13);
}

TEST_CASE("weights at sample points") {
  const QBase q(0.5);
  const WeightSpec aw{Family::AskeyWilson, {0.1, 0.2, 0.3, 0.4}, q};
  CHECK(rel(weight_eval(aw, 0.0), 15.509205275971504) < 1e-13);
  const WeightSpec wilson{Family::Wilson, {1.0, 1.0, 1.0, 1.0}, std::nullopt};
  CHECK(rel(weight_eval(wilson, 1.0), 0.93338859861973515) < 1e-13);
  CHECK_THROWS_AS(weight_eval(aw, 1.0), Error);
  CHECK_THROWS_AS(weight_eval(wilson, -0.5), Error);
}

TEST_CASE("Askey-Wilson weight is positive and symmetric under a sign flip") {
  const QBase q(0.6);
  const WeightSpec w{Family::AskeyWilson, {0.3, -0.3, 0.5, -0.5}, q};
  for (int i = 1; i < 40; ++i) {
    const double x = -1.0 + i / 20.0;
    const double v = weight_eval(w, x);
    CHECK(v > 0.0);
    CHECK(std::abs(v - weight_eval(w, -x)) <= 1e-13 * v);
  }
}

TEST_CASE("closed-form norms match quadrature") {
  const QBase q(0.5);
  const WeightSpec aw{Family::AskeyWilson, {0.1, 0.2, 0.3, 0.4}, q};
  CHECK(rel(norm_closed_form(aw, 0), 2.0 * kPi * 7.0745852500379091) < 1e-13);
  const auto one = [](double) { return kOne; };
  CHECK(rel(integrate(one, aw).value, norm_closed_form(aw, 0)) < 1e-12);
  for (const WeightSpec& w : {WeightSpec{Family::CqUltraspherical, {0.4}, q}, WeightSpec{Family::CqHermite, {}, q},
                              WeightSpec{Family::CqJacobi, {0.3, 0.6}, q}, WeightSpec{Family::Gegenbauer, {0.8}, std::nullopt},
                              WeightSpec{Family::Laguerre, {0.5}, std::nullopt}}) {
    const PolySpec p{w.family, w.params, w.q};
    for (int n : {0, 1, 4}) {
      const IntegralResult I = integrate([&](double x) { return std::pow(poly_eval(p, n, x), 2); }, w);
      CHECK(rel(I.value, norm_closed_form(w, n)) < 1e-10);
    }
  }
}

TEST_CASE("orthogonality reports") {
  const QBase q(0.5);
  const OrthogonalityReport off = verify_orthogonality({Family::AskeyWilson, {0.1, 0.2, 0.3, 0.4}, q}, 0, 1);
  CHECK(off.pass);
  CHECK(std::abs(off.expected) == 0.0);
  const OrthogonalityReport h1 = verify_orthogonality({Family::Wilson, {1.0, 1.5, 0.5, 2.0}, std::nullopt}, 1, 1);
  CHECK(h1.pass);
  CHECK(h1.rel_residual < 1e-8);
}

TEST_CASE("corollary names round-trip") {
  for (Corollary c : all_corollaries()) {
    const auto back = corollary_from_name(corollary_info(c).name);
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK(all_corollaries().size() == 9);
}

TEST_CASE("integral corollaries") {
  const QBase q(0.5);
  SUBCASE("power of 1-x against Jacobi with nu = 0") {
    const auto r = verify_integral_corollary(Corollary::Jacobi1mxInt, 0, {{"alpha", 0.3}, {"beta", 0.7}, {"nu", 0.0}},
                                             std::nullopt);
    CHECK(rel(r.closed_form, 1.6309532725293919) < 1e-13);
    CHECK(r.pass);
    // (nu)_n vanishes at nu = 0 for n >= 1
    const auto r2 = verify_integral_corollary(Corollary::Jacobi1mxInt, 3, {{"alpha", 0.3}, {"beta", 0.7}, {"nu", 0.0}},
                                              std::nullopt);
    CHECK(std::abs(r2.closed_form) == 0.0);
    CHECK(r2.pass);
  }
  SUBCASE("Stieltjes transform of the Gegenbauer weight at t = 0") {
    const double mu = 0.8;
    const auto r = verify_integral_corollary(Corollary::GegenStieltjes, 0, {{"mu", mu}, {"lambda", 0.6}, {"t", 0.0}},
                                             std::nullopt);
    CHECK(rel(r.closed_form, std::sqrt(kPi) * std::tgamma(mu + 0.5) / std::tgamma(mu + 1.0)) < 1e-14);
    CHECK(r.pass);
  }
  SUBCASE("q-ultraspherical projection at degree two") {
    const auto r =
        verify_integral_corollary(Corollary::CqUltraInt, 2, {{"beta", 0.3}, {"gamma", 0.5}, {"t", 0.4}}, q);
    CHECK(r.pass);
    CHECK(r.rel_residual < 1e-10);
  }
  SUBCASE("high degree at small t stays accurate") {
    const auto r = verify_integral_corollary(
        Corollary::AwInt, 8, {{"a1", 0.1}, {"a2", 0.2}, {"a3", 0.3}, {"a4", 0.4}, {"beta", 0.6}, {"t", 0.1}}, q);
    CHECK(r.rel_residual < 1e-10);
  }
  SUBCASE("parameter checks") {
    CHECK_THROWS_AS(verify_integral_corollary(Corollary::Cheby1mxInt, 1, {{"nu", 0.7}}, std::nullopt), Error);
    CHECK_THROWS_AS(verify_integral_corollary(Corollary::CqUltraInt, 1, {{"beta", 0.3}, {"gamma", 0.5}, {"t", 0.4}},
                                              std::nullopt),
                    Error);
  }
}

TEST_CASE("node doubling is stable") {
  const QBase q(0.5);
  const WeightSpec w{Family::CqUltraspherical, {0.4}, q};
  const auto f = [](double x) { return Complex(std::exp(x), 0.0); };
  const IntegralResult a = integrate(f, w, 16);
  const IntegralResult b = integrate(f, w, 64);
  CHECK(rel(a.value, b.value) < 1e-13);
  CHECK(a.est_error <= 1e-13 * a.abs_integral);
}

TEST_CASE("q-ultraspherical norms grow at most polynomially") {
  const QBase q(0.7);
  const WeightSpec w{Family::CqUltraspherical, {0.5}, q};
  const double h0 = std::abs(norm_closed_form(w, 0));
  double sigma = 0.0;
  for (int n = 1; n <= 20; ++n) {
    sigma = std::max(sigma, std::log(std::abs(norm_closed_form(w, n)) / h0) / std::log(n + 1.0));
  }
  for (int n = 0; n <= 40; ++n) CHECK(std::abs(norm_closed_form(w, n)) <= h0 * std::pow(n + 1.0, sigma + 1.0));
}
