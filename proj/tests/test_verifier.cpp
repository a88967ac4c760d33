#include <cmath>

#include "doctest.h"
#include "qsk/quadrature.hpp"
#include "qsk/suites.hpp"
#include "qsk/report_io.hpp"
#include "qsk/verifier.hpp"

using namespace qsk;

namespace {

const Complex kOne(1.0, 0.0);

GridSpec rogers_grid(double beta, double t, double q, int N) {
  GridSpec g;
  g.x_points = {std::cos(0.7)};
  g.param_samples = {ParamMap{{"beta", Complex(beta, 0.0)}, {"t", Complex(t, 0.0)}, {"q", Complex(q, 0.0)}}};
  g.N_terms = N;
  g.tol_rel = 1e-12;
  return g;
}

}  // namespace

TEST_CASE("report builder keeps the first of equal maxima") {
  ReportBuilder b("demo", 1e-3);
  b.add(0.5e-3, ParamMap{{"k", Complex(1, 0)}});
  b.add(0.5e-3, ParamMap{{"k", Complex(2, 0)}});
  b.add(1e-4, ParamMap{{"k", Complex(3, 0)}});
  const VerificationReport r = b.finish();
  CHECK(r.samples == 3);
  CHECK(r.worst_point.at("k") == Complex(1, 0));
  CHECK(r.pass);
}

TEST_CASE("report builder treats NaN and exceptions as failures") {
  ReportBuilder b("demo", 1e-3);
  b.add(1e-9, {});
  b.add(NAN, ParamMap{{"k", Complex(7, 0)}});
  VerificationReport r = b.finish();
  CHECK(std::isinf(r.max_rel_residual));
  CHECK_FALSE(r.pass);

  ReportBuilder c("demo", 1e-3);
  c.add(1e-9, {});
  c.fail(ParamMap{{"k", Complex(2, 0)}}, "boom");
  r = c.finish();
  CHECK(r.converged_fraction == doctest::Approx(0.5));
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0] == "boom");
  CHECK_FALSE(r.pass);
}

TEST_CASE("an empty report does not pass") {
  CHECK_FALSE(ReportBuilder("empty", 1.0).finish().pass);
}

TEST_CASE("grid validation") {
  GridSpec g;
  CHECK_THROWS_AS(g.validate(), Error);
  g = rogers_grid(0.3, 0.2, 0.5, 60);
  CHECK_NOTHROW(g.validate());
  g.N_terms = 0;
  CHECK_THROWS_AS(g.validate(), Error);
  g.N_terms = 10;
  g.tol_rel = 0.0;
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("Rogers generating function at sixty terms is below 1e-12") {
  const VerificationReport r = verify_expansion(IdentityId::RogersGf, rogers_grid(0.3, 0.2, 0.5, 60));
  CHECK(r.pass);
  CHECK(r.max_rel_residual < 1e-12);
}

TEST_CASE("beta = gamma in the two-parameter expansion reproduces the Rogers profile") {
  GridSpec g = rogers_grid(0.3, 0.2, 0.5, 60);
  const VerificationReport a = verify_expansion(IdentityId::RogersGf, g);
  g.param_samples[0]["gamma"] = Complex(0.3, 0.0);
  const VerificationReport b = verify_expansion(IdentityId::RogersGamma, g);
  CHECK(b.pass);
  CHECK(b.max_rel_residual == doctest::Approx(a.max_rel_residual).epsilon(0.5).scale(1e-15));
}

TEST_CASE("Gegenbauer generating function at eighty terms") {
  GridSpec g;
  g.x_points = {0.2};
  g.param_samples = {ParamMap{{"mu", Complex(0.7, 0.0)}, {"t", Complex(0.3, 0.0)}}};
  g.N_terms = 80;
  g.tol_rel = 1e-12;
  CHECK(verify_expansion(IdentityId::GegenGf, g).pass);
}

TEST_CASE("truncation residual does not grow with N") {
  for (IdentityId id : {IdentityId::RogersGamma, IdentityId::AwRogers, IdentityId::GegenGfGeneral}) {
    GridSpec g;
    g.x_points = {-0.6, 0.1, 0.8};
    if (id == IdentityId::AwRogers) {
      g.param_samples = {ParamMap{{"a1", Complex(0.1, 0)}, {"a2", Complex(0.2, 0)}, {"a3", Complex(0.3, 0)},
                                  {"a4", Complex(0.4, 0)}, {"beta", Complex(0.6, 0)}, {"t", Complex(0.4, 0)},
                                  {"q", Complex(0.5, 0)}}};
    } else if (id == IdentityId::RogersGamma) {
      g.param_samples = {ParamMap{{"beta", Complex(0.6, 0)}, {"gamma", Complex(-0.3, 0)}, {"t", Complex(0.4, 0)},
                                  {"q", Complex(0.5, 0)}}};
    } else {
      g.param_samples = {ParamMap{{"alpha", Complex(0.2, 0)}, {"gamma", Complex(0.5, 0)},
                                  {"beta", Complex(0.6, 0)}, {"t", Complex(0.4, 0)}}};
    }
    double prev = INFINITY;
    for (int N : {20, 40, 80}) {
      g.N_terms = N;
      const double r = verify_expansion(id, g).max_rel_residual;
      CHECK(r <= prev * 1.0001 + 1e-15);
      prev = r;
    }
  }
}

TEST_CASE("connection relation at degree six") {
  std::vector<double> x;
  for (int j = 0; j < 9; ++j) x.push_back(std::cos((2.0 * j + 1.0) * M_PI / 18.0));
  const VerificationReport r = verify_connection(6, Complex(0.25, 0), Complex(0.55, 0), 0.5, x);
  CHECK(r.pass);
  CHECK(r.max_rel_residual < 1e-11);
}

TEST_CASE("quadratic transformation at a sample point") {
  const VerificationReport r =
      verify_quadratic_transform(Complex(0.3, 0), Complex(0.5, 0), Complex(0.25, 0), 0.5);
  CHECK(r.pass);
  CHECK(r.max_rel_residual < 1e-10);
}

TEST_CASE("quadratic transformation at t = 0 is trivial") {
  const QBase q(0.5);
  CHECK(std::abs(quadratic_lhs(Complex(0.3, 0), Complex(0.5, 0), Complex(0, 0), q).value - kOne) < 1e-15);
  CHECK(std::abs(quadratic_rhs(Complex(0.3, 0), Complex(0.5, 0), Complex(0, 0), q).value - kOne) < 1e-15);
}

TEST_CASE("limit chains shrink") {
  const std::vector<double> qs = {0.9, 0.99, 0.999};
  SUBCASE("continuous q-Jacobi to Jacobi at degree three") {
    LimitSetup s{{{"alpha", Complex(0.5, 0)}, {"gamma", Complex(0.5, 0)}}, 3, {0.2}};
    const VerificationReport r = verify_limit_chain(LimitChain::CqJacobi, qs, s);
    REQUIRE(r.error_sequence.size() == 3);
    CHECK(r.error_sequence[1] < r.error_sequence[0]);
    CHECK(r.error_sequence[2] < r.error_sequence[1]);
  }
  SUBCASE("scaled q-shifted factorial") {
    LimitSetup s{{{"a", Complex(1.3, 0)}, {"b", Complex(0.7, 0)}}, 0, {}};
    const VerificationReport r = verify_limit_chain(LimitChain::Pochhammer, qs, s);
    CHECK(r.pass);
    for (std::size_t i = 1; i < 3; ++i) CHECK(r.error_sequence[i] * 5.0 <= r.error_sequence[i - 1]);
  }
  SUBCASE("q-Legendre") {
    LimitSetup s{{}, 6, {-0.7, 0.1, 0.5}};
    CHECK(verify_limit_chain(LimitChain::CqLegendre, qs, s).pass);
  }
  SUBCASE("rejects a base sequence that does not increase") {
    LimitSetup s{{{"a", Complex(1.3, 0)}, {"b", Complex(0.7, 0)}}, 0, {}};
    CHECK_THROWS_AS(verify_limit_chain(LimitChain::Pochhammer, {0.99, 0.9}, s), Error);
  }
}

TEST_CASE("Heine series for 1/(z-x) at z = 2") {
  CHECK(verify_heine_classical(2.0, 40, false).pass);
  CHECK(verify_heine_classical(2.0, 60, true, 1e-8).pass);
  CHECK_THROWS_AS(verify_heine_classical(0.5, 40, false), Error);
}

TEST_CASE("base extraction") {
  CHECK_FALSE(sample_base(ParamMap{{"t", Complex(0.1, 0)}}).has_value());
  const auto q = sample_base(ParamMap{{"q", Complex(0.5, 0)}});
  REQUIRE(q.has_value());
  CHECK(q->value() == Complex(0.5, 0));
}

TEST_CASE("suites are deterministic in their seed") {
  SuiteOptions opt;
  opt.seed = 7;
  const auto a = report_json(run_suite("quadratic_transform", opt)).dump();
  const auto b = report_json(run_suite("quadratic_transform", opt)).dump();
  CHECK(a == b);
  opt.seed = 8;
  const auto c = report_json(run_suite("qpoch_algebra", opt)).dump();
  opt.seed = 9;
  const auto d = report_json(run_suite("qpoch_algebra", opt)).dump();
  CHECK(c != d);
}

TEST_CASE("suite registry") {
  const auto all = expand_suites({"all"});
  CHECK(all == suite_names());
  CHECK(all.size() == 43);
  for (const auto& n : all) CHECK(is_suite(n));
  CHECK_THROWS_AS(expand_suites({"no_such_suite"}), Error);
  CHECK_THROWS_AS(run_suite("no_such_suite"), Error);
}

TEST_CASE("Wilson suite checks vanishing coefficients past termination") {
  const SuiteResult r = run_suite("wilson_limit");
  CHECK(r.report.pass);
  // 4 samples x 3 points plus the zero checks for n = m+1 .. 10
  CHECK(r.report.samples == 12 + (10 + 9 + 8 + 7));
}

TEST_CASE("L2 sum of coefficient times norm stays bounded") {
  // sum_k |d_k|^2 s_k for the two-parameter Rogers expansion is Cauchy in N
  const QBase q(0.5);
  const ParamMap p{{"beta", Complex(0.6, 0)}, {"gamma", Complex(0.3, 0)}, {"t", Complex(0.4, 0)}};
  const PolySpec spec = target_spec(IdentityId::RogersGamma, p, q);
  std::vector<double> partial;
  double s = 0.0;
  for (int k = 0; k <= 60; ++k) {
    const Complex d = coefficient(CoeffRequest{IdentityId::RogersGamma, k, p, q, {}, false}).value;
    const Complex sk = norm_closed_form(weight_for(spec), k);
    s += std::norm(d) * std::abs(sk);
    partial.push_back(s);
  }
  CHECK(std::isfinite(partial.back()));
  CHECK(std::abs(partial[60] - partial[40]) <= 1e-12 * partial[60]);
  CHECK(std::abs(partial[40] - partial[20]) <= 1e-6 * partial[40]);
}
