#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pairion/errors.hpp"
#include "pairion/quadrature.hpp"

using namespace pairion;

namespace {

// Elementary form of 2F1(2, 4; 7/2; z) for z < 0. Cancels badly near 0, so
// only used for |z| >= 0.3.
double hyp_elementary(double z) {
  const double w = -z;
  const double poly = 32.0 * z * z * z * z - 64.0 * z * z * z + 32.0 * z * z;
  return (20.0 * z * z - 20.0 * z + 15.0) / poly +
         (30.0 * z - 15.0) * std::asinh(std::sqrt(w)) / (std::sqrt(w) * std::sqrt(1.0 - z) * poly);
}

// Term-by-term Gauss series.
double hyp_series(double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 400; ++n) {
    term *= (2.0 + n) * (4.0 + n) / ((3.5 + n) * (1.0 + n)) * z;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// (15/4) int_0^1 t sqrt(1-t) (1 - z t)^-4 dt in the original variable.
double hyp_euler(double z) {
  auto f = [z](double t) {
    const double d = 1.0 - z * t;
    return t * std::sqrt(1.0 - t) / (d * d * d * d);
  };
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.max_subdivisions = 4000;
  return 3.75 * integrate(f, 0.0, 1.0, cfg).value;
}

}  // namespace

TEST_CASE("integrate: elementary integrals") {
  CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, infinity).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  QuadratureConfig expo;
  expo.semi_infinite_map = SemiInfiniteMap::exponential;
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, infinity, expo).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, {0.0, 1.0, infinity}).value ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
}

TEST_CASE("integrate: error estimate bounds the true error") {
  struct Case {
    Integrand f;
    double a, b, exact;
  };
  const std::vector<Case> battery = {
      {[](double x) { return 3 * x * x * x - x + 2; }, -1.0, 2.0, 3.0 * 15.0 / 4.0 - 1.5 + 6.0},
      {[](double x) { return std::log(x); }, 0.0, 1.0, -1.0},
      {[](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 2.0},
      {[](double x) { return std::log(x) / std::sqrt(x); }, 0.0, 1.0, -4.0},
      {[](double x) { return std::cos(20 * x); }, 0.0, 1.0, std::sin(20.0) / 20.0},
  };
  for (const auto& c : battery) {
    const auto r = integrate(c.f, c.a, c.b);
    CHECK(std::abs(r.value - c.exact) <= r.error_estimate + 1e-15);
    CHECK(r.value == doctest::Approx(c.exact).epsilon(1e-9));
    CHECK(r.evaluations > 0);
  }
}

TEST_CASE("integrate: failures carry the best estimate") {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 10;
  try {
    integrate([](double x) { return std::sin(1.0 / x) / x; }, 1e-4, 1.0, cfg);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_estimate() > 0.0);
  }
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0), QuadratureError);
}

TEST_CASE("integrate: argument validation") {
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate(one, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(integrate(one, {0.0, 2.0, 1.0}), DomainError);
  CHECK_THROWS_AS(integrate(one, -infinity, 0.0), DomainError);
  QuadratureConfig bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate(one, 0.0, 1.0, bad), DomainError);
  bad = {};
  bad.max_subdivisions = 5;
  CHECK_THROWS_AS(integrate(one, 0.0, 1.0, bad), DomainError);
}

TEST_CASE("integrate is deterministic") {
  auto f = [](double x) { return std::exp(-x) * std::sin(3 * x) / (1 + x); };
  const auto a = integrate(f, 0.0, infinity);
  const auto b = integrate(f, 0.0, infinity);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
}

TEST_CASE("hyp2f1_24_72: reference values") {
  CHECK(hyp2f1_24_72(0.0) == 1.0);
  CHECK(hyp2f1_24_72(-0.5) == doctest::Approx(hyp_series(-0.5)).epsilon(1e-13));
  CHECK(hyp2f1_24_72(-0.2) == doctest::Approx(hyp_series(-0.2)).epsilon(1e-14));
  CHECK(hyp2f1_24_72(-50.0) == doctest::Approx(hyp_euler(-50.0)).epsilon(1e-10));
  CHECK_THROWS_AS(hyp2f1_24_72(0.1), DomainError);
}

TEST_CASE("hyp2f1_24_72: agrees with the elementary form over a wide range") {
  for (double z : {-0.3, -0.7, -1.0, -3.0, -8.9, -9.1, -25.0, -100.0, -1e3, -1e4}) {
    CAPTURE(z);
    CHECK(hyp2f1_24_72(z) == doctest::Approx(hyp_elementary(z)).epsilon(1e-11));
  }
}

TEST_CASE("hyp2f1_24_72: evaluation routes overlap") {
  for (double z = -0.9; z <= -0.3 + 1e-12; z += 0.05) {
    CAPTURE(z);
    const double s = detail::hyp2f1_24_72_series(z);
    CHECK(detail::hyp2f1_24_72_pfaff(z) == doctest::Approx(s).epsilon(1e-12));
    CHECK(detail::hyp2f1_24_72_euler(z) == doctest::Approx(s).epsilon(1e-11));
  }
  for (double z : {-8.0, -9.0, -10.0}) {
    CAPTURE(z);
    CHECK(detail::hyp2f1_24_72_pfaff(z) ==
          doctest::Approx(detail::hyp2f1_24_72_euler(z)).epsilon(1e-11));
  }
}

TEST_CASE("find_root") {
  CHECK(find_root([](double x) { return x - 2; }, 0, 5, 1e-12) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(find_root([](double x) { return x * x - 2; }, 1, 2, 1e-13) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(find_root([](double x) { return std::cos(x); }, 1, 2, 1e-13) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1; }, -1, 1, 1e-10), BracketError);
  CHECK_THROWS_AS(find_root([](double x) { return x; }, 1, -1, 1e-10), DomainError);
}
