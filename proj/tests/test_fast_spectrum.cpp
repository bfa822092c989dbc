#include <doctest.h>

#include <cmath>
#include <vector>

#include "pairion/errors.hpp"
#include "pairion/fast_spectrum.hpp"

using namespace pairion;
using namespace pairion::fast;

namespace {

// A exactly as printed; its overall sign is opposite to the one that makes
// W a nonnegative density.
double a_as_printed(double e, double d2) {
  const double beta = std::sqrt((d2 - 4.0) / d2);
  const double L = std::log((1.0 + beta) / (1.0 - beta)) / beta;
  const double B = (d2 + 2.0 * e) * (d2 + 2.0 * e);
  return 4.0 * beta *
         (1.0 - L + 4.0 * (d2 * (1.0 - 4.0 * e) + L * (2.0 * (2.0 * e + 1.0) + d2 * (e - 1.0))) / B);
}

}  // namespace

TEST_CASE("delta2 kinematics") {
  auto [lo, hi] = delta2_bounds({2.0});
  CHECK(lo == 4.0);
  CHECK(hi == 4.0);
  std::tie(lo, hi) = delta2_bounds({1000.0});
  CHECK(lo == 4.0);
  CHECK(hi == 2000.0);
  CHECK_THROWS_AS(delta2_bounds({1.0}), DomainError);

  CHECK(delta2_of_angle({1.0}, {100.0}, 1.0) == doctest::Approx(-202.0 + 200.0 * std::sqrt(3.0)));
  CHECK(delta2_of_angle({1.0}, {100.0}, 1.0) == doctest::Approx(144.41).epsilon(1e-4));
  CHECK_THROWS_AS(delta2_of_angle({1.0}, {100.0}, 1.5), DomainError);

  // t2 solving Delta^2 = 4 reproduces the lower edge.
  const double e = 0.3;
  const double w = 50.0;
  const double p2 = std::sqrt(e * e + 2 * e);
  const double t2 = (4.0 + 2.0 * e * (w + 1.0)) / (2.0 * w * p2);
  CHECK(delta2_of_angle({e}, {w}, t2) == doctest::Approx(4.0).epsilon(1e-13));

  const double tiny = delta2_of_angle({1e-9}, {100.0}, 1.0);
  CHECK(tiny < 0.01);
  CHECK(std::abs(tiny) < 1e-2);
}

TEST_CASE("beta and L") {
  auto t = beta_and_L(PairInvariantMassSq(4.0));
  CHECK(t.beta == 0.0);
  CHECK(t.L == 2.0);
  t = beta_and_L(PairInvariantMassSq(8.0));
  const double b = std::sqrt(0.5);
  CHECK(t.beta == doctest::Approx(b).epsilon(1e-15));
  CHECK(t.L == doctest::Approx(std::log((1 + b) / (1 - b)) / b).epsilon(1e-14));
  CHECK(beta_and_L(PairInvariantMassSq(4.0 + 1e-10)).L == doctest::Approx(2.0).epsilon(1e-9));
  const auto big = beta_and_L(PairInvariantMassSq(1e12));
  CHECK(big.beta == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(big.L == doctest::Approx(std::log(1e12)).epsilon(1e-10));
  CHECK_THROWS_AS(PairInvariantMassSq(3.9), DomainError);
}

TEST_CASE("W distribution") {
  CHECK(w_distribution({0.7}, PairInvariantMassSq(4.0)) == 0.0);
  CHECK(std::abs(w_distribution({0.7}, PairInvariantMassSq(4.0 + 1e-10))) < 1e-6);
  for (double e : {0.01, 0.3, 2.0, 40.0}) {
    for (double d2 : {4.5, 10.0, 300.0}) {
      CAPTURE(e);
      CAPTURE(d2);
      const double B = (d2 + 2 * e) * (d2 + 2 * e);
      CHECK(e * B * w_distribution({e}, PairInvariantMassSq(d2)) ==
            doctest::Approx(-a_as_printed(e, d2)).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(w_distribution({0.0}, PairInvariantMassSq(5.0)), DomainError);
}

TEST_CASE("T_f reference values") {
  CHECK(t_fast(0.5) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK(t_fast(1.0) == doctest::Approx(1.17356399753396423).epsilon(1e-13));
  CHECK(t_fast(2.0) == doctest::Approx(0.478279286736781923).epsilon(1e-13));
  CHECK(t_fast(10.0) == doctest::Approx(0.0423845238115794843).epsilon(1e-13));
  CHECK(t_fast(100.0) == doctest::Approx(7.63955230860399602e-4).epsilon(1e-13));
  CHECK_THROWS_AS(t_fast(0.0), DomainError);
  CHECK_THROWS_AS(t_fast(-1.0), DomainError);
}

TEST_CASE("T_f equals the Delta^2 quadrature of W") {
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) {
    CAPTURE(x);
    const double q = t_fast_oracle(x, QuadratureConfig{}.with_rel_tol(1e-12));
    CHECK(std::abs(t_fast(x) - q) / t_fast(x) < 1e-9);
  }
  CHECK(t_fast_oracle(0.01) * 0.01 == doctest::Approx(14.0 / 9.0).epsilon(0.01));
}

TEST_CASE("T_f with a finite Delta^2 cut approaches the unbounded value") {
  const double full = t_fast(1.0);
  const double w100 = t_fast_oracle(1.0, {}, EnergyValue{100.0});
  const double w1e4 = t_fast_oracle(1.0, {}, EnergyValue{1e4});
  CHECK(w100 < w1e4);
  CHECK(w1e4 < full);
  CHECK((full - w1e4) < 0.1 * (full - w100));
  CHECK(t_fast_oracle(1.0, {}, EnergyValue{2.0}) == 0.0);
}

TEST_CASE("T_f limits") {
  for (double x = 1e-4; x <= 1e-2 * 1.0001; x *= 1.5) {
    CAPTURE(x);
    CHECK(std::abs(x * t_fast(x) - 14.0 / 9.0) / (14.0 / 9.0) < 0.01);
  }
  // T_f ~ (4/3) ln x / x^2 at large x.
  const double r6 = t_fast(1e6) * 1e12 / std::log(1e6);
  const double r9 = t_fast(1e9) * 1e18 / std::log(1e9);
  CHECK(std::abs(r9 - 4.0 / 3.0) < std::abs(r6 - 4.0 / 3.0));
  CHECK(r9 == doctest::Approx(4.0 / 3.0).epsilon(0.06));
}

TEST_CASE("T_f is positive and decreasing") {
  double prev = INFINITY;
  for (double x = 1e-4; x <= 1e3; x *= 1.05) {
    const double t = t_fast(x);
    CHECK(t > 0.0);
    CHECK(t < prev);
    prev = t;
  }
}

TEST_CASE("T_f evaluation routes agree at the switch points") {
  for (double x : {0.02, 0.04, fast::detail::small_x_switch, 0.06}) {
    CAPTURE(x);
    CHECK(fast::detail::t_fast_small_x_series(x) == doctest::Approx(fast::detail::t_fast_closed_form(x)).epsilon(1e-11));
  }
  for (double x : {40.0, fast::detail::large_x_switch, 60.0}) {
    CAPTURE(x);
    CHECK(fast::detail::t_fast_large_x_series(x) == doctest::Approx(fast::detail::t_fast_closed_form(x)).epsilon(1e-12));
  }
}

TEST_CASE("t_fast_table preserves order") {
  std::vector<double> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(1e-3 * std::pow(1.1, i));
  const auto table = t_fast_table(xs);
  REQUIRE(table.size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(table[i].x == xs[i]);
    CHECK(table[i].t_f == t_fast(xs[i]));
  }
}
