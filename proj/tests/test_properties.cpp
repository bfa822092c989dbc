#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pairion/bh_oracle.hpp"
#include "pairion/cross_section.hpp"
#include "pairion/fast_spectrum.hpp"
#include "pairion/matching.hpp"
#include "pairion/slow_spectrum.hpp"

using namespace pairion;

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

}  // namespace

TEST_CASE("W is nonnegative on the physical domain") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 20000; ++i) {
    const double e = log_uniform(rng, 1e-4, 1e4);
    const double d2 = 4.0 + log_uniform(rng, 1e-8, 1e7);
    CAPTURE(e);
    CAPTURE(d2);
    REQUIRE(fast::w_distribution({e}, fast::PairInvariantMassSq(d2)) >= 0.0);
  }
}

TEST_CASE("matched spectrum is T_f times eps/(eps+1)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> z(1, 50);
  for (int i = 0; i < 2000; ++i) {
    const int Z = z(rng);
    const double x = log_uniform(rng, 1e-6, 1e3);
    const double eps = x / hydrogenlike_binding(Z).value;
    CHECK(matching::t_fast_matched({x}, Z) / fast::t_fast(x) == doctest::Approx(eps / (eps + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("phi_K^2 is nonnegative and homogeneous of degree -3") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double p2 = log_uniform(rng, 1e-3, 1.0);
    const double q = log_uniform(rng, 1e-4, 2.0);
    const double eta = log_uniform(rng, 1e-3, 0.4);
    const double ca = c(rng);
    const double lambda = log_uniform(rng, 0.1, 10.0);
    const double v = slow::phi_k_sq(p2, q, eta, ca);
    REQUIRE(v >= 0.0);
    CHECK(slow::phi_k_sq(lambda * p2, lambda * q, lambda * eta, ca) ==
          doctest::Approx(v / (lambda * lambda * lambda)).epsilon(1e-10));
  }
}

TEST_CASE("K is positive and decreasing") {
  std::mt19937_64 rng(3);
  std::vector<double> eps;
  for (int i = 0; i < 200; ++i) eps.push_back(log_uniform(rng, 1e-6, 1e3));
  std::sort(eps.begin(), eps.end());
  const auto t = slow::t_slow_table(eps);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i].t_s > 0.0);
    if (i > 0) CHECK(t[i].t_s < t[i - 1].t_s);
  }
}

TEST_CASE("Bethe-Heitler integrand is nonnegative on physical kinematics") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const double omega = log_uniform(rng, 3.0, 1e5);
    const double Ep = 1.0 + u(rng) * (omega - 2.0);
    bh::BHKinematics k;
    k.delta_minus = log_uniform(rng, 1e-4, 30.0);
    k.delta_plus = log_uniform(rng, 1e-4, 30.0);
    k.phi = 2.0 * std::numbers::pi * u(rng);
    k.E_p = Ep;
    k.E_e = omega - Ep;
    k.omega = omega;
    CAPTURE(k.delta_minus);
    CAPTURE(k.delta_plus);
    CAPTURE(k.phi);
    REQUIRE(k.E_e * k.E_p * bh::h_full(k) >= -1e-12 * k.omega * k.omega);
  }
}

TEST_CASE("sigma_state is linear in the occupancy") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> n(1, 8);
  for (int i = 0; i < 500; ++i) {
    const EnergyValue I{log_uniform(rng, 1e-6, 0.5)};
    const int nb = n(rng);
    CHECK(xsec::sigma_state(I, nb).value == doctest::Approx(nb * xsec::sigma_state(I, 1).value).epsilon(1e-14));
  }
}

TEST_CASE("parallel tables match serial evaluation bit for bit") {
  std::vector<double> xs;
  for (int i = 0; i < 500; ++i) xs.push_back(1e-3 * std::pow(1.02, i));
  const auto par = fast::t_fast_table(xs);
  for (std::size_t i = 0; i < xs.size(); ++i) REQUIRE(par[i].t_f == fast::t_fast(xs[i]));

  std::vector<double> eps;
  for (int i = 0; i < 64; ++i) eps.push_back(0.25 * i);
  const auto slow_par = slow::t_slow_table(eps);
  for (std::size_t i = 0; i < eps.size(); ++i) REQUIRE(slow_par[i].t_s == slow::t_slow(eps[i]));
}
