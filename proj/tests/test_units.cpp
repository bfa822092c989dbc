#include <doctest.h>

#include <cmath>

#include "pairion/errors.hpp"
#include "pairion/units.hpp"

using namespace pairion;

TEST_CASE("constants lie in their documented ranges") {
  CHECK(constants::alpha > 1.0 / 138.0);
  CHECK(constants::alpha < 1.0 / 137.0);
  CHECK(constants::m_keV > 510.9);
  CHECK(constants::m_keV < 511.1);
  CHECK(constants::alpha_re2_mb == doctest::Approx(0.5795).epsilon(2e-4));
}

TEST_CASE("alpha r_e^2 agrees with an independently entered classical radius") {
  const double r_e_fm = 2.8179403262;
  const double mb = constants::alpha * r_e_fm * r_e_fm * 10.0;
  CHECK(constants::alpha_re2_mb == doctest::Approx(mb).epsilon(1e-4));
}

TEST_CASE("hydrogenlike binding") {
  CHECK(hydrogenlike_binding(1).eV() == doctest::Approx(13.6).epsilon(2e-3));
  CHECK(hydrogenlike_binding(20).keV() == doctest::Approx(5.4).epsilon(0.01));
  const double az = constants::alpha * 7;
  CHECK(hydrogenlike_binding(7).value == doctest::Approx(az * az / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(hydrogenlike_binding(0), DomainError);
  CHECK_THROWS_AS(hydrogenlike_binding(-3), DomainError);
}

TEST_CASE("millibarn conversion") {
  CHECK(to_millibarn({0.0}) == 0.0);
  CHECK(to_millibarn({1.0}) == doctest::Approx(0.5795).epsilon(2e-4));
  CHECK(to_millibarn({18.0}) == doctest::Approx(10.43).epsilon(1e-3));
  CHECK(from_millibarn(to_millibarn({3.25})).value == doctest::Approx(3.25).epsilon(1e-15));
}

TEST_CASE("keV round trip is exact to rounding") {
  for (double keV : {1e-3, 0.0136, 25.514, 511.0, 8.0e4}) {
    const auto e = EnergyValue::from_keV(keV);
    CHECK(std::abs(e.keV() - keV) <= 4e-16 * keV);
    CHECK(EnergyValue::from_MeV(e.MeV()).value == doctest::Approx(e.value).epsilon(1e-15));
    CHECK(EnergyValue::from_eV(e.eV()).value == doctest::Approx(e.value).epsilon(1e-15));
  }
}

TEST_CASE("atom validation") {
  AtomSpec ok{3, {{"1s", 2, {1e-3}}, {"2s", 1, {1e-4}}}};
  CHECK_NOTHROW(ok.validate());
  AtomSpec too_many{1, {{"1s", 2, {1e-5}}}};
  CHECK_THROWS_AS(too_many.validate(), DomainError);
  AtomSpec bad_energy{2, {{"1s", 1, {0.0}}}};
  CHECK_THROWS_AS(bad_energy.validate(), DomainError);
  AtomSpec bad_n{2, {{"1s", 0, {1e-3}}}};
  CHECK_THROWS_AS(bad_n.validate(), DomainError);
}
