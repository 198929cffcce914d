#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nephroid/verify.hpp"

using namespace nephroid;

namespace {
constexpr double kPi = std::numbers::pi;
const NephroidDomain& domain() {
  static const NephroidDomain dom;
  return dom;
}
}  // namespace

TEST_CASE("image_sweep hits the declared touch values") {
  const double rho_w = closed_form_radius(ClassId::macgregor(1));
  const auto img = image_sweep(ClassId::macgregor(1), rho_w, 2048);
  // t = 0 sits at index samples/2 - 1 (k = samples/2 of t_k = -pi + 2 pi k/N)
  CHECK(std::abs(img[1023] - Complex(5.0 / 3.0, 0.0)) < 1e-9);
  // t = pi is the last sample
  CHECK(std::abs(img[2047] - Complex(1.0 / 3.0, 0.0)) < 1e-9);

  const ExtremalQ g3 = extremal_q(ClassId::g3(2));
  const double rho3 = closed_form_radius(ClassId::g3(2));
  CHECK(std::abs(g3.q(std::polar(rho3, kPi / 2.0)) - Complex(1.0 / 3.0, 0.0)) < 1e-12);
}

TEST_CASE("image_sweep collapses to 1 as r -> 0") {
  for (const Complex& w : image_sweep(ClassId::cardioid(), 1e-6, 64)) {
    CHECK(std::abs(w - Complex(1.0, 0.0)) < 1e-5);
  }
}

TEST_CASE("image_sweep argument checking") {
  CHECK_THROWS_AS(image_sweep(ClassId::convex(), 1.0, 256), DomainError);
  CHECK_THROWS_AS(image_sweep(ClassId::convex(), 0.0, 256), DomainError);
  CHECK_THROWS_AS(image_sweep(ClassId::convex(), 0.5, 32), DomainError);
}

TEST_CASE("pole proximity is reported") {
  CHECK_THROWS_AS(image_sweep(ClassId::g1(1), 1.0 - 1e-13, 64), PoleProximity);
}

TEST_CASE("image sweeps are conjugate-symmetric") {
  for (const ClassId& id :
       {ClassId::janowski(1.0, 0.5), ClassId::booth(0.3), ClassId::lemniscate(0.1),
        ClassId::shifted_lemniscate(), ClassId::sine(), ClassId::g3(2),
        ClassId::uralegaddi(2, 1.5)}) {
    const auto img = image_sweep(id, 0.5, 256);
    for (int k = 1; k < 256; ++k) {
      // t_k and t_{256-k} are opposite angles
      CHECK(std::abs(img[k - 1] - std::conj(img[256 - k - 1])) < 1e-12);
    }
  }
}

TEST_CASE("check_sharpness: booth touches both cusp values") {
  const SharpnessReport rep = check_sharpness(ClassId::booth(0.1), domain());
  REQUIRE(rep.touch_found.size() == 2);
  CHECK(rep.touch_found[0].value == doctest::Approx(1.0 / 3.0));
  CHECK(std::abs(rep.touch_found[0].angle - kPi) < 1e-3);
  CHECK(rep.touch_found[1].value == doctest::Approx(5.0 / 3.0));
  CHECK(std::abs(rep.touch_found[1].angle) < 1e-3);
  CHECK(rep.min_clearance_at_rho < 1e-6);
  CHECK(rep.inside_at_099);
  CHECK(rep.outside_witness.has_value());
  CHECK(rep.sharp_confirmed);
  CHECK(rep.matches_expectation());
}

TEST_CASE("check_sharpness: lune and sine are quantifiably non-sharp") {
  for (const ClassId& id : {ClassId::lune(), ClassId::sine()}) {
    const SharpnessReport rep = check_sharpness(id, domain());
    CHECK_FALSE(rep.sharp_confirmed);
    CHECK_FALSE(rep.expected_sharp);
    CHECK(rep.min_clearance_at_rho > 1e-3);
    CHECK(rep.min_clearance_at_rho < 2.0 / 3.0);
    CHECK(rep.inside_at_099);
    CHECK(rep.matches_expectation());
  }
}

TEST_CASE("check_sharpness: close-to-star touches 5/3 at angle 0") {
  const SharpnessReport rep = check_sharpness(ClassId::close_to_star(1, 0.0), domain());
  REQUIRE(rep.touch_found.size() == 1);
  CHECK(rep.touch_found[0].value == doctest::Approx(5.0 / 3.0));
  CHECK(std::abs(rep.touch_found[0].angle) < 1e-3);
  CHECK(rep.sharp_confirmed);
}

TEST_CASE("check_sharpness: G3 touch sits at angle pi/n") {
  const SharpnessReport rep = check_sharpness(ClassId::g3(2), domain());
  REQUIRE(rep.touch_found.size() == 1);
  CHECK(rep.touch_found[0].value == doctest::Approx(1.0 / 3.0));
  CHECK(std::abs(rep.touch_found[0].angle - kPi / 2.0) < 1e-3);
  CHECK(rep.sharp_confirmed);
  CHECK(rep.matches_expectation());
}

TEST_CASE("check_sharpness: G4 touches 1/3 at pi/n at the stated radius") {
  const SharpnessReport rep = check_sharpness(ClassId::g4(2), domain());
  REQUIRE(rep.touch_found.size() == 1);
  CHECK(rep.touch_found[0].value == doctest::Approx(1.0 / 3.0));
  CHECK(std::abs(rep.touch_found[0].angle - kPi / 2.0) < 1e-3);
  CHECK(rep.sharp_confirmed);
  CHECK(rep.inside_at_099);
  CHECK(rep.outside_witness.has_value());
}

TEST_CASE("check_sharpness: M touches 1/3 at angle 0") {
  const SharpnessReport rep = check_sharpness(ClassId::uralegaddi(1, 2.0), domain());
  CHECK(rep.rho == doctest::Approx(0.25));
  REQUIRE(rep.touch_found.size() == 1);
  CHECK(rep.touch_found[0].value == doctest::Approx(1.0 / 3.0));
  CHECK(std::abs(rep.touch_found[0].angle) < 1e-3);
  CHECK(rep.sharp_confirmed);
}

TEST_CASE("check_sharpness: janowski B=0 attains both cusps") {
  const SharpnessReport rep = check_sharpness(ClassId::janowski(1.0, 0.0), domain());
  CHECK(rep.touch_found.size() == 2);
  CHECK(rep.sharp_confirmed);
  CHECK(rep.matches_expectation());
}

TEST_CASE("check_sharpness: witness radius stays within the scan window") {
  const SharpnessReport rep = check_sharpness(ClassId::starlike(0.0), domain());
  REQUIRE(rep.outside_witness.has_value());
  CHECK(rep.outside_witness->r > rep.rho);
  CHECK(rep.outside_witness->r <= rep.rho + 0.05 + 1e-12);
}
