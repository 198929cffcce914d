#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nephroid/geometry.hpp"

using namespace nephroid;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<double> center_grid(int count) {
  // a in (1/3 + 1e-3, 5/3 - 1e-3), uniform
  std::vector<double> out;
  const double lo = 1.0 / 3.0 + 1e-3, hi = 5.0 / 3.0 - 1e-3;
  for (int i = 0; i < count; ++i) {
    out.push_back(lo + i * (hi - lo) / (count - 1));
  }
  return out;
}
}  // namespace

TEST_CASE("phi_ne values") {
  CHECK(std::abs(phi_ne(0.0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(phi_ne(1.0) - Complex(5.0 / 3.0, 0.0)) < 1e-15);
  CHECK(std::abs(phi_ne(-1.0) - Complex(1.0 / 3.0, 0.0)) < 1e-15);
}

TEST_CASE("boundary_point values and symmetry") {
  CHECK(std::abs(boundary_point(0.0) - Complex(5.0 / 3.0, 0.0)) < 1e-15);
  CHECK(std::abs(boundary_point(kPi) - Complex(1.0 / 3.0, 0.0)) < 1e-14);
  CHECK(std::abs(boundary_point(kPi / 2) - Complex(1.0, 4.0 / 3.0)) < 1e-15);

  for (int k = 0; k <= 64; ++k) {
    const double t = kPi * k / 64.0;
    CHECK(std::abs(boundary_point(-t) - std::conj(boundary_point(t))) < 1e-15);
  }
}

TEST_CASE("boundary_point matches phi_ne on the unit circle") {
  for (int k = 0; k < 128; ++k) {
    const double t = -kPi + 2.0 * kPi * (k + 1) / 128.0;
    CHECK(std::abs(boundary_point(t) - phi_ne(std::polar(1.0, t))) < 1e-14);
  }
}

TEST_CASE("implicit_value examples and boundary residual") {
  CHECK(implicit_value(5.0 / 3.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(implicit_value(1.0, 0.0) == doctest::Approx(-64.0 / 729.0).epsilon(1e-14));
  CHECK(implicit_value(3.0, 0.0) == doctest::Approx(32768.0 / 729.0).epsilon(1e-14));

  for (int k = 1; k <= 999; ++k) {
    const Complex p = boundary_point(-kPi + 2.0 * kPi * k / 999.0);
    CHECK(std::abs(implicit_value(p.real(), p.imag())) < 1e-12);
  }
}

TEST_CASE("h_poly endpoint identities") {
  for (double a : {0.4, 0.7, 1.0, 1.2, 1.6}) {
    CHECK(h_poly(-1.0, a) ==
          doctest::Approx((a - 1.0 / 3.0) * (a - 1.0 / 3.0)).epsilon(1e-13));
    CHECK(h_poly(1.0, a) ==
          doctest::Approx((5.0 / 3.0 - a) * (5.0 / 3.0 - a)).epsilon(1e-13));
  }
  CHECK(h_poly(0.0, 1.0) == doctest::Approx(16.0 / 9.0));
  CHECK_THROWS_AS(h_poly(0.0, 0.2), DomainError);
  CHECK_THROWS_AS(h_poly(0.0, 1.7), DomainError);
}

TEST_CASE("critical_x0 limit, sample value, and maximality") {
  CHECK(critical_x0(1.0) == 0.0);
  CHECK(std::abs(critical_x0(1.0 + 1e-9)) < 1e-8);
  CHECK(std::abs(critical_x0(1.0 - 1e-9)) < 1e-8);
  CHECK(critical_x0(4.0 / 3.0) ==
        doctest::Approx((1.0 - std::sqrt(3.0)) / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(critical_x0(1.0 / 3.0), DomainError);

  for (double a : center_grid(40)) {
    const double x0 = critical_x0(a);
    CHECK(x0 > -1.0);
    CHECK(x0 < 1.0);
    const double hx0 = h_poly(x0, a);
    for (int i = 0; i <= 1000; ++i) {
      const double x = -1.0 + 2.0 * i / 1000.0;
      CHECK(hx0 >= h_poly(x, a) - 1e-12);
    }
  }
}

TEST_CASE("inscribed_radius branch values") {
  CHECK(inscribed_radius(1.0) == doctest::Approx(2.0 / 3.0));
  CHECK(inscribed_radius(0.5) == doctest::Approx(1.0 / 6.0));
  CHECK(inscribed_radius(1.5) == doctest::Approx(1.0 / 6.0));
  CHECK_THROWS_AS(inscribed_radius(1.0 / 3.0), DomainError);
  CHECK_THROWS_AS(inscribed_radius(5.0 / 3.0), DomainError);
  CHECK_THROWS_AS(inscribed_radius(0.0), DomainError);
}

TEST_CASE("boundary_distance examples") {
  const NephroidDomain dom;
  CHECK(dom.boundary_distance({1.0, 0.0}).distance == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(dom.boundary_distance({5.0 / 3.0, 0.0}).distance < 1e-10);
  CHECK(dom.boundary_distance({0.5, 0.0}).distance == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("brute-force distance agrees with the inscribed radius") {
  const NephroidDomain dom;
  for (double a : center_grid(200)) {
    CHECK(std::abs(dom.boundary_distance({a, 0.0}).distance - inscribed_radius(a)) < 1e-8);
  }
}

TEST_CASE("squared-distance minimum reduces to the endpoint values") {
  // min over t of H(cos t) equals min(H(-1), H(1)); grid includes 0 and pi
  for (double a : center_grid(200)) {
    double lo = 1e300;
    for (int i = 0; i <= 10000; ++i) {
      lo = std::min(lo, h_poly(std::cos(kPi * i / 10000.0), a));
    }
    CHECK(std::abs(lo - std::min(h_poly(-1.0, a), h_poly(1.0, a))) < 1e-10);
  }
}

TEST_CASE("membership examples") {
  const NephroidDomain dom;
  CHECK(dom.contains({1.0, 0.0}) == Membership::Inside);
  CHECK(dom.contains({1.0 / 3.0, 0.0}) == Membership::Boundary);
  CHECK(dom.contains({5.0 / 3.0, 0.0}) == Membership::Boundary);
  CHECK(dom.contains({0.0, 0.0}) == Membership::Outside);
  CHECK_THROWS_AS(dom.contains({1.0, 0.0}, 0.0), DomainError);
}

TEST_CASE("winding membership agrees with the implicit sign off-boundary") {
  const NephroidDomain dom;
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> ur(-0.2, 2.2);
  std::uniform_real_distribution<double> ui(-1.4, 1.4);
  int tested = 0;
  while (tested < 1000) {
    const Complex w{ur(rng), ui(rng)};
    if (dom.boundary_distance(w).distance <= 0.05) continue;
    ++tested;
    const bool inside = dom.contains(w) == Membership::Inside;
    CHECK(inside == (implicit_value(w.real(), w.imag()) < 0.0));
  }
}

TEST_CASE("inscribed disk is inside and maximal") {
  const NephroidDomain dom;
  for (double a : center_grid(200)) {
    const double ra = inscribed_radius(a);
    for (int j = 0; j < 16; ++j) {
      const Complex w = Complex(a, 0.0) + std::polar(0.999 * ra, 2.0 * kPi * j / 16.0);
      CHECK(dom.contains(w) == Membership::Inside);
    }
    if (std::abs(a - 1.0) > 1e-9) {
      // just past the nearer cusp along the real axis
      const double w = a <= 1.0 ? a - 1.01 * ra : a + 1.01 * ra;
      CHECK(dom.contains({w, 0.0}) == Membership::Outside);
    }
  }
}

TEST_CASE("boundary_distance angle lands on the curve") {
  const NephroidDomain dom;
  for (const Complex w : {Complex{0.9, 0.4}, Complex{1.2, -0.8}, Complex{0.2, 0.1}}) {
    const auto [d, t] = dom.boundary_distance(w);
    CHECK(std::abs(w - boundary_point(t)) == doctest::Approx(d).epsilon(1e-12));
  }
}
