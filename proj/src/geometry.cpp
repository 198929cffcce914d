#include "nephroid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace nephroid {

namespace {

constexpr double kPi = std::numbers::pi;

void require_center(double a, const char* op) {
  if (!(a > NephroidDomain::kCuspLeft && a < NephroidDomain::kCuspRight)) {
    throw DomainError(std::string(op) + ": a must lie in (1/3, 5/3), got " +
                      std::to_string(a));
  }
}

// Golden-section minimisation of f over [lo, hi]; returns the argmin.
template <typename F>
double golden_min(F f, double lo, double hi, double tol = 1e-12) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Inside: return "inside";
    case Membership::Boundary: return "boundary";
    case Membership::Outside: return "outside";
  }
  return "?";
}

Complex phi_ne(Complex z) { return 1.0 + z - z * z * z / 3.0; }

Complex boundary_point(double t) {
  return {1.0 + std::cos(t) - std::cos(3.0 * t) / 3.0,
          std::sin(t) - std::sin(3.0 * t) / 3.0};
}

double implicit_value(double u, double v) {
  const double q = (u - 1.0) * (u - 1.0) + v * v - 4.0 / 9.0;
  return q * q * q - 4.0 * v * v / 3.0;
}

double h_poly(double x, double a) {
  require_center(a, "h_poly");
  const double d = a - 1.0;
  return 16.0 / 9.0 + d * d - 4.0 * d * x - (4.0 / 3.0) * x * x +
         (8.0 / 3.0) * d * x * x * x;
}

double critical_x0(double a) {
  require_center(a, "critical_x0");
  const double d = a - 1.0;
  const double s = std::sqrt(1.0 + 18.0 * d * d);
  return -3.0 * d / (1.0 + s);
}

double inscribed_radius(double a) {
  require_center(a, "inscribed_radius");
  return a <= 1.0 ? a - NephroidDomain::kCuspLeft
                  : NephroidDomain::kCuspRight - a;
}

InscribedDiskQuery inscribed_disk(double a) { return {a, inscribed_radius(a)}; }

NephroidDomain::NephroidDomain(int boundary_samples) : samples_(boundary_samples) {
  if (samples_ < 16) {
    throw DomainError("NephroidDomain: need at least 16 boundary samples");
  }
  points_.reserve(samples_);
  for (int k = 1; k <= samples_; ++k) {
    points_.push_back(boundary_point(-kPi + 2.0 * kPi * k / samples_));
  }
}

BoundaryDistance NephroidDomain::boundary_distance(Complex w) const {
  // v(t) >= 0 on [0, pi], so for Im w >= 0 the nearest boundary point has
  // t in [0, pi]; reflect lower-half queries instead of scanning both halves.
  const bool reflected = w.imag() < 0.0;
  const Complex wu = reflected ? std::conj(w) : w;

  const int n = samples_;
  int best = n / 2;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (int k = n / 2; k <= n; ++k) {
    const double d2 = std::norm(points_[k - 1] - wu);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = k;
    }
  }

  const double h = 2.0 * kPi / n;
  const double tc = -kPi + h * best;
  auto dist = [&wu](double t) { return std::abs(wu - boundary_point(t)); };
  const double t_hat = golden_min(dist, tc - h, tc + h);

  double angle = reflected ? -t_hat : t_hat;
  if (angle <= -kPi) angle += 2.0 * kPi;
  if (angle > kPi) angle -= 2.0 * kPi;
  return {dist(t_hat), angle};
}

double NephroidDomain::winding_angle(Complex w, int samples) const {
  // Samples that coincide with w (within rounding) carry no usable direction;
  // bridging across them keeps the accumulation well defined for queries that
  // sit exactly on a boundary vertex, e.g. the cusps.
  constexpr double kDegenerate = 1e-13;
  auto point = [&](int k) -> Complex {
    return samples == samples_ ? points_[k - 1]
                               : boundary_point(-kPi + 2.0 * kPi * k / samples);
  };
  auto step = [](Complex from, Complex to) {
    return std::atan2(from.real() * to.imag() - from.imag() * to.real(),
                      from.real() * to.real() + from.imag() * to.imag());
  };
  double total = 0.0;
  Complex first, prev;
  bool started = false;
  for (int k = 1; k <= samples; ++k) {
    const Complex cur = point(k) - w;
    if (std::abs(cur) < kDegenerate) continue;
    if (!started) {
      first = prev = cur;
      started = true;
      continue;
    }
    total += step(prev, cur);
    prev = cur;
  }
  if (started) total += step(prev, first);  // closing segment
  return total;
}

Membership NephroidDomain::contains(Complex w, double tol) const {
  if (!(tol > 0.0)) throw DomainError("contains: tol must be positive");

  const double dist = boundary_distance(w).distance;

  double total = winding_angle(w, samples_);
  double turns = std::round(total / (2.0 * kPi));
  bool consistent = std::abs(total - 2.0 * kPi * turns) < 0.1;
  if (!consistent) {
    total = winding_angle(w, 4 * samples_);
    turns = std::round(total / (2.0 * kPi));
    consistent = std::abs(total - 2.0 * kPi * turns) < 0.1;
  }

  if (dist < tol) {
    if (!consistent) {
      throw AmbiguousMembership("point within tol of boundary and winding sum " +
                                std::to_string(total) + " not near 2*pi*k");
    }
    return Membership::Boundary;
  }
  if (!consistent) {
    throw AmbiguousMembership("winding sum " + std::to_string(total) +
                              " not near a multiple of 2*pi");
  }

  const long wn = std::lround(turns);
  if (wn == 1) return Membership::Inside;
  if (wn == 0) return Membership::Outside;
  throw AmbiguousMembership("impossible winding number " + std::to_string(wn));
}

}  // namespace nephroid
