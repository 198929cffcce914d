#pragma once

#include <complex>
#include <vector>

#include "nephroid/errors.hpp"

namespace nephroid {

using Complex = std::complex<double>;

enum class Membership { Inside, Boundary, Outside };

const char* to_string(Membership m);

/// Target function phi_Ne(z) = 1 + z - z^3/3. Total on |z| <= 1.
Complex phi_ne(Complex z);

/// Boundary point (u(t), v(t)) = phi_Ne(e^{it}),
/// u = 1 + cos t - cos(3t)/3, v = sin t - sin(3t)/3.
Complex boundary_point(double t);

/// Implicit sextic residual ((u-1)^2 + v^2 - 4/9)^3 - 4 v^2/3.
/// Vanishes on the boundary curve.
double implicit_value(double u, double v);

/// Squared distance from (a, 0) to the boundary, as a cubic in x = cos t:
/// H(x) = 16/9 + (a-1)^2 - 4(a-1)x - (4/3)x^2 + (8/3)(a-1)x^3.
/// Throws DomainError unless a in (1/3, 5/3).
double h_poly(double x, double a);

/// Interior critical point x0 of H, the maximizer on (-1, 1).
/// Evaluated in the cancellation-free form x0 = -3(a-1)/(1 + sqrt(1+18(a-1)^2)),
/// which extends continuously to the value 0 at a = 1.
double critical_x0(double a);

/// Radius of the largest disk centred at real a contained in the domain:
/// a - 1/3 for a <= 1, 5/3 - a for a >= 1. Throws DomainError outside (1/3, 5/3).
double inscribed_radius(double a);

/// Centre/maximal-radius pair for the largest disk at real centre a.
struct InscribedDiskQuery {
  double a;
  double r_a;
};

InscribedDiskQuery inscribed_disk(double a);

struct BoundaryDistance {
  double distance;
  double angle;  // minimising boundary parameter t in (-pi, pi]
};

/// The region bounded by the nephroid, with cusps at 1/3 and 5/3.
/// Membership is decided by the winding number of the parametrized boundary,
/// not by the sign of the implicit sextic (kept as a residual check only).
/// All queries are const and safe for concurrent use.
class NephroidDomain {
 public:
  static constexpr double kCuspLeft = 1.0 / 3.0;
  static constexpr double kCuspRight = 5.0 / 3.0;
  static constexpr double kDefaultMembershipTol = 1e-9;
  static constexpr int kDefaultBoundarySamples = 4096;

  explicit NephroidDomain(int boundary_samples = kDefaultBoundarySamples);

  int boundary_samples() const { return samples_; }

  /// Boundary polyline at t_k = -pi + 2 pi k / N, k = 1..N.
  const std::vector<Complex>& boundary() const { return points_; }

  /// Minimum distance from w to the boundary curve and the minimising angle.
  /// Grid scan refined by local golden-section search on |w - boundary_point(t)|.
  BoundaryDistance boundary_distance(Complex w) const;

  /// Winding-number membership. Returns Boundary when the refined distance
  /// to the curve is below tol. Throws AmbiguousMembership when the
  /// accumulated angle is not within 0.1 of a multiple of 2*pi even after
  /// one 4x resampling retry.
  Membership contains(Complex w, double tol = kDefaultMembershipTol) const;

 private:
  double winding_angle(Complex w, int samples) const;  // accumulated argument

  int samples_;
  std::vector<Complex> points_;
};

}  // namespace nephroid
