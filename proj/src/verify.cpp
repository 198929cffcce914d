#include "nephroid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace nephroid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRadiusCap = 1.0 - 1e-9;  // keep sweeps off |z| = 1 poles
constexpr int kSweepSamples = 2048;
constexpr double kNonSharpFloor = 1e-3;    // LuneMoon/SineS clearance floor

template <typename F>
double golden_argmin(F f, double lo, double hi, double tol = 1e-12) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - invphi * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + invphi * (b - a); f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace

bool SharpnessReport::matches_expectation() const {
  if (!is_sharp_family(id.tag)) {
    return !sharp_confirmed && min_clearance_at_rho > kNonSharpFloor;
  }
  if (rho >= 1.0) return true;  // inclusion case: no touch claim on an interior circle
  const std::size_t declared = extremal_q(id).touches.size();
  return sharp_confirmed && touch_found.size() == declared;
}

std::vector<Complex> image_sweep(const ClassId& id, double r, int samples) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("image_sweep: need 0 < r < 1");
  if (samples < 64) throw DomainError("image_sweep: need samples >= 64");
  const ExtremalQ eq = extremal_q(id);
  std::vector<Complex> out;
  out.reserve(samples);
  for (int k = 1; k <= samples; ++k) {
    out.push_back(eq.q(std::polar(r, -kPi + 2.0 * kPi * k / samples)));
  }
  return out;
}

SharpnessReport check_sharpness(const ClassId& id, const NephroidDomain& domain,
                                double tol_touch) {
  validate(id);
  const ExtremalQ eq = extremal_q(id);

  SharpnessReport rep;
  rep.id = id;
  rep.rho = closed_form_radius(id);
  rep.expected_sharp = eq.sharp && rep.rho < 1.0;

  const double rho_eff = std::min(rep.rho, kRadiusCap);
  const double h = 2.0 * kPi / kSweepSamples;

  auto clearance = [&](double r, double t) {
    return domain.boundary_distance(eq.q(std::polar(r, t))).distance;
  };

  // Clearance sweep on |z| = rho with local refinement at the grid minimum.
  double min_cl = std::numeric_limits<double>::infinity();
  int min_k = 1;
  {
    const std::vector<Complex> img = image_sweep(id, rho_eff, kSweepSamples);
    for (int k = 1; k <= kSweepSamples; ++k) {
      const double d = domain.boundary_distance(img[k - 1]).distance;
      if (d < min_cl) {
        min_cl = d;
        min_k = k;
      }
    }
  }
  {
    const double tc = -kPi + h * min_k;
    auto f = [&](double t) { return clearance(rho_eff, t); };
    const double t_hat = golden_argmin(f, tc - h, tc + h);
    min_cl = std::min(min_cl, f(t_hat));
  }

  // Declared touch angles: refine |Q - touch value| and record contacts.
  for (const TouchPoint& tp : eq.touches) {
    auto err = [&](double t) {
      return std::abs(eq.q(std::polar(rho_eff, t)) - Complex(tp.value, 0.0));
    };
    const double t_hat = golden_argmin(err, tp.angle - 4.0 * h, tp.angle + 4.0 * h);
    if (err(t_hat) < tol_touch) {
      rep.touch_found.push_back({t_hat, tp.value});
    }
    min_cl = std::min(min_cl, clearance(rho_eff, t_hat));
  }
  rep.min_clearance_at_rho = min_cl;

  // Strict interiority at 0.99 rho: positive clearance everywhere plus
  // winding spot checks (the image curve is continuous, so it can only
  // change side where the clearance vanishes).
  {
    const std::vector<Complex> img = image_sweep(id, 0.99 * rho_eff, kSweepSamples);
    bool inside = true;
    for (const Complex& w : img) {
      if (!(domain.boundary_distance(w).distance > 0.0)) {
        inside = false;
        break;
      }
    }
    for (int k = 0; inside && k < kSweepSamples; k += 64) {
      inside = domain.contains(img[k]) == Membership::Inside;
    }
    rep.inside_at_099 = inside;
  }

  // Exterior witness just past rho (spec scan window (rho, rho + 0.05]).
  if (rep.rho < 1.0) {
    const double cap = std::min(kRadiusCap, rep.rho + 0.05);
    std::vector<double> radii{std::min(rep.rho * 1.001, cap)};
    for (int j = 1; j <= 4; ++j) {
      radii.push_back(rep.rho + j * (cap - rep.rho) / 4.0);
    }
    for (double r : radii) {
      if (rep.outside_witness) break;
      // the image exits next to a declared touch angle first
      for (const TouchPoint& tp : eq.touches) {
        const Complex w = eq.q(std::polar(r, tp.angle));
        if (domain.contains(w) == Membership::Outside) {
          rep.outside_witness = OutsideWitness{r, tp.angle};
          break;
        }
      }
      if (rep.outside_witness) break;
      for (int k = 1; k <= 256; ++k) {
        const double t = -kPi + 2.0 * kPi * k / 256.0;
        const Complex w = eq.q(std::polar(r, t));
        if (domain.contains(w) == Membership::Outside) {
          rep.outside_witness = OutsideWitness{r, t};
          break;
        }
      }
    }
  }

  rep.sharp_confirmed = rep.min_clearance_at_rho < tol_touch && rep.inside_at_099 &&
                        (rep.rho >= 1.0 || rep.outside_witness.has_value());
  return rep;
}

}  // namespace nephroid
