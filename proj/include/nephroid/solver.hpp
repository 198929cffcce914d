#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "nephroid/classes.hpp"

namespace nephroid {

struct RadiusResult {
  ClassId id;
  double closed_form = 0.0;
  double oracle = 0.0;
  bool agree = false;
  std::vector<std::pair<double, double>> margin_at;  // sampled (r, g(r))
};

/// Containment margin g(r) = inscribed_radius(center(r)) - radius(r), or
/// -infinity when the disk centre leaves (1/3, 5/3). g(r) >= 0 iff the
/// class's Q-disk at |z| = r fits inside the domain by the inscribed-disk
/// bound. Throws DomainError for r outside [0, 1).
double margin(const ClassId& id, double r);

/// Largest r in (0, 1) with g >= 0 up to r: coarse 1000-point scan to
/// bracket the first sign change, then bisection to tol; exactly 1 when the
/// margin never fails. The oracle uses only the inscribed-disk bound and the
/// catalogued disk bounds, never the closed forms.
double oracle_radius(const ClassId& id, double tol = 1e-12);

/// Driver over an arbitrary margin function (same scan/bisection contract).
double oracle_radius_on(const std::function<double(double)>& g, double tol);

RadiusResult reconcile(const ClassId& id, double tol_radius = 1e-8);

}  // namespace nephroid
