#include "nephroid/solver.hpp"

#include <cmath>
#include <limits>

namespace nephroid {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kScanPoints = 1000;
constexpr double kTail = 1.0 - 1e-9;  // keep clear of |z| = 1 poles
}  // namespace

namespace {

double margin_of(const DiskBound& bound, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("margin: r must lie in [0, 1)");
  }
  const double c = bound.center(r);
  if (c <= NephroidDomain::kCuspLeft || c >= NephroidDomain::kCuspRight) {
    return -kInf;
  }
  return inscribed_radius(c) - bound.radius(r);
}

}  // namespace

double margin(const ClassId& id, double r) {
  return margin_of(disk_bound(id), r);
}

double oracle_radius_on(const std::function<double(double)>& g, double tol) {
  if (!(tol > 0.0)) throw DomainError("oracle_radius: tol must be positive");

  double lo = 0.0, hi = 0.0;  // bracket with g(lo) >= 0 > g(hi)
  bool bracketed = false;
  for (int k = 1; k < kScanPoints; ++k) {
    const double r = static_cast<double>(k) / kScanPoints;
    if (g(r) < 0.0) {
      if (k == 1) {
        throw NoRootBracket("margin already negative at r = 0.001 (defective bound)");
      }
      lo = static_cast<double>(k - 1) / kScanPoints;
      hi = r;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    if (g(kTail) >= 0.0) return 1.0;  // contained on the whole scan: class inclusion
    lo = static_cast<double>(kScanPoints - 1) / kScanPoints;
    hi = kTail;
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double oracle_radius(const ClassId& id, double tol) {
  const DiskBound bound = disk_bound(id);
  return oracle_radius_on([&bound](double r) { return margin_of(bound, r); }, tol);
}

RadiusResult reconcile(const ClassId& id, double tol_radius) {
  RadiusResult res;
  res.id = id;
  res.closed_form = closed_form_radius(id);
  res.oracle = oracle_radius(id);
  res.agree = std::abs(res.closed_form - res.oracle) < tol_radius;
  const DiskBound bound = disk_bound(id);
  for (int k = 1; k <= 32; ++k) {
    const double r = static_cast<double>(k) / 33.0;
    res.margin_at.emplace_back(r, margin_of(bound, r));
  }
  return res;
}

}  // namespace nephroid
