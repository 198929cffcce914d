#pragma once

#include <optional>
#include <vector>

#include "nephroid/classes.hpp"
#include "nephroid/geometry.hpp"

namespace nephroid {

struct OutsideWitness {
  double r;
  double angle;
};

struct SharpnessReport {
  ClassId id;
  double rho = 0.0;                  // radius under test (closed form)
  double min_clearance_at_rho = 0.0; // min boundary distance of Q(rho e^{it})
  std::vector<TouchPoint> touch_found;
  bool inside_at_099 = false;        // image at 0.99 rho strictly inside
  std::optional<OutsideWitness> outside_witness;
  bool sharp_confirmed = false;
  bool expected_sharp = false;       // catalogue sharp and rho < 1

  bool matches_expectation() const;
};

/// Q(r e^{it_k}) on the uniform angle grid t_k = -pi + 2 pi k/samples.
/// Throws DomainError unless 0 < r < 1 and samples >= 64; PoleProximity
/// propagates from the Q evaluation.
std::vector<Complex> image_sweep(const ClassId& id, double r, int samples);

/// Sweeps the extremal image at rho (2048 samples, golden-section refinement
/// near candidate touch angles), checks strict interiority at 0.99 rho, and
/// scans (rho, min(1, rho + 0.05)] for an exterior witness. Radii are capped
/// at 1 - 1e-9. For LuneMoon/SineS the expected outcome is a positive
/// clearance with sharp_confirmed false.
SharpnessReport check_sharpness(const ClassId& id, const NephroidDomain& domain,
                                double tol_touch = 1e-6);

}  // namespace nephroid
