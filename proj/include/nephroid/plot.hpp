#pragma once

#include <string>
#include <vector>

#include "nephroid/classes.hpp"
#include "nephroid/geometry.hpp"

namespace nephroid {

struct Curve {
  std::vector<Complex> points;
  std::string stroke = "#1f6feb";
  double width = 1.5;
  bool closed = false;
  std::string label;
};

struct Marker {
  Complex at;
  std::string label;
};

struct PlotSpec {
  int width = 800;
  int height = 800;
  // Viewport bounds in the complex plane. The defaults contain every
  // boundary sample (the curve spans u in [0.057, 1.943], v in [-4/3, 4/3]).
  double re_min = -0.2;
  double re_max = 2.2;
  double im_min = -1.4;
  double im_max = 1.4;
  std::string title;
  std::string output_path;  // used by write_svg(spec)
  std::vector<Curve> curves;
  std::vector<Marker> markers;

  /// Grows the viewport so every curve point lies inside it.
  void fit_curves(double pad = 0.05);
};

/// Deterministic SVG for the spec: fixed sampling, fixed formatting, no
/// timestamps. The affine map preserves aspect ratio.
std::string render_svg(const PlotSpec& spec);

/// Writes render_svg output, creating parent directories. Throws IoError.
void write_svg(const std::string& path, const PlotSpec& spec);
void write_svg(const PlotSpec& spec);  // writes to spec.output_path

/// SVG bytes for the boundary-plus-image figure at |z| = r.
std::string render_sharpness(const ClassId& id, double r);

/// Boundary-only figure.
PlotSpec nephroid_figure();

/// Boundary plus the extremal image Q(r e^{it}) with the cusp values marked.
PlotSpec sharpness_figure(const ClassId& id, double r);

/// Containment margin g(r) over (0, 1) with the zero axis.
PlotSpec margin_figure(const ClassId& id);

/// Relative output path plots/<class>/<params>_r<r>.svg.
std::string plot_relpath(const ClassId& id, double r);

}  // namespace nephroid
