#include "nephroid/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "nephroid/solver.hpp"

namespace nephroid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kCurveSamples = 1024;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string num_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct Transform {
  double scale, x0, y0, re_c, im_c;

  static Transform fit(const PlotSpec& s) {
    const double re_span = s.re_max - s.re_min;
    const double im_span = s.im_max - s.im_min;
    const double scale = std::min(s.width / re_span, s.height / im_span);
    return {scale, s.width / 2.0, s.height / 2.0, (s.re_min + s.re_max) / 2.0,
            (s.im_min + s.im_max) / 2.0};
  }
  double x(Complex w) const { return x0 + (w.real() - re_c) * scale; }
  double y(Complex w) const { return y0 - (w.imag() - im_c) * scale; }
};

}  // namespace

void PlotSpec::fit_curves(double pad) {
  for (const Curve& c : curves) {
    for (const Complex& p : c.points) {
      re_min = std::min(re_min, p.real() - pad);
      re_max = std::max(re_max, p.real() + pad);
      im_min = std::min(im_min, p.imag() - pad);
      im_max = std::max(im_max, p.imag() + pad);
    }
  }
}

std::string render_svg(const PlotSpec& spec) {
  const Transform tr = Transform::fit(spec);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " "
      << spec.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  if (!spec.title.empty()) {
    out << "<text x=\"12\" y=\"24\" font-family=\"monospace\" font-size=\"16\" "
           "fill=\"#24292f\">"
        << spec.title << "</text>\n";
  }
  for (const Curve& c : spec.curves) {
    if (c.points.empty()) continue;
    out << "<path fill=\"none\" stroke=\"" << c.stroke << "\" stroke-width=\""
        << num(c.width) << "\" d=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      out << (i == 0 ? "M" : "L") << num(tr.x(c.points[i])) << ","
          << num(tr.y(c.points[i]));
    }
    if (c.closed) out << "Z";
    out << "\"/>\n";
  }
  for (const Marker& m : spec.markers) {
    const double x = tr.x(m.at), y = tr.y(m.at);
    out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
        << "\" r=\"4\" fill=\"#cf222e\"/>\n";
    out << "<text x=\"" << num(x + 8) << "\" y=\"" << num(y - 8)
        << "\" font-family=\"monospace\" font-size=\"14\" fill=\"#cf222e\">"
        << m.label << "</text>\n";
  }
  int legend_row = 0;
  for (const Curve& c : spec.curves) {
    if (c.label.empty()) continue;
    const double y = 46.0 + 18.0 * legend_row++;
    out << "<text x=\"12\" y=\"" << num(y)
        << "\" font-family=\"monospace\" font-size=\"13\" fill=\"" << c.stroke
        << "\">&#8212; " << c.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg(const std::string& path, const PlotSpec& spec) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path p(path);
  if (p.has_parent_path()) {
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create " + p.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << render_svg(spec);
  if (!out) throw IoError("write failed for " + path);
}

void write_svg(const PlotSpec& spec) {
  if (spec.output_path.empty()) throw IoError("write_svg: empty output_path");
  write_svg(spec.output_path, spec);
}

namespace {

Curve boundary_curve() {
  Curve c;
  c.stroke = "#24292f";
  c.width = 2.0;
  c.closed = true;
  c.points.reserve(kCurveSamples);
  for (int k = 1; k <= kCurveSamples; ++k) {
    c.points.push_back(boundary_point(-kPi + 2.0 * kPi * k / kCurveSamples));
  }
  return c;
}

void add_cusp_markers(PlotSpec& spec) {
  spec.markers.push_back({{NephroidDomain::kCuspLeft, 0.0}, "1/3"});
  spec.markers.push_back({{NephroidDomain::kCuspRight, 0.0}, "5/3"});
}

}  // namespace

PlotSpec nephroid_figure() {
  PlotSpec spec;
  spec.title = "nephroid boundary";
  spec.output_path = "plots/nephroid/boundary.svg";
  spec.curves.push_back(boundary_curve());
  add_cusp_markers(spec);
  return spec;
}

PlotSpec sharpness_figure(const ClassId& id, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("sharpness_figure: need 0 < r < 1");
  PlotSpec spec;
  spec.title = class_slug(id) + " " + param_string(id) + " r=" + num_g(r);
  spec.output_path = plot_relpath(id, r);
  spec.curves.push_back(boundary_curve());
  spec.curves.back().label = "boundary";

  Curve img;
  img.stroke = "#1f6feb";
  img.width = 1.5;
  img.closed = true;
  img.label = "Q image";
  const ExtremalQ eq = extremal_q(id);
  img.points.reserve(kCurveSamples);
  for (int k = 1; k <= kCurveSamples; ++k) {
    img.points.push_back(eq.q(std::polar(r, -kPi + 2.0 * kPi * k / kCurveSamples)));
  }
  spec.curves.push_back(std::move(img));
  add_cusp_markers(spec);
  spec.fit_curves();  // images past rho may leave the default viewport
  return spec;
}

std::string render_sharpness(const ClassId& id, double r) {
  return render_svg(sharpness_figure(id, r));
}

PlotSpec margin_figure(const ClassId& id) {
  PlotSpec spec;
  spec.width = 800;
  spec.height = 500;
  spec.title = "margin g(r): " + class_slug(id) + " " + param_string(id);
  spec.output_path = "plots/" + class_slug(id) + "/" + param_string(id) + "_margin.svg";

  Curve g;
  g.stroke = "#1f6feb";
  g.label = "g(r)";
  const DiskBound bound = disk_bound(id);
  double lo = 1e9, hi = -1e9;
  for (int k = 1; k < kCurveSamples; ++k) {
    const double r = static_cast<double>(k) / kCurveSamples;
    const double c = bound.center(r);
    if (c <= NephroidDomain::kCuspLeft || c >= NephroidDomain::kCuspRight) break;
    const double gr = inscribed_radius(c) - bound.radius(r);
    g.points.push_back({r, gr});
    lo = std::min(lo, gr);
    hi = std::max(hi, gr);
  }

  Curve axis;
  axis.stroke = "#d0d7de";
  axis.width = 1.0;
  axis.points = {{0.0, 0.0}, {1.0, 0.0}};

  spec.re_min = 0.0;
  spec.re_max = 1.0;
  spec.im_min = std::min(lo, 0.0) - 0.05;
  spec.im_max = std::max(hi, 0.0) + 0.05;
  spec.curves.push_back(std::move(axis));
  spec.curves.push_back(std::move(g));
  return spec;
}

std::string plot_relpath(const ClassId& id, double r) {
  return "plots/" + class_slug(id) + "/" + param_string(id) + "_r" + num_g(r) + ".svg";
}

}  // namespace nephroid
