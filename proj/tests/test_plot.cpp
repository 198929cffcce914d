#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nephroid/plot.hpp"

using namespace nephroid;

TEST_CASE("render_svg is byte-identical across runs") {
  CHECK(render_svg(nephroid_figure()) == render_svg(nephroid_figure()));
  const ClassId id = ClassId::cardioid();
  const double rho = closed_form_radius(id);
  CHECK(render_svg(sharpness_figure(id, rho)) == render_svg(sharpness_figure(id, rho)));
  CHECK(render_svg(margin_figure(id)) == render_svg(margin_figure(id)));
}

TEST_CASE("figures keep every curve point inside the viewport") {
  auto check_spec = [](const PlotSpec& spec) {
    for (const Curve& c : spec.curves) {
      for (const Complex& p : c.points) {
        CHECK(p.real() >= spec.re_min);
        CHECK(p.real() <= spec.re_max);
        CHECK(p.imag() >= spec.im_min);
        CHECK(p.imag() <= spec.im_max);
      }
    }
  };
  check_spec(nephroid_figure());
  check_spec(sharpness_figure(ClassId::booth(0.9), closed_form_radius(ClassId::booth(0.9))));
  check_spec(sharpness_figure(ClassId::lune(), closed_form_radius(ClassId::lune())));
  check_spec(margin_figure(ClassId::g1(2)));
}

TEST_CASE("svg structure carries the expected elements") {
  const std::string svg = render_svg(sharpness_figure(ClassId::cardioid(), 0.4));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("1/3") != std::string::npos);
  CHECK(svg.find("5/3") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("write_svg creates directories and round-trips bytes") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "nephroid_plot_test";
  fs::remove_all(dir);
  const ClassId id = ClassId::booth(0.1);
  const double rho = closed_form_radius(id);
  const std::string rel = plot_relpath(id, rho);
  CHECK(rel.rfind("plots/bs/alpha0.1_r", 0) == 0);
  const std::string path = (dir / rel).string();
  write_svg(path, sharpness_figure(id, rho));

  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == render_svg(sharpness_figure(id, rho)));
  fs::remove_all(dir);
}

TEST_CASE("write_svg failure raises IoError") {
  namespace fs = std::filesystem;
  const fs::path file = fs::temp_directory_path() / "nephroid_blocker";
  std::ofstream(file.string()) << "x";
  CHECK_THROWS_AS(write_svg((file / "sub" / "a.svg").string(), nephroid_figure()), IoError);
  fs::remove(file);
}

TEST_CASE("sharpness_figure validates the radius") {
  CHECK_THROWS_AS(sharpness_figure(ClassId::convex(), 1.0), DomainError);
}
