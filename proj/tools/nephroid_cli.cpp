#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nephroid/grid.hpp"
#include "nephroid/plot.hpp"
#include "nephroid/report.hpp"
#include "nephroid/solver.hpp"
#include "nephroid/verify.hpp"

namespace {

using namespace nephroid;

struct RunConfig {
  double tol_radius = 1e-8;
  double tol_touch = 1e-6;
  double membership_tol = 1e-9;
  int boundary_samples = 4096;
  std::string format = "json";
  std::string outdir = ".";
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) {
      throw ParameterError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "tol_radius") cfg.tol_radius = std::stod(val);
    else if (key == "tol_touch") cfg.tol_touch = std::stod(val);
    else if (key == "membership_tol") cfg.membership_tol = std::stod(val);
    else if (key == "boundary_samples") cfg.boundary_samples = std::stoi(val);
    else if (key == "format") cfg.format = val;
    else if (key == "outdir") cfg.outdir = val;
    else throw ParameterError(path + ": unknown key '" + key + "'");
  }
}

void check_config(const RunConfig& cfg) {
  if (!(cfg.tol_radius > 0 && cfg.tol_touch > 0 && cfg.membership_tol > 0)) {
    throw ParameterError("tolerances must be positive");
  }
  if (cfg.boundary_samples < 256) {
    throw ParameterError("boundary_samples must be >= 256");
  }
  if (cfg.format != "json" && cfg.format != "text") {
    throw ParameterError("format must be json or text");
  }
}

struct SelectorArgs {
  std::string name;
  double A = 1.0, B = -1.0, alpha = 0.0, beta = 2.0;
  int n = 1;
};

ClassId make_class(const SelectorArgs& s) {
  const std::string& c = s.name;
  ClassId id;
  if (c == "janowski") id = ClassId::janowski(s.A, s.B);
  else if (c == "starlike") id = ClassId::starlike(s.alpha);
  else if (c == "convex") id = ClassId::convex();
  else if (c == "bs" || c == "booth") id = ClassId::booth(s.alpha);
  else if (c == "lemniscate" || c == "lem") id = ClassId::lemniscate(s.alpha);
  else if (c == "exp") id = ClassId::exponential(s.alpha);
  else if (c == "rl") id = ClassId::shifted_lemniscate();
  else if (c == "cardioid") id = ClassId::cardioid();
  else if (c == "rational") id = ClassId::rational();
  else if (c == "lune") id = ClassId::lune();
  else if (c == "sine") id = ClassId::sine();
  else if (c == "g1") id = ClassId::g1(s.n);
  else if (c == "g2") id = ClassId::g2(s.n);
  else if (c == "g3") id = ClassId::g3(s.n);
  else if (c == "g4") id = ClassId::g4(s.n);
  else if (c == "cs") id = ClassId::close_to_star(s.n, s.alpha);
  else if (c == "w") id = ClassId::macgregor(s.n);
  else if (c == "m") id = ClassId::uralegaddi(s.n, s.beta);
  else throw ParameterError("unknown class selector '" + c + "'");
  validate(id);
  return id;
}

void add_selector_options(CLI::App* cmd, SelectorArgs& s, bool positional_required) {
  auto* pos = cmd->add_option("selector", s.name, "class selector (janowski, starlike, convex, bs, lemniscate, exp, rl, cardioid, rational, lune, sine, g1..g4, cs, w, m)");
  if (positional_required) pos->required();
  cmd->add_option("--A", s.A, "Janowski A");
  cmd->add_option("--B", s.B, "Janowski B");
  cmd->add_option("--alpha", s.alpha, "order parameter in [0,1)");
  cmd->add_option("--beta", s.beta, "Uralegaddi bound > 1");
  cmd->add_option("--n", s.n, "series index >= 1");
}

int cmd_radius(const RunConfig& cfg, const SelectorArgs& sel) {
  const ClassId id = make_class(sel);
  const RadiusResult rr = reconcile(id, cfg.tol_radius);
  if (cfg.format == "json") {
    std::cout << radius_json(rr).dump(2) << "\n";
  } else {
    std::cout << radius_text(rr) << "\n";
  }
  return rr.agree ? 0 : 2;
}

int cmd_verify(const RunConfig& cfg, const SelectorArgs& sel, bool all) {
  const NephroidDomain domain(cfg.boundary_samples);
  std::vector<ClassId> ids;
  if (all) {
    ids = representative_set();
  } else {
    ids.push_back(make_class(sel));
  }

  ordered_json arr = ordered_json::array();
  std::vector<std::string> offenders;
  std::string text;
  for (const ClassId& id : ids) {
    const SharpnessReport sr = check_sharpness(id, domain, cfg.tol_touch);
    const RadiusResult rr = reconcile(id, cfg.tol_radius);
    if (!sr.matches_expectation()) {
      offenders.push_back(class_slug(id) + " " + param_string(id));
    }
    if (cfg.format == "json") {
      arr.push_back(verify_json(sr, rr));
    } else {
      text += verify_text(sr, rr) + "\n";
    }
  }
  if (cfg.format == "json") {
    std::cout << (all ? arr.dump(2) : arr.front().dump(2)) << "\n";
  } else {
    std::cout << text;
  }
  for (const std::string& s : offenders) {
    std::cerr << "expectation mismatch: " << s << "\n";
  }
  return offenders.empty() ? 0 : 2;
}

int cmd_table(const RunConfig& cfg) {
  std::vector<RadiusResult> rows;
  for (const ClassId& id : standard_grid()) {
    rows.push_back(reconcile(id, cfg.tol_radius));
  }
  std::cout << (cfg.format == "json" ? table_json(rows) : table_text(rows));
  return 0;
}

int cmd_plot(const RunConfig& cfg, const SelectorArgs& sel, double r, bool at_rho,
             bool margin_plot) {
  PlotSpec spec;
  if (sel.name == "nephroid") {
    spec = nephroid_figure();
  } else {
    const ClassId id = make_class(sel);
    if (margin_plot) {
      spec = margin_figure(id);
    } else {
      double rr = r;
      if (at_rho) {
        rr = closed_form_radius(id);
        if (rr >= 1.0) rr = 1.0 - 1e-9;
      }
      if (!(rr > 0.0 && rr < 1.0)) {
        throw ParameterError("plot: need --at-rho or --r in (0,1)");
      }
      spec = sharpness_figure(id, rr);
    }
  }
  spec.output_path = cfg.outdir + "/" + spec.output_path;
  write_svg(spec);
  std::cout << spec.output_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp radii for the nephroid target region: closed forms, "
               "containment oracle, sharpness verification, figures"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_file;
  std::string out_flag;
  std::string format_flag;
  app.add_option("--config", config_file, "key=value config file");
  app.add_option("--out", out_flag, "output directory (overrides NEPHROID_OUT)");
  app.add_option("--format", format_flag, "json|text");
  app.add_option("--tol-radius", cfg.tol_radius, "oracle agreement tolerance");
  app.add_option("--tol-touch", cfg.tol_touch, "touch detection tolerance");
  app.add_option("--membership-tol", cfg.membership_tol, "boundary membership tolerance");
  app.add_option("--boundary-samples", cfg.boundary_samples, "boundary resolution");

  SelectorArgs sel;
  bool all = false, at_rho = false, margin_plot = false;
  double r_flag = 0.0;

  auto* radius = app.add_subcommand("radius", "closed form vs containment oracle");
  radius->fallthrough();
  add_selector_options(radius, sel, true);

  auto* verify = app.add_subcommand("verify", "sharpness verification");
  verify->fallthrough();
  add_selector_options(verify, sel, false);
  verify->add_flag("--all", all, "verify one representative per family");

  app.add_subcommand("table", "radius table over the standard parameter grid")
      ->fallthrough();

  auto* plot = app.add_subcommand("plot", "emit SVG figures");
  plot->fallthrough();
  add_selector_options(plot, sel, true);
  plot->add_option("--r", r_flag, "image circle radius");
  plot->add_flag("--at-rho", at_rho, "use the closed-form radius");
  plot->add_flag("--margin", margin_plot, "plot the containment margin g(r)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (!config_file.empty()) apply_config_file(cfg, config_file);
    if (const char* env = std::getenv("NEPHROID_OUT")) cfg.outdir = env;
    if (!out_flag.empty()) cfg.outdir = out_flag;
    if (!format_flag.empty()) cfg.format = format_flag;
    check_config(cfg);

    if (app.got_subcommand("radius")) return cmd_radius(cfg, sel);
    if (app.got_subcommand("verify")) {
      if (!all && sel.name.empty()) {
        throw ParameterError("verify: give a class selector or --all");
      }
      return cmd_verify(cfg, sel, all);
    }
    if (app.got_subcommand("table")) return cmd_table(cfg);
    if (app.got_subcommand("plot")) return cmd_plot(cfg, sel, r_flag, at_rho, margin_plot);
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
