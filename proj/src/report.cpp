#include "nephroid/report.hpp"

#include <cstdio>
#include <sstream>

namespace nephroid {

std::string fmt9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

ordered_json params_json(const ClassId& id) {
  ordered_json p = ordered_json::object();
  switch (id.tag) {
    case ClassTag::Janowski:
      p["A"] = id.A;
      p["B"] = id.B;
      break;
    case ClassTag::StarlikeAlpha:
    case ClassTag::BoothBS:
    case ClassTag::LemniscateL:
    case ClassTag::ExpAlphaE:
      p["alpha"] = id.alpha;
      break;
    case ClassTag::CloseToStar:
      p["n"] = id.n;
      p["alpha"] = id.alpha;
      break;
    case ClassTag::RatioG1:
    case ClassTag::RatioG2:
    case ClassTag::RatioG3:
    case ClassTag::RatioG4:
    case ClassTag::MacGregorW:
      p["n"] = id.n;
      break;
    case ClassTag::UralegaddiM:
      p["n"] = id.n;
      p["beta"] = id.beta;
      break;
    default:
      break;
  }
  return p;
}

namespace {

ordered_json touches_json(const std::vector<TouchPoint>& touches) {
  ordered_json arr = ordered_json::array();
  for (const TouchPoint& t : touches) {
    arr.push_back({{"angle", t.angle}, {"value", t.value}});
  }
  return arr;
}

const char* sharp_label(const ClassId& id, double rho) {
  if (!is_sharp_family(id.tag)) return "not sharp";
  return rho >= 1.0 ? "inclusion" : "sharp";
}

}  // namespace

ordered_json radius_json(const RadiusResult& rr) {
  const ExtremalQ eq = extremal_q(rr.id);
  ordered_json j = ordered_json::object();
  j["class"] = class_slug(rr.id);
  j["params"] = params_json(rr.id);
  j["closed_form"] = rr.closed_form;
  j["oracle"] = rr.oracle;
  j["agree"] = rr.agree;
  j["sharp"] = eq.sharp && rr.closed_form < 1.0;
  j["touch_points"] = touches_json(eq.touches);
  j["clearance"] = nullptr;
  return j;
}

ordered_json verify_json(const SharpnessReport& sr, const RadiusResult& rr) {
  ordered_json j = ordered_json::object();
  j["class"] = class_slug(sr.id);
  j["params"] = params_json(sr.id);
  j["closed_form"] = rr.closed_form;
  j["oracle"] = rr.oracle;
  j["agree"] = rr.agree;
  j["sharp"] = sr.sharp_confirmed;
  j["touch_points"] = touches_json(sr.touch_found);
  j["clearance"] = sr.min_clearance_at_rho;
  return j;
}

std::string radius_text(const RadiusResult& rr) {
  std::ostringstream out;
  out << class_slug(rr.id) << " " << param_string(rr.id)
      << "  closed_form=" << fmt9(rr.closed_form) << "  oracle=" << fmt9(rr.oracle)
      << "  agree=" << (rr.agree ? "yes" : "NO") << "  ["
      << sharp_label(rr.id, rr.closed_form) << "]";
  return out.str();
}

std::string verify_text(const SharpnessReport& sr, const RadiusResult& rr) {
  std::ostringstream out;
  out << class_slug(sr.id) << " " << param_string(sr.id) << "  rho=" << fmt9(sr.rho)
      << "  clearance=" << fmt9(sr.min_clearance_at_rho) << "  touches=[";
  for (std::size_t i = 0; i < sr.touch_found.size(); ++i) {
    if (i) out << ", ";
    out << fmt9(sr.touch_found[i].value) << "@t=" << fmt9(sr.touch_found[i].angle);
  }
  out << "]  inside@0.99rho=" << (sr.inside_at_099 ? "yes" : "NO");
  if (sr.outside_witness) {
    out << "  exit@r=" << fmt9(sr.outside_witness->r);
  }
  out << "  sharp_confirmed=" << (sr.sharp_confirmed ? "yes" : "no")
      << "  oracle_agree=" << (rr.agree ? "yes" : "NO")
      << (sr.matches_expectation() ? "  [ok]" : "  [MISMATCH]");
  return out.str();
}

std::string table_text(const std::vector<RadiusResult>& rows) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %-20s %16s %16s %-6s %-10s\n", "class",
                "params", "closed_form", "oracle", "agree", "status");
  out << line;
  for (const RadiusResult& rr : rows) {
    std::snprintf(line, sizeof(line), "%-10s %-20s %16s %16s %-6s %-10s\n",
                  class_slug(rr.id).c_str(), param_string(rr.id).c_str(),
                  fmt9(rr.closed_form).c_str(), fmt9(rr.oracle).c_str(),
                  rr.agree ? "yes" : "NO", sharp_label(rr.id, rr.closed_form));
    out << line;
  }
  return out.str();
}

std::string table_json(const std::vector<RadiusResult>& rows) {
  ordered_json arr = ordered_json::array();
  for (const RadiusResult& rr : rows) arr.push_back(radius_json(rr));
  return arr.dump(2) + "\n";
}

}  // namespace nephroid
