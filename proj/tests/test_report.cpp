#include <doctest.h>

#include "nephroid/grid.hpp"
#include "nephroid/report.hpp"

using namespace nephroid;

namespace {
const std::vector<std::string> kSchemaKeys = {
    "class", "params", "closed_form", "oracle",
    "agree", "sharp",  "touch_points", "clearance"};

void check_schema(const ordered_json& j) {
  REQUIRE(j.is_object());
  REQUIRE(j.size() == kSchemaKeys.size());
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    CHECK(it.key() == kSchemaKeys[i]);
  }
}
}  // namespace

TEST_CASE("radius json carries the stable schema") {
  const RadiusResult rr = reconcile(ClassId::starlike(0.0));
  const ordered_json j = radius_json(rr);
  check_schema(j);
  CHECK(j["class"] == "starlike");
  CHECK(j["params"]["alpha"] == 0.0);
  CHECK(j["closed_form"] == doctest::Approx(0.25));
  CHECK(j["oracle"] == doctest::Approx(0.25));
  CHECK(j["agree"] == true);
  CHECK(j["sharp"] == true);
  CHECK(j["clearance"].is_null());
}

TEST_CASE("verify json carries the stable schema") {
  const NephroidDomain dom;
  const ClassId id = ClassId::lune();
  const ordered_json j = verify_json(check_sharpness(id, dom), reconcile(id));
  check_schema(j);
  CHECK(j["class"] == "lune");
  CHECK(j["sharp"] == false);
  CHECK(j["clearance"].is_number());
  CHECK(j["clearance"].get<double>() > 1e-3);
}

TEST_CASE("params json per family") {
  CHECK(params_json(ClassId::janowski(1.0, -0.5)) ==
        ordered_json({{"A", 1.0}, {"B", -0.5}}));
  CHECK(params_json(ClassId::uralegaddi(2, 1.5)) ==
        ordered_json({{"n", 2}, {"beta", 1.5}}));
  CHECK(params_json(ClassId::convex()).empty());
}

TEST_CASE("fmt9 prints 9 significant digits") {
  CHECK(fmt9(0.25) == "0.25");
  CHECK(fmt9(0.874763929) == "0.874763929");
  CHECK(fmt9(1.0) == "1");
}

TEST_CASE("table output is deterministic") {
  std::vector<RadiusResult> rows;
  for (const ClassId& id : representative_set()) rows.push_back(reconcile(id));
  std::vector<RadiusResult> rows2;
  for (const ClassId& id : representative_set()) rows2.push_back(reconcile(id));
  CHECK(table_text(rows) == table_text(rows2));
  CHECK(table_json(rows) == table_json(rows2));
  CHECK(table_text(rows).find("not sharp") != std::string::npos);
}
