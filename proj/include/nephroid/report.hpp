#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nephroid/solver.hpp"
#include "nephroid/verify.hpp"

namespace nephroid {

using ordered_json = nlohmann::ordered_json;

/// %.9g, matching the CLI's 9-significant-digit contract.
std::string fmt9(double v);

ordered_json params_json(const ClassId& id);

// Machine output is schema-stable with exactly the keys
// {class, params, closed_form, oracle, agree, sharp, touch_points, clearance}.
ordered_json radius_json(const RadiusResult& rr);
ordered_json verify_json(const SharpnessReport& sr, const RadiusResult& rr);

std::string radius_text(const RadiusResult& rr);
std::string verify_text(const SharpnessReport& sr, const RadiusResult& rr);

std::string table_text(const std::vector<RadiusResult>& rows);
std::string table_json(const std::vector<RadiusResult>& rows);

}  // namespace nephroid
