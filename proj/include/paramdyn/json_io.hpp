#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "paramdyn/param_map.hpp"
#include "paramdyn/parafind.hpp"
#include "paramdyn/point.hpp"
#include "paramdyn/poly.hpp"

namespace paramdyn {

using ordered_json = nlohmann::ordered_json;

// Shared wire format: a polynomial is a JSON array of exact rational strings
// by ascending power of t; the zero polynomial is [].
ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& arr);

ordered_json point_to_json(const ProjPointK& p);
ordered_json verdict_to_json(const PreperiodicVerdict& v);
ordered_json orbit_to_json(const OrbitRecord& rec);

ordered_json rootset_header_json(const RootSet& rs);
std::string rootset_to_csv(const RootSet& rs);  // re,im,residual rows

ordered_json intersection_report_to_json(const IntersectionReport& rep);

}  // namespace paramdyn
