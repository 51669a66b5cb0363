// JSON (de)serialization shared by the CLI and the tests. Ring elements
// travel as canonical text; series and numerators as arrays of those texts
// indexed by t-degree; denominators as [a, b] pairs meaning (1 - L^a t^b).
// All emitters use ordered maps so identical inputs produce identical bytes.
#pragma once

#include <string>

#include "json.hpp"

#include "mzeta/curve.hpp"
#include "mzeta/oracle.hpp"
#include "mzeta/series.hpp"
#include "mzeta/zeta.hpp"

namespace mzeta {

using Json = nlohmann::ordered_json;

Json rational_form_to_json(const RationalForm& form);
Json series_to_json(const TruncatedSeries& series);
Json profile_to_json(const ZetaProfile& profile);

// Curve model files: {"kind":"plane","p":3,"e":1,"poly":[[c,[a,b,g]],...]} or
// {"kind":"hyperelliptic","p":3,"e":1,"f":[c0,c1,...]}.
CurveModel curve_model_from_json(const Json& j);
Json curve_model_to_json(const CurveModel& model);

// {"g":..,"low_classes":[..],"pic0":".."} with ring elements in text form.
PointedCurveData pointed_curve_from_json(const Json& j);
// {"g":..,"n":..,"sym_classes":[..]}
PointlessCurveData pointless_curve_from_json(const Json& j);

CurveModel load_curve_model(const std::string& path);

}  // namespace mzeta
