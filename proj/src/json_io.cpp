#include "mzeta/json_io.hpp"

#include <fstream>

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

[[noreturn]] void shape_error(const std::string& what) {
    throw ParseError("json payload: " + what);
}

void require_key(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) shape_error("missing key \"" + std::string(key) + "\"");
}

std::uint32_t uint_field(const Json& j, const char* key) {
    require_key(j, key);
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffull)
        shape_error("\"" + std::string(key) + "\" must be a small nonnegative integer");
    return v.get<std::uint32_t>();
}

}  // namespace

Json rational_form_to_json(const RationalForm& form) {
    Json numerator = Json::array();
    for (const auto& c : form.numerator().coefficients()) numerator.push_back(c.str());
    if (numerator.empty()) numerator.push_back("0");
    Json denominator = Json::array();
    for (const auto& f : form.denominator())
        denominator.push_back(Json::array({f.lefschetz_power, f.t_power}));
    Json out;
    out["numerator"] = std::move(numerator);
    out["denominator"] = std::move(denominator);
    out["numerator_degree"] = form.numerator().degree();
    return out;
}

Json series_to_json(const TruncatedSeries& series) {
    Json coefficients = Json::array();
    for (const auto& c : series.coefficients()) coefficients.push_back(c.str());
    Json out;
    out["precision"] = series.precision();
    out["coefficients"] = std::move(coefficients);
    return out;
}

Json profile_to_json(const ZetaProfile& profile) {
    Json lpoly = Json::array();
    for (const auto& c : profile.lpoly) lpoly.push_back(c.str());
    Json out;
    out["q"] = profile.q;
    out["g"] = profile.genus;
    out["lpoly"] = std::move(lpoly);
    return out;
}

CurveModel curve_model_from_json(const Json& j) {
    require_key(j, "kind");
    const std::string kind = j.at("kind").get<std::string>();
    const std::uint32_t p = uint_field(j, "p");
    const std::uint32_t e = uint_field(j, "e");
    if (kind == "plane") {
        require_key(j, "poly");
        std::vector<PlaneTerm> terms;
        for (const auto& entry : j.at("poly")) {
            if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array() ||
                entry[1].size() != 3)
                shape_error("each \"poly\" entry must be [coefficient, [a, b, c]]");
            PlaneTerm term;
            term.coefficient = entry[0].get<std::int64_t>();
            for (int i = 0; i < 3; ++i) term.exponents[i] = entry[1][i].get<std::uint32_t>();
            terms.push_back(term);
        }
        return CurveModel::plane(p, e, std::move(terms));
    }
    if (kind == "hyperelliptic") {
        require_key(j, "f");
        std::vector<std::int64_t> f;
        for (const auto& c : j.at("f")) f.push_back(c.get<std::int64_t>());
        return CurveModel::hyperelliptic(p, e, std::move(f));
    }
    shape_error("unknown curve kind \"" + kind + "\"");
}

Json curve_model_to_json(const CurveModel& model) {
    Json out;
    out["kind"] = model.kind() == CurveModel::Kind::plane ? "plane" : "hyperelliptic";
    out["p"] = model.base_field().characteristic();
    out["e"] = model.base_field().extension_degree();
    if (model.kind() == CurveModel::Kind::plane) {
        Json poly = Json::array();
        for (const auto& term : model.plane_terms())
            poly.push_back(Json::array(
                {term.coefficient,
                 Json::array({term.exponents[0], term.exponents[1], term.exponents[2]})}));
        out["poly"] = std::move(poly);
    } else {
        out["f"] = model.f_coefficients();
    }
    out["genus"] = model.genus();
    return out;
}

PointedCurveData pointed_curve_from_json(const Json& j) {
    PointedCurveData data;
    data.genus = uint_field(j, "g");
    require_key(j, "pic0");
    data.pic0 = RingElement::parse(j.at("pic0").get<std::string>());
    if (j.contains("low_classes"))
        for (const auto& s : j.at("low_classes"))
            data.low_classes.push_back(RingElement::parse(s.get<std::string>()));
    return data;
}

PointlessCurveData pointless_curve_from_json(const Json& j) {
    PointlessCurveData data;
    data.genus = uint_field(j, "g");
    data.cycle_degree = uint_field(j, "n");
    require_key(j, "sym_classes");
    for (const auto& s : j.at("sym_classes"))
        data.sym_classes.push_back(RingElement::parse(s.get<std::string>()));
    return data;
}

CurveModel load_curve_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError("model file " + path + ": " + err.what());
    }
    return curve_model_from_json(j);
}

}  // namespace mzeta
