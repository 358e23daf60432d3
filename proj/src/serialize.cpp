#include "icg/serialize.hpp"

namespace icg {

namespace {

Json spec_fields(const IcgSpec& spec) {
    Json j;
    j["spec"] = spec.canonical();
    j["n"] = spec.n();
    j["D"] = spec.divisors();
    return j;
}

std::string csv_cell(const Json& value) {
    std::string text;
    if (value.is_string()) {
        text = value.get<std::string>();
    } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (i > 0) text += ';';
            text += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
        }
    } else if (value.is_null()) {
        text = "";
    } else {
        text = value.dump();
    }
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

Json to_json(const IcgSpec& spec, const Spectrum& spectrum) {
    Json j;
    j["n"] = spec.n();
    j["D"] = spec.divisors();
    j["spectrum"] = spectrum.values;
    return j;
}

Json to_json(const EnergyReport& r) {
    Json j = spec_fields(r.spec);
    j["energy"] = r.energy;
    j["residue4"] = r.residue4;
    j["predicted4"] = r.predicted4;
    j["lambda_half"] = r.lambda_half ? Json(*r.lambda_half) : Json(nullptr);
    j["half_in_D"] = r.half_in_d;
    j["hyperenergetic"] = r.hyperenergetic;
    return j;
}

Json to_json(const FamilyReport& r) {
    Json j;
    j["n"] = r.n;
    Json members = Json::array();
    for (const auto& m : r.members) members.push_back(m.canonical());
    j["members"] = members;
    j["member_energies"] = r.member_energies;
    j["common_energy"] = r.common_energy;
    j["equal_energy"] = r.equal_energy;
    Json matrix = Json::array();
    for (const auto& row : r.pairwise_cospectral) {
        Json cells = Json::array();
        for (bool b : row) cells.push_back(b);
        matrix.push_back(cells);
    }
    j["pairwise_cospectral"] = matrix;
    j["all_hyperenergetic"] = r.all_hyperenergetic;
    j["holds"] = r.holds();
    return j;
}

Json to_json(const SoCheckReport& r) {
    Json j;
    j["n"] = r.n;
    j["sets"] = r.sets;
    Json pairs = Json::array();
    for (const auto& [a, b] : r.collisions) pairs.push_back(Json::array({a.canonical(), b.canonical()}));
    j["collisions"] = pairs;
    return j;
}

Json to_json(const ExtremalReport& r) {
    Json j;
    j["n"] = r.n;
    j["connected_only"] = r.connected_only;
    j["sets"] = r.sets_examined;
    j["min_energy"] = r.min_energy;
    Json argmin = Json::array();
    for (const auto& s : r.argmin_sets) argmin.push_back(s.canonical());
    j["argmin_sets"] = argmin;
    j["conjecture_value"] = r.conjecture_value ? Json(*r.conjecture_value) : Json(nullptr);
    j["predicted_set"] = r.predicted_set ? Json(r.predicted_set->canonical()) : Json(nullptr);
    j["conjecture_holds"] = r.conjecture_holds ? Json(*r.conjecture_holds) : Json(nullptr);
    return j;
}

std::string parameters_string(const ClosedFormCase& c) {
    const char* second = c.family == ClosedFormFamily::OneAndPrimePower ? ";g=" : ";q=";
    return "p=" + std::to_string(c.p) + second + std::to_string(c.second);
}

Json to_json(const CrossValidationRow& row) {
    Json j;
    j["n"] = row.formula_case.n;
    j["family"] = to_string(row.formula_case.family);
    j["parameters"] = parameters_string(row.formula_case);
    j["branch"] = row.formula_case.branch_number();
    j["formula"] = row.formula;
    j["direct"] = row.direct;
    j["match"] = row.match;
    return j;
}

Json to_json(const MomentReport& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.edges;
    j["M2"] = r.m2;
    j["M4"] = r.m4;
    j["q"] = r.quadrangles;
    return j;
}

std::string to_csv(const std::vector<Json>& rows) {
    if (rows.empty()) return {};
    std::string out;
    bool first = true;
    for (const auto& [key, value] : rows.front().items()) {
        if (!first) out += ',';
        first = false;
        out += key;
    }
    out += '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            if (!first) out += ',';
            first = false;
            out += csv_cell(value);
        }
        out += '\n';
    }
    return out;
}

}  // namespace icg
