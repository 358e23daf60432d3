#pragma once

// JSON forms of the library's results. Key order is fixed so that output is
// byte-for-byte reproducible.

#include <json.hpp>

#include "icg/closed_forms.hpp"
#include "icg/energy.hpp"
#include "icg/families.hpp"
#include "icg/oracle.hpp"

namespace icg {

using Json = nlohmann::ordered_json;

Json to_json(const IcgSpec& spec, const Spectrum& spectrum);
Json to_json(const EnergyReport& report);
Json to_json(const FamilyReport& report);
Json to_json(const SoCheckReport& report);
Json to_json(const ExtremalReport& report);
Json to_json(const CrossValidationRow& row);
Json to_json(const MomentReport& report);

/// "p=2;g=1" or "p=2;q=3"
std::string parameters_string(const ClosedFormCase& c);

/// One CSV line per object, with a header taken from the first object's keys.
/// Arrays are joined with ';'; cells containing ',' or '"' are quoted.
std::string to_csv(const std::vector<Json>& rows);

}  // namespace icg
