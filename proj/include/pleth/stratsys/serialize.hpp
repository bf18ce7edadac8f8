#pragma once

#include <json.hpp>

#include "pleth/stratsys/datum.hpp"
#include "pleth/stratsys/system.hpp"

namespace pleth {

// Schema 1. Matrices are lists of rows of rational strings; partial-map
// domains are implied by listing phi only where it is defined.
nlohmann::json system_to_json(const System& s);
System system_from_json(const nlohmann::json& j);

nlohmann::json datum_to_json(const LocalDatum& d);

}  // namespace pleth
