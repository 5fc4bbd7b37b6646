#pragma once

#include "rgl/bijections.hpp"
#include "rgl/mcatalan.hpp"
#include "rgl/verify.hpp"

#include <json.hpp>

namespace rgl {

using Json = nlohmann::json;

Json to_json(const ArrangementSpec& spec);
ArrangementSpec spec_from_json(const Json& j);

/// {"spec":…, "intervals":[{"pair":[i,j],"lo":"p/q"|null,"hi":…}], "witness":["p/q",…]}
Json to_json(const Region& region);
Region region_from_json(const Json& j);

/// {"n":…, "kind":…, "offsets":[…], "counts":{"1":…}, "total":…}
Json to_json(const LevelCensus& census, const ArrangementSpec& spec);

/// {"label":[…], "alphas":[[…],…]}
Json to_json(const DyckTuple& tuple);
DyckTuple tuple_from_json(const Json& j);

/// Row-major rows with null for empty cells.
Json to_json(const YoungTableau& t);
YoungTableau tableau_from_json(const Json& j);

/// {"n":…, "m":…, "heights":[…]}
Json to_json(const MDyckPath& path);
MDyckPath m_dyck_from_json(const Json& j);

Json to_json(const CycleForm& omega);
Json to_json(const VerificationReport& report);

}  // namespace rgl
