#pragma once

#include <json.hpp>

#include "tandel/conjugacy_model.hpp"
#include "tandel/param_analysis.hpp"

namespace tandel {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(cplx z);
ordered_json to_json(const SpherePoint& z);
ordered_json to_json(const ParamReport& r);
ordered_json to_json(const ModelConstants& c);

}  // namespace tandel
