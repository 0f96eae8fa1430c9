#pragma once

#include "json.hpp"
#include "superweyl/gaussian_rational.hpp"

namespace superweyl {

using Json = nlohmann::ordered_json;

/// {"re":[num,den],"im":[num,den]}; integers beyond int64 are written as
/// decimal strings.
void to_json(Json& j, const GaussianRational& x);
void from_json(const Json& j, GaussianRational& x);

}  // namespace superweyl
