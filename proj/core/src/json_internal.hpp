#pragma once

#include <json.hpp>

#include "koszulkit/poset.hpp"

namespace koszulkit::detail {

Poset poset_from_json_value(const nlohmann::json& j);
nlohmann::ordered_json poset_to_json_value(const Poset& p);

}  // namespace koszulkit::detail
