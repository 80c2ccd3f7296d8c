#pragma once

#include <string>
#include <string_view>

#include "koszulkit/poset.hpp"

namespace koszulkit {

// {"elements": [...], "covers": [[x, y], ...]}. Unknown keys are rejected.
// "relations" may replace "covers" to supply an arbitrary strict order,
// which is reduced to its Hasse diagram. Throws MalformedPosetError.
Poset poset_from_json(std::string_view text);

// Compact single-line JSON with "elements" first, covers in canonical order.
std::string poset_to_json(const Poset& p);

// Hasse diagram drawn bottom-up, one rank per height.
std::string poset_to_dot(const Poset& p);

}  // namespace koszulkit
