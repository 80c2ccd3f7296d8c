#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "koszulkit/poset.hpp"

namespace koszulkit {

// s ⋖ u, s ⋖ v, u ⋖ t, v ⋖ t.
Poset tile();

// Union of square tiles centred at grid positions (p, q): the tile has
// bottom (p,q-1), sides (p-1,q) and (p+1,q), top (p,q+1). Shared grid points
// are shared elements, named "(x,y)" and ordered by (y, x).
Poset tiling(const std::vector<std::pair<int, int>>& positions);

// s ⋖ u_i ⋖ t for i = 1..n.
Poset vdiamond(int n);

// s_p ⋖ u, s_p ⋖ v, u ⋖ t_q, v ⋖ t_q for p <= i, q <= j.
Poset hdiamond(int i, int j);

// Two disjoint length-3 paths s ⋖ x ⋖ u ⋖ t and s ⋖ v ⋖ y ⋖ t; the smallest
// graded poset with T_{2,3} != 0. Elements listed alphabetically.
Poset hexagon();

// c0 ⋖ c1 ⋖ ... ⋖ c(n-1).
Poset chain(int n);
Poset antichain(int n);

// Layered random graded poset: ranks are drawn first, then each pair of
// elements on adjacent ranks is a cover with probability density. The same
// seed always yields the same poset.
Poset random_graded(std::uint64_t seed, int size, double density);

struct GeneratorSpec {
  std::string family;
  std::vector<std::string> args;
};

// "name" or "name:arg1,arg2,...". For tiling the arguments are flattened
// coordinate pairs: "tiling:0,0,1,1".
GeneratorSpec parse_generator(std::string_view text);

// Throws InvalidParameterError for unknown families or bad arguments.
Poset generate(const GeneratorSpec& spec);
Poset generate(std::string_view text);

}  // namespace koszulkit
