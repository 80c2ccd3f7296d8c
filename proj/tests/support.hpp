#pragma once

#include <string>
#include <utility>
#include <vector>

#include "koszulkit/generators.hpp"
#include "koszulkit/poset.hpp"
#include "oracle.hpp"

namespace testing_support {

inline oracle::Pairs pairs_of(const koszulkit::Poset& p) {
  oracle::Pairs out;
  for (auto [a, b] : p.covers()) out.emplace_back(a, b);
  return out;
}

inline oracle::Tor oracle_tor(const koszulkit::Poset& p, std::int64_t prime = 0) {
  return oracle::tor(static_cast<int>(p.size()), pairs_of(p), prime);
}

inline oracle::Order oracle_order(const koszulkit::Poset& p) {
  return oracle::closure(static_cast<int>(p.size()), pairs_of(p));
}

struct Named {
  std::string name;
  koszulkit::Poset poset;
};

// Every built-in family at a few parameters.
inline std::vector<Named> families() {
  using namespace koszulkit;
  std::vector<Named> out;
  for (const char* spec : {"tile", "hexagon", "vdiamond:2", "vdiamond:3", "vdiamond:4", "vdiamond:5",
                           "hdiamond:1,1", "hdiamond:2,2", "hdiamond:3,2", "chain:1", "chain:4",
                           "antichain:1", "antichain:3", "tiling:0,0,1,1", "tiling:0,0,2,0",
                           "tiling:0,0,1,1,-1,1,0,2"})
    out.push_back({spec, generate(spec)});
  return out;
}

// Seeded random graded posets; sizes cycle through 1..max_size.
inline std::vector<Named> random_corpus(int count, int max_size, std::uint64_t base_seed = 1) {
  std::vector<Named> out;
  const double densities[] = {0.3, 0.5, 0.7, 0.9};
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    int size = 1 + i % max_size;
    double density = densities[i % 4];
    std::string spec = "random:" + std::to_string(seed) + "," + std::to_string(size) + "," +
                       std::to_string(density);
    out.push_back({spec, koszulkit::random_graded(seed, size, density)});
  }
  return out;
}

}  // namespace testing_support
