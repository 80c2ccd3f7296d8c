#include "koszulkit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <string>

#include "koszulkit/error.hpp"

namespace koszulkit {

Poset tile() {
  return Poset::from_covers({"s", "u", "v", "t"}, {{"s", "u"}, {"s", "v"}, {"u", "t"}, {"v", "t"}});
}

Poset tiling(const std::vector<std::pair<int, int>>& positions) {
  if (positions.empty()) throw InvalidParameterError("tiling needs at least one tile");
  // Points keyed by (y, x) so the element order runs bottom-up.
  std::set<std::pair<int, int>> points;
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
  for (auto [p, q] : positions) {
    std::pair<int, int> s{q - 1, p}, u{q, p - 1}, v{q, p + 1}, t{q + 1, p};
    points.insert({s, u, v, t});
    edges.insert({{s, u}, {s, v}, {u, t}, {v, t}});
  }
  auto name = [](std::pair<int, int> yx) {
    return "(" + std::to_string(yx.second) + "," + std::to_string(yx.first) + ")";
  };
  std::vector<std::string> elements;
  for (auto pt : points) elements.push_back(name(pt));
  std::vector<NamedPair> covers;
  for (auto [a, b] : edges) covers.emplace_back(name(a), name(b));
  return Poset::from_covers(std::move(elements), covers);
}

Poset vdiamond(int n) {
  if (n < 1) throw InvalidParameterError("vdiamond needs n >= 1");
  std::vector<std::string> elements{"s"};
  std::vector<NamedPair> covers;
  for (int i = 1; i <= n; ++i) {
    std::string u = "u" + std::to_string(i);
    elements.push_back(u);
    covers.emplace_back("s", u);
    covers.emplace_back(u, "t");
  }
  elements.push_back("t");
  return Poset::from_covers(std::move(elements), covers);
}

Poset hdiamond(int i, int j) {
  if (i < 1 || j < 1) throw InvalidParameterError("hdiamond needs i, j >= 1");
  std::vector<std::string> elements;
  std::vector<NamedPair> covers;
  for (int p = 1; p <= i; ++p) {
    std::string s = "s" + std::to_string(p);
    elements.push_back(s);
    covers.emplace_back(s, "u");
    covers.emplace_back(s, "v");
  }
  elements.push_back("u");
  elements.push_back("v");
  for (int q = 1; q <= j; ++q) {
    std::string t = "t" + std::to_string(q);
    elements.push_back(t);
    covers.emplace_back("u", t);
    covers.emplace_back("v", t);
  }
  return Poset::from_covers(std::move(elements), covers);
}

Poset hexagon() {
  return Poset::from_covers(
      {"s", "t", "u", "v", "x", "y"},
      {{"s", "x"}, {"s", "v"}, {"x", "u"}, {"v", "y"}, {"u", "t"}, {"y", "t"}});
}

Poset chain(int n) {
  if (n < 1) throw InvalidParameterError("chain needs n >= 1");
  std::vector<std::string> elements;
  std::vector<NamedPair> covers;
  for (int i = 0; i < n; ++i) {
    elements.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(elements[i - 1], elements[i]);
  }
  return Poset::from_covers(std::move(elements), covers);
}

Poset antichain(int n) {
  if (n < 1) throw InvalidParameterError("antichain needs n >= 1");
  std::vector<std::string> elements;
  for (int i = 0; i < n; ++i) elements.push_back("a" + std::to_string(i));
  return Poset::from_covers(std::move(elements), {});
}

Poset random_graded(std::uint64_t seed, int size, double density) {
  if (size < 1) throw InvalidParameterError("random needs size >= 1");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InvalidParameterError("random density must lie in [0, 1]");
  }
  // Raw engine output only: distribution objects are not portable.
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density; };

  const int ranks = 1 + static_cast<int>(below(static_cast<std::uint64_t>(std::min(size, 5))));
  std::vector<int> rank_of(size);
  for (int k = 0; k < size; ++k) {
    rank_of[k] = k < ranks ? k : static_cast<int>(below(static_cast<std::uint64_t>(ranks)));
  }
  std::stable_sort(rank_of.begin(), rank_of.end());

  std::vector<std::string> elements;
  for (int k = 0; k < size; ++k) elements.push_back("p" + std::to_string(k));
  std::vector<NamedPair> covers;
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      if (rank_of[x] + 1 == rank_of[y] && coin()) covers.emplace_back(elements[x], elements[y]);
  return Poset::from_covers(std::move(elements), covers);
}

GeneratorSpec parse_generator(std::string_view text) {
  GeneratorSpec spec;
  auto colon = text.find(':');
  spec.family = std::string(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      spec.args.emplace_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return spec;
}

namespace {

long long int_arg(const GeneratorSpec& spec, std::size_t i) {
  const std::string& s = spec.args.at(i);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidParameterError("argument '" + s + "' of " + spec.family + " is not an integer");
  }
  return v;
}

void expect_args(const GeneratorSpec& spec, std::size_t count) {
  if (spec.args.size() != count) {
    throw InvalidParameterError(spec.family + " takes " + std::to_string(count) + " argument(s)");
  }
}

}  // namespace

Poset generate(const GeneratorSpec& spec) {
  const auto& f = spec.family;
  if (f == "tile") {
    expect_args(spec, 0);
    return tile();
  }
  if (f == "hexagon") {
    expect_args(spec, 0);
    return hexagon();
  }
  if (f == "vdiamond" || f == "chain" || f == "antichain") {
    expect_args(spec, 1);
    int n = static_cast<int>(int_arg(spec, 0));
    if (f == "vdiamond") return vdiamond(n);
    if (f == "chain") return chain(n);
    return antichain(n);
  }
  if (f == "hdiamond") {
    expect_args(spec, 2);
    return hdiamond(static_cast<int>(int_arg(spec, 0)), static_cast<int>(int_arg(spec, 1)));
  }
  if (f == "tiling") {
    if (spec.args.empty() || spec.args.size() % 2 != 0) {
      throw InvalidParameterError("tiling takes a nonempty list of coordinate pairs");
    }
    std::vector<std::pair<int, int>> positions;
    for (std::size_t i = 0; i < spec.args.size(); i += 2)
      positions.emplace_back(static_cast<int>(int_arg(spec, i)),
                             static_cast<int>(int_arg(spec, i + 1)));
    return tiling(positions);
  }
  if (f == "random") {
    expect_args(spec, 3);
    long long seed = int_arg(spec, 0);
    if (seed < 0) throw InvalidParameterError("random seed must be nonnegative");
    double density = 0;
    try {
      std::size_t used = 0;
      density = std::stod(spec.args[2], &used);
      if (used != spec.args[2].size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InvalidParameterError("random density '" + spec.args[2] + "' is not a number");
    }
    return random_graded(static_cast<std::uint64_t>(seed), static_cast<int>(int_arg(spec, 1)),
                         density);
  }
  throw InvalidParameterError("unknown generator '" + f + "'");
}

Poset generate(std::string_view text) { return generate(parse_generator(text)); }

}  // namespace koszulkit
