#include "koszulkit/poset.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

#include "koszulkit/error.hpp"

namespace koszulkit {

namespace {

std::vector<Cover> resolve_pairs(const std::unordered_map<std::string, Index>& index,
                                 const std::vector<NamedPair>& pairs, const char* what) {
  std::vector<Cover> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw MalformedPosetError(std::string(what) + " (" + a + ", " + b +
                                ") references an unknown element");
    }
    out.emplace_back(ia->second, ib->second);
  }
  return out;
}

}  // namespace

void Poset::build_index() {
  index_.clear();
  index_.reserve(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw MalformedPosetError("duplicate element identifier '" + elements_[i] + "'");
    }
  }
}

Poset Poset::from_covers(std::vector<std::string> elements, const std::vector<NamedPair>& covers) {
  Poset p;
  p.elements_ = std::move(elements);
  p.build_index();
  p.covers_ = resolve_pairs(p.index_, covers, "cover");
  std::sort(p.covers_.begin(), p.covers_.end());
  if (std::adjacent_find(p.covers_.begin(), p.covers_.end()) != p.covers_.end()) {
    throw MalformedPosetError("duplicate cover pair");
  }
  p.derive();
  return p;
}

Poset Poset::from_relation(std::vector<std::string> elements,
                           const std::vector<NamedPair>& relations) {
  Poset tmp;
  tmp.elements_ = std::move(elements);
  tmp.build_index();
  const std::size_t n = tmp.size();
  std::vector<std::uint8_t> lt(n * n, 0);
  for (auto [a, b] : resolve_pairs(tmp.index_, relations, "relation")) {
    if (a != b) lt[a * n + b] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (lt[k * n + j]) lt[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (lt[i * n + i]) {
      throw MalformedPosetError("cycle detected through element '" + tmp.elements_[i] + "'");
    }
  }
  std::vector<NamedPair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt[i * n + j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k) between = lt[i * n + k] && lt[k * n + j];
      if (!between) covers.emplace_back(tmp.elements_[i], tmp.elements_[j]);
    }
  }
  return from_covers(std::move(tmp.elements_), covers);
}

void Poset::derive() {
  const std::size_t n = size();
  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [a, b] : covers_) {
    if (a == b) throw MalformedPosetError("cycle detected: self-cover on '" + elements_[a] + "'");
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (auto& v : down_) std::sort(v.begin(), v.end());

  // Kahn's algorithm, smallest index first so the order is reproducible.
  std::vector<std::size_t> indeg(n);
  for (std::size_t i = 0; i < n; ++i) indeg[i] = down_[i].size();
  std::vector<Index> topo;
  topo.reserve(n);
  std::vector<Index> ready;
  for (Index i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    Index x = *it;
    ready.erase(it);
    topo.push_back(x);
    for (Index y : up_[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  if (topo.size() != n) {
    for (Index i = 0; i < n; ++i) {
      if (indeg[i] != 0) {
        throw MalformedPosetError("cycle detected in covers through element '" + elements_[i] +
                                  "'");
      }
    }
  }

  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[topo[k]] = k;

  order_.assign(n * n, 0);
  shortest_.assign(n * n, -1);
  longest_.assign(n * n, -1);
  for (Index x = 0; x < n; ++x) {
    int* sh = &shortest_[x * n];
    int* lo = &longest_[x * n];
    sh[x] = lo[x] = 0;
    for (std::size_t k = position[x]; k < n; ++k) {
      Index y = topo[k];
      if (lo[y] < 0) continue;
      for (Index z : up_[y]) {
        sh[z] = sh[z] < 0 ? sh[y] + 1 : std::min(sh[z], sh[y] + 1);
        lo[z] = std::max(lo[z], lo[y] + 1);
      }
    }
    for (Index y = 0; y < n; ++y) order_[x * n + y] = lo[y] >= 0;
  }

  for (auto [a, b] : covers_) {
    if (longest_[a * n + b] > 1) {
      throw MalformedPosetError("cover (" + elements_[a] + ", " + elements_[b] +
                                ") is implied by transitivity; not a Hasse diagram");
    }
  }

  height_.assign(n, 0);
  for (Index y : topo)
    for (Index z : up_[y]) height_[z] = std::max(height_[z], height_[y] + 1);

  graded_ = GradedReport{};
  max_length_ = 0;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      int s = shortest_[x * n + y];
      int l = longest_[x * n + y];
      if (l < 0) continue;
      max_length_ = std::max(max_length_, l);
      if (s != l) {
        bool better = graded_.graded || l < graded_.longest;
        if (better) {
          graded_.graded = false;
          graded_.lower = x;
          graded_.upper = y;
          graded_.shortest = s;
          graded_.longest = l;
        }
      }
    }
  }
}

std::optional<Index> Poset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Poset::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw UnknownElementError(std::string(id));
  return *i;
}

std::vector<NamedPair> Poset::cover_names() const {
  std::vector<NamedPair> out;
  out.reserve(covers_.size());
  for (auto [a, b] : covers_) out.emplace_back(elements_[a], elements_[b]);
  return out;
}

bool Poset::is_cover(Index x, Index y) const {
  return std::binary_search(covers_.begin(), covers_.end(), Cover{x, y});
}

void Poset::require_graded() const {
  if (!graded_.graded) {
    throw NotGradedError(elements_[*graded_.lower], elements_[*graded_.upper], graded_.shortest,
                         graded_.longest);
  }
}

int Poset::length(Index x, Index y) const {
  require_graded();
  int l = longest_[x * size() + y];
  if (l < 0) throw IncomparableError(elements_[x], elements_[y]);
  return l;
}

int Poset::length(std::string_view x, std::string_view y) const {
  return length(index_of(x), index_of(y));
}

std::vector<Index> Poset::common_lower_bounds(Index u, Index v) const {
  std::vector<Index> out;
  for (Index z = 0; z < size(); ++z)
    if (leq(z, u) && leq(z, v)) out.push_back(z);
  return out;
}

std::optional<Index> Poset::meet(Index u, Index v) const {
  auto lower = common_lower_bounds(u, v);
  for (Index z : lower) {
    bool top = std::all_of(lower.begin(), lower.end(), [&](Index w) { return leq(w, z); });
    if (top) return z;
  }
  return std::nullopt;
}

std::optional<Index> Poset::join(Index u, Index v) const {
  std::vector<Index> upper;
  for (Index z = 0; z < size(); ++z)
    if (leq(u, z) && leq(v, z)) upper.push_back(z);
  for (Index z : upper) {
    bool bottom = std::all_of(upper.begin(), upper.end(), [&](Index w) { return leq(z, w); });
    if (bottom) return z;
  }
  return std::nullopt;
}

Poset dual(const Poset& p) {
  std::vector<NamedPair> covers;
  covers.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) covers.emplace_back(p.name(b), p.name(a));
  return Poset::from_covers(p.elements(), covers);
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  bool collide = std::any_of(q.elements().begin(), q.elements().end(),
                             [&](const std::string& id) { return p.find(id).has_value(); });
  auto rename = [&](const std::string& prefix, const std::string& id) {
    return collide ? prefix + id : id;
  };
  std::vector<std::string> elements;
  std::vector<NamedPair> covers;
  for (const auto& id : p.elements()) elements.push_back(rename("a:", id));
  for (const auto& id : q.elements()) elements.push_back(rename("b:", id));
  for (const auto& [a, b] : p.cover_names()) covers.emplace_back(rename("a:", a), rename("a:", b));
  for (const auto& [a, b] : q.cover_names()) covers.emplace_back(rename("b:", a), rename("b:", b));
  return Poset::from_covers(std::move(elements), covers);
}

Poset induced_subposet(const Poset& p, std::span<const Index> keep) {
  std::vector<Index> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<std::string> elements;
  for (Index x : kept) elements.push_back(p.name(x));
  std::vector<NamedPair> relations;
  for (Index x : kept)
    for (Index y : kept)
      if (p.less(x, y)) relations.emplace_back(p.name(x), p.name(y));
  return Poset::from_relation(std::move(elements), relations);
}

Poset remove_element(const Poset& p, Index x) {
  std::vector<Index> keep;
  for (Index y = 0; y < p.size(); ++y)
    if (y != x) keep.push_back(y);
  return induced_subposet(p, keep);
}

std::string_view to_string(FrontierFailure f) {
  switch (f) {
    case FrontierFailure::no_common_pivot: return "no_common_pivot";
    case FrontierFailure::pair_without_meet: return "pair_without_meet";
    case FrontierFailure::meet_not_pivot: return "meet_not_pivot";
    case FrontierFailure::pivot_not_cover: return "pivot_not_cover";
  }
  return "unknown";
}

FrontierCheck check_dagger(const Poset& p, std::span<const Index> frontier) {
  if (frontier.empty()) throw InvalidFrontierError("frontier is empty");
  for (Index u : frontier) {
    if (u >= p.size()) throw InvalidFrontierError("frontier index out of range");
  }
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (std::size_t j = i + 1; j < frontier.size(); ++j) {
      Index u = frontier[i], v = frontier[j];
      if (u == v) throw InvalidFrontierError("frontier repeats element '" + p.name(u) + "'");
      if (p.comparable(u, v)) {
        throw InvalidFrontierError("frontier elements '" + p.name(u) + "' and '" + p.name(v) +
                                   "' are comparable");
      }
    }
  }

  FrontierCheck check;
  if (frontier.size() == 1) {
    check.satisfied = true;
    return check;
  }

  std::optional<Index> pivot;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (std::size_t j = i + 1; j < frontier.size(); ++j) {
      Index u = frontier[i], v = frontier[j];
      auto m = p.meet(u, v);
      if (!m) {
        check.failure = p.common_lower_bounds(u, v).empty() ? FrontierFailure::no_common_pivot
                                                            : FrontierFailure::pair_without_meet;
        check.offending = {u, v};
        return check;
      }
      if (pivot && *pivot != *m) {
        check.failure = FrontierFailure::meet_not_pivot;
        check.offending = {u, v};
        check.pivot = pivot;
        return check;
      }
      pivot = m;
    }
  }
  check.pivot = pivot;
  for (Index u : frontier) {
    if (!p.is_cover(*pivot, u)) {
      check.failure = FrontierFailure::pivot_not_cover;
      check.offending = {*pivot, u};
      return check;
    }
  }
  check.satisfied = true;
  return check;
}

FrontierCheck check_ddagger(const Poset& p, std::span<const Index> frontier) {
  return check_dagger(dual(p), frontier);
}

std::vector<Index> resolve(const Poset& p, std::span<const std::string> ids) {
  std::vector<Index> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(p.index_of(id));
  return out;
}

}  // namespace koszulkit
