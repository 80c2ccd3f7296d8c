#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace koszulkit {

// Position of an element in Poset::elements(). All deterministic orderings
// (chains, matrix rows and columns) are derived from it.
using Index = std::uint32_t;

// (x, y) with x a predecessor of y: x < y and nothing strictly between.
using Cover = std::pair<Index, Index>;
using NamedPair = std::pair<std::string, std::string>;

struct GradedReport {
  bool graded = true;
  // Offending interval when graded == false: the shortest and longest
  // cover paths from lower to upper differ.
  std::optional<Index> lower;
  std::optional<Index> upper;
  int shortest = 0;
  int longest = 0;
};

// A finite poset stored as its Hasse diagram together with the derived
// order and interval lengths. Immutable once constructed.
//
// Non-graded posets are valid values; they are flagged by graded_report()
// and every homological routine rejects them via require_graded().
class Poset {
 public:
  Poset() = default;

  // Covers must form an acyclic Hasse diagram: no duplicates and no cover
  // implied by transitivity of the others. Throws MalformedPosetError.
  static Poset from_covers(std::vector<std::string> elements, const std::vector<NamedPair>& covers);

  // Accepts any set of strict relations x < y; the transitive closure is
  // taken and reduced to its Hasse diagram. Reflexive pairs are ignored.
  static Poset from_relation(std::vector<std::string> elements,
                             const std::vector<NamedPair>& relations);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(Index x) const { return elements_[x]; }
  std::optional<Index> find(std::string_view id) const;
  // Throws UnknownElementError.
  Index index_of(std::string_view id) const;

  // Sorted lexicographically by (lower index, upper index).
  const std::vector<Cover>& covers() const { return covers_; }
  std::vector<NamedPair> cover_names() const;

  // Successors / predecessors in the Hasse diagram, ascending index order.
  const std::vector<Index>& upper_covers(Index x) const { return up_[x]; }
  const std::vector<Index>& lower_covers(Index x) const { return down_[x]; }

  bool leq(Index x, Index y) const { return order_[x * size() + y] != 0; }
  bool less(Index x, Index y) const { return x != y && leq(x, y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }
  bool is_cover(Index x, Index y) const;
  bool is_maximal(Index x) const { return up_[x].empty(); }
  bool is_minimal(Index x) const { return down_[x].empty(); }

  const GradedReport& graded_report() const { return graded_; }
  bool is_graded() const { return graded_.graded; }
  // Throws NotGradedError carrying the witness interval.
  void require_graded() const;

  // l([x,y]). Requires a graded poset and x <= y; throws NotGradedError or
  // IncomparableError otherwise.
  int length(Index x, Index y) const;
  int length(std::string_view x, std::string_view y) const;

  // Largest l([x,y]) over comparable pairs; 0 for an antichain or empty poset.
  int max_interval_length() const { return max_length_; }

  // Longest cover path ending at x (distance to the minimal elements).
  int height(Index x) const { return height_[x]; }

  // Unique maximum of the common lower bounds, if it exists.
  std::optional<Index> meet(Index u, Index v) const;
  // Unique minimum of the common upper bounds, if it exists.
  std::optional<Index> join(Index u, Index v) const;
  std::vector<Index> common_lower_bounds(Index u, Index v) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && a.covers_ == b.covers_;
  }

 private:
  void build_index();
  void derive();

  std::vector<std::string> elements_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
  std::vector<std::uint8_t> order_;  // size() x size(), row-major
  std::vector<int> shortest_;        // -1 when not x <= y
  std::vector<int> longest_;
  std::vector<int> height_;
  GradedReport graded_;
  int max_length_ = 0;
};

// Same elements, reversed order.
Poset dual(const Poset& p);

// Elements of p followed by elements of q, no cross relations. When the two
// identifier sets intersect, every element of p is renamed "a:<id>" and every
// element of q "b:<id>".
Poset disjoint_union(const Poset& p, const Poset& q);

// Full subposet on the kept elements (in their original order).
Poset induced_subposet(const Poset& p, std::span<const Index> keep);
Poset remove_element(const Poset& p, Index x);

enum class FrontierFailure {
  no_common_pivot,    // some pair has no common lower bound at all
  pair_without_meet,  // some pair has several maximal common lower bounds
  meet_not_pivot,     // pairwise meets exist but differ
  pivot_not_cover,    // the common meet is not a predecessor of every element
};

std::string_view to_string(FrontierFailure f);

struct FrontierCheck {
  bool satisfied = false;
  std::optional<Index> pivot;
  std::optional<FrontierFailure> failure;
  // The pair that triggered the failure.
  std::optional<std::pair<Index, Index>> offending;
};

// Condition (dagger): the frontier is a singleton, or some s is a
// predecessor of every frontier element and is the meet of every pair of
// distinct frontier elements. Throws InvalidFrontierError on an empty
// frontier, a repeated element or a comparable pair.
FrontierCheck check_dagger(const Poset& p, std::span<const Index> frontier);
// The order-dual condition: check_dagger on dual(p).
FrontierCheck check_ddagger(const Poset& p, std::span<const Index> frontier);

std::vector<Index> resolve(const Poset& p, std::span<const std::string> ids);

}  // namespace koszulkit
