#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "koszulkit/error.hpp"
#include "koszulkit/generators.hpp"
#include "koszulkit/poset.hpp"
#include "koszulkit/poset_io.hpp"
#include "support.hpp"

using namespace koszulkit;
using testing_support::oracle_order;

namespace {

Poset diamond() {
  return Poset::from_covers({"s", "u", "v", "t"}, {{"s", "u"}, {"s", "v"}, {"u", "t"}, {"v", "t"}});
}

// a < b < c < d plus a < e < d: lengths 3 and 2 from a to d.
Poset pentagon() {
  return Poset::from_covers({"a", "b", "c", "d", "e"},
                            {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "e"}, {"e", "d"}});
}

}  // namespace

TEST(Poset, DiamondBasics) {
  Poset p = diamond();
  EXPECT_EQ(4u, p.size());
  EXPECT_EQ(4u, p.covers().size());
  EXPECT_TRUE(p.is_graded());
  EXPECT_EQ(2, p.max_interval_length());
  EXPECT_EQ(2, p.length("s", "t"));
  EXPECT_EQ(0, p.length("u", "u"));
  EXPECT_TRUE(p.is_cover(p.index_of("s"), p.index_of("u")));
  EXPECT_FALSE(p.is_cover(p.index_of("s"), p.index_of("t")));
  EXPECT_TRUE(p.is_maximal(p.index_of("t")));
  EXPECT_TRUE(p.is_minimal(p.index_of("s")));
  EXPECT_EQ(p.index_of("s"), p.meet(p.index_of("u"), p.index_of("v")));
  EXPECT_EQ(p.index_of("t"), p.join(p.index_of("u"), p.index_of("v")));
  EXPECT_THROW(p.length("u", "v"), IncomparableError);
  EXPECT_THROW(p.index_of("zz"), UnknownElementError);
}

TEST(Poset, RejectsMalformedCovers) {
  EXPECT_THROW(Poset::from_covers({"a", "a"}, {}), MalformedPosetError);
  EXPECT_THROW(Poset::from_covers({"a", "b"}, {{"a", "c"}}), Error);
  EXPECT_THROW(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"a", "b"}}), MalformedPosetError);
  EXPECT_THROW(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), MalformedPosetError);
  // a < b < c makes a < c transitive, not a cover.
  EXPECT_THROW(Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
               MalformedPosetError);
}

TEST(Poset, FromRelationReducesToHasse) {
  Poset p = Poset::from_relation({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "a"}});
  EXPECT_EQ(p, Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
}

TEST(Poset, GradednessWitness) {
  Poset p = pentagon();
  EXPECT_FALSE(p.is_graded());
  const auto& r = p.graded_report();
  EXPECT_EQ("a", p.name(*r.lower));
  EXPECT_EQ("d", p.name(*r.upper));
  EXPECT_EQ(2, r.shortest);
  EXPECT_EQ(3, r.longest);
  EXPECT_THROW(p.require_graded(), NotGradedError);
  EXPECT_THROW(p.length("a", "b"), NotGradedError);
  try {
    p.require_graded();
  } catch (const NotGradedError& e) {
    EXPECT_NE(std::string(e.what()).find("[a,d]"), std::string::npos) << e.what();
  }
}

TEST(Poset, GradedMatchesOracle) {
  for (const auto& [name, p] : testing_support::families())
    EXPECT_EQ(oracle::graded(oracle_order(p)), p.is_graded()) << name;
  EXPECT_EQ(oracle::graded(oracle_order(pentagon())), pentagon().is_graded());
}

TEST(Poset, OrderMatchesOracle) {
  for (const auto& [name, p] : testing_support::random_corpus(40, 10)) {
    auto o = oracle_order(p);
    auto len = oracle::lengths(o);
    for (Index x = 0; x < p.size(); ++x) {
      for (Index y = 0; y < p.size(); ++y) {
        ASSERT_EQ(o.le[x][y], p.leq(x, y)) << name;
        ASSERT_EQ(oracle::covers(o, x, y), p.is_cover(x, y)) << name;
        if (o.le[x][y]) {
          ASSERT_EQ(len[x][y], p.length(x, y)) << name;
        }
      }
    }
  }
}

TEST(Poset, DualReversesOrder) {
  Poset p = pentagon();
  Poset d = dual(p);
  EXPECT_EQ(p.elements(), d.elements());
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y) EXPECT_EQ(p.leq(x, y), d.leq(y, x));
  EXPECT_EQ(p, dual(d));
}

TEST(Poset, DisjointUnionNaming) {
  Poset u = disjoint_union(diamond(), chain(2));
  EXPECT_EQ(6u, u.size());
  EXPECT_TRUE(u.find("c1").has_value());
  EXPECT_FALSE(u.comparable(u.index_of("s"), u.index_of("c0")));

  Poset clash = disjoint_union(diamond(), diamond());
  EXPECT_EQ(8u, clash.size());
  EXPECT_TRUE(clash.find("a:s").has_value());
  EXPECT_TRUE(clash.find("b:t").has_value());
  EXPECT_EQ(8u, clash.covers().size());
}

TEST(Poset, RemoveAndInduce) {
  Poset p = diamond();
  Poset q = remove_element(p, p.index_of("t"));
  EXPECT_EQ(3u, q.size());
  EXPECT_EQ(2u, q.covers().size());
  // Removing the middle of a chain keeps the order: a < c becomes a cover.
  Poset c = chain(3);
  Poset r = remove_element(c, 1);
  EXPECT_TRUE(r.is_cover(0, 1));
}

TEST(Frontier, DiamondSatisfiesDagger) {
  Poset p = diamond();
  std::vector<Index> f{p.index_of("u"), p.index_of("v")};
  FrontierCheck c = check_dagger(p, f);
  EXPECT_TRUE(c.satisfied);
  EXPECT_EQ(p.index_of("s"), c.pivot);
  EXPECT_TRUE(check_ddagger(p, f).satisfied);
}

TEST(Frontier, SingletonAlwaysHolds) {
  Poset p = pentagon();
  std::vector<Index> f{p.index_of("c")};
  EXPECT_TRUE(check_dagger(p, f).satisfied);
  EXPECT_FALSE(check_dagger(p, f).pivot.has_value());
}

TEST(Frontier, FailureReasons) {
  Poset h = hdiamond(2, 2);
  std::vector<Index> uv{h.index_of("u"), h.index_of("v")};
  FrontierCheck c = check_dagger(h, uv);
  EXPECT_FALSE(c.satisfied);
  EXPECT_EQ(FrontierFailure::pair_without_meet, c.failure);
  EXPECT_EQ(FrontierFailure::pair_without_meet, check_ddagger(h, uv).failure);

  Poset a = antichain(2);
  std::vector<Index> both{0, 1};
  EXPECT_EQ(FrontierFailure::no_common_pivot, check_dagger(a, both).failure);

  // Meet exists but is two steps down.
  Poset deep = Poset::from_covers({"s", "a", "b", "u", "v"},
                                  {{"s", "a"}, {"s", "b"}, {"a", "u"}, {"b", "v"}});
  std::vector<Index> f{deep.index_of("u"), deep.index_of("v")};
  EXPECT_EQ(FrontierFailure::pivot_not_cover, check_dagger(deep, f).failure);

  // Pairwise meets differ: x,y share s; y,z share r; x,z share only the bottom.
  Poset mix = Poset::from_covers(
      {"b", "s", "r", "x", "y", "z"},
      {{"b", "s"}, {"b", "r"}, {"s", "x"}, {"s", "y"}, {"r", "y"}, {"r", "z"}});
  std::vector<Index> g{mix.index_of("x"), mix.index_of("y"), mix.index_of("z")};
  FrontierCheck m = check_dagger(mix, g);
  EXPECT_FALSE(m.satisfied);
}

TEST(Frontier, InvalidFrontiers) {
  Poset p = diamond();
  std::vector<Index> empty;
  EXPECT_THROW(check_dagger(p, empty), InvalidFrontierError);
  std::vector<Index> comparable{p.index_of("s"), p.index_of("u")};
  EXPECT_THROW(check_dagger(p, comparable), InvalidFrontierError);
  std::vector<Index> repeated{p.index_of("u"), p.index_of("u")};
  EXPECT_THROW(check_dagger(p, repeated), InvalidFrontierError);
}

TEST(Frontier, MatchesOracleOnRandomAntichains) {
  int checked = 0;
  for (const auto& [name, p] : testing_support::random_corpus(60, 10, 100)) {
    auto o = oracle_order(p);
    auto od = oracle::transpose(o);
    // All antichains of size 2 and 3.
    for (Index a = 0; a < p.size(); ++a)
      for (Index b = a + 1; b < p.size(); ++b) {
        if (p.comparable(a, b)) continue;
        std::vector<Index> f{a, b};
        std::vector<int> g{static_cast<int>(a), static_cast<int>(b)};
        EXPECT_EQ(oracle::dagger(o, g) == oracle::Dagger::ok, check_dagger(p, f).satisfied) << name;
        EXPECT_EQ(oracle::dagger(od, g) == oracle::Dagger::ok, check_ddagger(p, f).satisfied)
            << name;
        ++checked;
        for (Index c = b + 1; c < p.size(); ++c) {
          if (p.comparable(a, c) || p.comparable(b, c)) continue;
          std::vector<Index> f3{a, b, c};
          std::vector<int> g3{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
          EXPECT_EQ(oracle::dagger(o, g3) == oracle::Dagger::ok, check_dagger(p, f3).satisfied)
              << name;
        }
      }
  }
  EXPECT_GT(checked, 50);
}

TEST(PosetIo, JsonRoundTrip) {
  Poset p = hexagon();
  std::string text = poset_to_json(p);
  EXPECT_EQ(p, poset_from_json(text));
  EXPECT_EQ(R"({"elements":["s","u","v","t"],"covers":[["s","u"],["s","v"],["u","t"],["v","t"]]})",
            poset_to_json(diamond()));
}

TEST(PosetIo, RelationsKey) {
  Poset p = poset_from_json(R"({"elements":["a","b","c"],"relations":[["a","c"],["a","b"],["b","c"]]})");
  EXPECT_EQ(2u, p.covers().size());
}

TEST(PosetIo, RejectsBadJson) {
  EXPECT_THROW(poset_from_json("{"), MalformedPosetError);
  EXPECT_THROW(poset_from_json(R"({"elements":["a"]})"), MalformedPosetError);
  EXPECT_THROW(poset_from_json(R"({"elements":["a"],"covers":[],"extra":1})"), MalformedPosetError);
  EXPECT_THROW(poset_from_json(R"({"elements":["a"],"covers":[],"relations":[]})"),
               MalformedPosetError);
  EXPECT_THROW(poset_from_json(R"({"elements":["a"],"covers":[["a","b"]]})"), Error);
}

TEST(PosetIo, DotExport) {
  std::string dot = poset_to_dot(diamond());
  EXPECT_NE(dot.find("digraph poset {"), std::string::npos);
  EXPECT_NE(dot.find("rankdir=BT;"), std::string::npos);
  EXPECT_NE(dot.find("\"s\" -> \"u\";"), std::string::npos);
  EXPECT_NE(dot.find("// rank 2"), std::string::npos);
  EXPECT_EQ('}', dot[dot.size() - 2]);
}
