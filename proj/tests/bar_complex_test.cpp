#include <gtest/gtest.h>

#include "koszulkit/bar_complex.hpp"
#include "koszulkit/error.hpp"
#include "koszulkit/generators.hpp"
#include "support.hpp"

using namespace koszulkit;
using testing_support::oracle_tor;

namespace {

void expect_same(const TorTable& t, const oracle::Tor& o, const std::string& name) {
  EXPECT_EQ(o.max_length, t.max_length) << name;
  EXPECT_EQ(o.koszul, t.koszul) << name;
  for (int m = 0; m <= t.max_length; ++m)
    for (int n = 0; n <= m; ++n) EXPECT_EQ(o.at(n, m), t.at(n, m)) << name << " n=" << n << " m=" << m;
}

}  // namespace

TEST(Chains, CountsMatchOracle) {
  for (const auto& [name, p] : testing_support::random_corpus(30, 9, 500)) {
    auto o = testing_support::oracle_order(p);
    auto len = oracle::lengths(o);
    for (int m = 0; m <= p.max_interval_length(); ++m)
      for (int n = 0; n <= m + 1; ++n) {
        auto mine = enumerate_chains(p, n, m);
        auto theirs = oracle::chains(o, len, n, m);
        ASSERT_EQ(theirs.size(), mine.size()) << name << " n=" << n << " m=" << m;
        for (std::size_t i = 0; i < theirs.size(); ++i) {
          Chain c(theirs[i].begin(), theirs[i].end());
          EXPECT_TRUE(mine.find(c).has_value()) << name;
        }
      }
  }
}

TEST(Chains, TileFamilies) {
  Poset t = tile();
  EXPECT_EQ(4u, enumerate_chains(t, 0, 0).size());
  EXPECT_EQ(4u, enumerate_chains(t, 1, 1).size());
  EXPECT_EQ(1u, enumerate_chains(t, 1, 2).size());
  EXPECT_EQ(2u, enumerate_chains(t, 2, 2).size());
  EXPECT_EQ(0u, enumerate_chains(t, 3, 2).size());
  EXPECT_THROW(enumerate_chains(t, -1, 0), InvalidParameterError);
}

TEST(Differential, SquaresToZero) {
  for (const auto& [name, p] : testing_support::random_corpus(25, 10, 900)) {
    for (int m = 3; m <= p.max_interval_length(); ++m)
      for (int n = 3; n <= m; ++n) {
        SparseMatrix dd = build_differential(p, n - 1, m) * build_differential(p, n, m);
        EXPECT_EQ(0u, dd.nonzeros()) << name;
      }
  }
}

TEST(Differential, TileSigns) {
  // d_2 sends s<u<t to +e(s,t) and s<v<t to +e(s,t) too.
  SparseMatrix d = build_differential(tile(), 2, 2);
  EXPECT_EQ("1 2\n0 0 1\n0 1 1\n", d.to_triplets());
  EXPECT_THROW(build_differential(tile(), 0, 0), InvalidParameterError);
}

TEST(Tor, FamiliesMatchOracle) {
  for (const auto& [name, p] : testing_support::families()) {
    if (p.size() > 14) continue;
    expect_same(tor_table(p, FieldSpec::rationals()), oracle_tor(p), name);
  }
}

TEST(Tor, RandomMatchOracle) {
  for (const auto& [name, p] : testing_support::random_corpus(60, 11, 3000)) {
    expect_same(tor_table(p, FieldSpec::rationals()), oracle_tor(p), name);
    expect_same(tor_table(p, FieldSpec::prime_field(3)), oracle_tor(p, 3), name + " F_3");
  }
}

TEST(Tor, SingleCellAgreesWithTable) {
  Poset h = hexagon();
  TorTable t = tor_table(h, FieldSpec::rationals());
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= m + 1; ++n)
      EXPECT_EQ(t.at(n, m), tor_dimension(h, n, m, FieldSpec::rationals()));
}

TEST(Tor, ThreadCountDoesNotMatter) {
  Poset p = generate("tiling:0,0,1,1,-1,1,0,2");
  auto a = tor_table(p, FieldSpec::rationals(), {1});
  auto b = tor_table(p, FieldSpec::rationals(), {4});
  EXPECT_EQ(a.dims, b.dims);
}

TEST(Tor, RejectsNonGraded) {
  Poset p = Poset::from_covers({"a", "b", "c", "d", "e"},
                               {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "e"}, {"e", "d"}});
  EXPECT_THROW(tor_table(p, FieldSpec::rationals()), NotGradedError);
}

TEST(Tor, Tsv) {
  TorTable t = tor_table(antichain(3), FieldSpec::rationals());
  EXPECT_EQ("n\tm\tdim\n0\t0\t3\nkoszul\ttrue\n", to_tsv(t));
  TorTable h = tor_table(hexagon(), FieldSpec::rationals());
  EXPECT_EQ("n\tm\tdim\n0\t0\t6\n1\t1\t6\n2\t3\t1\nkoszul\tfalse\n", to_tsv(h));
  EXPECT_NE(to_tsv(h, true).find("3\t3\t0\n"), std::string::npos);
}

TEST(Witness, HexagonCycleIsOmega) {
  Poset h = hexagon();
  auto ws = witness_cycles(h, 2, 3, FieldSpec::rationals());
  ASSERT_EQ(1u, ws.size());
  ChainFamily basis = enumerate_chains(h, 2, 3);
  std::string s = format_chain_combination(h, basis, ws[0]);
  EXPECT_TRUE(s == "e(s,x)⊗e(x,t) - e(s,y)⊗e(y,t)" || s == "e(s,y)⊗e(y,t) - e(s,x)⊗e(x,t)") << s;
}

TEST(Witness, CountMatchesHomology) {
  for (const auto& [name, p] : testing_support::random_corpus(30, 10, 77)) {
    TorTable t = tor_table(p, FieldSpec::rationals());
    for (const auto& w : t.witnesses)
      EXPECT_EQ(w.dim, witness_cycles(p, w.n, w.m, FieldSpec::rationals()).size()) << name;
  }
  EXPECT_TRUE(witness_cycles(tile(), 1, 2, FieldSpec::rationals()).empty());
}

TEST(Witness, Formatting) {
  Poset t = tile();
  ChainFamily b = enumerate_chains(t, 2, 2);
  EXPECT_EQ("2·e(s,u)⊗e(u,t) - e(s,v)⊗e(v,t)", format_chain_combination(t, b, {2, -1}));
  EXPECT_EQ("0", format_chain_combination(t, b, {0, 0}));
  EXPECT_EQ("e(u,u)", format_chain_combination(t, enumerate_chains(t, 0, 0), {0, 1, 0, 0}));
}

TEST(FrontierModule, Validation) {
  Poset t = tile();
  std::vector<Index> gens{t.index_of("u")};
  EXPECT_THROW(module_tor(t, t.index_of("u"), gens, 0, 0, FieldSpec::rationals()),
               InvalidTargetError);
  std::vector<Index> bad{t.index_of("t")};
  EXPECT_THROW(module_tor(t, t.index_of("t"), bad, 0, 0, FieldSpec::rationals()),
               InvalidGeneratorError);
}

TEST(FrontierModule, SingleCoverIsFree) {
  // Be_{u,t} is Be_{u,u} shifted by one: Tor vanishes off the diagonal.
  for (const auto& [name, p] : testing_support::random_corpus(40, 10, 4000)) {
    for (Index t = 0; t < p.size(); ++t) {
      if (!p.is_maximal(t)) continue;
      for (Index u : p.lower_covers(t)) {
        std::vector<Index> g{u};
        for (int m = 0; m <= p.max_interval_length(); ++m)
          for (int n = 1; n <= m; ++n)
            if (m != n) {
              EXPECT_EQ(0u, module_tor(p, t, g, n - 1, m, FieldSpec::rationals())) << name;
            }
      }
    }
  }
}

TEST(FrontierModule, TileGenerators) {
  Poset t = tile();
  std::vector<Index> uv{t.index_of("u"), t.index_of("v")};
  // Generators in degree 1, one relation in degree 2.
  EXPECT_EQ(2u, module_tor(t, t.index_of("t"), uv, 0, 1, FieldSpec::rationals()));
  EXPECT_EQ(1u, module_tor(t, t.index_of("t"), uv, 1, 2, FieldSpec::rationals()));
  EXPECT_EQ(0u, module_tor(t, t.index_of("t"), uv, 0, 2, FieldSpec::rationals()));
}
