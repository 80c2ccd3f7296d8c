#include <gtest/gtest.h>

#include <sstream>

#include "koszulkit_cli/cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = koszulkit::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string gen(const std::string& spec) { return run({"gen", spec}).out; }

}  // namespace

TEST(Cli, TileIsKoszul) {
  Outcome r = run({"koszul", "-"}, gen("tile"));
  EXPECT_EQ(0, r.status);
  EXPECT_EQ("koszul: true (field Q)\n", r.out);
}

TEST(Cli, HexagonWitness) {
  Outcome r = run({"koszul", "-", "--witness"}, gen("hexagon"));
  EXPECT_EQ(1, r.status);
  EXPECT_NE(r.out.find("witness: n=2 m=3 dim=1\n"), std::string::npos);
  EXPECT_NE(r.out.find("cycle: e(s,x)⊗e(x,t) - e(s,y)⊗e(y,t)"), std::string::npos) << r.out;
  Outcome p = run({"koszul", "-", "--witness", "--field", "fp:32003"}, gen("hexagon"));
  EXPECT_NE(p.out.find("(field F_32003)"), std::string::npos);
  EXPECT_NE(p.out.find("cycle: e(s,x)⊗e(x,t) - e(s,y)⊗e(y,t)"), std::string::npos) << p.out;
}

TEST(Cli, AntichainTor) {
  Outcome r = run({"tor", "-"}, gen("antichain:3"));
  EXPECT_EQ(0, r.status);
  EXPECT_EQ("n\tm\tdim\n0\t0\t3\nkoszul\ttrue\n", r.out);
}

TEST(Cli, TorFullAndPretty) {
  Outcome full = run({"tor", "-g", "tile", "--full"});
  EXPECT_EQ("n\tm\tdim\n0\t0\t4\n0\t1\t0\n1\t1\t4\n0\t2\t0\n1\t2\t0\n2\t2\t1\nkoszul\ttrue\n",
            full.out);
  Outcome pretty = run({"tor", "-g", "tile", "--pretty"});
  EXPECT_NE(pretty.out.find("koszul  true"), std::string::npos) << pretty.out;
}

TEST(Cli, DebugMatrices) {
  Outcome r = run({"tor", "-g", "tile", "--debug-matrices"});
  EXPECT_EQ("# d_2 m=2\n1 2\n0 0 1\n0 1 1\n", r.err);
}

TEST(Cli, Shriek) {
  Outcome r = run({"shriek", "-g", "hexagon", "--koszul-complex"});
  EXPECT_EQ(0, r.status);
  EXPECT_NE(r.out.find("agree\tfalse\n"), std::string::npos);
  EXPECT_NE(r.out.find("koszul_complex_exact\tfalse\n"), std::string::npos);
  Outcome t = run({"shriek", "-g", "tile"});
  EXPECT_EQ("n\tdim_shriek\tdim_tor_diag\n0\t4\t4\n1\t4\t4\n2\t1\t1\nagree\ttrue\n", t.out);
}

TEST(Cli, ModuleTor) {
  Outcome r = run({"module-tor", "-g", "tile", "--target", "t", "--gens", "u,v"});
  EXPECT_EQ(0, r.status);
  EXPECT_EQ("n\tm\tdim\n0\t1\t2\n1\t2\t1\n", r.out);
  Outcome bad = run({"module-tor", "-g", "tile", "--target", "u", "--gens", "s"});
  EXPECT_EQ(2, bad.status);
  EXPECT_NE(bad.err.find("not a maximal element"), std::string::npos);
}

TEST(Cli, Build) {
  Outcome r = run({"build", std::string(KOSZULKIT_TEST_DATA) + "/tiling_script.json"});
  EXPECT_EQ(0, r.status) << r.err;
  EXPECT_NE(r.err.find("koszul by construction"), std::string::npos);
  EXPECT_EQ(0, run({"koszul", "-"}, r.out).status);

  std::string bad = R"({"start":{"gen":"hdiamond","args":[2,2]},"steps":[{"kind":3,"new":"w","frontier":["u","v"]}]})";
  Outcome f = run({"build", "-"}, bad);
  EXPECT_EQ(2, f.status);
  EXPECT_NE(f.err.find("(dagger)"), std::string::npos);
  EXPECT_TRUE(f.out.empty());
}

TEST(Cli, ValidateAndDotRoundTrip) {
  for (const char* spec : {"tile", "hexagon", "vdiamond:4", "hdiamond:3,2", "chain:3", "antichain:2",
                           "tiling:0,0,1,1", "random:9,10,0.6"}) {
    std::string json = gen(spec);
    EXPECT_EQ(0, run({"validate", "-"}, json).status) << spec;
    Outcome d = run({"dot", "-"}, json);
    EXPECT_EQ(0, d.status) << spec;
    EXPECT_EQ(0u, d.out.find("digraph poset {"));
  }
}

TEST(Cli, Errors) {
  Outcome ng = run({"validate", "-"},
               R"({"elements":["a","b","c","d","e"],"covers":[["a","b"],["b","c"],["c","d"],["a","e"],["e","d"]]})");
  EXPECT_EQ(2, ng.status);
  EXPECT_NE(ng.err.find("[a,d]"), std::string::npos) << ng.err;
  EXPECT_EQ(2, run({"tor", "-"}, "{not json").status);
  EXPECT_EQ(2, run({"gen", "nosuch"}).status);
  EXPECT_EQ(2, run({"tor", "-g", "tile", "--field", "fp:4"}).status);
  EXPECT_EQ(2, run({"tor", "/nonexistent/file.json"}).status);
  EXPECT_EQ(2, run({}).status);
  EXPECT_EQ(2, run({"frobnicate"}).status);
  EXPECT_EQ(0, run({"--help"}).status);
}

TEST(Cli, Deterministic) {
  for (const char* spec : {"tiling:0,0,1,1,-1,1", "random:5,11,0.7"}) {
    std::string json = gen(spec);
    EXPECT_EQ(json, gen(spec));
    EXPECT_EQ(run({"tor", "-", "--full"}, json).out, run({"tor", "-", "--full"}, json).out);
    EXPECT_EQ(run({"koszul", "-", "--witness"}, json).out, run({"koszul", "-", "--witness"}, json).out);
  }
}
