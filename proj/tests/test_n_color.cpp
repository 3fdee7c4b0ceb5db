#include "fixtures.hpp"
#include "oracles.hpp"

#include "bmg/bmg.hpp"
#include "bmg/errors.hpp"
#include "bmg/io.hpp"
#include "bmg/n_color.hpp"
#include "bmg/triples.hpp"
#include "bmg/two_color.hpp"

#include <doctest.h>

#include <random>

using namespace bmg;

namespace {

std::vector<std::string> ColorsOf(const ColoredDigraph &g) {
  std::vector<std::string> colors;
  for (std::size_t v = 0; v < g.size(); ++v) colors.push_back(g.color_name(g.color(static_cast<Vertex>(v))));
  return colors;
}

}  // namespace

TEST_CASE("three-colored graph with non-trivial classes") {
  ColoredDigraph g = io::ParseGraph(fixtures::kThreeColorGraph);
  ThinnessPartition p = ComputeThinness(g);
  std::vector<std::vector<std::string>> big;
  for (const auto &c : p.classes) {
    if (c.size() < 2) continue;
    big.emplace_back();
    for (Vertex v : c) big.back().push_back(g.name(v));
  }
  CHECK(big == std::vector<std::vector<std::string>>{{"a2", "a3", "a4"}, {"b3", "b4"}, {"c3", "c4"}});

  RecognitionReport report = RecognizeNcbmg(g);
  REQUIRE(report.accepted());
  CHECK(io::FormatNewick(*report.lrt) == fixtures::kThreeColorLrt + "\n");
  REQUIRE(report.components.size() == 1);
  CHECK(report.components[0].pairs.size() == 3);

  // The LRT is the Aho tree of the pairwise trees' triples.
  std::vector<TripleSet> parts;
  for (auto [s, t] : {std::pair{"a", "b"}, {"a", "c"}, {"b", "c"}}) {
    ColoredDigraph h = InducedSubgraph(g, {s, t});
    REQUIRE(ConnectedComponents(h).size() == 1);
    TreeVerdict v = LrtViaHierarchy(h);
    REQUIRE(v.accepted());
    CHECK(Displays(*report.lrt, *v.tree));
    parts.push_back(TriplesOf(*v.tree));
  }
  auto colors = ColorsOf(g);
  BuildResult aho = Build(UnionOver(g.names(), parts), g.names(), &colors);
  REQUIRE(aho.consistent());
  CHECK(*aho.tree == *report.lrt);
  CHECK(RecognizeNcbmg(g, Route::Direct).lrt == report.lrt);
}

TEST_CASE("symmetric hexagon has good pairs but no tree") {
  ColoredDigraph g = io::ParseGraph(fixtures::kSymmetricHexagon);
  for (auto [s, t] : {std::pair{"c0", "c1"}, {"c0", "c2"}, {"c1", "c2"}}) {
    ColoredDigraph h = InducedSubgraph(g, {s, t});
    for (const auto &comp : ConnectedComponents(h)) CHECK(LrtViaHierarchy(h.induced(comp)).accepted());
  }
  CHECK_FALSE(oracle::BruteForceExplain(g).has_value());
  for (Route route : {Route::Pairwise, Route::Direct}) {
    RecognitionReport r = RecognizeNcbmg(g, route);
    REQUIRE_FALSE(r.accepted());
    CHECK((r.rejection->stage == Stage::TriplesInconsistent ||
           r.rejection->stage == Stage::GraphMismatch));
    for (const auto &comp : r.components) {
      for (const auto &pair : comp.pairs) CHECK_FALSE(pair.rejection.has_value());
    }
  }
}

TEST_CASE("structural rejections") {
  RecognitionReport same = RecognizeNcbmg(io::ParseGraph("V x r\nV y r\nV z b\nA x y\nA x z\nA z x\n"));
  REQUIRE_FALSE(same.accepted());
  CHECK(same.rejection->stage == Stage::SameColorArc);

  // Two components with different color sets.
  RecognitionReport mismatch = RecognizeNcbmg(io::ParseGraph(
      "V x r\nV y b\nV u r\nV w g\nA x y\nA y x\nA u w\nA w u\n"));
  REQUIRE_FALSE(mismatch.accepted());
  CHECK(mismatch.rejection->stage == Stage::ComponentColorMismatch);

  RecognitionReport pair = RecognizeNcbmg(io::ParseGraph(fixtures::kSmallestNonBmg));
  REQUIRE_FALSE(pair.accepted());
  CHECK(pair.rejection->stage == Stage::TwoColorFailure);

  CHECK_THROWS_AS(RecognizeNcbmg(ColoredDigraph()), InputError);
}

TEST_CASE("one color") {
  RecognitionReport ok = RecognizeNcbmg(io::ParseGraph("V x r\nV y r\nV z r\n"));
  REQUIRE(ok.accepted());
  CHECK(ok.single_color);
  CHECK(ok.lrt->size() == 4);
  RecognitionReport single = RecognizeNcbmg(io::ParseGraph("V x r\n"));
  REQUIRE(single.accepted());
  CHECK(single.lrt->size() == 1);
  CHECK_FALSE(RecognizeNcbmg(io::ParseGraph("V x r\nV y r\nA x y\n")).accepted());
}

TEST_CASE("recognition agrees with exhaustive search on small digraphs") {
  std::mt19937_64 rng(51);
  int accepted = 0;
  for (int round = 0; round < 1500; ++round) {
    const int n = 2 + round % 5;
    const int k = 2 + round % 2;
    if (k > n) continue;
    ColoredDigraph g = oracle::RandomDigraph(rng, n, k, 0.3 + 0.1 * (round % 5));
    const bool expected = oracle::BruteForceExplain(g).has_value();
    for (Route route : {Route::Pairwise, Route::Direct}) {
      RecognitionReport r = RecognizeNcbmg(g, route, Execution::Serial);
      REQUIRE(r.accepted() == expected);
      if (r.accepted()) CHECK(BmgOfTree(*r.lrt) == g);
    }
    accepted += expected;
  }
  // Keep the sample meaningful.
  CHECK(accepted > 50);
}

TEST_CASE("every BMG of a small tree is recognized") {
  for (int n = 2; n <= 5; ++n) {
    auto names = oracle::LeafNames(n);
    for (int k = 2; k <= std::min(n, 3); ++k) {
      for (const auto &coloring : oracle::SurjectiveColorings(n, k)) {
        auto colors = oracle::ColorNames(coloring);
        for (const auto &shape : oracle::AllShapes(n)) {
          LeafColoredTree t = oracle::Realize(shape, names, colors);
          ColoredDigraph g = BmgOfTree(t);
          RecognitionReport r = RecognizeNcbmg(g, Route::Pairwise, Execution::Serial);
          REQUIRE(r.accepted());
          CHECK(BmgOfTree(*r.lrt) == g);
          CHECK(Displays(t, *r.lrt));
        }
      }
    }
  }
}

TEST_CASE("simulated BMGs: round trip, routes, minimality") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int colors = 2 + static_cast<int>(seed % 5);
    SimulationConfig cfg{8 + static_cast<int>(seed % 30), colors, seed,
                         seed % 2 ? TreeShape::Binary : TreeShape::Multifurcating};
    Simulation sim = Simulate(cfg);
    RecognitionReport a = RecognizeNcbmg(sim.graph, Route::Pairwise);
    RecognitionReport b = RecognizeNcbmg(sim.graph, Route::Direct);
    REQUIRE(a.accepted());
    REQUIRE(b.accepted());
    CHECK(*a.lrt == *b.lrt);
    CHECK(BmgOfTree(*a.lrt) == sim.graph);
    CHECK(Displays(sim.tree, *a.lrt));
    CHECK(RedundantEdgesN(*a.lrt, sim.graph).empty());
    for (Node e : a.lrt->inner_edges()) CHECK_FALSE(BmgOfTree(ContractEdges(*a.lrt, {e})) == sim.graph);
    CHECK(ContractEdges(sim.tree, RedundantEdgesN(sim.tree, sim.graph)) == *a.lrt);
    // Three leaves of distinct colors form a complete symmetric triangle in
    // the BMG of the restriction.
    std::mt19937_64 rng(seed);
    for (int probe = 0; probe < 10 && colors >= 3; ++probe) {
      std::vector<std::string> pick;
      std::vector<int> used;
      for (std::size_t i = 0; i < sim.tree.leaf_count() && pick.size() < 3; ++i) {
        const Leaf x = static_cast<Leaf>((i + rng()) % sim.tree.leaf_count());
        const int c = sim.tree.leaf_color(x);
        if (std::find(used.begin(), used.end(), c) != used.end()) continue;
        used.push_back(c);
        pick.push_back(sim.tree.leaf_name(x));
      }
      if (pick.size() < 3) continue;
      CHECK(BmgOfTree(Restrict(*a.lrt, pick)).arc_count() == 6);
    }
    // The report carries timings for every stage.
    CHECK(a.timings.size() == 4);
  }
}

TEST_CASE("disconnected graphs are assembled under a fresh root") {
  int disconnected = 0;
  for (std::uint64_t seed = 100; seed < 400 && disconnected < 30; ++seed) {
    Simulation sim = Simulate({10, 3, seed, TreeShape::Multifurcating});
    if (ConnectedComponents(sim.graph).size() < 2) continue;
    ++disconnected;
    RecognitionReport r = RecognizeNcbmg(sim.graph);
    REQUIRE(r.accepted());
    CHECK(r.components.size() == ConnectedComponents(sim.graph).size());
    CHECK(r.lrt->children(r.lrt->root()).size() >= r.components.size());
    CHECK(BmgOfTree(*r.lrt) == sim.graph);
  }
  CHECK(disconnected > 0);
}

TEST_CASE("redundant edges agree with the two-color rule") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Simulation sim = Simulate({6 + static_cast<int>(seed % 25), 2, seed, TreeShape::Binary});
    CHECK(RedundantEdgesN(sim.tree, sim.graph) == RedundantEdges2(sim.tree, sim.graph));
  }
  Simulation sim = Simulate({10, 3, 1, TreeShape::Binary});
  CHECK_THROWS_AS(RedundantEdgesN(sim.tree, io::ParseGraph(fixtures::kThreeColorGraph)), InputError);
}

TEST_CASE("serial and parallel recognition agree") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Simulation sim = Simulate({60, 5, seed, TreeShape::Multifurcating});
    RecognitionReport s = RecognizeNcbmg(sim.graph, Route::Pairwise, Execution::Serial);
    RecognitionReport p = RecognizeNcbmg(sim.graph, Route::Pairwise, Execution::Parallel);
    REQUIRE(s.accepted());
    REQUIRE(p.accepted());
    CHECK(*s.lrt == *p.lrt);
  }
}
