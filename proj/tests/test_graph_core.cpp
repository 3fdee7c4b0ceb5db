#include "oracles.hpp"

#include "bmg/bmg.hpp"
#include "bmg/colored_digraph.hpp"
#include "bmg/errors.hpp"
#include "bmg/thinness.hpp"

#include <doctest.h>

#include <random>

using namespace bmg;

namespace {

ColoredDigraph Triangle() {
  return ColoredDigraph::FromNamed({{"z", "b"}, {"x", "r"}, {"y", "b"}},
                                   {{"x", "y"}, {"x", "z"}, {"y", "x"}});
}

}  // namespace

TEST_CASE("vertices and colors are interned in name order") {
  ColoredDigraph g = Triangle();
  CHECK(g.names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(g.color_names() == std::vector<std::string>{"b", "r"});
  CHECK(g.color_name(g.color(*g.find("x"))) == "r");
  CHECK(g.arc_count() == 3);
  CHECK(g.has_arc(0, 1));
  CHECK_FALSE(g.has_arc(1, 2));
  CHECK(g.arcs() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 0}});
  CHECK(g.vertices_of_color(*g.find_color("b")) == std::vector<Vertex>{1, 2});
  CHECK_FALSE(g.find("w").has_value());
}

TEST_CASE("malformed digraphs are rejected") {
  CHECK_THROWS_AS(ColoredDigraph::FromNamed({{"x", "r"}, {"x", "b"}}, {}), InputError);
  CHECK_THROWS_AS(ColoredDigraph::FromNamed({{"x", "r"}}, {{"x", "x"}}), InputError);
  CHECK_THROWS_AS(ColoredDigraph::FromNamed({{"x", "r"}}, {{"x", "y"}}), InputError);
  CHECK_THROWS_AS(ColoredDigraph::FromNamed({{"x", "r"}, {"y", "b"}}, {{"x", "y"}, {"x", "y"}}),
                  InputError);
}

TEST_CASE("induced subgraphs keep names and drop unused colors") {
  ColoredDigraph g = Triangle();
  ColoredDigraph h = g.induced({0, 2});
  CHECK(h.names() == std::vector<std::string>{"x", "z"});
  CHECK(h.arc_count() == 1);
  CHECK(h.has_arc(0, 1));

  ColoredDigraph only_b = InducedSubgraph(g, {"b"});
  CHECK(only_b.size() == 2);
  CHECK(only_b.color_count() == 1);
  CHECK(only_b.arc_count() == 0);
  CHECK_THROWS_AS(InducedSubgraph(g, {"green"}), InputError);
}

TEST_CASE("components and symmetric part") {
  ColoredDigraph g = ColoredDigraph::FromNamed(
      {{"a", "r"}, {"b", "b"}, {"c", "r"}, {"d", "b"}, {"e", "r"}},
      {{"a", "b"}, {"b", "a"}, {"d", "c"}});
  auto comps = ConnectedComponents(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0, 1});
  CHECK(comps[1] == std::vector<Vertex>{2, 3});
  CHECK(comps[2] == std::vector<Vertex>{4});

  ColoredGraph h = SymmetricPart(g);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(0, 1));
  CHECK_FALSE(h.has_edge(2, 3));
  CHECK(ConnectedComponents(h).size() == 4);
}

TEST_CASE("equality compares names and colors, not ids") {
  ColoredDigraph a = Triangle();
  ColoredDigraph b = ColoredDigraph::FromNamed({{"x", "r"}, {"y", "b"}, {"z", "b"}},
                                               {{"y", "x"}, {"x", "z"}, {"x", "y"}});
  CHECK(a == b);
  ColoredDigraph c = ColoredDigraph::FromNamed({{"x", "r"}, {"y", "b"}, {"z", "g"}},
                                               {{"y", "x"}, {"x", "z"}, {"x", "y"}});
  CHECK_FALSE(a == c);
}

TEST_CASE("thinness classes match pairwise comparison") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + round % 9;
    ColoredDigraph g = oracle::RandomDigraph(rng, n, 2 + round % 2, 0.2 + 0.1 * (round % 5));
    ThinnessPartition p = ComputeThinness(g);
    CHECK(p.classes == oracle::NaiveClasses(g));
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (Vertex v : p.classes[a]) CHECK(p.class_of[v] == static_cast<ClassId>(a));
      // Class-level out-set expands to the vertex out-neighborhood.
      VertexSet out = p.Expand(p.out[a], g.size());
      const Vertex x = p.classes[a].front();
      CHECK(out.count() == g.out(x).size());
      for (Vertex y : g.out(x)) CHECK(out.test(y));
    }
    // Isolated vertices of different colors share a class. With two colors
    // and no sinks the out-neighborhood fixes the color.
    bool sinks = false;
    for (std::size_t v = 0; v < g.size(); ++v) sinks = sinks || g.out(static_cast<Vertex>(v)).empty();
    if (!sinks && g.color_count() == 2) CHECK(p.monochromatic(g));
  }
  ColoredDigraph isolated = ColoredDigraph::FromNamed({{"x", "r"}, {"y", "b"}}, {});
  CHECK(ComputeThinness(isolated).size() == 1);
  CHECK_FALSE(ComputeThinness(isolated).monochromatic(isolated));
}

TEST_CASE("quotient digraph has one vertex per class") {
  ColoredDigraph g = ColoredDigraph::FromNamed(
      {{"a", "r"}, {"b", "r"}, {"c", "b"}},
      {{"a", "c"}, {"b", "c"}, {"c", "a"}, {"c", "b"}});
  ThinnessPartition p = ComputeThinness(g);
  REQUIRE(p.size() == 2);
  ColoredDigraph q = QuotientDigraph(g, p);
  CHECK(q.names() == std::vector<std::string>{"a", "c"});
  CHECK(q.arc_count() == 2);
}

TEST_CASE("classes of the quotient are singletons") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 200; ++round) {
    ColoredDigraph g = oracle::RandomDigraph(rng, 3 + round % 10, 2 + round % 3, 0.3);
    ThinnessPartition p = ComputeThinness(g);
    ColoredDigraph q = QuotientDigraph(g, p);
    CHECK(ComputeThinness(q).size() == q.size());
    // N0: a class lies inside N(alpha) or misses it.
    for (std::size_t a = 0; a < p.size(); ++a) {
      const Vertex x = p.classes[a].front();
      for (const auto &beta : p.classes) {
        std::size_t hit = 0;
        for (Vertex y : beta) hit += g.has_arc(x, y);
        CHECK((hit == 0 || hit == beta.size()));
      }
    }
  }
}

TEST_CASE("color restriction commutes with the symmetric part and with BMG") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 200; ++round) {
    LeafColoredTree t = oracle::RandomTree(rng, 3 + round % 20, 3);
    ColoredDigraph g = BmgOfTree(t);
    const std::vector<std::string> pair{"c0", "c2"};
    ColoredDigraph h = InducedSubgraph(g, pair);
    std::vector<std::string> leaves;
    for (std::size_t i = 0; i < t.leaf_count(); ++i) {
      const std::string &c = t.color_name(t.leaf_color(static_cast<Leaf>(i)));
      if (c != "c1") leaves.push_back(t.leaf_name(static_cast<Leaf>(i)));
    }
    CHECK(h == BmgOfTree(Restrict(t, leaves)));
    std::vector<Vertex> keep;
    for (const auto &name : h.names()) keep.push_back(*g.find(name));
    CHECK(SymmetricPart(h) == SymmetricPart(g).induced(keep));
    CHECK(InducedSubgraph(g, {"c0", "c1", "c2"}) == g);
    std::size_t covered = 0;
    for (const auto &c : ConnectedComponents(h)) covered += c.size();
    CHECK(covered == h.size());
  }
}
