#include "fixtures.hpp"
#include "oracles.hpp"

#include "bmg/bmg.hpp"
#include "bmg/errors.hpp"
#include "bmg/io.hpp"
#include "bmg/triples.hpp"

#include <doctest.h>

#include <random>

using namespace bmg;

namespace {

// Line and column of the ParseError raised by `fn`.
template <class Fn>
std::pair<std::size_t, std::size_t> ErrorAt(Fn &&fn) {
  try {
    fn();
  } catch (const ParseError &e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("graph files") {
  ColoredDigraph g = io::ParseGraph("# comment\nV b blue\n\nV a red  # trailing\nA a b\n");
  CHECK(g.size() == 2);
  CHECK(g.has_arc(0, 1));
  CHECK(io::FormatGraph(g) == "V a red\nV b blue\nA a b\n");
  CHECK(io::ParseGraph(io::FormatGraph(g)) == g);
}

TEST_CASE("graph file errors carry positions") {
  CHECK(ErrorAt([] { io::ParseGraph("V a r\nX a b\n"); }) == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(ErrorAt([] { io::ParseGraph("V a r\nV a b\n"); }) == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(ErrorAt([] { io::ParseGraph("V a r\nA a q\n"); }) == std::pair<std::size_t, std::size_t>{2, 5});
  CHECK(ErrorAt([] { io::ParseGraph("V a r\nA a a\n"); }).first == 2);
  CHECK(ErrorAt([] { io::ParseGraph("V a r\nV b s\nA a b\nA a b\n"); }).first == 4);
  CHECK(ErrorAt([] { io::ParseGraph("V a r x\n"); }) == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK(ErrorAt([] { io::ParseGraph("V a\n"); }).first == 1);
  CHECK_THROWS_AS(io::ParseGraph(""), ParseError);
  CHECK_THROWS_AS(io::ParseGraph("# only a comment\n"), ParseError);
}

TEST_CASE("undirected graphs are written with both arcs") {
  ColoredGraph h = fixtures::AlternatingPath();
  ColoredDigraph back = io::ParseGraph(io::FormatGraph(h));
  CHECK(back.arc_count() == 6);
  CHECK(SymmetricPart(back) == h);
}

TEST_CASE("newick and color sidecar") {
  io::ColorMap colors = io::ParseColorMap("a\tr\nb\tb\nc\tr\n");
  CHECK(colors.size() == 3);
  LeafColoredTree t = io::ParseNewick(" ((c, a) ,b);\n", &colors);
  CHECK(io::FormatNewick(t) == "((a,c),b);\n");
  CHECK(io::FormatColorMap(t) == "a\tr\nb\tb\nc\tr\n");
  CHECK(io::ParseNewick("x;").size() == 1);
  CHECK(io::ParseNewick("((x,y));") == io::ParseNewick("(x,y);"));

  CHECK_THROWS_AS(io::ParseColorMap("a r\n"), ParseError);
  CHECK_THROWS_AS(io::ParseColorMap("a\tr\na\tb\n"), ParseError);
  CHECK_THROWS_AS(io::ParseNewick("(a,b)"), ParseError);
  CHECK_THROWS_AS(io::ParseNewick("(a:1,b);"), ParseError);
  CHECK_THROWS_AS(io::ParseNewick("(a,b)x;"), ParseError);
  CHECK_THROWS_AS(io::ParseNewick("(a,b);x"), ParseError);
  CHECK_THROWS_AS(io::ParseNewick("(a,);"), ParseError);
  CHECK_THROWS_AS(io::ParseNewick("(a,b,a);"), InputError);
  io::ColorMap partial = io::ParseColorMap("a\tr\n");
  CHECK_THROWS_AS(io::ParseNewick("(a,b);", &partial), InputError);
  io::ColorMap extra = io::ParseColorMap("a\tr\nb\tb\nz\tr\n");
  CHECK_THROWS_AS(io::ParseNewick("(a,b);", &extra), InputError);
}

TEST_CASE("newick round trip on random trees") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 200; ++round) {
    LeafColoredTree t = oracle::RandomTree(rng, 1 + round % 40, 1 + round % 4);
    io::ColorMap colors = io::ParseColorMap(io::FormatColorMap(t));
    CHECK(io::ParseNewick(io::FormatNewick(t), &colors) == t);
  }
}

TEST_CASE("triples and dot output") {
  ColoredDigraph g = io::ParseGraph(fixtures::kCounterTriples);
  CHECK(io::FormatTriples(InformativeTriples(g)) == "a1 b1 | a2\na1 b1 | b2\na1 b2 | a2\n");
  const std::string dot = io::FormatDot(g);
  CHECK(dot.find("\"a1\" -> \"b1\" [dir=none];") != std::string::npos);
  CHECK(dot.find("\"b1\" -> \"a1\"") == std::string::npos);
  CHECK(dot.find("\"b2\" -> \"a1\";") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
}
