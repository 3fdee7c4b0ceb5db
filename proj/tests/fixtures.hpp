#pragma once

// Small hand-made and frozen graphs and trees shared by the unit tests, the
// CLI tests and the acceptance binary. Graphs are kept as graph-file text so
// the same bytes can be written to disk.

#include "bmg/colored_digraph.hpp"
#include "bmg/io.hpp"
#include "bmg/tree.hpp"

#include <string>

namespace fixtures {

inline bmg::LeafColoredTree Tree(const std::string &newick, const bmg::io::ColorMap &colors) {
  return bmg::io::ParseNewick(newick, &colors);
}

// Smallest connected two-colored digraph with no sink that no tree explains.
// Every graph on at most three vertices with these properties is a BMG; this
// is the first of the 372 labeled four-vertex ones in enumeration order.
inline const std::string kSmallestNonBmg =
    "V a r\nV b r\nV c b\nV d b\n"
    "A a c\nA b c\nA c a\nA d a\n";

// a = a1, a' = a2, b = b1, b' = b2. a1 <-> b1 and b2 -> a1; a2 has no out-arc.
inline const std::string kCounterTriples =
    "V a1 red\nV a2 red\nV b1 blue\nV b2 blue\n"
    "A a1 b1\nA b1 a1\nA b2 a1\n";

// Symmetric three-colored hexagon a-d-e-b-c-f-a. Every two-colored induced
// subgraph is two disjoint edges, yet no tree explains the whole.
inline const std::string kSymmetricHexagon =
    "V a c0\nV b c0\nV c c1\nV d c1\nV e c2\nV f c2\n"
    "A a d\nA d a\nA d e\nA e d\nA e b\nA b e\n"
    "A b c\nA c b\nA c f\nA f c\nA f a\nA a f\n";

// Three colors, four genes each; non-trivial classes {a2,a3,a4}, {b3,b4},
// {c3,c4}. BMG of (((a1,(b1,c1),(b3,b4)),(a2,a3,a4,(c3,c4)),c2),b2).
inline const std::string kThreeColorGraph =
    "V a1 a\nV a2 a\nV a3 a\nV a4 a\nV b1 b\nV b2 b\nV b3 b\nV b4 b\n"
    "V c1 c\nV c2 c\nV c3 c\nV c4 c\n"
    "A a1 b1\nA a1 b3\nA a1 b4\nA a1 c1\n"
    "A a2 b1\nA a2 b3\nA a2 b4\nA a2 c3\nA a2 c4\n"
    "A a3 b1\nA a3 b3\nA a3 b4\nA a3 c3\nA a3 c4\n"
    "A a4 b1\nA a4 b3\nA a4 b4\nA a4 c3\nA a4 c4\n"
    "A b1 a1\nA b1 c1\n"
    "A b2 a1\nA b2 a2\nA b2 a3\nA b2 a4\nA b2 c1\nA b2 c2\nA b2 c3\nA b2 c4\n"
    "A b3 a1\nA b3 c1\nA b4 a1\nA b4 c1\n"
    "A c1 a1\nA c1 b1\n"
    "A c2 a1\nA c2 a2\nA c2 a3\nA c2 a4\nA c2 b1\nA c2 b3\nA c2 b4\n"
    "A c3 a2\nA c3 a3\nA c3 a4\nA c3 b1\nA c3 b3\nA c3 b4\n"
    "A c4 a2\nA c4 a3\nA c4 a4\nA c4 b1\nA c4 b3\nA c4 b4\n";
inline const std::string kThreeColorLrt = "(((a1,(b1,c1),b3,b4),(a2,a3,a4,c3,c4),c2),b2);";

// Two-colored BMG in which every class has an in-neighbor. R({a}) = R({c}) =
// {c,d}, so the tree of plain reachable sets hangs a next to c and d and
// explains a different graph; the extended sets separate them.
inline const std::string kReachableVsExtended =
    "V a b\nV b r\nV c b\nV d r\nV e b\n"
    "A a d\nA b a\nA b c\nA b e\nA c d\nA d c\nA e b\nA e d\n";
inline const std::string kReachableVsExtendedLrt = "((a,(c,d)),b,e);";
inline const std::string kReachableVsExtendedPlain = "((a,c,d),b,e);";

// Two classes without in-neighbors, {9,10} and {7,8}.
inline bmg::LeafColoredTree TwoSourceClassTree() {
  return Tree("(9,10,((1,2),(3,4),(7,8,(5,6))));",
              {{"1", "blue"}, {"2", "red"}, {"3", "blue"}, {"4", "red"}, {"5", "blue"},
               {"6", "red"}, {"7", "red"}, {"8", "red"}, {"9", "red"}, {"10", "red"}});
}

// ((u,v),(w,x)) with u, w red. Restricted to {u,v,w} it gains w -> v.
inline bmg::LeafColoredTree RestrictionGainsArcTree() {
  return Tree("((u,v),(w,x));", {{"u", "red"}, {"v", "blue"}, {"w", "red"}, {"x", "blue"}});
}

// ((u,v),(w,x)) with u, w red, v cyan, x yellow; the reciprocal part is the
// path u-v-x-w.
inline bmg::LeafColoredTree PathReciprocalTree() {
  return Tree("((u,v),(w,x));", {{"u", "red"}, {"v", "cyan"}, {"w", "red"}, {"x", "yellow"}});
}

// The path u-v-x-w with alternating colors.
inline bmg::ColoredGraph AlternatingPath() {
  return bmg::ColoredGraph::FromNamed(
      {{"u", "red"}, {"v", "blue"}, {"x", "red"}, {"w", "blue"}},
      {{"u", "v"}, {"v", "x"}, {"x", "w"}});
}

}  // namespace fixtures
