#pragma once

#include "bmg/colored_digraph.hpp"

#include <vector>

namespace bmg {

using ClassId = int;
using ClassSet = boost::dynamic_bitset<>;

// Partition of the vertices into classes of equal out- and in-neighborhood.
//
// Classes are ordered by their smallest member. Because N0 holds for every
// digraph (a class is either inside N(x) or disjoint from it), neighborhoods
// are stored at class granularity without loss.
struct ThinnessPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<ClassId> class_of;
  std::vector<Color> color;        // color of the first member
  std::vector<ClassSet> out;       // N(alpha) as a set of classes
  std::vector<ClassSet> in;        // N^-(alpha) as a set of classes

  std::size_t size() const { return classes.size(); }
  // Every class is monochromatic (true for loop-free multipartite candidates).
  bool monochromatic(const ColoredDigraph &g) const;
  // Union of the member vertices of the given classes.
  VertexSet Expand(const ClassSet &classes_set, std::size_t vertex_count) const;
};

ThinnessPartition ComputeThinness(const ColoredDigraph &g);

// Digraph on classes: one vertex per class (named after its smallest member,
// colored like it), arc alpha->beta iff beta is inside N(alpha).
ColoredDigraph QuotientDigraph(const ColoredDigraph &g, const ThinnessPartition &p);

}  // namespace bmg
