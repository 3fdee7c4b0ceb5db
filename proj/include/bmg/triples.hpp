#pragma once

// Informative triples, BUILD, and the triple route to the least resolved tree.

#include "bmg/colored_digraph.hpp"
#include "bmg/triple_set.hpp"
#include "bmg/tree.hpp"
#include "bmg/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmg {

// The four three-vertex patterns that force a triple xy|c. In all of them
// x -> y, c has the color of y, x does not point to c, and c and y are not
// adjacent; they differ in whether y -> x and c -> x:
//   X1: y -> x, no c -> x     X2: y -> x, c -> x
//   X3: neither               X4: c -> x only
enum class TriplePattern { X1 = 1, X2, X3, X4 };

struct InformativeTriple {
  RootedTriple triple;  // over the graph's vertex ids
  TriplePattern pattern;
};

// Every informative triple with the pattern that induced it, sorted by triple.
std::vector<InformativeTriple> ClassifiedInformativeTriples(const ColoredDigraph &g);

// Informative triples over the universe of vertex names. O(|E| |L|).
TripleSet InformativeTriples(const ColoredDigraph &g);

// Edge xy iff some xy|z in r has x, y, z in `leaves` (universe names).
ColoredGraph AhoGraph(const TripleSet &r, const std::vector<std::string> &leaves);

struct BuildResult {
  std::optional<LeafColoredTree> tree;
  // On failure: the leaf set whose Aho graph stayed connected.
  std::vector<std::string> witness;

  bool consistent() const { return tree.has_value(); }
};

// BUILD on `leaves` (a subset of the universe). Leaves are colored "*" unless
// `colors` gives one color per entry of `leaves`.
BuildResult Build(const TripleSet &r, const std::vector<std::string> &leaves,
                  const std::vector<std::string> *colors = nullptr);
BuildResult Build(const TripleSet &r);

// Aho tree of the informative triples, per connected component, joined under
// a fresh root when there are several; accepted iff it explains g.
TreeVerdict LrtViaTriples(const ColoredDigraph &g);

// Triples xy|z with x, y in one connected component and z in another.
TripleSet ComponentTriples(const ColoredDigraph &g);

}  // namespace bmg
