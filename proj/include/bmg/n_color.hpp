#pragma once

// Recognition of colored best match graphs with any number of colors.

#include "bmg/colored_digraph.hpp"
#include "bmg/execution.hpp"
#include "bmg/tree.hpp"
#include "bmg/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmg {

// How the supertree of a component is assembled from its two-colored parts:
// BUILD on all triples of the pairwise least resolved trees, or BUILD on the
// informative triples of the two-colored subgraphs.
enum class Route { Pairwise, Direct };

struct PairReport {
  std::string s;
  std::string t;
  std::optional<Rejection> rejection;  // empty when every component passed
  int components = 0;                  // connected components of G_st
};

struct ComponentReport {
  std::vector<std::string> vertices;
  std::vector<PairReport> pairs;  // sorted by color pair
  std::optional<Rejection> rejection;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct RecognitionReport {
  std::optional<LeafColoredTree> lrt;
  std::optional<Rejection> rejection;
  std::vector<ComponentReport> components;
  std::vector<StageTiming> timings;
  // Set for one-colored input, which is accepted iff it has no arcs.
  bool single_color = false;

  bool accepted() const { return lrt.has_value(); }
};

// Full pipeline: same-color arcs, components with equal color sets, every
// two-colored subgraph through the hierarchy route, BUILD on the chosen triple
// set, and the final comparison BmgOfTree(lrt) == g. Per-pair work runs in
// parallel under Execution::Parallel; results are merged in pair order.
// Throws InputError for an empty graph.
RecognitionReport RecognizeNcbmg(const ColoredDigraph &g, Route route = Route::Pairwise,
                                 Execution exec = Execution::Parallel);

// Inner edges parent(v) -> v such that v is not lca(a ∪ N_s(a)) for any class
// a and any color s occurring below parent(v) but not below v. Throws
// InputError unless BmgOfTree(t) == g.
std::vector<Node> RedundantEdgesN(const LeafColoredTree &t, const ColoredDigraph &g);

}  // namespace bmg
