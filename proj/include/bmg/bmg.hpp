#pragma once

#include "bmg/colored_digraph.hpp"
#include "bmg/execution.hpp"
#include "bmg/tree.hpp"

#include <cstdint>

namespace bmg {

// Best match graph of a leaf-colored tree: x -> y iff the colors differ and
// lca(x,y) ⪯ lca(x,y') for every y' colored like y. O(|L|^2).
ColoredDigraph BmgOfTree(const LeafColoredTree &t, Execution exec = Execution::Parallel);

// Same graph by checking every (x, y, y') triple. O(|L|^3); for tests.
ColoredDigraph BmgOracle(const LeafColoredTree &t);

// Reciprocal best matches: the symmetric part of BmgOfTree.
ColoredGraph RbmgOfTree(const LeafColoredTree &t);

enum class TreeShape { Binary, Multifurcating };

struct SimulationConfig {
  int leaf_count = 10;
  int color_count = 2;
  std::uint64_t seed = 1;
  TreeShape shape = TreeShape::Binary;
};

struct Simulation {
  LeafColoredTree tree;
  ColoredDigraph graph;
};

// Random tree by repeated splitting of a uniformly chosen leaf; the
// multifurcating shape then contracts each inner edge with probability 0.2.
// Leaves are named g000, g001, ... and colors s0, s1, ...; every color is
// used. Throws InputError unless 2 <= leaf_count and
// 1 <= color_count <= leaf_count.
Simulation Simulate(const SimulationConfig &cfg);
LeafColoredTree SimulateTree(const SimulationConfig &cfg);

}  // namespace bmg
