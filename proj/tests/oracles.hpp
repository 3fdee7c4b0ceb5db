#pragma once

// Test-only reference implementations and generators. Nothing here shares
// code paths with the library beyond the tree and graph containers.

#include "bmg/colored_digraph.hpp"
#include "bmg/tree.hpp"
#include "bmg/triple_set.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// Rooted tree as a parent array; leaf[v] is a label index or -1.
struct Shape {
  std::vector<int> parent;
  std::vector<int> leaf;
};

// Every rooted phylogenetic tree on leaves 0..n-1, each exactly once
// (obtained by inserting leaf k into every edge, below every inner node, or
// above the root of each tree on k leaves). 1, 1, 4, 26, 236, 2752, ...
std::vector<Shape> AllShapes(int n);

// Every surjective map {0..n-1} -> {0..k-1}.
std::vector<std::vector<int>> SurjectiveColorings(int n, int k);

bmg::LeafColoredTree Realize(const Shape &s, const std::vector<std::string> &names,
                             const std::vector<std::string> &colors);

// Leaf names a, b, c, ... for small trees, "v<i>" beyond 26.
std::vector<std::string> LeafNames(int n);
std::vector<std::string> ColorNames(const std::vector<int> &coloring);

// lca by intersecting root paths.
bmg::Node NaiveLca(const bmg::LeafColoredTree &t, bmg::Node u, bmg::Node v);

// All xy|z with x, y, z distinct and lca(x,y) strictly below lca(x,y,z),
// by checking every leaf triple.
bmg::TripleSet NaiveTriples(const bmg::LeafColoredTree &t);

// A tree on the graph's vertices (with its colors) whose BMG equals g, found
// by trying every shape; empty if none exists. Practical up to 6 vertices.
std::optional<bmg::LeafColoredTree> BruteForceExplain(const bmg::ColoredDigraph &g);

// Random phylogenetic tree independent of the library simulator: leaves are
// attached one at a time to a uniformly chosen node (edge subdivision,
// child of an inner node, or new root).
bmg::LeafColoredTree RandomTree(std::mt19937_64 &rng, int leaves, int colors);

// Random digraph without same-color arcs; each admissible arc present with
// probability p.
bmg::ColoredDigraph RandomDigraph(std::mt19937_64 &rng, int vertices, int colors, double p);

// Names of the classes of g: groups of vertices with equal in- and
// out-neighborhoods, by direct pairwise comparison.
std::vector<std::vector<bmg::Vertex>> NaiveClasses(const bmg::ColoredDigraph &g);

}  // namespace oracle
