#pragma once

// Rooted leaf-colored phylogenetic trees.
//
// Every stored tree is normalized: non-root nodes with one child are
// suppressed, a root with one child is replaced by that child, and nodes are
// numbered in preorder with children sorted by their smallest descendant leaf.
// Leaves are indexed by sorted name, so leaf index i is vertex i of a digraph
// on the same names. The subtree of v is the node interval [v, v + size(v)).

#include "bmg/triple_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bmg {

using Node = int;
using Leaf = int;

class LeafColoredTree;

// Collects an arbitrary rooted tree and normalizes it into a LeafColoredTree.
class TreeBuilder {
 public:
  // The first node added without a parent is the root; a second one throws.
  Node AddNode(Node parent = -1);
  Node AddLeaf(Node parent, std::string name, std::string color = "*");

  // Throws InputError on duplicate leaf names, unnamed childless nodes or an
  // empty tree.
  LeafColoredTree Finish() const;

 private:
  std::vector<Node> parent_;
  std::vector<std::string> name_;
  std::vector<std::string> color_;
  std::vector<bool> is_leaf_;
  bool has_root_ = false;
};

class LeafColoredTree {
 public:
  LeafColoredTree() = default;

  std::size_t size() const { return parent_.size(); }
  std::size_t leaf_count() const { return leaf_node_.size(); }
  Node root() const { return 0; }
  Node parent(Node v) const { return parent_[v]; }
  std::span<const Node> children(Node v) const { return children_[v]; }
  bool is_leaf(Node v) const { return node_leaf_[v] >= 0; }
  int depth(Node v) const { return depth_[v]; }
  int subtree_size(Node v) const { return subtree_size_[v]; }
  // u is an ancestor of v or u == v (v ⪯ u).
  bool is_ancestor(Node u, Node v) const { return u <= v && v < u + subtree_size_[u]; }

  Node leaf_node(Leaf i) const { return leaf_node_[i]; }
  Leaf leaf_of(Node v) const { return node_leaf_[v]; }
  const std::string &leaf_name(Leaf i) const { return leaf_names_[i]; }
  const std::vector<std::string> &leaf_names() const { return leaf_names_; }
  int leaf_color(Leaf i) const { return leaf_colors_[i]; }
  const std::vector<int> &leaf_colors() const { return leaf_colors_; }
  const std::string &color_name(int c) const { return color_names_[c]; }
  const std::vector<std::string> &color_names() const { return color_names_; }
  std::size_t color_count() const { return color_names_.size(); }
  std::optional<Leaf> find_leaf(std::string_view name) const;

  // Lowest common ancestor; O(1) after construction.
  Node lca(Node u, Node v) const;
  Node leaf_lca(Leaf x, Leaf y) const { return lca(leaf_node_[x], leaf_node_[y]); }

  // Leaves of T(v) in preorder.
  std::vector<Leaf> leaves_below(Node v) const;
  // Non-root inner nodes; each names the inner edge parent(v) -> v.
  std::vector<Node> inner_edges() const;

  friend bool operator==(const LeafColoredTree &a, const LeafColoredTree &b);

 private:
  friend class TreeBuilder;
  void BuildIndex();

  std::vector<Node> parent_;
  std::vector<std::vector<Node>> children_;
  std::vector<int> depth_;
  std::vector<int> subtree_size_;
  std::vector<Leaf> node_leaf_;
  std::vector<Node> leaf_node_;
  std::vector<std::string> leaf_names_;
  std::vector<int> leaf_colors_;
  std::vector<std::string> color_names_;
  // Euler tour with a sparse table over first occurrences.
  std::vector<int> first_;
  std::vector<std::vector<Node>> sparse_;
};

// Spanning subtree of the named leaves, degree-two vertices suppressed.
// Throws InputError for an empty or unknown leaf set.
LeafColoredTree Restrict(const LeafColoredTree &t, const std::vector<Leaf> &leaves);
LeafColoredTree Restrict(const LeafColoredTree &t, const std::vector<std::string> &names);

// Contracts the inner edges parent(v) -> v for each listed v. Throws
// InputError if a listed node is the root or a leaf.
LeafColoredTree ContractEdges(const LeafColoredTree &t, const std::vector<Node> &edges);

// r(t2) ⊆ r(t restricted to L(t2)). Throws InputError if a leaf of t2 is
// missing from t or colored differently.
bool Displays(const LeafColoredTree &t, const LeafColoredTree &t2);

// All triples xy|z with lca(x,y) strictly below lca(x,y,z).
TripleSet TriplesOf(const LeafColoredTree &t);

// Same topology with new leaf colors; `colors` is indexed by leaf.
LeafColoredTree Recolor(const LeafColoredTree &t, const std::vector<std::string> &colors);

// Joins trees with disjoint leaf sets as children of a fresh root.
LeafColoredTree JoinUnderRoot(const std::vector<LeafColoredTree> &parts);

// Star tree on the given leaves.
LeafColoredTree StarTree(const std::vector<std::string> &names,
                         const std::vector<std::string> &colors);

}  // namespace bmg
