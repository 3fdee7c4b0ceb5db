#pragma once

// Two-colored best match graphs: neighborhood axioms, reachable sets, and the
// least resolved tree from the hierarchy of extended reachable sets.

#include "bmg/colored_digraph.hpp"
#include "bmg/thinness.hpp"
#include "bmg/tree.hpp"
#include "bmg/verdict.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace bmg {

// Class-level neighborhood digests. For classes a, b:
//   X(a, b)  = a ⊆ N(b)
//   Q2(a, b) = a ⊆ N(N(b))
//   Y(a, b)  = N(a) ∩ N(N(b)) ≠ ∅
struct ClassNeighborhoodTables {
  std::vector<ClassSet> n1;  // N(a)
  std::vector<ClassSet> n2;  // N(N(a))
  std::vector<ClassSet> n3;  // N(N(N(a)))
  std::vector<ClassSet> y;   // y[a].test(b) == Y(a, b)

  bool x(ClassId a, ClassId b) const { return n1[b].test(a); }
  bool q2(ClassId a, ClassId b) const { return n2[b].test(a); }
  bool y_entry(ClassId a, ClassId b) const { return y[a].test(b); }
};

ClassNeighborhoodTables ComputeTables(const ThinnessPartition &p);

enum class AxiomStatus { Pass, WrongColorCount, SameColorArc, Disconnected, SinkVertex, N1, N2, N3 };

std::string_view AxiomStatusName(AxiomStatus status);

struct AxiomVerdict {
  AxiomStatus status = AxiomStatus::Pass;
  std::vector<std::string> witness;  // offending vertices or class representatives

  bool passed() const { return status == AxiomStatus::Pass; }
};

// Structural preconditions first (two colors, no same-color arc, connected,
// no sink), then N2, N3, N1 over classes in class order.
AxiomVerdict CheckAxioms(const ColoredDigraph &g);

// Classes reachable from a along one or more arcs.
ClassSet ReachableClasses(const ThinnessPartition &p, ClassId a);
// Classes b with N^-(b) = N^-(a) and N(b) ⊆ N(a); always contains a.
ClassSet QClasses(const ThinnessPartition &p, ClassId a);
// R(a) ∪ Q(a).
ClassSet ExtendedReachableClasses(const ThinnessPartition &p, ClassId a);

VertexSet ReachableSet(const ColoredDigraph &g, const ThinnessPartition &p, ClassId a);
VertexSet ExtendedReachableSet(const ColoredDigraph &g, const ThinnessPartition &p, ClassId a);

// Hasse tree of a set family over classes. sets[k] is a member; parent[k] is
// the index of its unique immediate superset (-1 for the maximum).
struct Hierarchy {
  std::vector<ClassSet> sets;
  std::vector<int> parent;
  std::vector<int> node_of_class;  // member assigned to each class
};

// Builds the Hasse tree of {assigned[a]}. Rejects at laminarity if the whole
// class set is not a member, at hasse-not-tree if some member has other than
// one immediate superset, and at sibling-overlap if two children of a member
// intersect. A tree with disjoint siblings is laminar, so no separate
// pairwise check is needed.
std::variant<Hierarchy, Rejection> BuildHierarchy(const ColoredDigraph &g,
                                                  const ThinnessPartition &p,
                                                  const std::vector<ClassSet> &assigned);

// Hierarchy tree with the vertices of each class attached as leaves to the
// node of their assigned member.
LeafColoredTree HierarchyTree(const ColoredDigraph &g, const ThinnessPartition &p,
                              const Hierarchy &h);

// Least resolved tree of a connected two-colored digraph, or the first stage
// that fails. The result always satisfies BmgOfTree(tree) == g.
TreeVerdict LrtViaHierarchy(const ColoredDigraph &g);

// Inner edges (named by child node) whose lower end is not the root of any
// class, i.e. not lca(a ∪ N(a)). Throws InputError unless BmgOfTree(t) == g
// and g has two colors.
std::vector<Node> RedundantEdges2(const LeafColoredTree &t, const ColoredDigraph &g);

}  // namespace bmg
