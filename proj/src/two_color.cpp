#include "bmg/two_color.hpp"

#include "bmg/bmg.hpp"
#include "bmg/errors.hpp"
#include "structural.hpp"

#include <algorithm>
#include <numeric>

namespace bmg {

namespace {

ClassSet UnionOver(const std::vector<ClassSet> &rows, const ClassSet &which) {
  ClassSet r(which.size());
  for (auto b = which.find_first(); b != ClassSet::npos; b = which.find_next(b)) r |= rows[b];
  return r;
}

std::string Rep(const ColoredDigraph &g, const ThinnessPartition &p, std::size_t a) {
  return g.name(p.classes[a].front());
}

}  // namespace

ClassNeighborhoodTables ComputeTables(const ThinnessPartition &p) {
  const std::size_t k = p.size();
  ClassNeighborhoodTables t;
  t.n1 = p.out;
  t.n2.reserve(k);
  t.n3.reserve(k);
  for (std::size_t a = 0; a < k; ++a) t.n2.push_back(UnionOver(t.n1, t.n1[a]));
  for (std::size_t a = 0; a < k; ++a) t.n3.push_back(UnionOver(t.n1, t.n2[a]));
  t.y.assign(k, ClassSet(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (t.n1[a].intersects(t.n2[b])) t.y[a].set(b);
    }
  }
  return t;
}

std::string_view AxiomStatusName(AxiomStatus status) {
  switch (status) {
    case AxiomStatus::Pass: return "pass";
    case AxiomStatus::WrongColorCount: return "wrong-color-count";
    case AxiomStatus::SameColorArc: return "same-color-arc";
    case AxiomStatus::Disconnected: return "disconnected";
    case AxiomStatus::SinkVertex: return "sink-vertex";
    case AxiomStatus::N1: return "N1";
    case AxiomStatus::N2: return "N2";
    case AxiomStatus::N3: return "N3";
  }
  return "unknown";
}

namespace {

AxiomVerdict AxiomsOnClasses(const ColoredDigraph &g, const ThinnessPartition &p,
                             const ClassNeighborhoodTables &t) {
  const std::size_t k = p.size();
  for (std::size_t a = 0; a < k; ++a) {
    if (!t.n3[a].is_subset_of(t.n1[a])) return {AxiomStatus::N2, {Rep(g, p, a)}};
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (t.q2(a, b) || t.q2(b, a) || !t.n1[a].intersects(t.n1[b])) continue;
      const bool nested = t.n1[a].is_subset_of(t.n1[b]) || t.n1[b].is_subset_of(t.n1[a]);
      if (p.in[a] != p.in[b] || !nested) return {AxiomStatus::N3, {Rep(g, p, a), Rep(g, p, b)}};
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      if (t.x(a, b) || t.x(b, a)) continue;
      if (t.y_entry(a, b) || t.y_entry(b, a)) {
        return {AxiomStatus::N1, {Rep(g, p, a), Rep(g, p, b)}};
      }
    }
  }
  return {};
}

AxiomVerdict FromStructural(const Rejection &r) {
  AxiomStatus s = AxiomStatus::Pass;
  switch (r.stage) {
    case Stage::WrongColorCount: s = AxiomStatus::WrongColorCount; break;
    case Stage::SameColorArc: s = AxiomStatus::SameColorArc; break;
    case Stage::Disconnected: s = AxiomStatus::Disconnected; break;
    default: s = AxiomStatus::SinkVertex; break;
  }
  return {s, r.witness};
}

}  // namespace

AxiomVerdict CheckAxioms(const ColoredDigraph &g) {
  if (auto r = detail::CheckStructure(g)) return FromStructural(*r);
  ThinnessPartition p = ComputeThinness(g);
  return AxiomsOnClasses(g, p, ComputeTables(p));
}

ClassSet ReachableClasses(const ThinnessPartition &p, ClassId a) {
  ClassSet seen(p.size());
  std::vector<std::size_t> queue;
  auto push_all = [&](const ClassSet &s) {
    for (auto b = s.find_first(); b != ClassSet::npos; b = s.find_next(b)) {
      if (!seen.test(b)) {
        seen.set(b);
        queue.push_back(b);
      }
    }
  };
  push_all(p.out[a]);
  for (std::size_t i = 0; i < queue.size(); ++i) push_all(p.out[queue[i]]);
  return seen;
}

ClassSet QClasses(const ThinnessPartition &p, ClassId a) {
  ClassSet r(p.size());
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p.in[b] == p.in[a] && p.out[b].is_subset_of(p.out[a])) r.set(b);
  }
  return r;
}

ClassSet ExtendedReachableClasses(const ThinnessPartition &p, ClassId a) {
  return ReachableClasses(p, a) | QClasses(p, a);
}

VertexSet ReachableSet(const ColoredDigraph &g, const ThinnessPartition &p, ClassId a) {
  return p.Expand(ReachableClasses(p, a), g.size());
}

VertexSet ExtendedReachableSet(const ColoredDigraph &g, const ThinnessPartition &p, ClassId a) {
  return p.Expand(ExtendedReachableClasses(p, a), g.size());
}

std::variant<Hierarchy, Rejection> BuildHierarchy(const ColoredDigraph &g,
                                                  const ThinnessPartition &p,
                                                  const std::vector<ClassSet> &assigned) {
  const std::size_t k = p.size();
  Hierarchy h;
  h.node_of_class.assign(k, -1);
  std::vector<std::size_t> owner;  // first class carrying each member
  for (std::size_t a = 0; a < k; ++a) {
    auto it = std::find(h.sets.begin(), h.sets.end(), assigned[a]);
    if (it == h.sets.end()) {
      h.node_of_class[a] = static_cast<int>(h.sets.size());
      h.sets.push_back(assigned[a]);
      owner.push_back(a);
    } else {
      h.node_of_class[a] = static_cast<int>(it - h.sets.begin());
    }
  }
  const std::size_t m = h.sets.size();
  auto rep = [&](std::size_t node) { return Rep(g, p, owner[node]); };

  ClassSet all(k);
  all.set();
  auto top = std::find(h.sets.begin(), h.sets.end(), all);
  if (top == h.sets.end()) {
    // Name the classes owning the maximal members.
    std::vector<std::string> witness;
    for (std::size_t i = 0; i < m; ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < m && maximal; ++j) {
        if (j != i && h.sets[i].is_proper_subset_of(h.sets[j])) maximal = false;
      }
      if (maximal) witness.push_back(rep(i));
    }
    return Rejection{Stage::Laminarity, witness, "family has no maximum element"};
  }
  const std::size_t root = static_cast<std::size_t>(top - h.sets.begin());

  std::vector<std::size_t> by_size(m);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t i, std::size_t j) {
    return h.sets[i].count() < h.sets[j].count();
  });
  h.parent.assign(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == root) continue;
    // The smallest proper superset must lie inside every other superset.
    int first = -1;
    for (std::size_t j : by_size) {
      if (j == i || !h.sets[i].is_proper_subset_of(h.sets[j])) continue;
      if (first < 0) {
        first = static_cast<int>(j);
      } else if (!h.sets[first].is_subset_of(h.sets[j])) {
        return Rejection{Stage::HasseNotTree, {rep(i), rep(first), rep(j)},
                         "member with two immediate supersets"};
      }
    }
    h.parent[i] = first;
  }

  std::vector<std::vector<std::size_t>> kids(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (h.parent[i] >= 0) kids[h.parent[i]].push_back(i);
  }
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t a = 0; a < kids[u].size(); ++a) {
      for (std::size_t b = a + 1; b < kids[u].size(); ++b) {
        if (h.sets[kids[u][a]].intersects(h.sets[kids[u][b]])) {
          return Rejection{Stage::SiblingOverlap, {rep(kids[u][a]), rep(kids[u][b])},
                           "sibling members intersect"};
        }
      }
    }
  }
  return h;
}

LeafColoredTree HierarchyTree(const ColoredDigraph &g, const ThinnessPartition &p,
                              const Hierarchy &h) {
  const std::size_t m = h.sets.size();
  TreeBuilder builder;
  std::vector<Node> node(m, -1);
  // Parents are proper supersets, so larger members are created first.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return h.sets[i].count() > h.sets[j].count();
  });
  for (std::size_t i : order) node[i] = builder.AddNode(h.parent[i] < 0 ? -1 : node[h.parent[i]]);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (Vertex v : p.classes[a]) {
      builder.AddLeaf(node[h.node_of_class[a]], g.name(v), g.color_name(g.color(v)));
    }
  }
  return builder.Finish();
}

TreeVerdict LrtViaHierarchy(const ColoredDigraph &g) {
  if (auto r = detail::CheckStructure(g)) return TreeVerdict::Reject(*r);
  ThinnessPartition p = ComputeThinness(g);
  ClassNeighborhoodTables tables = ComputeTables(p);
  if (AxiomVerdict v = AxiomsOnClasses(g, p, tables); !v.passed()) {
    return TreeVerdict::Reject(
        {Stage::Axioms, v.witness, std::string(AxiomStatusName(v.status)) + " violated"});
  }
  std::vector<ClassSet> extended;
  extended.reserve(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    extended.push_back(ExtendedReachableClasses(p, static_cast<ClassId>(a)));
  }
  auto h = BuildHierarchy(g, p, extended);
  if (auto *r = std::get_if<Rejection>(&h)) return TreeVerdict::Reject(std::move(*r));
  LeafColoredTree tree = HierarchyTree(g, p, std::get<Hierarchy>(h));
  if (auto r = detail::ExplainsGate(tree, g)) return TreeVerdict::Reject(std::move(*r));
  return TreeVerdict::Accept(std::move(tree));
}

std::vector<Node> RedundantEdges2(const LeafColoredTree &t, const ColoredDigraph &g) {
  if (g.color_count() != 2) throw InputError("expected a two-colored graph");
  if (!(BmgOfTree(t) == g)) throw InputError("tree does not explain the graph");
  ThinnessPartition p = ComputeThinness(g);
  std::vector<char> is_root(t.size(), 0);
  for (std::size_t a = 0; a < p.size(); ++a) {
    Node rho = t.leaf_node(p.classes[a].front());
    for (Vertex x : p.classes[a]) rho = t.lca(rho, t.leaf_node(x));
    for (Vertex y : g.out(p.classes[a].front())) rho = t.lca(rho, t.leaf_node(y));
    is_root[rho] = 1;
  }
  std::vector<Node> r;
  for (Node v : t.inner_edges()) {
    if (!is_root[v]) r.push_back(v);
  }
  return r;
}

}  // namespace bmg
