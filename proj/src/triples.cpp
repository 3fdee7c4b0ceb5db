#include "bmg/triples.hpp"

#include "bmg/bmg.hpp"
#include "bmg/errors.hpp"
#include "structural.hpp"

#include <algorithm>
#include <numeric>

namespace bmg {

std::vector<InformativeTriple> ClassifiedInformativeTriples(const ColoredDigraph &g) {
  std::vector<InformativeTriple> out;
  for (std::size_t xi = 0; xi < g.size(); ++xi) {
    const Vertex x = static_cast<Vertex>(xi);
    for (Vertex y : g.out(x)) {
      if (g.color(x) == g.color(y)) continue;
      const bool back = g.has_arc(y, x);
      for (Vertex c : g.vertices_of_color(g.color(y))) {
        if (c == y || g.has_arc(x, c) || g.has_arc(c, y) || g.has_arc(y, c)) continue;
        const bool from_c = g.has_arc(c, x);
        TriplePattern pattern = back ? (from_c ? TriplePattern::X2 : TriplePattern::X1)
                                     : (from_c ? TriplePattern::X4 : TriplePattern::X3);
        out.push_back({{std::min(x, y), std::max(x, y), c}, pattern});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return a.triple < b.triple; });
  return out;
}

TripleSet InformativeTriples(const ColoredDigraph &g) {
  std::vector<RootedTriple> triples;
  for (const auto &t : ClassifiedInformativeTriples(g)) triples.push_back(t.triple);
  return TripleSet(g.names(), std::move(triples));
}

namespace {

std::vector<int> UniverseIndices(const TripleSet &r, const std::vector<std::string> &leaves) {
  const auto &u = r.universe();
  std::vector<int> ids;
  ids.reserve(leaves.size());
  for (const auto &name : leaves) {
    auto it = std::lower_bound(u.begin(), u.end(), name);
    if (it == u.end() || *it != name) throw InputError("leaf '" + name + "' not in universe");
    ids.push_back(static_cast<int>(it - u.begin()));
  }
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("repeated leaf");
  }
  return ids;
}

int Find(std::vector<int> &parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

ColoredGraph AhoGraph(const TripleSet &r, const std::vector<std::string> &leaves) {
  std::vector<int> ids = UniverseIndices(r, leaves);
  std::vector<int> local(r.universe().size(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
  std::vector<NamedVertex> vertices;
  for (const auto &name : leaves) vertices.push_back({name, "*"});
  std::vector<NamedArc> edges;
  std::vector<std::pair<int, int>> seen;
  for (const auto &t : r.triples()) {
    if (local[t.x] < 0 || local[t.y] < 0 || local[t.z] < 0) continue;
    seen.emplace_back(t.x, t.y);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (auto [x, y] : seen) edges.push_back({r.universe()[x], r.universe()[y]});
  return ColoredGraph::FromNamed(vertices, edges);
}

BuildResult Build(const TripleSet &r, const std::vector<std::string> &leaves,
                  const std::vector<std::string> *colors) {
  if (leaves.empty()) throw InputError("BUILD needs at least one leaf");
  if (colors && colors->size() != leaves.size()) throw InputError("one color per leaf expected");
  const std::vector<int> ids = UniverseIndices(r, leaves);
  const std::size_t n = r.universe().size();
  std::vector<int> color_of(n, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) color_of[ids[i]] = static_cast<int>(i);

  struct Frame {
    std::vector<int> leaves;
    std::vector<int> triples;
    Node parent;
  };
  Frame first{ids, {}, -1};
  const auto all = r.triples();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto &t = all[i];
    if (color_of[t.x] >= 0 && color_of[t.y] >= 0 && color_of[t.z] >= 0) {
      first.triples.push_back(static_cast<int>(i));
    }
  }

  TreeBuilder builder;
  auto add_leaf = [&](Node parent, int leaf) {
    const std::string &name = r.universe()[leaf];
    builder.AddLeaf(parent, name, colors ? (*colors)[color_of[leaf]] : std::string("*"));
  };

  // Reused across frames: local position and union-find parent per leaf.
  std::vector<int> local(n, -1);
  std::vector<int> uf;
  std::vector<Frame> stack;
  stack.push_back(std::move(first));
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.leaves.size() == 1) {
      add_leaf(f.parent, f.leaves.front());
      continue;
    }
    const int m = static_cast<int>(f.leaves.size());
    for (int i = 0; i < m; ++i) local[f.leaves[i]] = i;
    uf.resize(m);
    std::iota(uf.begin(), uf.end(), 0);
    int components = m;
    for (int ti : f.triples) {
      int a = Find(uf, local[all[ti].x]);
      int b = Find(uf, local[all[ti].y]);
      if (a != b) {
        uf[std::max(a, b)] = std::min(a, b);
        --components;
      }
    }
    if (components == 1) {
      BuildResult fail;
      std::vector<int> sorted = f.leaves;
      std::sort(sorted.begin(), sorted.end());
      for (int leaf : sorted) fail.witness.push_back(r.universe()[leaf]);
      return fail;
    }
    std::vector<int> comp_index(m, -1);
    std::vector<Frame> parts;
    const Node node = builder.AddNode(f.parent);
    for (int i = 0; i < m; ++i) {
      const int root = Find(uf, i);
      if (comp_index[root] < 0) {
        comp_index[root] = static_cast<int>(parts.size());
        parts.push_back({{}, {}, node});
      }
      parts[comp_index[root]].leaves.push_back(f.leaves[i]);
    }
    for (int ti : f.triples) {
      const auto &t = all[ti];
      const int cx = comp_index[Find(uf, local[t.x])];
      if (cx == comp_index[Find(uf, local[t.z])]) parts[cx].triples.push_back(ti);
    }
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) stack.push_back(std::move(*it));
  }
  return {builder.Finish(), {}};
}

BuildResult Build(const TripleSet &r) { return Build(r, r.universe()); }

TripleSet ComponentTriples(const ColoredDigraph &g) {
  auto comps = ConnectedComponents(g);
  std::vector<int> comp_of(g.size(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex v : comps[i]) comp_of[v] = static_cast<int>(i);
  }
  std::vector<RootedTriple> triples;
  for (const auto &comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        for (std::size_t z = 0; z < g.size(); ++z) {
          if (comp_of[z] != comp_of[comp[i]]) {
            triples.push_back({comp[i], comp[j], static_cast<int>(z)});
          }
        }
      }
    }
  }
  return TripleSet(g.names(), std::move(triples));
}

TreeVerdict LrtViaTriples(const ColoredDigraph &g) {
  if (auto r = detail::CheckStructure(g, {.two_colors = true, .connected = false,
                                          .no_sink = false})) {
    return TreeVerdict::Reject(*r);
  }
  std::vector<LeafColoredTree> parts;
  for (const auto &comp : ConnectedComponents(g)) {
    ColoredDigraph sub = g.induced(comp);
    std::vector<std::string> colors;
    for (std::size_t v = 0; v < sub.size(); ++v) {
      colors.push_back(sub.color_name(sub.color(static_cast<Vertex>(v))));
    }
    BuildResult b = Build(InformativeTriples(sub), sub.names(), &colors);
    if (!b.consistent()) {
      return TreeVerdict::Reject({Stage::TriplesInconsistent, b.witness,
                                  "informative triples are inconsistent"});
    }
    parts.push_back(std::move(*b.tree));
  }
  LeafColoredTree tree = parts.size() == 1 ? std::move(parts.front()) : JoinUnderRoot(parts);
  if (auto r = detail::ExplainsGate(tree, g)) return TreeVerdict::Reject(std::move(*r));
  return TreeVerdict::Accept(std::move(tree));
}

}  // namespace bmg
