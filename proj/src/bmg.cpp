#include "bmg/bmg.hpp"

#include "bmg/errors.hpp"
#include "structural.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

namespace bmg {

namespace {

// Targets of x: for each foreign color keep the leaves whose lca with x is
// deepest. The lcas of x with other leaves lie on one root path, so depth
// orders them.
void BestMatchesOf(const LeafColoredTree &t, Leaf x, std::vector<int> &lca_depth,
                   std::vector<int> &best, std::vector<Vertex> &out) {
  const std::size_t n = t.leaf_count();
  const int own = t.leaf_color(x);
  std::fill(best.begin(), best.end(), -1);
  const Node nx = t.leaf_node(x);
  for (std::size_t y = 0; y < n; ++y) {
    const int c = t.leaf_color(static_cast<Leaf>(y));
    if (c == own) continue;
    const int d = t.depth(t.lca(nx, t.leaf_node(static_cast<Leaf>(y))));
    lca_depth[y] = d;
    best[c] = std::max(best[c], d);
  }
  out.clear();
  for (std::size_t y = 0; y < n; ++y) {
    const int c = t.leaf_color(static_cast<Leaf>(y));
    if (c != own && lca_depth[y] == best[c]) out.push_back(static_cast<Vertex>(y));
  }
}

}  // namespace

ColoredDigraph BmgOfTree(const LeafColoredTree &t, Execution exec) {
  const int n = static_cast<int>(t.leaf_count());
  std::vector<std::vector<Vertex>> out(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel
    {
      std::vector<int> lca_depth(n), best(t.color_count());
#pragma omp for schedule(dynamic, 16)
      for (int x = 0; x < n; ++x) BestMatchesOf(t, x, lca_depth, best, out[x]);
    }
  } else {
    std::vector<int> lca_depth(n), best(t.color_count());
    for (int x = 0; x < n; ++x) BestMatchesOf(t, x, lca_depth, best, out[x]);
  }
  return ColoredDigraph(t.leaf_names(), t.color_names(), t.leaf_colors(), std::move(out));
}

ColoredDigraph BmgOracle(const LeafColoredTree &t) {
  const std::size_t n = t.leaf_count();
  // Path-walking lca, independent of the sparse table.
  auto lca = [&](Node u, Node v) {
    while (t.depth(u) > t.depth(v)) u = t.parent(u);
    while (t.depth(v) > t.depth(u)) v = t.parent(v);
    while (u != v) {
      u = t.parent(u);
      v = t.parent(v);
    }
    return u;
  };
  auto below_or_equal = [&](Node a, Node b) {
    while (a != b && a != t.root()) a = t.parent(a);
    return a == b;
  };
  std::vector<std::vector<Vertex>> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Node nx = t.leaf_node(static_cast<Leaf>(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (t.leaf_color(static_cast<Leaf>(x)) == t.leaf_color(static_cast<Leaf>(y))) continue;
      const Node xy = lca(nx, t.leaf_node(static_cast<Leaf>(y)));
      bool best = true;
      for (std::size_t y2 = 0; y2 < n && best; ++y2) {
        if (t.leaf_color(static_cast<Leaf>(y2)) != t.leaf_color(static_cast<Leaf>(y))) continue;
        best = below_or_equal(xy, lca(nx, t.leaf_node(static_cast<Leaf>(y2))));
      }
      if (best) out[x].push_back(static_cast<Vertex>(y));
    }
  }
  return ColoredDigraph(t.leaf_names(), t.color_names(), t.leaf_colors(), std::move(out));
}

ColoredGraph RbmgOfTree(const LeafColoredTree &t) { return SymmetricPart(BmgOfTree(t)); }

LeafColoredTree SimulateTree(const SimulationConfig &cfg) {
  if (cfg.leaf_count < 2) throw InputError("leaf count must be at least 2");
  if (cfg.color_count < 1) throw InputError("color count must be at least 1");
  if (cfg.color_count > cfg.leaf_count) throw InputError("more colors than leaves");
  std::mt19937_64 rng(cfg.seed);
  auto uniform = [&](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };

  // Grow: split a random leaf into a cherry until the target size is reached.
  std::vector<int> parent{-1};
  std::vector<int> leaves{0};
  while (leaves.size() < static_cast<std::size_t>(cfg.leaf_count)) {
    const std::size_t pick = uniform(leaves.size());
    const int v = leaves[pick];
    const int a = static_cast<int>(parent.size());
    parent.push_back(v);
    parent.push_back(v);
    leaves[pick] = a;
    leaves.push_back(a + 1);
  }
  std::vector<char> is_leaf(parent.size(), 0);
  for (int v : leaves) is_leaf[v] = 1;

  std::vector<char> contracted(parent.size(), 0);
  if (cfg.shape == TreeShape::Multifurcating) {
    std::bernoulli_distribution coin(0.2);
    for (std::size_t v = 1; v < parent.size(); ++v) {
      if (!is_leaf[v]) contracted[v] = coin(rng);
    }
  }

  // Surjective coloring: a shuffled prefix takes each color once.
  std::vector<int> order(leaves.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> color(leaves.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    color[order[i]] = i < static_cast<std::size_t>(cfg.color_count)
                          ? static_cast<int>(i)
                          : static_cast<int>(uniform(cfg.color_count));
  }

  int width = 3;
  for (int n = cfg.leaf_count - 1; n >= 1000; n /= 10) ++width;
  std::vector<int> leaf_rank(parent.size(), -1);
  for (std::size_t i = 0; i < leaves.size(); ++i) leaf_rank[leaves[i]] = static_cast<int>(i);

  TreeBuilder builder;
  std::vector<Node> image(parent.size(), -1);
  // Nodes are created parent-first, so a single forward pass suffices.
  for (std::size_t v = 0; v < parent.size(); ++v) {
    const Node up = parent[v] < 0 ? -1 : image[parent[v]];
    if (contracted[v]) {
      image[v] = up;
    } else if (is_leaf[v]) {
      char name[32];
      std::snprintf(name, sizeof name, "g%0*d", width, leaf_rank[v]);
      image[v] = builder.AddLeaf(up, name, "s" + std::to_string(color[leaf_rank[v]]));
    } else {
      image[v] = builder.AddNode(up);
    }
  }
  return builder.Finish();
}

Simulation Simulate(const SimulationConfig &cfg) {
  LeafColoredTree tree = SimulateTree(cfg);
  ColoredDigraph graph = BmgOfTree(tree);
  return {std::move(tree), std::move(graph)};
}

namespace detail {

std::optional<Rejection> ExplainsGate(const LeafColoredTree &tree, const ColoredDigraph &g) {
  ColoredDigraph explained = BmgOfTree(tree);
  if (explained == g) return std::nullopt;
  return Rejection{Stage::GraphMismatch, FirstArcDifference(g, explained),
                   "tree does not explain the graph"};
}

}  // namespace detail

}  // namespace bmg
