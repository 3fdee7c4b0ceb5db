#include "bmg/tree.hpp"

#include "bmg/colored_digraph.hpp"
#include "bmg/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace bmg {

Node TreeBuilder::AddNode(Node parent) {
  if (parent < 0) {
    if (has_root_) throw InputError("tree already has a root");
    has_root_ = true;
  } else if (static_cast<std::size_t>(parent) >= parent_.size() || is_leaf_[parent]) {
    throw InputError("parent is not an inner node");
  }
  parent_.push_back(parent);
  name_.emplace_back();
  color_.emplace_back();
  is_leaf_.push_back(false);
  return static_cast<Node>(parent_.size() - 1);
}

Node TreeBuilder::AddLeaf(Node parent, std::string name, std::string color) {
  Node v = AddNode(parent);
  name_[v] = std::move(name);
  color_[v] = std::move(color);
  is_leaf_[v] = true;
  return v;
}

LeafColoredTree TreeBuilder::Finish() const {
  const std::size_t n = parent_.size();
  if (n == 0) throw InputError("empty tree");
  std::vector<std::vector<Node>> kids(n);
  Node raw_root = -1;
  for (std::size_t v = 0; v < n; ++v) {
    if (parent_[v] < 0) {
      raw_root = static_cast<Node>(v);
    } else {
      kids[parent_[v]].push_back(static_cast<Node>(v));
    }
  }
  std::vector<std::string> names;
  std::vector<std::string> colors;
  for (std::size_t v = 0; v < n; ++v) {
    if (is_leaf_[v]) {
      names.push_back(name_[v]);
      colors.push_back(color_[v]);
    } else if (kids[v].empty()) {
      throw InputError("inner node without children");
    }
  }
  std::vector<std::string> sorted_names = names;
  std::sort(sorted_names.begin(), sorted_names.end());
  if (auto dup = std::adjacent_find(sorted_names.begin(), sorted_names.end());
      dup != sorted_names.end()) {
    throw InputError("duplicate leaf '" + *dup + "'");
  }
  auto leaf_index = [&](const std::string &s) {
    return static_cast<Leaf>(std::lower_bound(sorted_names.begin(), sorted_names.end(), s) -
                             sorted_names.begin());
  };

  // Skip chains of single-child nodes.
  auto resolve = [&](Node v) {
    while (!is_leaf_[v] && kids[v].size() == 1) v = kids[v].front();
    return v;
  };

  // Smallest leaf index below each raw node, bottom-up over a DFS order.
  std::vector<Node> order;
  order.reserve(n);
  std::vector<Node> stack{raw_root};
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Node c : kids[v]) stack.push_back(c);
  }
  std::vector<Leaf> min_leaf(n, std::numeric_limits<Leaf>::max());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Node v = *it;
    if (is_leaf_[v]) {
      min_leaf[v] = leaf_index(name_[v]);
    } else {
      for (Node c : kids[v]) min_leaf[v] = std::min(min_leaf[v], min_leaf[c]);
    }
  }

  LeafColoredTree t;
  t.leaf_names_ = sorted_names;
  t.color_names_ = SortedUnique(colors);
  t.leaf_colors_.assign(sorted_names.size(), 0);
  t.leaf_node_.assign(sorted_names.size(), -1);

  // Preorder emission of the compressed tree with canonical child order.
  struct Frame {
    Node raw;
    Node parent;
  };
  std::vector<Frame> frames{{resolve(raw_root), -1}};
  while (!frames.empty()) {
    Frame f = frames.back();
    frames.pop_back();
    const Node id = static_cast<Node>(t.parent_.size());
    t.parent_.push_back(f.parent);
    t.children_.emplace_back();
    if (f.parent >= 0) t.children_[f.parent].push_back(id);
    if (is_leaf_[f.raw]) {
      Leaf i = leaf_index(name_[f.raw]);
      t.node_leaf_.push_back(i);
      t.leaf_node_[i] = id;
      t.leaf_colors_[i] = static_cast<int>(
          std::lower_bound(t.color_names_.begin(), t.color_names_.end(), color_[f.raw]) -
          t.color_names_.begin());
    } else {
      t.node_leaf_.push_back(-1);
      std::vector<Node> next;
      for (Node c : kids[f.raw]) next.push_back(resolve(c));
      std::sort(next.begin(), next.end(),
                [&](Node a, Node b) { return min_leaf[a] < min_leaf[b]; });
      for (auto it = next.rbegin(); it != next.rend(); ++it) frames.push_back({*it, id});
    }
  }
  t.BuildIndex();
  return t;
}

void LeafColoredTree::BuildIndex() {
  const std::size_t n = parent_.size();
  depth_.assign(n, 0);
  subtree_size_.assign(n, 1);
  for (std::size_t v = 1; v < n; ++v) depth_[v] = depth_[parent_[v]] + 1;
  for (std::size_t v = n; v-- > 1;) subtree_size_[parent_[v]] += subtree_size_[v];

  std::vector<Node> euler;
  euler.reserve(2 * n);
  first_.assign(n, 0);
  std::vector<std::pair<Node, std::size_t>> stack{{0, 0}};
  first_[0] = 0;
  euler.push_back(0);
  while (!stack.empty()) {
    auto &[v, next] = stack.back();
    if (next < children_[v].size()) {
      Node c = children_[v][next++];
      first_[c] = static_cast<int>(euler.size());
      euler.push_back(c);
      stack.push_back({c, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) euler.push_back(stack.back().first);
    }
  }
  const std::size_t m = euler.size();
  const int levels = std::bit_width(m);
  sparse_.assign(levels, {});
  sparse_[0] = euler;
  for (int k = 1; k < levels; ++k) {
    const std::size_t span = std::size_t{1} << k;
    sparse_[k].resize(m - span + 1);
    for (std::size_t i = 0; i + span <= m; ++i) {
      Node a = sparse_[k - 1][i];
      Node b = sparse_[k - 1][i + span / 2];
      sparse_[k][i] = depth_[a] <= depth_[b] ? a : b;
    }
  }
}

Node LeafColoredTree::lca(Node u, Node v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= size() ||
      static_cast<std::size_t>(v) >= size()) {
    throw InputError("node not in tree");
  }
  if (is_ancestor(u, v)) return u;
  if (is_ancestor(v, u)) return v;
  int l = first_[u], r = first_[v];
  if (l > r) std::swap(l, r);
  const int k = std::bit_width(static_cast<unsigned>(r - l + 1)) - 1;
  Node a = sparse_[k][l];
  Node b = sparse_[k][r - (1 << k) + 1];
  return depth_[a] <= depth_[b] ? a : b;
}

std::optional<Leaf> LeafColoredTree::find_leaf(std::string_view name) const {
  auto it = std::lower_bound(leaf_names_.begin(), leaf_names_.end(), name);
  if (it == leaf_names_.end() || *it != name) return std::nullopt;
  return static_cast<Leaf>(it - leaf_names_.begin());
}

std::vector<Leaf> LeafColoredTree::leaves_below(Node v) const {
  std::vector<Leaf> r;
  for (Node w = v; w < v + subtree_size_[v]; ++w) {
    if (node_leaf_[w] >= 0) r.push_back(node_leaf_[w]);
  }
  return r;
}

std::vector<Node> LeafColoredTree::inner_edges() const {
  std::vector<Node> r;
  for (std::size_t v = 1; v < size(); ++v) {
    if (node_leaf_[v] < 0) r.push_back(static_cast<Node>(v));
  }
  return r;
}

bool operator==(const LeafColoredTree &a, const LeafColoredTree &b) {
  if (a.leaf_names_ != b.leaf_names_ || a.parent_ != b.parent_ || a.node_leaf_ != b.node_leaf_) {
    return false;
  }
  for (std::size_t i = 0; i < a.leaf_count(); ++i) {
    if (a.color_name(a.leaf_colors_[i]) != b.color_name(b.leaf_colors_[i])) return false;
  }
  return true;
}

namespace {

// Copies t into the builder below `parent`, keeping nodes for which `keep`
// holds and lifting the children of dropped inner nodes.
template <class Keep>
void CopyInto(TreeBuilder &builder, const LeafColoredTree &t, Node parent, Keep &&keep,
              const std::vector<std::string> *colors = nullptr) {
  std::vector<Node> image(t.size(), -1);
  for (std::size_t v = 0; v < t.size(); ++v) {
    const Node node = static_cast<Node>(v);
    Node up = v == 0 ? parent : image[t.parent(node)];
    if (!keep(node)) {
      image[v] = up;
      continue;
    }
    if (t.is_leaf(node)) {
      Leaf i = t.leaf_of(node);
      image[v] = builder.AddLeaf(up, t.leaf_name(i),
                                 colors ? (*colors)[i] : t.color_name(t.leaf_color(i)));
    } else {
      image[v] = builder.AddNode(up);
    }
  }
}

}  // namespace

LeafColoredTree Restrict(const LeafColoredTree &t, const std::vector<Leaf> &leaves) {
  if (leaves.empty()) throw InputError("restriction to an empty leaf set");
  std::vector<char> marked(t.size(), 0);
  for (Leaf i : leaves) {
    if (i < 0 || static_cast<std::size_t>(i) >= t.leaf_count()) {
      throw InputError("leaf not in tree");
    }
    for (Node v = t.leaf_node(i); v >= 0 && !marked[v]; v = t.parent(v)) marked[v] = 1;
  }
  // The spanning subtree hangs below the lca of the kept leaves.
  Node top = t.leaf_node(leaves.front());
  for (Leaf i : leaves) top = t.lca(top, t.leaf_node(i));
  TreeBuilder builder;
  Node root = builder.AddNode();
  CopyInto(builder, t, root, [&](Node v) {
    return marked[v] && t.is_ancestor(top, v) && (v != top || t.is_leaf(v));
  });
  return builder.Finish();
}

LeafColoredTree Restrict(const LeafColoredTree &t, const std::vector<std::string> &names) {
  std::vector<Leaf> leaves;
  for (const auto &name : names) {
    auto i = t.find_leaf(name);
    if (!i) throw InputError("leaf '" + name + "' not in tree");
    leaves.push_back(*i);
  }
  return Restrict(t, leaves);
}

LeafColoredTree ContractEdges(const LeafColoredTree &t, const std::vector<Node> &edges) {
  std::vector<char> contracted(t.size(), 0);
  for (Node v : edges) {
    if (v <= 0 || static_cast<std::size_t>(v) >= t.size()) {
      throw InputError("edge is not an inner edge");
    }
    if (t.is_leaf(v)) throw InputError("edge to a leaf is not an inner edge");
    contracted[v] = 1;
  }
  TreeBuilder builder;
  CopyInto(builder, t, -1, [&](Node v) { return !contracted[v]; });
  return builder.Finish();
}

TripleSet TriplesOf(const LeafColoredTree &t) {
  std::vector<RootedTriple> out;
  for (std::size_t u = 0; u < t.size(); ++u) {
    const Node node = static_cast<Node>(u);
    if (t.is_leaf(node)) continue;
    for (Node c : t.children(node)) {
      if (t.is_leaf(c)) continue;
      std::vector<Leaf> inside = t.leaves_below(c);
      std::vector<Leaf> outside;
      for (Node w = node; w < node + t.subtree_size(node); ++w) {
        if (t.is_leaf(w) && !t.is_ancestor(c, w)) outside.push_back(t.leaf_of(w));
      }
      for (std::size_t i = 0; i < inside.size(); ++i) {
        for (std::size_t j = i + 1; j < inside.size(); ++j) {
          for (Leaf z : outside) out.push_back({inside[i], inside[j], z});
        }
      }
    }
  }
  return TripleSet(t.leaf_names(), std::move(out));
}

bool Displays(const LeafColoredTree &t, const LeafColoredTree &t2) {
  for (std::size_t i = 0; i < t2.leaf_count(); ++i) {
    auto j = t.find_leaf(t2.leaf_name(static_cast<Leaf>(i)));
    if (!j) throw InputError("leaf '" + t2.leaf_name(static_cast<Leaf>(i)) + "' not in tree");
    if (t.color_name(t.leaf_color(*j)) != t2.color_name(t2.leaf_color(static_cast<Leaf>(i)))) {
      throw InputError("leaf '" + t2.leaf_name(static_cast<Leaf>(i)) + "' colored differently");
    }
  }
  const TripleSet inner = TriplesOf(Restrict(t, t2.leaf_names()));
  const TripleSet wanted = TriplesOf(t2);
  return std::includes(inner.triples().begin(), inner.triples().end(), wanted.triples().begin(),
                       wanted.triples().end());
}

LeafColoredTree Recolor(const LeafColoredTree &t, const std::vector<std::string> &colors) {
  if (colors.size() != t.leaf_count()) throw InputError("color list does not match leaves");
  TreeBuilder builder;
  CopyInto(builder, t, -1, [](Node) { return true; }, &colors);
  return builder.Finish();
}

LeafColoredTree JoinUnderRoot(const std::vector<LeafColoredTree> &parts) {
  if (parts.empty()) throw InputError("nothing to join");
  TreeBuilder builder;
  Node root = builder.AddNode();
  for (const auto &part : parts) {
    CopyInto(builder, part, root, [](Node) { return true; });
  }
  return builder.Finish();
}

LeafColoredTree StarTree(const std::vector<std::string> &names,
                         const std::vector<std::string> &colors) {
  if (names.empty() || names.size() != colors.size()) {
    throw InputError("star tree needs one color per leaf");
  }
  TreeBuilder builder;
  Node root = builder.AddNode();
  for (std::size_t i = 0; i < names.size(); ++i) builder.AddLeaf(root, names[i], colors[i]);
  return builder.Finish();
}

}  // namespace bmg
