#include "bmg/colored_digraph.hpp"

#include "bmg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace bmg {

std::vector<std::string> SortedUnique(std::vector<std::string> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

namespace {

std::size_t IndexOf(const std::vector<std::string> &sorted, std::string_view key) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
  return static_cast<std::size_t>(it - sorted.begin());
}

// Interns names and colors; returns (names, color_names, colors, index map).
struct Interned {
  std::vector<std::string> names;
  std::vector<std::string> color_names;
  std::vector<Color> colors;
  std::unordered_map<std::string, Vertex> index;
};

Interned Intern(const std::vector<NamedVertex> &vertices) {
  Interned r;
  std::vector<std::string> color_values;
  r.names.reserve(vertices.size());
  for (const auto &v : vertices) {
    r.names.push_back(v.name);
    color_values.push_back(v.color);
  }
  std::vector<std::string> sorted_names = r.names;
  std::sort(sorted_names.begin(), sorted_names.end());
  auto dup = std::adjacent_find(sorted_names.begin(), sorted_names.end());
  if (dup != sorted_names.end()) {
    throw InputError("duplicate vertex '" + *dup + "'");
  }
  r.color_names = SortedUnique(color_values);
  r.colors.assign(vertices.size(), 0);
  for (const auto &v : vertices) {
    auto id = static_cast<Vertex>(IndexOf(sorted_names, v.name));
    r.colors[id] = static_cast<Color>(IndexOf(r.color_names, v.color));
    r.index.emplace(v.name, id);
  }
  r.names = std::move(sorted_names);
  return r;
}

void CheckDenseTables(const std::vector<std::string> &names,
                      const std::vector<std::string> &color_names,
                      const std::vector<Color> &colors) {
  if (colors.size() != names.size()) {
    throw InputError("color table does not cover every vertex");
  }
  if (std::adjacent_find(names.begin(), names.end(), std::greater_equal<>()) != names.end()) {
    throw InputError("vertex names must be unique");
  }
  for (Color c : colors) {
    if (c < 0 || static_cast<std::size_t>(c) >= color_names.size()) {
      throw InputError("color id out of range");
    }
  }
}

}  // namespace

ColoredDigraph::ColoredDigraph(std::vector<std::string> names,
                               std::vector<std::string> color_names,
                               std::vector<Color> colors,
                               std::vector<std::vector<Vertex>> out)
    : names_(std::move(names)),
      color_names_(std::move(color_names)),
      colors_(std::move(colors)),
      out_(std::move(out)) {
  CheckDenseTables(names_, color_names_, colors_);
  const std::size_t n = names_.size();
  if (out_.size() != n) {
    throw InputError("adjacency does not cover every vertex");
  }
  in_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    auto &list = out_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("duplicate arc from '" + names_[v] + "'");
    }
    for (Vertex w : list) {
      if (w < 0 || static_cast<std::size_t>(w) >= n) {
        throw InputError("arc target out of range");
      }
      if (static_cast<std::size_t>(w) == v) {
        throw InputError("self-loop at '" + names_[v] + "'");
      }
      in_[w].push_back(static_cast<Vertex>(v));
    }
    arc_count_ += list.size();
  }
  if (n <= kDenseLimit) {
    dense_.assign(n, VertexSet(n));
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex w : out_[v]) dense_[v].set(w);
    }
  }
}

ColoredDigraph ColoredDigraph::FromNamed(const std::vector<NamedVertex> &vertices,
                                         const std::vector<NamedArc> &arcs) {
  Interned t = Intern(vertices);
  std::vector<std::vector<Vertex>> out(t.names.size());
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto &a : arcs) {
    auto s = t.index.find(a.source);
    auto d = t.index.find(a.target);
    if (s == t.index.end()) throw InputError("arc from undeclared vertex '" + a.source + "'");
    if (d == t.index.end()) throw InputError("arc to undeclared vertex '" + a.target + "'");
    if (s->second == d->second) throw InputError("self-loop at '" + a.source + "'");
    if (!seen.emplace(s->second, d->second).second) {
      throw InputError("duplicate arc " + a.source + " -> " + a.target);
    }
    out[s->second].push_back(d->second);
  }
  return ColoredDigraph(std::move(t.names), std::move(t.color_names), std::move(t.colors),
                        std::move(out));
}

bool ColoredDigraph::has_arc(Vertex from, Vertex to) const {
  if (!dense_.empty()) return dense_[from].test(to);
  const auto &list = out_[from];
  return std::binary_search(list.begin(), list.end(), to);
}

std::optional<Vertex> ColoredDigraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

std::optional<Color> ColoredDigraph::find_color(std::string_view name) const {
  auto it = std::lower_bound(color_names_.begin(), color_names_.end(), name);
  if (it == color_names_.end() || *it != name) return std::nullopt;
  return static_cast<Color>(it - color_names_.begin());
}

std::vector<Vertex> ColoredDigraph::vertices_of_color(Color c) const {
  std::vector<Vertex> r;
  for (std::size_t v = 0; v < size(); ++v) {
    if (colors_[v] == c) r.push_back(static_cast<Vertex>(v));
  }
  return r;
}

std::vector<std::pair<Vertex, Vertex>> ColoredDigraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> r;
  r.reserve(arc_count_);
  for (std::size_t v = 0; v < size(); ++v) {
    for (Vertex w : out_[v]) r.emplace_back(static_cast<Vertex>(v), w);
  }
  return r;
}

ColoredDigraph ColoredDigraph::induced(const std::vector<Vertex> &keep) const {
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> remap(size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) remap[sorted[i]] = static_cast<Vertex>(i);

  std::vector<std::string> used;
  for (Vertex v : sorted) used.push_back(color_names_[colors_[v]]);
  std::vector<std::string> color_names = SortedUnique(std::move(used));

  std::vector<std::string> names;
  std::vector<Color> colors;
  std::vector<std::vector<Vertex>> out(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Vertex v = sorted[i];
    names.push_back(names_[v]);
    colors.push_back(static_cast<Color>(IndexOf(color_names, color_names_[colors_[v]])));
    for (Vertex w : out_[v]) {
      if (remap[w] >= 0) out[i].push_back(remap[w]);
    }
  }
  return ColoredDigraph(std::move(names), std::move(color_names), std::move(colors),
                        std::move(out));
}

bool operator==(const ColoredDigraph &a, const ColoredDigraph &b) {
  if (a.names_ != b.names_ || a.out_ != b.out_) return false;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a.color_name(a.colors_[v]) != b.color_name(b.colors_[v])) return false;
  }
  return true;
}

ColoredGraph::ColoredGraph(std::vector<std::string> names, std::vector<std::string> color_names,
                           std::vector<Color> colors,
                           std::vector<std::vector<Vertex>> adjacency)
    : names_(std::move(names)),
      color_names_(std::move(color_names)),
      colors_(std::move(colors)),
      adjacency_(std::move(adjacency)) {
  CheckDenseTables(names_, color_names_, colors_);
  if (adjacency_.size() != names_.size()) {
    throw InputError("adjacency does not cover every vertex");
  }
  std::size_t endpoints = 0;
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto &list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("duplicate edge at '" + names_[v] + "'");
    }
    for (Vertex w : list) {
      if (static_cast<std::size_t>(w) == v) throw InputError("self-loop at '" + names_[v] + "'");
      const auto &back = adjacency_.at(w);
      if (!std::binary_search(back.begin(), back.end(), static_cast<Vertex>(v)) &&
          std::find(back.begin(), back.end(), static_cast<Vertex>(v)) == back.end()) {
        throw InputError("asymmetric adjacency at '" + names_[v] + "'");
      }
    }
    endpoints += list.size();
  }
  edge_count_ = endpoints / 2;
}

ColoredGraph ColoredGraph::FromNamed(const std::vector<NamedVertex> &vertices,
                                     const std::vector<NamedArc> &edges) {
  Interned t = Intern(vertices);
  std::vector<std::vector<Vertex>> adjacency(t.names.size());
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto &e : edges) {
    auto s = t.index.find(e.source);
    auto d = t.index.find(e.target);
    if (s == t.index.end() || d == t.index.end()) {
      throw InputError("edge with undeclared endpoint " + e.source + " " + e.target);
    }
    if (s->second == d->second) throw InputError("self-loop at '" + e.source + "'");
    auto key = std::minmax(s->second, d->second);
    if (!seen.insert(key).second) {
      throw InputError("duplicate edge " + e.source + " " + e.target);
    }
    adjacency[s->second].push_back(d->second);
    adjacency[d->second].push_back(s->second);
  }
  return ColoredGraph(std::move(t.names), std::move(t.color_names), std::move(t.colors),
                      std::move(adjacency));
}

bool ColoredGraph::has_edge(Vertex a, Vertex b) const {
  const auto &list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<std::pair<Vertex, Vertex>> ColoredGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> r;
  for (std::size_t v = 0; v < size(); ++v) {
    for (Vertex w : adjacency_[v]) {
      if (static_cast<std::size_t>(w) > v) r.emplace_back(static_cast<Vertex>(v), w);
    }
  }
  return r;
}

ColoredGraph ColoredGraph::induced(const std::vector<Vertex> &keep) const {
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> remap(size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) remap[sorted[i]] = static_cast<Vertex>(i);
  std::vector<std::string> used;
  for (Vertex v : sorted) used.push_back(color_names_[colors_[v]]);
  std::vector<std::string> color_names = SortedUnique(std::move(used));
  std::vector<std::string> names;
  std::vector<Color> colors;
  std::vector<std::vector<Vertex>> adjacency(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Vertex v = sorted[i];
    names.push_back(names_[v]);
    colors.push_back(static_cast<Color>(IndexOf(color_names, color_names_[colors_[v]])));
    for (Vertex w : adjacency_[v]) {
      if (remap[w] >= 0) adjacency[i].push_back(remap[w]);
    }
  }
  return ColoredGraph(std::move(names), std::move(color_names), std::move(colors),
                      std::move(adjacency));
}

bool operator==(const ColoredGraph &a, const ColoredGraph &b) {
  if (a.names_ != b.names_ || a.adjacency_ != b.adjacency_) return false;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a.color_name(a.colors_[v]) != b.color_name(b.colors_[v])) return false;
  }
  return true;
}

namespace {

template <class Neighbors>
std::vector<std::vector<Vertex>> Components(std::size_t n, Neighbors &&neighbors) {
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> result;
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(result.size());
    result.emplace_back();
    label[start] = id;
    stack.push_back(static_cast<Vertex>(start));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      result.back().push_back(v);
      neighbors(v, [&](Vertex w) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      });
    }
    std::sort(result.back().begin(), result.back().end());
  }
  return result;
}

}  // namespace

std::vector<std::vector<Vertex>> ConnectedComponents(const ColoredDigraph &g) {
  return Components(g.size(), [&](Vertex v, auto &&visit) {
    for (Vertex w : g.out(v)) visit(w);
    for (Vertex w : g.in(v)) visit(w);
  });
}

std::vector<std::vector<Vertex>> ConnectedComponents(const ColoredGraph &g) {
  return Components(g.size(), [&](Vertex v, auto &&visit) {
    for (Vertex w : g.neighbors(v)) visit(w);
  });
}

ColoredDigraph InducedSubgraph(const ColoredDigraph &g, const std::vector<std::string> &colors) {
  std::vector<bool> keep_color(g.color_count(), false);
  for (const auto &name : colors) {
    auto c = g.find_color(name);
    if (!c) throw InputError("unknown color '" + name + "'");
    keep_color[*c] = true;
  }
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (keep_color[g.color(static_cast<Vertex>(v))]) keep.push_back(static_cast<Vertex>(v));
  }
  return g.induced(keep);
}

ColoredGraph SymmetricPart(const ColoredDigraph &g) {
  std::vector<std::vector<Vertex>> adjacency(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (Vertex w : g.out(static_cast<Vertex>(v))) {
      if (g.has_arc(w, static_cast<Vertex>(v))) adjacency[v].push_back(w);
    }
  }
  return ColoredGraph(g.names(), g.color_names(), g.colors(), std::move(adjacency));
}

}  // namespace bmg
