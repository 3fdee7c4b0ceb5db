#pragma once

// Vertex-colored loop-free digraphs.
//
// Vertex and color names are interned to dense integers. Both tables are kept
// in lexicographic order of the names, so "smallest vertex id" and "smallest
// name" coincide and every ordered output (components, classes, arc lists) is
// reproducible from the names alone. Out- and in-lists are sorted.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmg {

using Vertex = int;
using Color = int;
using VertexSet = boost::dynamic_bitset<>;

struct NamedVertex {
  std::string name;
  std::string color;
};

struct NamedArc {
  std::string source;
  std::string target;
};

class ColoredDigraph {
 public:
  ColoredDigraph() = default;

  // Builds from names. Throws InputError on duplicate vertices or arcs, arcs
  // with undeclared endpoints, and self-loops.
  static ColoredDigraph FromNamed(const std::vector<NamedVertex> &vertices,
                                  const std::vector<NamedArc> &arcs);

  // Dense constructor. `names` must be strictly increasing, `color_names`
  // strictly increasing and all used; `out[v]` lists targets of v.
  ColoredDigraph(std::vector<std::string> names, std::vector<std::string> color_names,
                 std::vector<Color> colors, std::vector<std::vector<Vertex>> out);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  std::size_t arc_count() const { return arc_count_; }

  const std::string &name(Vertex v) const { return names_[v]; }
  const std::vector<std::string> &names() const { return names_; }
  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color> &colors() const { return colors_; }
  const std::string &color_name(Color c) const { return color_names_[c]; }
  const std::vector<std::string> &color_names() const { return color_names_; }
  std::size_t color_count() const { return color_names_.size(); }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  bool has_arc(Vertex from, Vertex to) const;

  std::optional<Vertex> find(std::string_view name) const;
  std::optional<Color> find_color(std::string_view name) const;

  std::vector<Vertex> vertices_of_color(Color c) const;
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  // Vertex-subset restriction; ids are renumbered, names kept.
  ColoredDigraph induced(const std::vector<Vertex> &keep) const;

  // Labeled equality: same names, same vertex colors (by name), same arcs.
  friend bool operator==(const ColoredDigraph &a, const ColoredDigraph &b);

 private:
  std::vector<std::string> names_;
  std::vector<std::string> color_names_;
  std::vector<Color> colors_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  // Row-major adjacency matrix, only for graphs up to kDenseLimit vertices.
  std::vector<VertexSet> dense_;
  std::size_t arc_count_ = 0;

  static constexpr std::size_t kDenseLimit = 4096;
};

// Undirected colored graph; used for symmetric parts (reciprocal best matches).
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(std::vector<std::string> names, std::vector<std::string> color_names,
               std::vector<Color> colors, std::vector<std::vector<Vertex>> adjacency);

  static ColoredGraph FromNamed(const std::vector<NamedVertex> &vertices,
                                const std::vector<NamedArc> &edges);

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::string &name(Vertex v) const { return names_[v]; }
  const std::vector<std::string> &names() const { return names_; }
  Color color(Vertex v) const { return colors_[v]; }
  const std::string &color_name(Color c) const { return color_names_[c]; }
  const std::vector<std::string> &color_names() const { return color_names_; }
  std::size_t color_count() const { return color_names_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  // Edges with a < b, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  ColoredGraph induced(const std::vector<Vertex> &keep) const;

  friend bool operator==(const ColoredGraph &a, const ColoredGraph &b);

 private:
  std::vector<std::string> names_;
  std::vector<std::string> color_names_;
  std::vector<Color> colors_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Maximal weakly connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> ConnectedComponents(const ColoredDigraph &g);
std::vector<std::vector<Vertex>> ConnectedComponents(const ColoredGraph &g);

// All vertices whose color name is in `colors`, with every arc between them.
// Throws InputError for a color name the graph does not use.
ColoredDigraph InducedSubgraph(const ColoredDigraph &g, const std::vector<std::string> &colors);

// Edge xy iff both x->y and y->x.
ColoredGraph SymmetricPart(const ColoredDigraph &g);

// Sorted, deduplicated color names; used to intern colors consistently.
std::vector<std::string> SortedUnique(std::vector<std::string> values);

}  // namespace bmg
