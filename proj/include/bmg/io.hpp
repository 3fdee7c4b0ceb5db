#pragma once

// Text formats.
//
// Graph file, one directive per line, `#` starts a comment:
//   V <id> <color>
//   A <source> <target>
// Tree file: a rooted Newick string without branch lengths or inner labels,
// plus a color sidecar with one `<leaf>\t<color>` line per leaf.

#include "bmg/colored_digraph.hpp"
#include "bmg/tree.hpp"
#include "bmg/triple_set.hpp"

#include <map>
#include <string>
#include <string_view>

namespace bmg::io {

using ColorMap = std::map<std::string, std::string, std::less<>>;

// Throws ParseError for unknown directives, wrong arity, duplicate vertices
// or arcs, undeclared endpoints, self-loops, and files without vertices.
ColoredDigraph ParseGraph(std::string_view text);
// Vertices sorted by id, then arcs sorted by (source, target).
std::string FormatGraph(const ColoredDigraph &g);
// Symmetric part as a graph file with both arcs of every edge.
std::string FormatGraph(const ColoredGraph &h);

ColorMap ParseColorMap(std::string_view text);
// Leaves take their color from `colors`, or "*" when it is null. Throws
// ParseError on malformed Newick and InputError if the color map is not
// exactly the leaf set.
LeafColoredTree ParseNewick(std::string_view text, const ColorMap *colors = nullptr);
std::string FormatNewick(const LeafColoredTree &t);
std::string FormatColorMap(const LeafColoredTree &t);

// `x y | z` per line.
std::string FormatTriples(const TripleSet &r);

// Graphviz rendering: vertices filled by color id from a fixed palette,
// reciprocal arc pairs drawn once without arrow heads.
std::string FormatDot(const ColoredDigraph &g);

}  // namespace bmg::io
