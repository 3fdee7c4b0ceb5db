#pragma once

#include "bmg/colored_digraph.hpp"
#include "bmg/verdict.hpp"

#include <optional>

namespace bmg::detail {

struct StructuralOptions {
  bool two_colors = true;
  bool connected = true;
  bool no_sink = true;
};

// First violated precondition in the order color count, same-color arc,
// connectivity, sink vertex.
inline std::optional<Rejection> CheckStructure(const ColoredDigraph &g,
                                               StructuralOptions opts = {}) {
  if (opts.two_colors && g.color_count() != 2) {
    return Rejection{Stage::WrongColorCount, {},
                     "expected 2 colors, found " + std::to_string(g.color_count())};
  }
  for (auto [x, y] : g.arcs()) {
    if (g.color(x) == g.color(y)) {
      return Rejection{Stage::SameColorArc, {g.name(x), g.name(y)}, "arc between equal colors"};
    }
  }
  if (opts.connected) {
    auto comps = ConnectedComponents(g);
    if (comps.size() > 1) {
      return Rejection{Stage::Disconnected,
                       {g.name(comps[0].front()), g.name(comps[1].front())},
                       std::to_string(comps.size()) + " components"};
    }
  }
  if (opts.no_sink) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.out(static_cast<Vertex>(v)).empty()) {
        return Rejection{Stage::SinkVertex, {g.name(static_cast<Vertex>(v))},
                         "vertex without out-neighbor"};
      }
    }
  }
  return std::nullopt;
}

// Endpoints of the first arc (in source order) present in exactly one of two
// digraphs on the same vertex names; empty if the arc sets agree.
inline std::vector<std::string> FirstArcDifference(const ColoredDigraph &a,
                                                   const ColoredDigraph &b) {
  for (std::size_t v = 0; v < a.size() && v < b.size(); ++v) {
    auto oa = a.out(static_cast<Vertex>(v));
    auto ob = b.out(static_cast<Vertex>(v));
    std::size_t i = 0, j = 0;
    while (i < oa.size() || j < ob.size()) {
      if (j == ob.size() || (i < oa.size() && oa[i] < ob[j])) {
        return {a.name(static_cast<Vertex>(v)), a.name(oa[i])};
      }
      if (i == oa.size() || ob[j] < oa[i]) {
        return {a.name(static_cast<Vertex>(v)), b.name(ob[j])};
      }
      ++i;
      ++j;
    }
  }
  return {};
}

// Rejection at the final gate unless the tree explains g exactly.
std::optional<Rejection> ExplainsGate(const LeafColoredTree &tree, const ColoredDigraph &g);

}  // namespace bmg::detail
