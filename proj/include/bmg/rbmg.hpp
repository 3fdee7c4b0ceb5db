#pragma once

#include "bmg/colored_digraph.hpp"

#include <string>
#include <vector>

namespace bmg {

struct RbmgVerdict {
  bool passed = true;
  std::vector<std::string> witness;  // vertices of the first failing component

  explicit operator bool() const { return passed; }
};

// Necessary condition for two-colored reciprocal best match graphs: every
// component with an edge is complete bipartite between its two color sides.
// Edge-less components pass. Throws InputError for more than two colors or an
// edge between equal colors.
RbmgVerdict Check2cRbmgNecessary(const ColoredGraph &h);

}  // namespace bmg
