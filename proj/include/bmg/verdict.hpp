#pragma once

#include "bmg/tree.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bmg {

// Where a recognition pipeline stopped. Structural stages come first, then
// the two-colored checks, then the triple and final-comparison stages.
enum class Stage {
  WrongColorCount,
  SameColorArc,
  Disconnected,
  SinkVertex,
  ComponentColorMismatch,
  Axioms,
  Laminarity,
  HasseNotTree,
  SiblingOverlap,
  TwoColorFailure,
  TriplesInconsistent,
  GraphMismatch,
};

// Stable kebab-case token used in reports and on the command line.
std::string_view StageName(Stage stage);

struct Rejection {
  Stage stage;
  std::vector<std::string> witness;  // vertex names
  std::string detail;
};

struct TreeVerdict {
  std::optional<LeafColoredTree> tree;
  std::optional<Rejection> rejection;

  bool accepted() const { return tree.has_value(); }
  static TreeVerdict Accept(LeafColoredTree t) { return {std::move(t), std::nullopt}; }
  static TreeVerdict Reject(Rejection r) { return {std::nullopt, std::move(r)}; }
};

}  // namespace bmg
