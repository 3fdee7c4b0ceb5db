#include "bmg/verdict.hpp"

namespace bmg {

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::WrongColorCount: return "wrong-color-count";
    case Stage::SameColorArc: return "same-color-arc";
    case Stage::Disconnected: return "disconnected";
    case Stage::SinkVertex: return "sink-vertex";
    case Stage::ComponentColorMismatch: return "component-color-mismatch";
    case Stage::Axioms: return "axioms";
    case Stage::Laminarity: return "laminarity";
    case Stage::HasseNotTree: return "hasse-not-tree";
    case Stage::SiblingOverlap: return "sibling-overlap";
    case Stage::TwoColorFailure: return "2cbmg-failure";
    case Stage::TriplesInconsistent: return "triples-inconsistent";
    case Stage::GraphMismatch: return "graph-mismatch";
  }
  return "unknown";
}

}  // namespace bmg
