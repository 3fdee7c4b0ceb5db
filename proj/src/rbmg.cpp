#include "bmg/rbmg.hpp"

#include "bmg/errors.hpp"

namespace bmg {

RbmgVerdict Check2cRbmgNecessary(const ColoredGraph &h) {
  if (h.color_count() > 2) throw InputError("expected at most two colors");
  for (auto [a, b] : h.edges()) {
    if (h.color(a) == h.color(b)) {
      throw InputError("edge between equal colors: " + h.name(a) + " " + h.name(b));
    }
  }
  for (const auto &comp : ConnectedComponents(h)) {
    std::size_t side[2] = {0, 0};
    std::size_t degree_sum = 0;
    for (Vertex v : comp) {
      ++side[h.color(v)];
      degree_sum += h.neighbors(v).size();
    }
    if (degree_sum == 0) continue;
    if (degree_sum / 2 != side[0] * side[1]) {
      RbmgVerdict fail{false, {}};
      for (Vertex v : comp) fail.witness.push_back(h.name(v));
      return fail;
    }
  }
  return {};
}

}  // namespace bmg
