#include "bmg/triple_set.hpp"

#include "bmg/errors.hpp"

#include <algorithm>
#include <functional>

namespace bmg {

TripleSet::TripleSet(std::vector<std::string> universe, std::vector<RootedTriple> triples)
    : universe_(std::move(universe)), triples_(std::move(triples)) {
  if (std::adjacent_find(universe_.begin(), universe_.end(), std::greater_equal<>()) !=
      universe_.end()) {
    throw InputError("triple universe must be sorted and unique");
  }
  const int n = static_cast<int>(universe_.size());
  for (auto &t : triples_) {
    if (t.x < 0 || t.y < 0 || t.z < 0 || t.x >= n || t.y >= n || t.z >= n) {
      throw InputError("triple leaf outside universe");
    }
    if (t.x == t.y || t.x == t.z || t.y == t.z) {
      throw InputError("triple with repeated leaf");
    }
    if (t.y < t.x) std::swap(t.x, t.y);
  }
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

bool TripleSet::contains(int x, int y, int z) const {
  if (y < x) std::swap(x, y);
  return std::binary_search(triples_.begin(), triples_.end(), RootedTriple{x, y, z});
}

bool TripleSet::contains(const std::string &x, const std::string &y,
                         const std::string &z) const {
  auto index = [&](const std::string &s) -> int {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), s);
    if (it == universe_.end() || *it != s) return -1;
    return static_cast<int>(it - universe_.begin());
  };
  int a = index(x), b = index(y), c = index(z);
  if (a < 0 || b < 0 || c < 0) return false;
  return contains(a, b, c);
}

std::string TripleSet::format(const RootedTriple &t) const {
  return universe_[t.x] + " " + universe_[t.y] + " | " + universe_[t.z];
}

TripleSet UnionOver(const std::vector<std::string> &universe, std::span<const TripleSet> parts) {
  std::vector<RootedTriple> all;
  for (const auto &part : parts) {
    std::vector<int> map;
    map.reserve(part.universe().size());
    for (const auto &name : part.universe()) {
      auto it = std::lower_bound(universe.begin(), universe.end(), name);
      if (it == universe.end() || *it != name) {
        throw InputError("leaf '" + name + "' missing from union universe");
      }
      map.push_back(static_cast<int>(it - universe.begin()));
    }
    for (const auto &t : part.triples()) all.push_back({map[t.x], map[t.y], map[t.z]});
  }
  return TripleSet(universe, std::move(all));
}

}  // namespace bmg
