#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace bmg {

// xy|z over indices into a universe; stored with x < y.
struct RootedTriple {
  int x;
  int y;
  int z;

  friend auto operator<=>(const RootedTriple &, const RootedTriple &) = default;
};

// Deduplicated, sorted triples over a sorted universe of leaf names. Leaf
// index i of a tree on the same leaf set is universe index i.
class TripleSet {
 public:
  TripleSet() = default;
  // `universe` must be strictly increasing. Triples are canonicalized, sorted
  // and deduplicated; throws InputError for out-of-range or repeated leaves.
  TripleSet(std::vector<std::string> universe, std::vector<RootedTriple> triples);

  const std::vector<std::string> &universe() const { return universe_; }
  std::span<const RootedTriple> triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(int x, int y, int z) const;
  bool contains(const std::string &x, const std::string &y, const std::string &z) const;

  // `x y | z` with names.
  std::string format(const RootedTriple &t) const;

  friend bool operator==(const TripleSet &, const TripleSet &) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<RootedTriple> triples_;
};

// Union of triple sets whose universes are subsets of `universe`.
TripleSet UnionOver(const std::vector<std::string> &universe, std::span<const TripleSet> parts);

}  // namespace bmg
