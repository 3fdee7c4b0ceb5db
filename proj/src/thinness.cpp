#include "bmg/thinness.hpp"

#include <algorithm>
#include <numeric>

namespace bmg {

bool ThinnessPartition::monochromatic(const ColoredDigraph &g) const {
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (Vertex v : classes[a]) {
      if (g.color(v) != color[a]) return false;
    }
  }
  return true;
}

VertexSet ThinnessPartition::Expand(const ClassSet &classes_set, std::size_t vertex_count) const {
  VertexSet r(vertex_count);
  for (auto a = classes_set.find_first(); a != ClassSet::npos; a = classes_set.find_next(a)) {
    for (Vertex v : classes[a]) r.set(v);
  }
  return r;
}

ThinnessPartition ComputeThinness(const ColoredDigraph &g) {
  const std::size_t n = g.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto same = [&](Vertex a, Vertex b) {
    return std::ranges::equal(g.out(a), g.out(b)) && std::ranges::equal(g.in(a), g.in(b));
  };
  auto less = [&](Vertex a, Vertex b) {
    auto oa = g.out(a), ob = g.out(b);
    if (!std::ranges::equal(oa, ob)) return std::ranges::lexicographical_compare(oa, ob);
    auto ia = g.in(a), ib = g.in(b);
    if (!std::ranges::equal(ia, ib)) return std::ranges::lexicographical_compare(ia, ib);
    return a < b;
  };
  std::sort(order.begin(), order.end(), less);

  ThinnessPartition p;
  p.class_of.assign(n, -1);
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || !same(order[i - 1], order[i])) groups.emplace_back();
    groups.back().push_back(order[i]);
  }
  // Groups are already sorted internally (ties broken by id); order by first member.
  std::sort(groups.begin(), groups.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });

  p.classes = std::move(groups);
  const std::size_t k = p.classes.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (Vertex v : p.classes[a]) p.class_of[v] = static_cast<ClassId>(a);
    p.color.push_back(g.color(p.classes[a].front()));
  }
  p.out.assign(k, ClassSet(k));
  p.in.assign(k, ClassSet(k));
  for (std::size_t a = 0; a < k; ++a) {
    Vertex rep = p.classes[a].front();
    for (Vertex w : g.out(rep)) p.out[a].set(p.class_of[w]);
    for (Vertex w : g.in(rep)) p.in[a].set(p.class_of[w]);
  }
  return p;
}

ColoredDigraph QuotientDigraph(const ColoredDigraph &g, const ThinnessPartition &p) {
  // Classes are ordered by smallest member and names are sorted with ids, so
  // the representative names are already strictly increasing.
  std::vector<std::string> names;
  std::vector<std::string> used;
  for (const auto &members : p.classes) {
    names.push_back(g.name(members.front()));
    used.push_back(g.color_name(g.color(members.front())));
  }
  std::vector<std::string> color_names = SortedUnique(used);
  std::vector<Color> colors;
  for (const auto &c : used) {
    colors.push_back(static_cast<Color>(
        std::lower_bound(color_names.begin(), color_names.end(), c) - color_names.begin()));
  }
  std::vector<std::vector<Vertex>> out(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    const auto &row = p.out[a];
    for (auto b = row.find_first(); b != ClassSet::npos; b = row.find_next(b)) {
      out[a].push_back(static_cast<Vertex>(b));
    }
  }
  return ColoredDigraph(std::move(names), std::move(color_names), std::move(colors),
                        std::move(out));
}

}  // namespace bmg
