#include "bmg/n_color.hpp"

#include "bmg/bmg.hpp"
#include "bmg/errors.hpp"
#include "bmg/thinness.hpp"
#include "bmg/triples.hpp"
#include "bmg/two_color.hpp"
#include "structural.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace bmg {

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming> &sink) : sink_(sink) {}
  void Mark(const std::string &stage) {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    for (auto &t : sink_) {
      if (t.stage == stage) {
        t.seconds += s;
        return;
      }
    }
    sink_.push_back({stage, s});
  }

 private:
  std::vector<StageTiming> &sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::vector<std::string> ColorsOf(const ColoredDigraph &g) {
  std::vector<std::string> r;
  r.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) r.push_back(g.color_name(g.color(static_cast<Vertex>(v))));
  return r;
}

struct PairOutcome {
  PairReport report;
  std::optional<LeafColoredTree> tree;
  std::optional<TripleSet> triples;
};

// Recognizes one two-colored subgraph component by component and returns the
// triples the chosen route feeds into BUILD.
PairOutcome RecognizePair(const ColoredDigraph &c, const std::string &s, const std::string &t,
                          Route route) {
  PairOutcome out;
  out.report.s = s;
  out.report.t = t;
  ColoredDigraph gst = InducedSubgraph(c, {s, t});
  auto comps = ConnectedComponents(gst);
  out.report.components = static_cast<int>(comps.size());
  std::vector<LeafColoredTree> parts;
  for (const auto &comp : comps) {
    TreeVerdict v = LrtViaHierarchy(gst.induced(comp));
    if (!v.accepted()) {
      Rejection r = *v.rejection;
      r.detail = s + "/" + t + ": " + std::string(StageName(r.stage)) +
                 (r.detail.empty() ? "" : " (" + r.detail + ")");
      r.stage = Stage::TwoColorFailure;
      out.report.rejection = std::move(r);
      return out;
    }
    parts.push_back(std::move(*v.tree));
  }
  out.tree = parts.size() == 1 ? std::move(parts.front()) : JoinUnderRoot(parts);
  out.triples = route == Route::Pairwise ? TriplesOf(*out.tree) : InformativeTriples(gst);
  return out;
}

}  // namespace

RecognitionReport RecognizeNcbmg(const ColoredDigraph &g, Route route, Execution exec) {
  if (g.empty()) throw InputError("empty graph");
  RecognitionReport report;
  StageClock clock(report.timings);

  if (auto r = detail::CheckStructure(g, {.two_colors = false, .connected = false,
                                          .no_sink = false})) {
    report.rejection = std::move(*r);
    return report;
  }
  if (g.color_count() == 1) {
    // No arcs remain after the same-color check; any tree explains the graph.
    report.single_color = true;
    report.lrt = StarTree(g.names(), ColorsOf(g));
    clock.Mark("structure");
    return report;
  }

  auto comps = ConnectedComponents(g);
  std::vector<std::vector<Color>> color_sets;
  for (const auto &comp : comps) {
    std::vector<Color> cs;
    for (Vertex v : comp) cs.push_back(g.color(v));
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    color_sets.push_back(std::move(cs));
  }
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (color_sets[i] != color_sets[0]) {
      report.rejection = Rejection{Stage::ComponentColorMismatch,
                                   {g.name(comps[0].front()), g.name(comps[i].front())},
                                   "components use different color sets"};
      return report;
    }
  }
  clock.Mark("structure");

  std::vector<LeafColoredTree> trees;
  for (const auto &comp : comps) {
    ColoredDigraph c = g.induced(comp);
    ComponentReport cr;
    cr.vertices = c.names();

    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t a = 0; a < c.color_count(); ++a) {
      for (std::size_t b = a + 1; b < c.color_count(); ++b) {
        pairs.emplace_back(c.color_name(static_cast<Color>(a)), c.color_name(static_cast<Color>(b)));
      }
    }
    std::vector<PairOutcome> outcomes(pairs.size());
    const int np = static_cast<int>(pairs.size());
    if (exec == Execution::Parallel) {
      // Exceptions must not leave the parallel region; keep the first message.
      std::string failure;
#pragma omp parallel for schedule(dynamic, 1)
      for (int i = 0; i < np; ++i) {
        try {
          outcomes[i] = RecognizePair(c, pairs[i].first, pairs[i].second, route);
        } catch (const std::exception &e) {
#pragma omp critical
          if (failure.empty()) failure = e.what();
        }
      }
      if (!failure.empty()) throw std::runtime_error(failure);
    } else {
      for (int i = 0; i < np; ++i) {
        outcomes[i] = RecognizePair(c, pairs[i].first, pairs[i].second, route);
      }
    }
    for (auto &o : outcomes) cr.pairs.push_back(o.report);
    clock.Mark("pairs");

    for (const auto &o : outcomes) {
      if (o.report.rejection) {
        cr.rejection = o.report.rejection;
        break;
      }
    }
    if (!cr.rejection) {
      std::vector<TripleSet> parts;
      for (auto &o : outcomes) parts.push_back(std::move(*o.triples));
      TripleSet all = UnionOver(c.names(), parts);
      std::vector<std::string> colors = ColorsOf(c);
      BuildResult b = Build(all, c.names(), &colors);
      clock.Mark("supertree");
      if (!b.consistent()) {
        cr.rejection = Rejection{Stage::TriplesInconsistent, b.witness,
                                 "union of pair triples is inconsistent"};
      } else if (auto r = detail::ExplainsGate(*b.tree, c)) {
        cr.rejection = std::move(*r);
      } else {
        trees.push_back(std::move(*b.tree));
      }
      clock.Mark("gate");
    }
    const bool failed = cr.rejection.has_value();
    if (failed) report.rejection = cr.rejection;
    report.components.push_back(std::move(cr));
    if (failed) return report;
  }

  LeafColoredTree lrt = trees.size() == 1 ? std::move(trees.front()) : JoinUnderRoot(trees);
  if (auto r = detail::ExplainsGate(lrt, g)) {
    report.rejection = std::move(*r);
  } else {
    report.lrt = std::move(lrt);
  }
  clock.Mark("gate");
  return report;
}

std::vector<Node> RedundantEdgesN(const LeafColoredTree &t, const ColoredDigraph &g) {
  if (!(BmgOfTree(t) == g)) throw InputError("tree does not explain the graph");
  const std::size_t colors = g.color_count();
  ThinnessPartition p = ComputeThinness(g);

  // count[v * colors + s]: leaves of color s below v.
  std::vector<int> count(t.size() * colors, 0);
  for (std::size_t v = t.size(); v-- > 0;) {
    const Node node = static_cast<Node>(v);
    if (t.is_leaf(node)) count[v * colors + t.leaf_color(t.leaf_of(node))] += 1;
    if (v > 0) {
      const std::size_t up = static_cast<std::size_t>(t.parent(node));
      for (std::size_t s = 0; s < colors; ++s) count[up * colors + s] += count[v * colors + s];
    }
  }

  std::vector<char> is_root(t.size() * colors, 0);
  for (const auto &members : p.classes) {
    const Vertex rep = members.front();
    std::vector<std::vector<Vertex>> by_color(colors);
    for (Vertex y : g.out(rep)) by_color[g.color(y)].push_back(y);
    for (std::size_t s = 0; s < colors; ++s) {
      if (static_cast<Color>(s) == g.color(rep)) continue;
      Node rho = t.leaf_node(rep);
      for (Vertex x : members) rho = t.lca(rho, t.leaf_node(x));
      for (Vertex y : by_color[s]) rho = t.lca(rho, t.leaf_node(y));
      // The s-neighbors are exactly the s-leaves below the root.
      if (static_cast<int>(by_color[s].size()) != count[rho * colors + s]) {
        throw std::logic_error("class root does not carry exactly the color-s neighbors");
      }
      is_root[rho * colors + s] = 1;
    }
  }

  std::vector<Node> r;
  for (Node v : t.inner_edges()) {
    const std::size_t u = static_cast<std::size_t>(t.parent(v));
    bool needed = false;
    for (std::size_t s = 0; s < colors && !needed; ++s) {
      const bool outside = count[u * colors + s] > count[v * colors + s];
      needed = outside && is_root[v * colors + s];
    }
    if (!needed) r.push_back(v);
  }
  return r;
}

}  // namespace bmg
