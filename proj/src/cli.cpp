#include "bmg/cli.hpp"

#include "bmg/bmg.hpp"
#include "bmg/errors.hpp"
#include "bmg/io.hpp"
#include "bmg/n_color.hpp"
#include "bmg/rbmg.hpp"
#include "bmg/triples.hpp"
#include "bmg/two_color.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace bmg::cli {

namespace {

// Raised for unreadable or unwritable files; mapped to the input-error status.
class FileError : public InputError {
  using InputError::InputError;
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content)) throw FileError("cannot write '" + path + "'");
}

// Writes to `path`, or to `out` when the path is empty or "-".
void Emit(const std::string &path, const std::string &content, std::ostream &out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    WriteFile(path, content);
  }
}

ColoredDigraph LoadGraph(const std::string &path) {
  std::string text = ReadFile(path);
  try {
    return io::ParseGraph(text);
  } catch (const ParseError &e) {
    throw InputError(path + ":" + e.what());
  }
}

LeafColoredTree LoadTree(const std::string &path, std::string colors_path) {
  if (colors_path.empty()) colors_path = path + ".colors";
  std::string newick = ReadFile(path);
  std::string sidecar = ReadFile(colors_path);
  io::ColorMap colors;
  try {
    colors = io::ParseColorMap(sidecar);
  } catch (const ParseError &e) {
    throw InputError(colors_path + ":" + e.what());
  }
  try {
    return io::ParseNewick(newick, &colors);
  } catch (const ParseError &e) {
    throw InputError(path + ":" + e.what());
  }
}

// Newick at `path` and the color sidecar next to it.
void SaveTree(const std::string &path, const LeafColoredTree &t, std::ostream &out) {
  if (path.empty() || path == "-") {
    out << io::FormatNewick(t);
    return;
  }
  WriteFile(path, io::FormatNewick(t));
  WriteFile(path + ".colors", io::FormatColorMap(t));
}

void ReportRejection(const Rejection &r, std::ostream &err) {
  err << "REJECT " << StageName(r.stage);
  for (const auto &w : r.witness) err << ' ' << w;
  err << '\n';
  if (!r.detail.empty()) err << "detail: " << r.detail << '\n';
}

const std::map<std::string, Route> kRoutes{{"pairwise", Route::Pairwise}, {"direct", Route::Direct}};
const std::map<std::string, TreeShape> kShapes{{"binary", TreeShape::Binary},
                                               {"multifurcating", TreeShape::Multifurcating}};

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Colored best match graphs: construction, recognition, least resolved trees",
               "bmgtool"};
  app.require_subcommand(1);

  std::string tree_path, colors_path, graph_path, out_path, out_tree, out_graph, emit_lrt,
      emit_dot;
  std::string route_name = "pairwise", shape_name = "binary";
  int leaves = 0, colors = 0;
  std::uint64_t seed = 1;
  bool check = false;

  auto *from_tree = app.add_subcommand("from-tree", "Write the best match graph of a tree");
  from_tree->add_option("--tree", tree_path, "Newick file")->required();
  from_tree->add_option("--colors", colors_path, "Leaf color sidecar (default <tree>.colors)");
  from_tree->add_option("--out", out_path, "Graph file (default stdout)");

  auto *recognize = app.add_subcommand("recognize", "Decide whether a graph is a best match graph");
  recognize->add_option("--graph", graph_path, "Graph file")->required();
  recognize->add_option("--route", route_name, "pairwise or direct")
      ->check(CLI::IsMember({"pairwise", "direct"}));
  recognize->add_option("--emit-lrt", emit_lrt, "Write the least resolved tree here");
  recognize->add_option("--emit-dot", emit_dot, "Write a Graphviz rendering of the graph here");

  auto *simulate = app.add_subcommand("simulate", "Random tree and its best match graph");
  simulate->add_option("--leaves", leaves, "Number of leaves")->required();
  simulate->add_option("--colors", colors, "Number of colors")->required();
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--shape", shape_name, "binary or multifurcating")
      ->check(CLI::IsMember({"binary", "multifurcating"}));
  simulate->add_option("--out-tree", out_tree, "Newick file (sidecar at <path>.colors)")
      ->required();
  simulate->add_option("--out-graph", out_graph, "Graph file")->required();

  auto *triples = app.add_subcommand("triples", "Informative triples of a graph");
  triples->add_option("--graph", graph_path, "Graph file")->required();
  triples->add_option("--out", out_path, "Output file (default stdout)");

  auto *lrt = app.add_subcommand("lrt", "Least resolved tree of a best match graph");
  lrt->add_option("--graph", graph_path, "Graph file")->required();
  lrt->add_option("--route", route_name, "pairwise or direct")
      ->check(CLI::IsMember({"pairwise", "direct"}));
  lrt->add_option("--out", out_path, "Newick file (sidecar at <path>.colors; default stdout)");

  auto *rbmg = app.add_subcommand("rbmg", "Reciprocal best matches (symmetric part)");
  rbmg->add_option("--graph", graph_path, "Graph file")->required();
  rbmg->add_option("--out", out_path, "Graph file (default stdout)");
  rbmg->add_flag("--check", check, "Test the complete-bipartite necessary condition");

  auto *axioms = app.add_subcommand("check-axioms", "Two-colored axiom verdict per component");
  axioms->add_option("--graph", graph_path, "Graph file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (from_tree->parsed()) {
      LeafColoredTree t = LoadTree(tree_path, colors_path);
      Emit(out_path, io::FormatGraph(BmgOfTree(t)), out);
      return kSuccess;
    }

    if (simulate->parsed()) {
      if (colors == 1) err << "warning: one color gives an edge-less graph\n";
      SimulationConfig cfg{leaves, colors, seed, kShapes.at(shape_name)};
      Simulation sim = Simulate(cfg);
      SaveTree(out_tree, sim.tree, out);
      Emit(out_graph, io::FormatGraph(sim.graph), out);
      return kSuccess;
    }

    if (triples->parsed()) {
      Emit(out_path, io::FormatTriples(InformativeTriples(LoadGraph(graph_path))), out);
      return kSuccess;
    }

    if (recognize->parsed() || lrt->parsed()) {
      ColoredDigraph g = LoadGraph(graph_path);
      if (!emit_dot.empty()) WriteFile(emit_dot, io::FormatDot(g));
      RecognitionReport report = RecognizeNcbmg(g, kRoutes.at(route_name));
      if (!report.accepted()) {
        ReportRejection(*report.rejection, err);
        return kRejected;
      }
      if (lrt->parsed()) {
        SaveTree(out_path, *report.lrt, out);
        return kSuccess;
      }
      out << "ACCEPT " << g.size() << " vertices, " << g.arc_count() << " arcs, "
          << g.color_count() << " colors, " << report.components.size() << " components\n";
      if (report.single_color) out << "note: single color, edge-less graph\n";
      if (!emit_lrt.empty()) SaveTree(emit_lrt, *report.lrt, out);
      return kSuccess;
    }

    if (rbmg->parsed()) {
      ColoredGraph h = SymmetricPart(LoadGraph(graph_path));
      if (check) {
        RbmgVerdict v = Check2cRbmgNecessary(h);
        if (!v) {
          err << "REJECT not-complete-bipartite";
          for (const auto &w : v.witness) err << ' ' << w;
          err << '\n';
          return kRejected;
        }
      }
      Emit(out_path, io::FormatGraph(h), out);
      return kSuccess;
    }

    if (axioms->parsed()) {
      ColoredDigraph g = LoadGraph(graph_path);
      bool all_pass = true;
      for (const auto &comp : ConnectedComponents(g)) {
        AxiomVerdict v = CheckAxioms(g.induced(comp));
        out << "component " << g.name(comp.front()) << ": " << AxiomStatusName(v.status);
        for (const auto &w : v.witness) out << ' ' << w;
        out << '\n';
        all_pass = all_pass && v.passed();
      }
      return all_pass ? kSuccess : kRejected;
    }
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace bmg::cli
