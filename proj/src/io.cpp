#include "bmg/io.hpp"

#include "bmg/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace bmg::io {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> SplitWhitespace(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

template <class Fn>
void ForEachLine(std::string_view text, Fn &&fn) {
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    fn(text.substr(start, end - start), line_no);
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
}

}  // namespace

ColoredDigraph ParseGraph(std::string_view text) {
  std::vector<NamedVertex> vertices;
  std::vector<NamedArc> arcs;
  std::unordered_map<std::string, std::size_t> declared;
  std::set<std::pair<std::string, std::string>> arc_seen;
  std::size_t last_line = 0;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no) {
    last_line = line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = SplitWhitespace(line);
    if (tokens.empty()) return;
    const Token &head = tokens.front();
    if (head.text != "V" && head.text != "A") {
      throw ParseError("unknown directive '" + std::string(head.text) + "'", line_no,
                       head.column);
    }
    if (tokens.size() != 3) {
      std::size_t col = tokens.size() > 3 ? tokens[3].column : line.size() + 1;
      throw ParseError(std::string(head.text) + " takes exactly two fields", line_no, col);
    }
    std::string a(tokens[1].text), b(tokens[2].text);
    if (head.text == "V") {
      if (!declared.emplace(a, line_no).second) {
        throw ParseError("duplicate vertex '" + a + "'", line_no, tokens[1].column);
      }
      vertices.push_back({a, b});
      return;
    }
    if (!declared.contains(a)) {
      throw ParseError("undeclared vertex '" + a + "'", line_no, tokens[1].column);
    }
    if (!declared.contains(b)) {
      throw ParseError("undeclared vertex '" + b + "'", line_no, tokens[2].column);
    }
    if (a == b) throw ParseError("self-loop at '" + a + "'", line_no, tokens[2].column);
    if (!arc_seen.emplace(a, b).second) {
      throw ParseError("duplicate arc " + a + " -> " + b, line_no, head.column);
    }
    arcs.push_back({a, b});
  });
  if (vertices.empty()) throw ParseError("graph has no vertices", last_line, 1);
  return ColoredDigraph::FromNamed(vertices, arcs);
}

std::string FormatGraph(const ColoredDigraph &g) {
  std::string out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    out += "V " + g.name(static_cast<Vertex>(v)) + " " +
           g.color_name(g.color(static_cast<Vertex>(v))) + "\n";
  }
  for (auto [x, y] : g.arcs()) out += "A " + g.name(x) + " " + g.name(y) + "\n";
  return out;
}

std::string FormatGraph(const ColoredGraph &h) {
  std::string out;
  for (std::size_t v = 0; v < h.size(); ++v) {
    out += "V " + h.name(static_cast<Vertex>(v)) + " " +
           h.color_name(h.color(static_cast<Vertex>(v))) + "\n";
  }
  for (std::size_t v = 0; v < h.size(); ++v) {
    for (Vertex w : h.neighbors(static_cast<Vertex>(v))) {
      out += "A " + h.name(static_cast<Vertex>(v)) + " " + h.name(w) + "\n";
    }
  }
  return out;
}

ColorMap ParseColorMap(std::string_view text) {
  ColorMap map;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) return;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("expected <leaf><TAB><color>", line_no, line.size() + 1);
    }
    std::string_view leaf = line.substr(0, tab);
    std::string_view color = line.substr(tab + 1);
    if (leaf.empty()) throw ParseError("empty leaf id", line_no, 1);
    if (color.empty() || color.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError("color must be a single token", line_no, tab + 2);
    }
    if (!map.emplace(std::string(leaf), std::string(color)).second) {
      throw ParseError("duplicate leaf '" + std::string(leaf) + "'", line_no, 1);
    }
  });
  return map;
}

namespace {

constexpr std::string_view kNewickSpecial = "(),;:[]'\"";

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  void Parse(TreeBuilder &builder, const ColorMap *colors) {
    SkipBlank();
    Subtree(builder, -1, colors);
    SkipBlank();
    Expect(';');
    SkipBlank();
    if (pos_ != text_.size()) Fail("unexpected text after ';'");
  }

  std::vector<std::string> leaves;

 private:
  void Subtree(TreeBuilder &builder, Node parent, const ColorMap *colors) {
    // Iterative descent: open parentheses push, closing ones pop.
    std::vector<Node> open;
    auto read_leaf = [&](Node up) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && !IsBlank(text_[pos_]) &&
             kNewickSpecial.find(text_[pos_]) == std::string_view::npos) {
        ++pos_;
      }
      if (pos_ == start) Fail("expected a leaf name or '('");
      std::string name(text_.substr(start, pos_ - start));
      std::string color = "*";
      if (colors) {
        auto it = colors->find(name);
        if (it == colors->end()) throw InputError("leaf '" + name + "' has no color");
        color = it->second;
      }
      leaves.push_back(name);
      builder.AddLeaf(up, name, color);
    };
    auto after_item = [&]() {
      SkipBlank();
      if (pos_ < text_.size() && text_[pos_] == ':') Fail("branch lengths are not supported");
    };

    if (Peek() != '(') {
      read_leaf(parent);
      after_item();
      return;
    }
    for (;;) {
      SkipBlank();
      if (Peek() == '(') {
        ++pos_;
        open.push_back(builder.AddNode(open.empty() ? parent : open.back()));
        continue;
      }
      read_leaf(open.back());
      after_item();
      // Close as many groups as follow.
      for (;;) {
        char c = Peek();
        if (c == ',') {
          ++pos_;
          break;
        }
        if (c == ')') {
          ++pos_;
          open.pop_back();
          SkipBlank();
          char n = Peek();
          if (n == ':') Fail("branch lengths are not supported");
          if (n != ',' && n != ')' && n != ';' && n != '\0') Fail("inner node labels are not supported");
          if (open.empty()) return;
          continue;
        }
        Fail(c == '\0' ? "unexpected end of input" : "expected ',' or ')'");
      }
    }
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void SkipBlank() {
    while (pos_ < text_.size() && IsBlank(text_[pos_])) ++pos_;
  }

  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void Fail(const std::string &what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LeafColoredTree ParseNewick(std::string_view text, const ColorMap *colors) {
  TreeBuilder builder;
  NewickParser parser(text);
  parser.Parse(builder, colors);
  if (colors) {
    std::set<std::string> leaves(parser.leaves.begin(), parser.leaves.end());
    for (const auto &[leaf, color] : *colors) {
      if (!leaves.contains(leaf)) throw InputError("color map names unknown leaf '" + leaf + "'");
    }
  }
  return builder.Finish();
}

std::string FormatNewick(const LeafColoredTree &t) {
  std::string out;
  // Preorder numbering lets a stack of (node, next child) drive the output.
  std::vector<std::pair<Node, std::size_t>> stack{{t.root(), 0}};
  auto emit_leaf = [&](Node v) {
    const std::string &name = t.leaf_name(t.leaf_of(v));
    if (name.find_first_of(std::string(kNewickSpecial) + " \t\r\n") != std::string::npos) {
      throw InputError("leaf '" + name + "' cannot be written as Newick");
    }
    out += name;
  };
  if (t.is_leaf(t.root())) {
    emit_leaf(t.root());
    return out + ";\n";
  }
  out += '(';
  while (!stack.empty()) {
    auto &[v, next] = stack.back();
    auto kids = t.children(v);
    if (next == kids.size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    if (next > 0) out += ',';
    Node c = kids[next++];
    if (t.is_leaf(c)) {
      emit_leaf(c);
    } else {
      out += '(';
      stack.push_back({c, 0});
    }
  }
  return out + ";\n";
}

std::string FormatColorMap(const LeafColoredTree &t) {
  std::string out;
  for (std::size_t i = 0; i < t.leaf_count(); ++i) {
    out += t.leaf_name(static_cast<Leaf>(i)) + "\t" +
           t.color_name(t.leaf_color(static_cast<Leaf>(i))) + "\n";
  }
  return out;
}

std::string FormatTriples(const TripleSet &r) {
  std::string out;
  for (const auto &t : r.triples()) out += r.format(t) + "\n";
  return out;
}

namespace {

std::string Quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string FormatDot(const ColoredDigraph &g) {
  static constexpr std::string_view kPalette[] = {
      "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
      "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5",
  };
  std::ostringstream out;
  out << "digraph bmg {\n  node [style=filled, shape=circle];\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    const Vertex x = static_cast<Vertex>(v);
    out << "  " << Quote(g.name(x)) << " [fillcolor=\""
        << kPalette[g.color(x) % std::size(kPalette)] << "\", tooltip="
        << Quote(g.color_name(g.color(x))) << "];\n";
  }
  for (auto [x, y] : g.arcs()) {
    const bool mutual = g.has_arc(y, x);
    if (mutual && y < x) continue;
    out << "  " << Quote(g.name(x)) << " -> " << Quote(g.name(y));
    if (mutual) out << " [dir=none]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bmg::io
