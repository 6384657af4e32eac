#include "selfsim/export.hpp"

#include <map>
#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "graphml") return GraphFormat::GraphML;
  if (name == "edges") return GraphFormat::Edges;
  if (name == "matrix") return GraphFormat::Matrix;
  throw DomainError("unsupported format \"" + std::string(name) + "\" (use dot, graphml, edges or matrix)");
}

std::string_view format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::Dot: return "dot";
    case GraphFormat::GraphML: return "graphml";
    case GraphFormat::Edges: return "edges";
    case GraphFormat::Matrix: return "matrix";
  }
  return "";
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void graphml_header(std::ostream& out, bool directed, bool with_root) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
         "  <key id=\"word\" for=\"node\" attr.name=\"word\" attr.type=\"string\"/>\n";
  if (with_root) out << "  <key id=\"root\" for=\"node\" attr.name=\"root\" attr.type=\"boolean\"/>\n";
  if (directed) out << "  <key id=\"label\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n";
  out << "  <graph id=\"G\" edgedefault=\"" << (directed ? "directed" : "undirected") << "\">\n";
}

void check_dense(std::size_t n) {
  if (n > kMatrixExportLimit)
    throw ResourceLimitError("matrix export is limited to " + std::to_string(kMatrixExportLimit) + " vertices");
}

}  // namespace

std::vector<std::string> vertex_names(const LabeledSchreierGraph& g) {
  std::vector<std::string> names;
  names.reserve(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) names.push_back(format_word(g.vertex_word(v)));
  return names;
}

std::vector<std::string> vertex_names(const PointedGraph& g) {
  std::vector<std::string> names;
  names.reserve(g.vertices.size());
  for (std::uint32_t v = 0; v < g.vertices.size(); ++v) names.push_back(format_word(g.vertex_word(v)));
  return names;
}

void write_graph(std::ostream& out, const LabeledSchreierGraph& g, GraphFormat format) {
  const auto names = vertex_names(g);
  const auto& labels = g.labels();
  switch (format) {
    case GraphFormat::Dot:
      out << "digraph schreier {\n";
      for (std::uint32_t v = 0; v < names.size(); ++v) out << "  " << v << " [label=\"" << names[v] << "\"];\n";
      for (const Arrow& a : g.arrows())
        out << "  " << a.source << " -> " << a.target << " [label=\"" << dot_escape(labels[a.label]) << "\"];\n";
      out << "}\n";
      break;
    case GraphFormat::GraphML:
      graphml_header(out, true, false);
      for (std::uint32_t v = 0; v < names.size(); ++v)
        out << "    <node id=\"n" << v << "\"><data key=\"word\">" << names[v] << "</data></node>\n";
      for (const Arrow& a : g.arrows())
        out << "    <edge source=\"n" << a.source << "\" target=\"n" << a.target << "\"><data key=\"label\">"
            << xml_escape(labels[a.label]) << "</data></edge>\n";
      out << "  </graph>\n</graphml>\n";
      break;
    case GraphFormat::Edges:
      for (const Arrow& a : g.arrows())
        out << names[a.source] << '\t' << names[a.target] << '\t' << labels[a.label] << '\n';
      break;
    case GraphFormat::Matrix: {
      check_dense(g.vertex_count());
      const SymbolicAdjacencyMatrix m = symbolic_matrix(g);
      for (std::size_t i = 0; i < m.dimension(); ++i) {
        auto row = m.row(i);
        std::size_t pos = 0;
        for (std::size_t j = 0; j < m.dimension(); ++j) {
          if (j > 0) out << ',';
          if (pos == row.size() || row[pos].column != j) {
            out << '0';
            continue;
          }
          bool first = true;
          for (; pos < row.size() && row[pos].column == j; ++pos) {
            if (!first) out << '+';
            out << labels[row[pos].label];
            first = false;
          }
        }
        out << '\n';
      }
      break;
    }
  }
}

std::string export_graph(const LabeledSchreierGraph& g, GraphFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

void write_graph(std::ostream& out, const SimplicialGraph& g, std::span<const std::string> names,
                 GraphFormat format, std::optional<std::uint32_t> root) {
  if (names.size() != g.vertex_count) throw DomainError("one name per vertex is required");
  if (root && *root >= g.vertex_count) throw DomainError("root vertex out of range");
  switch (format) {
    case GraphFormat::Dot:
      out << "graph schreier {\n";
      for (std::uint32_t v = 0; v < names.size(); ++v) {
        out << "  " << v << " [label=\"" << dot_escape(names[v]) << "\"";
        if (root == v) out << ", shape=doublecircle";
        out << "];\n";
      }
      for (const Edge& e : g.edges) out << "  " << e.u << " -- " << e.v << ";\n";
      out << "}\n";
      break;
    case GraphFormat::GraphML:
      graphml_header(out, false, root.has_value());
      for (std::uint32_t v = 0; v < names.size(); ++v) {
        out << "    <node id=\"n" << v << "\"><data key=\"word\">" << xml_escape(names[v]) << "</data>";
        if (root == v) out << "<data key=\"root\">true</data>";
        out << "</node>\n";
      }
      for (const Edge& e : g.edges) out << "    <edge source=\"n" << e.u << "\" target=\"n" << e.v << "\"/>\n";
      out << "  </graph>\n</graphml>\n";
      break;
    case GraphFormat::Edges:
      if (root) out << "# root " << names[*root] << '\n';
      for (const Edge& e : g.edges) out << names[e.u] << '\t' << names[e.v] << '\n';
      break;
    case GraphFormat::Matrix: {
      check_dense(g.vertex_count);
      if (root) out << "# root " << names[*root] << '\n';
      const auto adj = g.adjacency();
      for (std::size_t i = 0; i < g.vertex_count; ++i) {
        std::size_t pos = 0;
        for (std::size_t j = 0; j < g.vertex_count; ++j) {
          if (j > 0) out << ',';
          const bool hit = pos < adj[i].size() && adj[i][pos] == j;
          if (hit) ++pos;
          out << (hit ? '1' : '0');
        }
        out << '\n';
      }
      break;
    }
  }
}

std::string export_graph(const SimplicialGraph& g, std::span<const std::string> names, GraphFormat format,
                         std::optional<std::uint32_t> root) {
  std::ostringstream out;
  write_graph(out, g, names, format, root);
  return out.str();
}

std::string export_graph(const PointedGraph& g, GraphFormat format) {
  return export_graph(g.graph, vertex_names(g), format, g.root);
}

namespace {

Word parse_vertex(std::string_view text, std::uint32_t k, std::size_t line) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    Letter x = 0;
    if (text[i] == '[') {
      const auto close = text.find(']', i);
      if (close == std::string_view::npos || close == i + 1)
        throw DomainError("line " + std::to_string(line) + ": unterminated bracketed letter");
      for (std::size_t j = i + 1; j < close; ++j) {
        if (text[j] < '0' || text[j] > '9') throw DomainError("line " + std::to_string(line) + ": bad letter");
        x = x * 10 + static_cast<Letter>(text[j] - '0');
      }
      i = close;
    } else if (text[i] >= '0' && text[i] <= '9') {
      x = static_cast<Letter>(text[i] - '0');
    } else {
      throw DomainError("line " + std::to_string(line) + ": bad letter '" + std::string(1, text[i]) + "'");
    }
    if (x >= k) throw DomainError("line " + std::to_string(line) + ": letter outside the alphabet");
    w.push_back(x);
  }
  return w;
}

}  // namespace

std::vector<Arrow> import_edges(std::string_view tsv, std::uint32_t alphabet_size,
                                std::span<const std::string> labels) {
  std::map<std::string_view, std::uint32_t> by_name;
  for (std::uint32_t i = 0; i < labels.size(); ++i) by_name.emplace(labels[i], i);
  std::vector<Arrow> arrows;
  std::size_t line_no = 0;
  while (!tsv.empty()) {
    const auto end = tsv.find('\n');
    std::string_view line = tsv.substr(0, end);
    tsv.remove_prefix(end == std::string_view::npos ? tsv.size() : end + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos)
      throw DomainError("line " + std::to_string(line_no) + ": expected three tab-separated fields");
    const Word src = parse_vertex(line.substr(0, t1), alphabet_size, line_no);
    const Word dst = parse_vertex(line.substr(t1 + 1, t2 - t1 - 1), alphabet_size, line_no);
    if (src.size() != dst.size()) throw DomainError("line " + std::to_string(line_no) + ": words differ in length");
    const auto it = by_name.find(line.substr(t2 + 1));
    if (it == by_name.end()) throw DomainError("line " + std::to_string(line_no) + ": unknown label");
    arrows.push_back({static_cast<std::uint32_t>(word_index(src, alphabet_size)),
                      static_cast<std::uint32_t>(word_index(dst, alphabet_size)), it->second});
  }
  return arrows;
}

}  // namespace selfsim
