#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selfsim/schreier.hpp"

namespace selfsim {

enum class GraphFormat { Dot, GraphML, Edges, Matrix };

/// "dot", "graphml", "edges" or "matrix"; throws DomainError otherwise.
GraphFormat parse_graph_format(std::string_view name);
std::string_view format_name(GraphFormat format);

/// Largest graph written as a dense matrix.
inline constexpr std::size_t kMatrixExportLimit = 1u << 14;

/// Labeled graph output. Vertices are named by their words.
///   dot, graphml: one node per vertex, one labeled edge per arrow
///   edges: TSV lines "src<TAB>dst<TAB>label"
///   matrix: CSV of the symbolic adjacency matrix, entries joined by "+" and
///           empty entries written as 0
void write_graph(std::ostream& out, const LabeledSchreierGraph& g, GraphFormat format);
std::string export_graph(const LabeledSchreierGraph& g, GraphFormat format);

/// Simple undirected output; edges TSV has two columns and the matrix is 0/1.
/// `root` marks a distinguished vertex (dot: doublecircle, graphml: root=true,
/// edges/matrix: a leading "# root WORD" line).
void write_graph(std::ostream& out, const SimplicialGraph& g, std::span<const std::string> vertex_names,
                 GraphFormat format, std::optional<std::uint32_t> root = std::nullopt);
std::string export_graph(const SimplicialGraph& g, std::span<const std::string> vertex_names, GraphFormat format,
                         std::optional<std::uint32_t> root = std::nullopt);

std::vector<std::string> vertex_names(const LabeledSchreierGraph& g);
std::vector<std::string> vertex_names(const PointedGraph& g);

std::string export_graph(const PointedGraph& g, GraphFormat format);

/// Reads an edges TSV written by export_graph back into arrows, resolving
/// vertex words over the given alphabet and labels against `labels`. Throws
/// DomainError on malformed lines.
std::vector<Arrow> import_edges(std::string_view tsv, std::uint32_t alphabet_size,
                                std::span<const std::string> labels);

}  // namespace selfsim
