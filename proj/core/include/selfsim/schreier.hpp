#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "selfsim/automaton.hpp"
#include "selfsim/boundary_point.hpp"
#include "selfsim/element.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

inline constexpr std::uint64_t kDefaultVertexCap = std::uint64_t{1} << 24;

/// kDefaultVertexCap, or the value of SELFSIM_VERTEX_CAP when it holds a
/// positive integer.
std::uint64_t default_vertex_cap();

struct BuildOptions {
  std::uint64_t vertex_cap = default_vertex_cap();
};

struct Arrow {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  std::uint32_t label = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Level-n Schreier graph: vertices are the words of A^n in lexicographic
/// order (leftmost letter most significant) and every generator s contributes
/// one arrow v -> s(v) per vertex. Loops from trivially acting generators are
/// kept.
class LabeledSchreierGraph {
 public:
  LabeledSchreierGraph(std::uint32_t alphabet_size, std::size_t level, std::vector<std::string> labels,
                       std::vector<std::vector<std::uint32_t>> targets);

  std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t level() const noexcept { return level_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t generator_count() const noexcept { return labels_.size(); }
  std::size_t arrow_count() const noexcept { return vertex_count_ * labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// targets(s)[v] = index of s(v).
  std::span<const std::uint32_t> targets(std::size_t label) const { return targets_.at(label); }

  Word vertex_word(std::uint32_t v) const { return word_at(v, alphabet_size_, level_); }
  std::uint32_t vertex_index(WordView w) const;

  /// Generator-major, then by source vertex.
  std::vector<Arrow> arrows() const;

 private:
  std::uint32_t alphabet_size_;
  std::size_t level_;
  std::size_t vertex_count_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> targets_;
};

/// Throws ResourceLimitError when |A|^n exceeds the vertex cap.
LabeledSchreierGraph build_schreier(const MealyAutomaton& aut, std::span<const StateId> generators,
                                    std::size_t level, BuildOptions options = {});
LabeledSchreierGraph build_schreier(std::span<const CanonicalElement> generators,
                                    std::span<const std::string> labels, std::size_t level,
                                    BuildOptions options = {});

/// Sparse symbolic adjacency matrix: entry (i, j) is the list of generators
/// carrying vertex i to vertex j, in generator order; absent entries are 0.
class SymbolicAdjacencyMatrix {
 public:
  struct Entry {
    std::uint32_t column;
    std::uint32_t label;
  };

  SymbolicAdjacencyMatrix(std::vector<std::string> labels, std::vector<std::vector<Entry>> rows)
      : labels_(std::move(labels)), rows_(std::move(rows)) {}

  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Sorted by column, then by label.
  std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }
  std::vector<std::uint32_t> entry(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Entry>> rows_;
};

SymbolicAdjacencyMatrix symbolic_matrix(const LabeledSchreierGraph& g);

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph: edges have u < v and are sorted, without
/// duplicates.
struct SimplicialGraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  /// Sorts, orients and deduplicates `edges`, dropping loops.
  static SimplicialGraph from_edges(std::size_t vertex_count, std::vector<Edge> edges);
  std::vector<std::vector<std::uint32_t>> adjacency() const;

  friend bool operator==(const SimplicialGraph&, const SimplicialGraph&) = default;
};

/// Two vertices are adjacent iff one is the image of the other under a
/// generator; loops and multiplicities are forgotten.
SimplicialGraph simplicial(const LabeledSchreierGraph& g);

struct Components {
  std::vector<std::uint32_t> component_of;
  /// Each component's vertices ascending; components ordered by least vertex.
  std::vector<std::vector<std::uint32_t>> members;

  std::size_t count() const noexcept { return members.size(); }
};

Components connected_components(const SimplicialGraph& g);
Components connected_components(const LabeledSchreierGraph& g);

/// The component of Gamma_n containing a root vertex, with local indices.
struct PointedGraph {
  std::uint32_t alphabet_size = 2;
  std::size_t level = 0;
  SimplicialGraph graph;
  /// Level-n vertex index of every local vertex, ascending.
  std::vector<std::uint32_t> vertices;
  /// Local index of the root.
  std::uint32_t root = 0;

  Word vertex_word(std::uint32_t local) const { return word_at(vertices.at(local), alphabet_size, level); }
};

PointedGraph pointed_component(const LabeledSchreierGraph& g, WordView root);
/// Builds Gamma_n and roots it at the length-n prefix of `xi`.
PointedGraph pointed_component(const MealyAutomaton& aut, std::span<const StateId> generators,
                               const BoundaryPoint& xi, std::size_t level, BuildOptions options = {});

inline constexpr std::size_t kDualMooreMaxLevel = 4;

/// Cross-checks Gamma(Q, A^n) for the full state set against the dual Moore
/// diagram of the automaton acting on the alphabet A^n. The second route
/// computes every q(v) and q|_v by walking words, and the two labeled graphs
/// are compared up to isomorphism through a canonical form. Levels above
/// kDualMooreMaxLevel throw DomainError.
bool dual_moore_check(const MealyAutomaton& aut, std::size_t level);

}  // namespace selfsim
