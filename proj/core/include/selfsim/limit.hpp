#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selfsim/boundary_point.hpp"
#include "selfsim/element.hpp"
#include "selfsim/nucleus.hpp"
#include "selfsim/schreier.hpp"

namespace selfsim {

/// Moore diagram of a certified nucleus: node i is nucleus element i, with an
/// arrow i -> i|_x labeled x|i(x).
class NucleusAutomaton {
 public:
  /// Throws NucleusUnavailableError unless the verdict is Contracting.
  explicit NucleusAutomaton(const NucleusResult& nucleus);

  std::uint32_t alphabet_size() const noexcept { return table_.alphabet_size; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<CanonicalElement>& elements() const noexcept { return elements_; }
  const TransitionTable& table() const noexcept { return table_; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::optional<std::uint32_t> index_of(const CanonicalElement& g) const;

 private:
  std::vector<CanonicalElement> elements_;
  TransitionTable table_;
  std::uint32_t identity_ = 0;
};

/// An eventually periodic left-infinite path ... g_2 g_1 g_0 in the nucleus
/// Moore diagram, where g_i(x_i) = y_i and g_i|_{x_i} = g_{i-1}.
///
/// tail holds g_0 ... g_t and cycle holds g_{t+1} ... g_{t+L}; the path
/// continues with g_{t+L+j} = g_{t+j}, so g_{t+L} = g_t.
struct EquivalenceWitness {
  std::vector<CanonicalElement> tail;
  std::vector<CanonicalElement> cycle;

  const CanonicalElement& at(std::size_t i) const;
  /// Re-checks every arrow and label of the infinite path against p = ...x_2
  /// x_1 and q = ...y_2 y_1, and that each g_i lies in the nucleus.
  bool validate(const NucleusAutomaton& nucleus, const BoundaryPoint& p, const BoundaryPoint& q) const;
};

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
};

/// Decides exactly whether ...x_2 x_1 and ...y_2 y_1 are asymptotically
/// equivalent: S_0 = N, S_i = {g : g(x_i) = y_i, g|_{x_i} in S_{i-1}}, and the
/// points are equivalent iff no S_i is empty. The sequence of S_i is
/// eventually periodic, so the scan stops at the first repeated
/// (S_i, position phase).
EquivalenceResult asymptotic_equivalent(const NucleusAutomaton& nucleus, const BoundaryPoint& p,
                                        const BoundaryPoint& q);

/// Every boundary point equivalent to p, sorted. All such points are
/// eventually periodic. Throws ResourceLimitError past `max_points`.
std::vector<BoundaryPoint> equivalence_class(const NucleusAutomaton& nucleus, const BoundaryPoint& p,
                                             std::size_t max_points = 4096);

/// Vertices are all words of length at most `depth`, ordered by length and
/// then lexicographically. Vertical edges join xv and v, horizontal edges
/// join v and s(v) inside each level.
struct SelfSimilarityGraph {
  std::uint32_t alphabet_size = 2;
  std::size_t depth = 0;
  SimplicialGraph graph;
  /// First vertex of each level; level_offset[depth + 1] is the vertex count.
  std::vector<std::size_t> level_offset;

  std::size_t level_of(std::uint32_t v) const;
  Word vertex_word(std::uint32_t v) const;
  std::uint32_t vertex_index(WordView w) const;
  /// Horizontal edges of one level, reindexed within the level.
  SimplicialGraph horizontal_slice(std::size_t level) const;
};

SelfSimilarityGraph self_similarity_graph(std::span<const CanonicalElement> generators, std::size_t depth,
                                          BuildOptions options = {});

/// Pointed components (Gamma_n, xi_n) for n = 1 ... n_max.
std::vector<PointedGraph> gh_sequence(const MealyAutomaton& aut, std::span<const StateId> generators,
                                      const BoundaryPoint& xi, std::size_t n_max, BuildOptions options = {});

}  // namespace selfsim
