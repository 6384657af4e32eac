#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "selfsim/element.hpp"

namespace selfsim {

struct NucleusLimits {
  std::size_t max_elements = 10000;
  std::size_t max_depth = 20;
};

struct NucleusResult {
  enum class Verdict { Contracting, BoundExceeded };
  enum class Bound { None, Elements, Depth };

  Verdict verdict = Verdict::BoundExceeded;
  /// The nucleus when contracting (ordered by CanonicalElement order);
  /// otherwise the partial closure at the moment the bound tripped.
  std::vector<CanonicalElement> elements;
  /// Smallest k >= 1 with (S u N)^2 |_{A^k} contained in N (contracting only).
  std::size_t depth = 0;
  Bound exceeded = Bound::None;
  std::size_t bound = 0;
  std::size_t witness_count = 0;

  bool contracting() const noexcept { return verdict == Verdict::Contracting; }
  bool contains(const CanonicalElement& g) const;
  std::size_t index_of(const CanonicalElement& g) const;  // throws NotFoundError
};

/// Fixed-point closure for the nucleus of the group generated by `generators`.
///
/// Starting from S = generators u inverses u {1}, N collects every section of
/// some element that recurs along a cycle of its automaton (g|_v for
/// arbitrarily long v); then all products of pairs from S u N are fed back
/// until nothing new appears. The verdict is Contracting once stable with a
/// certifying depth k <= max_depth, and BoundExceeded when |N| passes
/// max_elements or k would exceed max_depth.
NucleusResult compute_nucleus(std::span<const CanonicalElement> generators, NucleusLimits limits = {});

/// Re-checks a Contracting verdict by direct enumeration: 1 in N, N closed
/// under inverses and one-letter sections, and for every x, y in S u N and
/// every v in A^k, (xy)|_v = x|_{y(v)} y|_v lies in N. Returns a description of
/// the first violation, or an empty string.
std::string verify_nucleus_certificate(std::span<const CanonicalElement> generators,
                                       const NucleusResult& result);

struct RecurrenceResult {
  enum class Verdict { Recurrent, NotRecurrent, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  /// Stabilizer-word length bound used (meaningful for Inconclusive).
  std::size_t bound = 0;
};

/// Bounded self-replication test at letter 0: level-1 transitivity, then the
/// sections at 0 of Schreier generators of Stab(0) are multiplied out up to
/// `max_word_length` looking for every generator. Products with more than
/// `max_element_size` states are not multiplied further, and more than
/// `max_ball` distinct products give Inconclusive.
RecurrenceResult is_recurrent(std::span<const CanonicalElement> generators, std::size_t max_word_length = 8,
                              std::size_t max_ball = 20000, std::size_t max_element_size = 64);

}  // namespace selfsim
