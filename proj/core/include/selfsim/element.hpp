#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selfsim/automaton.hpp"
#include "selfsim/permutation.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

/// Exact representative of an automorphism of A^* given by a finite
/// automaton: the minimal automaton accessible from the element, with states
/// numbered breadth-first from the element (state 0) taking letters in
/// increasing order. Minimal accessible transducers are unique up to
/// isomorphism and the numbering fixes that isomorphism, so two elements are
/// equal iff their tables are equal iff they act identically on A^*.
///
/// States of the table are exactly the distinct sections of the element.
class CanonicalElement {
 public:
  static CanonicalElement identity(std::uint32_t alphabet_size);
  /// The element acted by state `root` of `table`.
  static CanonicalElement from_state(const TransitionTable& table, std::uint32_t root);
  static CanonicalElement from_state(const MealyAutomaton& aut, StateId q);

  std::uint32_t alphabet_size() const noexcept { return table_->alphabet_size; }
  /// Number of distinct sections, the element itself included.
  std::size_t size() const noexcept { return table_->state_count(); }
  const TransitionTable& table() const noexcept { return *table_; }

  bool is_identity() const noexcept;
  Permutation root_permutation() const;
  /// The section g|_v where v leads from the root to table state `node`.
  CanonicalElement node_element(std::uint32_t node) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const CanonicalElement& a, const CanonicalElement& b) noexcept;
  /// Orders by size, then lexicographically by output and section tables.
  friend std::strong_ordering operator<=>(const CanonicalElement& a, const CanonicalElement& b) noexcept;

 private:
  explicit CanonicalElement(std::shared_ptr<const TransitionTable> table) : table_(std::move(table)) {}
  std::shared_ptr<const TransitionTable> table_;
};

struct CanonicalElementHash {
  std::size_t operator()(const CanonicalElement& e) const noexcept { return e.hash(); }
};

/// g*h, acting as g(h(w)).
CanonicalElement multiply(const CanonicalElement& g, const CanonicalElement& h);
CanonicalElement inverse(const CanonicalElement& g);

Word element_act(const CanonicalElement& g, WordView w);
CanonicalElement element_section(const CanonicalElement& g, WordView v);

/// A formal word over generators. Written left to right, the rightmost
/// factor acts first.
class GroupWord {
 public:
  struct Factor {
    std::uint32_t generator = 0;
    int exponent = 1;  // +1 or -1

    friend bool operator==(const Factor&, const Factor&) = default;
  };

  GroupWord() = default;
  explicit GroupWord(std::vector<Factor> factors);

  /// Parses e.g. "c a^-1 c b^-1", "(c a^-1 c b^-1)^2" or "1" (the empty
  /// word). Names are resolved against `generator_names`; throws DomainError
  /// on unknown names or bad syntax.
  static GroupWord parse(std::string_view text, std::span<const std::string> generator_names);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t length() const noexcept { return factors_.size(); }

  /// Free reduction: removes adjacent g g^-1 pairs.
  GroupWord reduced() const;
  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);

  std::string to_string(std::span<const std::string> generator_names) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Factor> factors_;
};

/// The group generated by chosen states of an automaton.
class SelfSimilarGroup {
 public:
  SelfSimilarGroup(const MealyAutomaton& aut, std::vector<StateId> generators);

  std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<CanonicalElement>& generators() const noexcept { return generators_; }
  const CanonicalElement& generator(std::size_t i) const { return generators_.at(i); }
  const CanonicalElement& generator_inverse(std::size_t i) const { return inverses_.at(i); }
  CanonicalElement identity() const { return CanonicalElement::identity(alphabet_size_); }

  /// Folds the factors right to left through multiply(); equal actions give
  /// equal results.
  CanonicalElement canonicalize(const GroupWord& w) const;
  CanonicalElement canonicalize(std::string_view text) const;
  GroupWord parse_word(std::string_view text) const { return GroupWord::parse(text, names_); }

 private:
  std::uint32_t alphabet_size_;
  std::vector<std::string> names_;
  std::vector<CanonicalElement> generators_;
  std::vector<CanonicalElement> inverses_;
};

}  // namespace selfsim

template <>
struct std::hash<selfsim::CanonicalElement> : selfsim::CanonicalElementHash {};
