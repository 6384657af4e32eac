#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "selfsim/permutation.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

/// Flat transition/output table of an invertible Mealy automaton. Row q holds
/// q(x) at output[q*k + x] and q|_x at next[q*k + x].
struct TransitionTable {
  std::uint32_t alphabet_size = 0;
  std::vector<Letter> output;
  std::vector<std::uint32_t> next;

  std::size_t state_count() const noexcept {
    return alphabet_size == 0 ? 0 : output.size() / alphabet_size;
  }
  Letter out(std::uint32_t q, Letter x) const noexcept { return output[std::size_t(q) * alphabet_size + x]; }
  std::uint32_t succ(std::uint32_t q, Letter x) const noexcept { return next[std::size_t(q) * alphabet_size + x]; }

  friend bool operator==(const TransitionTable&, const TransitionTable&) = default;
};

/// Coarsest partition of the states of `table` into classes of states acting
/// identically on A^*. Moore-style refinement run to its fixed point; classes
/// are numbered in order of their first member.
std::vector<std::uint32_t> refine_partition(const TransitionTable& table);

struct StateId {
  std::uint32_t value = 0;

  friend bool operator==(StateId, StateId) = default;
  friend auto operator<=>(StateId, StateId) = default;
};

struct Minimization;

struct StateSpec {
  std::string name;
  Permutation output;
  std::vector<StateId> sections;
};

/// Immutable finite invertible Mealy automaton over {0, ..., k-1}.
///
/// A state acts on words by q(xv) = q(x) q|_x(v). Every state's output is a
/// permutation, so each state acts by a tree automorphism.
class MealyAutomaton {
 public:
  /// Validates closure (every section is a state), permutation degrees and
  /// name uniqueness; throws DomainError otherwise.
  MealyAutomaton(Alphabet alphabet, std::vector<StateSpec> states);

  Alphabet alphabet() const noexcept { return Alphabet{table_.alphabet_size}; }
  std::size_t state_count() const noexcept { return names_.size(); }
  const TransitionTable& table() const noexcept { return table_; }

  const std::string& name(StateId q) const;
  std::optional<StateId> find(std::string_view name) const;
  Permutation output(StateId q) const;
  StateId section(StateId q, Letter x) const;

  /// (q(x), q|_x).
  std::pair<Letter, StateId> act_letter(StateId q, Letter x) const;
  Word act_word(StateId q, WordView w) const;
  /// q|_v.
  StateId section_word(StateId q, WordView v) const;

  /// True once formal inverse states have been adjoined by invert().
  bool inverse_closed() const noexcept { return !inverse_of_.empty(); }
  /// The state acting as q^-1. Requires inverse_closed().
  StateId inverse(StateId q) const;

  std::vector<StateSpec> specs() const;

 private:
  friend MealyAutomaton invert(const MealyAutomaton& aut);
  friend Minimization minimize(const MealyAutomaton& aut);

  void check_state(StateId q) const;
  void check_letter(Letter x) const;

  TransitionTable table_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
  std::vector<std::uint32_t> inverse_of_;
};

/// Adjoins inverse states: state q^-1 has output sigma_q^-1 and sections
/// q^-1|_y = (q|_{sigma_q^-1(y)})^-1. States 0..m-1 keep their indices; q^-1
/// is m + q. An already inverse-closed automaton is returned unchanged.
MealyAutomaton invert(const MealyAutomaton& aut);

struct ProductAutomaton {
  MealyAutomaton automaton;
  /// Component tuple of every product state.
  std::vector<std::vector<StateId>> tuples;
  /// Product state of every requested root tuple, in request order.
  std::vector<StateId> roots;
};

/// Reachable part of the product automaton from the given tuples. A tuple
/// (q1, ..., qp) acts as q1(q2(...qp(w))), the rightmost factor first, with
/// sections (gh)|_v = g|_{h(v)} h|_v.
ProductAutomaton compose_reachable(const MealyAutomaton& aut,
                                   std::span<const std::vector<StateId>> roots);

/// All power-tuples of states (and whatever they reach). power = 0 throws
/// DomainError; more than `max_states` product states throws
/// ResourceLimitError.
ProductAutomaton product_automaton(const MealyAutomaton& aut, std::size_t power,
                                   std::size_t max_states = 1u << 20);

struct Minimization {
  MealyAutomaton automaton;
  /// Class (state of `automaton`) of every original state.
  std::vector<StateId> class_of;
};

/// Merges states that act identically on A^*. Each class keeps the name of
/// its first member.
Minimization minimize(const MealyAutomaton& aut);

}  // namespace selfsim
