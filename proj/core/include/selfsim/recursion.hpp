#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selfsim/automaton.hpp"
#include "selfsim/permutation.hpp"

namespace selfsim {

/// One "NAME = PERM(SEC_0, ..., SEC_{k-1})" line. sections[x] names the
/// state acting below input letter x, so a = (0 1)(b, id) means a|_0 = b.
struct StateDefinition {
  std::string name;
  Permutation permutation;
  std::vector<std::string> sections;

  friend bool operator==(const StateDefinition&, const StateDefinition&) = default;
};

/// A validated wreath-recursion description.
///
/// Text form, one item per line:
///
///     # Basilica
///     title Basilica group
///     cite grigorchuk-zuk
///     alphabet 2
///     a = (0 1)(b, id)
///     b = id(a, id)
///     id = id(id, id)
///     gens a b
///
/// Permutations are "id" or disjoint cycles "(0 1)(2 3)" (letters separated
/// by spaces or commas); the permutation may be omitted, meaning id.
struct RecursionDocument {
  std::uint32_t alphabet_size = 2;
  std::vector<StateDefinition> states;
  std::vector<std::string> generators;
  std::optional<std::string> title;
  std::optional<std::string> citation;

  friend bool operator==(const RecursionDocument&, const RecursionDocument&) = default;
};

/// Parses and validates recursion text. Every failure is reported as a
/// ParseError carrying a 1-based line and column; arbitrary input never
/// causes anything else to be thrown.
RecursionDocument parse_recursion(std::string_view text);

/// Canonical text: metadata, "alphabet k", one state per line in declaration
/// order, then "gens ...". Cycles start at their least letter and are sorted.
std::string serialize(const RecursionDocument& doc);

struct RealizedAutomaton {
  MealyAutomaton automaton;
  std::vector<StateId> generators;
};

/// States keep declaration order. Throws DomainError if the document does
/// not validate.
RealizedAutomaton to_automaton(const RecursionDocument& doc);

/// Document describing `aut` with the given generators.
RecursionDocument to_document(const MealyAutomaton& aut, std::span<const StateId> generators);

}  // namespace selfsim
