#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "selfsim/nucleus.hpp"
#include "selfsim/recursion.hpp"

namespace selfsim {

/// Gamma_n is connected for every 1 <= n <= max_level.
struct ConnectedThrough {
  std::size_t max_level = 1;
};

/// Gamma_level has exactly `count` connected components.
struct ComponentCount {
  std::size_t level = 1;
  std::size_t count = 1;
};

/// Nucleus closure verdict under the given limits, optionally with |N|.
struct ContractionVerdict {
  bool contracting = true;
  NucleusLimits limits;
  std::optional<std::size_t> nucleus_size;
};

/// The group word fixes the vertex.
struct FixesVertex {
  std::string word;
  std::string vertex;
};

/// The section of `word` at `vertex` equals `section` as group elements.
struct SectionEquals {
  std::string word;
  std::string vertex;
  std::string section;
};

struct RecurrentAction {
  std::size_t max_word_length = 8;
};

/// No freely reduced nonempty word of length <= max_length is trivial.
struct FreeUpTo {
  std::size_t max_length = 4;
};

using PropertyCheck =
    std::variant<ConnectedThrough, ComponentCount, ContractionVerdict, FixesVertex, SectionEquals, RecurrentAction,
                 FreeUpTo>;

std::string describe(const PropertyCheck& check);

struct CatalogEntry {
  std::string key;
  std::string title;
  /// Where the recursion comes from, and any caveat about how it was read.
  std::string note;
  bool from_source = true;
  RecursionDocument document;
  std::vector<PropertyCheck> checks;
};

const std::vector<CatalogEntry>& catalog_list();
std::vector<std::string> catalog_keys();
/// Throws NotFoundError for unknown keys.
const CatalogEntry& catalog_get(std::string_view key);

struct CheckOutcome {
  std::string description;
  bool passed = false;
  std::string detail;
};

CheckOutcome run_check(const RecursionDocument& doc, const PropertyCheck& check);
std::vector<CheckOutcome> run_checks(const CatalogEntry& entry);

/// Freely reduced nonempty words of length <= max_length over the
/// generators that act trivially; empty when none exists.
std::vector<std::string> trivial_words(const RecursionDocument& doc, std::size_t max_length,
                                       std::size_t max_report = 8);

}  // namespace selfsim
