#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "selfsim/word.hpp"

namespace selfsim {

/// An eventually periodic left-infinite word ...(period)(period)(preperiod).
///
/// Both parts are stored as written, left to right. The rightmost letter is
/// the first tree level: letter(1) is the last letter of the preperiod (or of
/// the period when the preperiod is empty), and the length-n prefix of the
/// point is the level-n vertex letter(1) letter(2) ... letter(n).
///
/// Text form "PERIOD^w PREPERIOD", e.g. "1^w" for ...111 and "10^w 0" for
/// ...1010 0. Letters are single digits.
class BoundaryPoint {
 public:
  /// Normalizes to the minimal period and the shortest preperiod. Throws
  /// DomainError if the period is empty.
  BoundaryPoint(Word period, Word preperiod = {});

  static BoundaryPoint parse(std::string_view text);

  const Word& period() const noexcept { return period_; }
  const Word& preperiod() const noexcept { return preperiod_; }

  /// Letter at 1-based depth i, counted from the right.
  Letter letter(std::size_t i) const;
  /// letter(1) ... letter(n), a vertex of level n.
  Word prefix(std::size_t n) const;
  Letter max_letter() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  Word preperiod_;
  Word period_;
};

}  // namespace selfsim
