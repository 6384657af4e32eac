#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "selfsim/word.hpp"

namespace selfsim {

/// A bijection of {0, ..., k-1}, stored as its image list.
class Permutation {
 public:
  /// Throws DomainError unless `images` is a bijection of 0..size-1.
  explicit Permutation(std::vector<Letter> images);

  static Permutation identity(std::size_t k);

  /// Builds a permutation from disjoint cycles. Repeated letters or letters
  /// outside 0..k-1 throw DomainError. One-letter cycles are allowed.
  static Permutation from_cycles(std::size_t k, const std::vector<std::vector<Letter>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Letter operator()(Letter x) const { return images_.at(x); }
  const std::vector<Letter>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Non-trivial cycles, each starting at its least letter, ordered by that
  /// letter.
  std::vector<std::vector<Letter>> cycles() const;

  /// "id" or concatenated cycles, e.g. "(0 1)(2 3)".
  std::string to_string() const;

  /// Composition as maps: (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Letter> images_;
};

}  // namespace selfsim
