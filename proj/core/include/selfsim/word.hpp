#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selfsim {

/// Letters are normalized to 0..k-1.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

struct Alphabet {
  std::uint32_t size = 2;

  bool contains(Letter x) const noexcept { return x < size; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Parses a digit string such as "0110". Letters must be single digits.
Word parse_word(std::string_view text);

/// Inverse of parse_word for alphabets of size at most 10; larger letters are
/// written in brackets, e.g. "[12]".
std::string format_word(WordView word);

/// k^n, or 0 when the value does not fit in 64 bits.
std::uint64_t checked_power(std::uint64_t k, std::uint64_t n) noexcept;

/// Index of a word in lexicographic order of A^n (leftmost letter most
/// significant).
std::uint64_t word_index(WordView word, std::uint32_t k) noexcept;

/// The word of length n with the given lexicographic index.
Word word_at(std::uint64_t index, std::uint32_t k, std::size_t n);

}  // namespace selfsim
