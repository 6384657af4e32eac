#include "selfsim/word.hpp"

#include <limits>

#include "selfsim/errors.hpp"

namespace selfsim {

Word parse_word(std::string_view text) {
  Word word;
  word.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      throw DomainError("invalid letter '" + std::string(1, c) + "' in word");
    word.push_back(static_cast<Letter>(c - '0'));
  }
  return word;
}

std::string format_word(WordView word) {
  std::string out;
  out.reserve(word.size());
  for (Letter x : word) {
    if (x < 10)
      out.push_back(static_cast<char>('0' + x));
    else
      out += "[" + std::to_string(x) + "]";
  }
  return out;
}

std::uint64_t checked_power(std::uint64_t k, std::uint64_t n) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (k != 0 && result > std::numeric_limits<std::uint64_t>::max() / k) return 0;
    result *= k;
  }
  return result;
}

std::uint64_t word_index(WordView word, std::uint32_t k) noexcept {
  std::uint64_t index = 0;
  for (Letter x : word) index = index * k + x;
  return index;
}

Word word_at(std::uint64_t index, std::uint32_t k, std::size_t n) {
  Word word(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    word[i] = static_cast<Letter>(index % k);
    index /= k;
  }
  return word;
}

}  // namespace selfsim
