#include "selfsim/boundary_point.hpp"

#include <algorithm>
#include <cctype>

#include "selfsim/errors.hpp"

namespace selfsim {

BoundaryPoint::BoundaryPoint(Word period, Word preperiod)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw DomainError("boundary point needs a nonempty period");

  const std::size_t p = period_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = period_[i] == period_[i - d];
    if (repeats) {
      period_.resize(d);
      break;
    }
  }

  // ...(p1..pP)(p1..pP) p1 r2.. == ...(p2..pP p1)(p2..pP p1) r2..
  while (!preperiod_.empty() && preperiod_.front() == period_.front()) {
    std::rotate(period_.begin(), period_.begin() + 1, period_.end());
    preperiod_.erase(preperiod_.begin());
  }
}

BoundaryPoint BoundaryPoint::parse(std::string_view text) {
  const auto marker = text.find("^w");
  if (marker == std::string_view::npos)
    throw DomainError("boundary point \"" + std::string(text) + "\" must have the form PERIOD^w [PREPERIOD]");
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view period = strip(text.substr(0, marker));
  const std::string_view preperiod = strip(text.substr(marker + 2));
  if (period.empty()) throw DomainError("boundary point \"" + std::string(text) + "\" has an empty period");
  return BoundaryPoint(parse_word(period), parse_word(preperiod));
}

Letter BoundaryPoint::letter(std::size_t i) const {
  if (i == 0) throw DomainError("boundary point letters are indexed from 1");
  if (i <= preperiod_.size()) return preperiod_[preperiod_.size() - i];
  const std::size_t j = (i - preperiod_.size() - 1) % period_.size();
  return period_[period_.size() - 1 - j];
}

Word BoundaryPoint::prefix(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 1; i <= n; ++i) w[i - 1] = letter(i);
  return w;
}

Letter BoundaryPoint::max_letter() const noexcept {
  Letter m = *std::max_element(period_.begin(), period_.end());
  for (Letter x : preperiod_) m = std::max(m, x);
  return m;
}

std::string BoundaryPoint::to_string() const {
  std::string out = format_word(period_) + "^w";
  if (!preperiod_.empty()) out += " " + format_word(preperiod_);
  return out;
}

}  // namespace selfsim
