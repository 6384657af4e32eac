#include "selfsim/permutation.hpp"

#include "selfsim/errors.hpp"

namespace selfsim {

Permutation::Permutation(std::vector<Letter> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Letter y : images_) {
    if (y >= images_.size() || seen[y])
      throw DomainError("image list is not a permutation of 0.." +
                        std::to_string(images_.size() ? images_.size() - 1 : 0));
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<Letter> images(k);
  for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<Letter>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t k, const std::vector<std::vector<Letter>>& cycles) {
  std::vector<Letter> images(k);
  for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<Letter>(i);
  std::vector<bool> used(k, false);
  for (const auto& cycle : cycles) {
    for (Letter x : cycle) {
      if (x >= k)
        throw DomainError("letter " + std::to_string(x) + " outside alphabet of size " +
                          std::to_string(k));
      if (used[x]) throw DomainError("letter " + std::to_string(x) + " repeated in cycles");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Letter> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Letter>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<Letter>> Permutation::cycles() const {
  std::vector<std::vector<Letter>> result;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == start) continue;
    std::vector<Letter> cycle;
    for (Letter x = static_cast<Letter>(start); !visited[x]; x = images_[x]) {
      visited[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "id";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DomainError("composing permutations of different degree");
  std::vector<Letter> images(q.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p.images_[q.images_[i]];
  return Permutation(std::move(images));
}

}  // namespace selfsim
