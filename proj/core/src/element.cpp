#include "selfsim/element.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

/// Minimal automaton accessible from `root`, numbered breadth-first.
TransitionTable canonical_table(const TransitionTable& t, std::uint32_t root) {
  const std::uint32_t k = t.alphabet_size;

  // Accessible part in BFS order.
  std::unordered_map<std::uint32_t, std::uint32_t> index;
  std::vector<std::uint32_t> order{root};
  index.emplace(root, 0);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Letter x = 0; x < k; ++x) {
      const std::uint32_t s = t.succ(order[head], x);
      if (index.try_emplace(s, static_cast<std::uint32_t>(order.size())).second) order.push_back(s);
    }

  TransitionTable sub;
  sub.alphabet_size = k;
  sub.output.reserve(order.size() * k);
  sub.next.reserve(order.size() * k);
  for (std::uint32_t q : order)
    for (Letter x = 0; x < k; ++x) {
      sub.output.push_back(t.out(q, x));
      sub.next.push_back(index[t.succ(q, x)]);
    }

  const std::vector<std::uint32_t> cls = refine_partition(sub);
  std::uint32_t classes = 0;
  for (std::uint32_t c : cls) classes = std::max(classes, c + 1);
  if (classes == order.size()) return sub;

  // Quotient, renumbered by BFS from the root's class.
  std::vector<std::uint32_t> representative(classes, UINT32_MAX);
  for (std::uint32_t q = 0; q < cls.size(); ++q)
    if (representative[cls[q]] == UINT32_MAX) representative[cls[q]] = q;
  std::vector<std::uint32_t> renumber(classes, UINT32_MAX);
  std::vector<std::uint32_t> class_order{cls[0]};
  renumber[cls[0]] = 0;
  for (std::size_t head = 0; head < class_order.size(); ++head)
    for (Letter x = 0; x < k; ++x) {
      const std::uint32_t c = cls[sub.succ(representative[class_order[head]], x)];
      if (renumber[c] == UINT32_MAX) {
        renumber[c] = static_cast<std::uint32_t>(class_order.size());
        class_order.push_back(c);
      }
    }

  TransitionTable result;
  result.alphabet_size = k;
  result.output.reserve(classes * k);
  result.next.reserve(classes * k);
  for (std::uint32_t c : class_order) {
    const std::uint32_t rep = representative[c];
    for (Letter x = 0; x < k; ++x) {
      result.output.push_back(sub.out(rep, x));
      result.next.push_back(renumber[cls[sub.succ(rep, x)]]);
    }
  }
  return result;
}

void check_letters(const CanonicalElement& g, WordView w) {
  for (Letter x : w)
    if (x >= g.alphabet_size())
      throw DomainError("letter " + std::to_string(x) + " outside alphabet of size " +
                        std::to_string(g.alphabet_size()));
}

}  // namespace

CanonicalElement CanonicalElement::identity(std::uint32_t alphabet_size) {
  if (alphabet_size == 0) throw DomainError("alphabet size must be positive");
  auto table = std::make_shared<TransitionTable>();
  table->alphabet_size = alphabet_size;
  for (Letter x = 0; x < alphabet_size; ++x) {
    table->output.push_back(x);
    table->next.push_back(0);
  }
  return CanonicalElement(std::move(table));
}

CanonicalElement CanonicalElement::from_state(const TransitionTable& table, std::uint32_t root) {
  if (root >= table.state_count()) throw DomainError("state index out of range");
  return CanonicalElement(std::make_shared<const TransitionTable>(canonical_table(table, root)));
}

CanonicalElement CanonicalElement::from_state(const MealyAutomaton& aut, StateId q) {
  return from_state(aut.table(), q.value);
}

bool CanonicalElement::is_identity() const noexcept {
  if (size() != 1) return false;
  for (Letter x = 0; x < alphabet_size(); ++x)
    if (table_->output[x] != x) return false;
  return true;
}

Permutation CanonicalElement::root_permutation() const {
  return Permutation(std::vector<Letter>(table_->output.begin(), table_->output.begin() + alphabet_size()));
}

CanonicalElement CanonicalElement::node_element(std::uint32_t node) const {
  if (node == 0) return *this;
  return from_state(*table_, node);
}

std::size_t CanonicalElement::hash() const noexcept {
  std::size_t h = table_->output.size();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  for (Letter x : table_->output) mix(x);
  for (std::uint32_t s : table_->next) mix(s);
  return h;
}

bool operator==(const CanonicalElement& a, const CanonicalElement& b) noexcept {
  return a.table_ == b.table_ || *a.table_ == *b.table_;
}

std::strong_ordering operator<=>(const CanonicalElement& a, const CanonicalElement& b) noexcept {
  if (auto c = a.alphabet_size() <=> b.alphabet_size(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.table_->output <=> b.table_->output; c != 0) return c;
  return a.table_->next <=> b.table_->next;
}

CanonicalElement multiply(const CanonicalElement& g, const CanonicalElement& h) {
  if (g.alphabet_size() != h.alphabet_size())
    throw DomainError("multiplying elements over different alphabets");
  if (g.is_identity()) return h;
  if (h.is_identity()) return g;

  const std::uint32_t k = g.alphabet_size();
  const TransitionTable& gt = g.table();
  const TransitionTable& ht = h.table();
  const std::uint64_t hs = h.size();

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::uint64_t> pairs{0};
  index.emplace(0, 0);
  TransitionTable product;
  product.alphabet_size = k;
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    const auto i = static_cast<std::uint32_t>(pairs[head] / hs);
    const auto j = static_cast<std::uint32_t>(pairs[head] % hs);
    for (Letter x = 0; x < k; ++x) {
      const Letter mid = ht.out(j, x);
      const std::uint64_t key = std::uint64_t(gt.succ(i, mid)) * hs + ht.succ(j, x);
      auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(pairs.size()));
      if (inserted) pairs.push_back(key);
      product.output.push_back(gt.out(i, mid));
      product.next.push_back(it->second);
    }
  }
  return CanonicalElement::from_state(product, 0);
}

CanonicalElement inverse(const CanonicalElement& g) {
  const std::uint32_t k = g.alphabet_size();
  const TransitionTable& t = g.table();
  TransitionTable inv;
  inv.alphabet_size = k;
  inv.output.resize(t.output.size());
  inv.next.resize(t.next.size());
  for (std::uint32_t q = 0; q < g.size(); ++q)
    for (Letter x = 0; x < k; ++x) {
      const Letter y = t.out(q, x);
      inv.output[std::size_t(q) * k + y] = x;
      inv.next[std::size_t(q) * k + y] = t.succ(q, x);
    }
  return CanonicalElement::from_state(inv, 0);
}

Word element_act(const CanonicalElement& g, WordView w) {
  check_letters(g, w);
  Word result;
  result.reserve(w.size());
  std::uint32_t q = 0;
  for (Letter x : w) {
    result.push_back(g.table().out(q, x));
    q = g.table().succ(q, x);
  }
  return result;
}

CanonicalElement element_section(const CanonicalElement& g, WordView v) {
  check_letters(g, v);
  std::uint32_t q = 0;
  for (Letter x : v) q = g.table().succ(q, x);
  return g.node_element(q);
}

GroupWord::GroupWord(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (const Factor& f : factors_)
    if (f.exponent != 1 && f.exponent != -1) throw DomainError("word factors must have exponent +1 or -1");
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  std::vector<GroupWord::Factor> parse() {
    auto factors = sequence();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return factors;
  }

 private:
  void skip() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*' || text_[pos_] == '.'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw DomainError("word \"" + std::string(text_) + "\", offset " + std::to_string(pos_) + ": " + message);
  }

  std::vector<GroupWord::Factor> sequence() {
    std::vector<GroupWord::Factor> factors;
    for (;;) {
      skip();
      if (pos_ == text_.size() || text_[pos_] == ')') return factors;
      auto term_factors = term();
      factors.insert(factors.end(), term_factors.begin(), term_factors.end());
    }
  }

  std::vector<GroupWord::Factor> term() {
    std::vector<GroupWord::Factor> base;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else if (c == '1' && (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      const std::string name(text_.substr(pos_, end - pos_));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown generator '" + name + "'");
      base.push_back({static_cast<std::uint32_t>(it - names_.begin()), 1});
      pos_ = end;
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }

    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == pos_ || end - pos_ > 4) fail("bad exponent");
      const int n = std::stoi(std::string(text_.substr(pos_, end - pos_)));
      pos_ = end;
      GroupWord unit(base);
      if (negative) unit = unit.inverse();
      std::vector<GroupWord::Factor> powered;
      for (int i = 0; i < n; ++i)
        powered.insert(powered.end(), unit.factors().begin(), unit.factors().end());
      return powered;
    }
    return base;
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord GroupWord::parse(std::string_view text, std::span<const std::string> generator_names) {
  return GroupWord(WordParser(text, generator_names).parse());
}

GroupWord GroupWord::reduced() const {
  std::vector<Factor> stack;
  for (const Factor& f : factors_) {
    if (!stack.empty() && stack.back().generator == f.generator && stack.back().exponent == -f.exponent)
      stack.pop_back();
    else
      stack.push_back(f);
  }
  return GroupWord(std::move(stack));
}

GroupWord GroupWord::inverse() const {
  std::vector<Factor> inv(factors_.rbegin(), factors_.rend());
  for (Factor& f : inv) f.exponent = -f.exponent;
  return GroupWord(std::move(inv));
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<GroupWord::Factor> factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return GroupWord(std::move(factors));
}

std::string GroupWord::to_string(std::span<const std::string> generator_names) const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const Factor& f : factors_) {
    if (!out.empty()) out += ' ';
    out += generator_names[f.generator];
    if (f.exponent < 0) out += "^-1";
  }
  return out;
}

SelfSimilarGroup::SelfSimilarGroup(const MealyAutomaton& aut, std::vector<StateId> generators)
    : alphabet_size_(aut.alphabet().size) {
  for (StateId g : generators) {
    names_.push_back(aut.name(g));
    generators_.push_back(CanonicalElement::from_state(aut, g));
    inverses_.push_back(inverse(generators_.back()));
  }
}

CanonicalElement SelfSimilarGroup::canonicalize(const GroupWord& w) const {
  CanonicalElement result = identity();
  const auto& factors = w.factors();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->generator >= generators_.size()) throw DomainError("word uses an unknown generator index");
    const CanonicalElement& f = it->exponent > 0 ? generators_[it->generator] : inverses_[it->generator];
    result = multiply(f, result);
  }
  return result;
}

CanonicalElement SelfSimilarGroup::canonicalize(std::string_view text) const {
  return canonicalize(parse_word(text));
}

}  // namespace selfsim
