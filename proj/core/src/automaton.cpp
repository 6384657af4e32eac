#include "selfsim/automaton.hpp"

#include <deque>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using SignatureMap = std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash>;

}  // namespace

std::vector<std::uint32_t> refine_partition(const TransitionTable& table) {
  const std::size_t n = table.state_count();
  const std::uint32_t k = table.alphabet_size;
  std::vector<std::uint32_t> cls(n);
  if (n == 0) return cls;

  SignatureMap ids;
  std::vector<std::uint32_t> sig(k);
  for (std::size_t q = 0; q < n; ++q) {
    for (Letter x = 0; x < k; ++x) sig[x] = table.out(static_cast<std::uint32_t>(q), x);
    auto [it, inserted] = ids.try_emplace(sig, static_cast<std::uint32_t>(ids.size()));
    cls[q] = it->second;
  }
  std::size_t count = ids.size();

  std::vector<std::uint32_t> refined(n);
  sig.resize(k + 1);
  for (;;) {
    ids.clear();
    for (std::size_t q = 0; q < n; ++q) {
      sig[0] = cls[q];
      for (Letter x = 0; x < k; ++x) sig[x + 1] = cls[table.succ(static_cast<std::uint32_t>(q), x)];
      auto [it, inserted] = ids.try_emplace(sig, static_cast<std::uint32_t>(ids.size()));
      refined[q] = it->second;
    }
    cls.swap(refined);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return cls;
}

MealyAutomaton::MealyAutomaton(Alphabet alphabet, std::vector<StateSpec> states) {
  if (alphabet.size == 0) throw DomainError("alphabet size must be positive");
  const std::uint32_t k = alphabet.size;
  table_.alphabet_size = k;
  table_.output.reserve(states.size() * k);
  table_.next.reserve(states.size() * k);
  names_.reserve(states.size());
  for (std::size_t q = 0; q < states.size(); ++q) {
    const StateSpec& spec = states[q];
    if (spec.output.degree() != k)
      throw DomainError("state '" + spec.name + "' has a permutation of degree " +
                        std::to_string(spec.output.degree()) + ", expected " + std::to_string(k));
    if (spec.sections.size() != k)
      throw DomainError("state '" + spec.name + "' has " + std::to_string(spec.sections.size()) +
                        " sections, expected " + std::to_string(k));
    for (Letter x = 0; x < k; ++x) {
      if (spec.sections[x].value >= states.size())
        throw DomainError("state '" + spec.name + "' has a section outside the automaton");
      table_.output.push_back(spec.output(x));
      table_.next.push_back(spec.sections[x].value);
    }
    if (!by_name_.emplace(spec.name, static_cast<std::uint32_t>(q)).second)
      throw DomainError("duplicate state name '" + spec.name + "'");
    names_.push_back(spec.name);
  }
}

void MealyAutomaton::check_state(StateId q) const {
  if (q.value >= names_.size())
    throw DomainError("state index " + std::to_string(q.value) + " out of range");
}

void MealyAutomaton::check_letter(Letter x) const {
  if (x >= table_.alphabet_size)
    throw DomainError("letter " + std::to_string(x) + " outside alphabet of size " +
                      std::to_string(table_.alphabet_size));
}

const std::string& MealyAutomaton::name(StateId q) const {
  check_state(q);
  return names_[q.value];
}

std::optional<StateId> MealyAutomaton::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return StateId{it->second};
}

Permutation MealyAutomaton::output(StateId q) const {
  check_state(q);
  const auto begin = table_.output.begin() + std::ptrdiff_t(q.value) * table_.alphabet_size;
  return Permutation(std::vector<Letter>(begin, begin + table_.alphabet_size));
}

StateId MealyAutomaton::section(StateId q, Letter x) const {
  check_state(q);
  check_letter(x);
  return StateId{table_.succ(q.value, x)};
}

std::pair<Letter, StateId> MealyAutomaton::act_letter(StateId q, Letter x) const {
  check_state(q);
  check_letter(x);
  return {table_.out(q.value, x), StateId{table_.succ(q.value, x)}};
}

Word MealyAutomaton::act_word(StateId q, WordView w) const {
  check_state(q);
  Word result;
  result.reserve(w.size());
  std::uint32_t state = q.value;
  for (Letter x : w) {
    check_letter(x);
    result.push_back(table_.out(state, x));
    state = table_.succ(state, x);
  }
  return result;
}

StateId MealyAutomaton::section_word(StateId q, WordView v) const {
  check_state(q);
  std::uint32_t state = q.value;
  for (Letter x : v) {
    check_letter(x);
    state = table_.succ(state, x);
  }
  return StateId{state};
}

StateId MealyAutomaton::inverse(StateId q) const {
  check_state(q);
  if (!inverse_closed()) throw DomainError("automaton has no inverse states; call invert() first");
  return StateId{inverse_of_[q.value]};
}

std::vector<StateSpec> MealyAutomaton::specs() const {
  std::vector<StateSpec> result;
  result.reserve(state_count());
  for (std::uint32_t q = 0; q < state_count(); ++q) {
    std::vector<StateId> sections(table_.alphabet_size);
    for (Letter x = 0; x < table_.alphabet_size; ++x) sections[x] = StateId{table_.succ(q, x)};
    result.push_back({names_[q], output(StateId{q}), std::move(sections)});
  }
  return result;
}

MealyAutomaton invert(const MealyAutomaton& aut) {
  if (aut.inverse_closed()) return aut;
  const std::uint32_t m = static_cast<std::uint32_t>(aut.state_count());
  const std::uint32_t k = aut.alphabet().size;
  std::vector<StateSpec> states = aut.specs();
  states.reserve(2 * m);
  for (std::uint32_t q = 0; q < m; ++q) {
    Permutation inv = states[q].output.inverse();
    std::vector<StateId> sections(k);
    for (Letter y = 0; y < k; ++y) sections[y] = StateId{m + aut.table().succ(q, inv(y))};
    states.push_back({states[q].name + "^-1", std::move(inv), std::move(sections)});
  }
  MealyAutomaton result(aut.alphabet(), std::move(states));
  result.inverse_of_.resize(2 * m);
  for (std::uint32_t q = 0; q < m; ++q) {
    result.inverse_of_[q] = m + q;
    result.inverse_of_[m + q] = q;
  }
  return result;
}

ProductAutomaton compose_reachable(const MealyAutomaton& aut,
                                   std::span<const std::vector<StateId>> roots) {
  const std::uint32_t k = aut.alphabet().size;
  const TransitionTable& t = aut.table();

  SignatureMap ids;
  std::vector<std::vector<std::uint32_t>> tuples;
  std::deque<std::uint32_t> queue;
  auto intern = [&](std::vector<std::uint32_t> tuple) {
    auto [it, inserted] = ids.try_emplace(tuple, static_cast<std::uint32_t>(tuples.size()));
    if (inserted) {
      tuples.push_back(std::move(tuple));
      queue.push_back(it->second);
    }
    return it->second;
  };

  ProductAutomaton result{MealyAutomaton(aut.alphabet(), {}), {}, {}};
  std::vector<std::uint32_t> root_ids;
  for (const auto& root : roots) {
    if (root.empty()) throw DomainError("product tuple must be nonempty");
    std::vector<std::uint32_t> tuple;
    for (StateId q : root) {
      if (q.value >= aut.state_count()) throw DomainError("product tuple names an unknown state");
      tuple.push_back(q.value);
    }
    root_ids.push_back(intern(std::move(tuple)));
  }

  // Rows are filled in discovery order, which is also the id order.
  std::vector<Letter> output;
  std::vector<std::uint32_t> next;
  std::vector<std::uint32_t> successor;
  while (!queue.empty()) {
    const std::uint32_t id = queue.front();
    queue.pop_front();
    const std::size_t p = tuples[id].size();
    for (Letter x = 0; x < k; ++x) {
      successor.assign(p, 0);
      Letter letter = x;
      for (std::size_t i = p; i-- > 0;) {
        const std::uint32_t q = tuples[id][i];
        successor[i] = t.succ(q, letter);
        letter = t.out(q, letter);
      }
      output.push_back(letter);
      next.push_back(intern(successor));
    }
  }

  std::vector<StateSpec> states;
  states.reserve(tuples.size());
  for (std::size_t id = 0; id < tuples.size(); ++id) {
    std::string name;
    std::vector<StateId> sections(k);
    for (std::size_t i = 0; i < tuples[id].size(); ++i) {
      if (i) name += '*';
      name += aut.name(StateId{tuples[id][i]});
    }
    for (Letter x = 0; x < k; ++x) sections[x] = StateId{next[id * k + x]};
    std::vector<Letter> images(output.begin() + std::ptrdiff_t(id * k),
                               output.begin() + std::ptrdiff_t((id + 1) * k));
    states.push_back({std::move(name), Permutation(std::move(images)), std::move(sections)});
  }

  result.automaton = MealyAutomaton(aut.alphabet(), std::move(states));
  result.tuples.reserve(tuples.size());
  for (auto& tuple : tuples) {
    std::vector<StateId> refs;
    for (std::uint32_t q : tuple) refs.push_back(StateId{q});
    result.tuples.push_back(std::move(refs));
  }
  for (std::uint32_t id : root_ids) result.roots.push_back(StateId{id});
  return result;
}

ProductAutomaton product_automaton(const MealyAutomaton& aut, std::size_t power,
                                   std::size_t max_states) {
  if (power == 0) throw DomainError("product power must be at least 1");
  const std::uint64_t count = checked_power(aut.state_count(), power);
  if (count == 0 && aut.state_count() != 0)
    throw ResourceLimitError("product automaton too large");
  if (count > max_states)
    throw ResourceLimitError("product automaton would have " + std::to_string(count) +
                             " states (limit " + std::to_string(max_states) + ")");
  std::vector<std::vector<StateId>> roots;
  roots.reserve(count);
  std::vector<StateId> tuple(power, StateId{0});
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t rest = i;
    for (std::size_t j = power; j-- > 0;) {
      tuple[j] = StateId{static_cast<std::uint32_t>(rest % aut.state_count())};
      rest /= aut.state_count();
    }
    roots.push_back(tuple);
  }
  return compose_reachable(aut, roots);
}

Minimization minimize(const MealyAutomaton& aut) {
  const std::vector<std::uint32_t> cls = refine_partition(aut.table());
  const std::uint32_t k = aut.alphabet().size;

  std::vector<std::uint32_t> representative;
  for (std::uint32_t q = 0; q < cls.size(); ++q)
    if (cls[q] == representative.size()) representative.push_back(q);

  std::vector<StateSpec> states;
  states.reserve(representative.size());
  for (std::uint32_t rep : representative) {
    std::vector<StateId> sections(k);
    for (Letter x = 0; x < k; ++x) sections[x] = StateId{cls[aut.table().succ(rep, x)]};
    states.push_back({aut.names_[rep], aut.output(StateId{rep}), std::move(sections)});
  }

  Minimization result{MealyAutomaton(aut.alphabet(), std::move(states)), {}};
  result.class_of.reserve(cls.size());
  for (std::uint32_t c : cls) result.class_of.push_back(StateId{c});
  if (aut.inverse_closed()) {
    result.automaton.inverse_of_.resize(representative.size());
    for (std::size_t c = 0; c < representative.size(); ++c)
      result.automaton.inverse_of_[c] = cls[aut.inverse_of_[representative[c]]];
  }
  return result;
}

}  // namespace selfsim
