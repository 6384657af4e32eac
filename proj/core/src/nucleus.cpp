#include "selfsim/nucleus.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

/// States of `t` reachable from some cycle: exactly the sections g|_v that
/// occur for arbitrarily long v.
std::vector<std::uint32_t> recurring_states(const TransitionTable& t) {
  const std::uint32_t n = static_cast<std::uint32_t>(t.state_count());
  const std::uint32_t k = t.alphabet_size;

  // Tarjan SCC, iterative.
  std::vector<std::int64_t> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false), cyclic(n, false);
  std::vector<std::uint32_t> stack;
  std::int64_t counter = 0;
  struct Frame {
    std::uint32_t v;
    Letter next_letter;
  };
  for (std::uint32_t start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_letter < k) {
        const std::uint32_t w = t.succ(f.v, f.next_letter++);
        if (w == f.v) cyclic[w] = true;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::uint32_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> component;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        if (component.size() > 1)
          for (std::uint32_t u : component) cyclic[u] = true;
      }
    }
  }

  std::vector<bool> marked(n, false);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v)
    if (cyclic[v]) {
      marked[v] = true;
      queue.push_back(v);
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Letter x = 0; x < k; ++x) {
      const std::uint32_t w = t.succ(queue[head], x);
      if (!marked[w]) {
        marked[w] = true;
        queue.push_back(w);
      }
    }
  std::vector<std::uint32_t> result;
  for (std::uint32_t v = 0; v < n; ++v)
    if (marked[v]) result.push_back(v);
  return result;
}

std::vector<CanonicalElement> symmetric_generating_set(std::span<const CanonicalElement> generators) {
  std::set<CanonicalElement> base;
  base.insert(CanonicalElement::identity(generators.front().alphabet_size()));
  for (const auto& g : generators) {
    base.insert(g);
    base.insert(inverse(g));
  }
  return {base.begin(), base.end()};
}

/// Smallest d >= 1 such that every state at depth exactly d of `p` is in the
/// nucleus.
std::size_t certifying_depth(const CanonicalElement& p,
                             const std::unordered_set<CanonicalElement, CanonicalElementHash>& nucleus) {
  const TransitionTable& t = p.table();
  const std::uint32_t n = static_cast<std::uint32_t>(p.size());
  std::vector<int> member(n, -1);
  auto in_nucleus = [&](std::uint32_t v) {
    if (member[v] < 0) member[v] = nucleus.contains(p.node_element(v)) ? 1 : 0;
    return member[v] == 1;
  };

  std::vector<bool> level(n, false), next_level(n, false);
  level[0] = true;
  for (std::size_t depth = 1;; ++depth) {
    std::fill(next_level.begin(), next_level.end(), false);
    for (std::uint32_t v = 0; v < n; ++v)
      if (level[v])
        for (Letter x = 0; x < t.alphabet_size; ++x) next_level[t.succ(v, x)] = true;
    level.swap(next_level);
    bool ok = true;
    for (std::uint32_t v = 0; v < n && ok; ++v)
      if (level[v] && !in_nucleus(v)) ok = false;
    if (ok) return depth;
    // Paths longer than n pass through a cycle, and recurring states are in
    // the nucleus, so this cannot run past depth n.
    if (depth > n) return depth;
  }
}

}  // namespace

bool NucleusResult::contains(const CanonicalElement& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

std::size_t NucleusResult::index_of(const CanonicalElement& g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || !(*it == g)) throw NotFoundError("element is not in the nucleus");
  return static_cast<std::size_t>(it - elements.begin());
}

NucleusResult compute_nucleus(std::span<const CanonicalElement> generators, NucleusLimits limits) {
  if (generators.empty()) throw DomainError("nucleus needs at least one generator");
  if (limits.max_elements == 0 || limits.max_depth == 0) throw DomainError("nucleus bounds must be positive");

  const std::vector<CanonicalElement> base = symmetric_generating_set(generators);
  std::unordered_set<CanonicalElement, CanonicalElementHash> nucleus;
  std::unordered_set<CanonicalElement, CanonicalElementHash> in_pool;
  std::vector<CanonicalElement> pool;

  auto pool_add = [&](const CanonicalElement& g) {
    if (in_pool.insert(g).second) pool.push_back(g);
  };
  auto absorb = [&](const CanonicalElement& g) {
    for (std::uint32_t v : recurring_states(g.table())) {
      CanonicalElement h = g.node_element(v);
      if (nucleus.insert(h).second) pool_add(h);
    }
  };

  auto exceeded = [&](NucleusResult::Bound bound, std::size_t limit) {
    NucleusResult r;
    r.verdict = NucleusResult::Verdict::BoundExceeded;
    r.elements.assign(nucleus.begin(), nucleus.end());
    std::sort(r.elements.begin(), r.elements.end());
    r.exceeded = bound;
    r.bound = limit;
    r.witness_count = nucleus.size();
    return r;
  };

  for (const auto& g : base) pool_add(g);
  for (const auto& g : base) absorb(g);
  if (nucleus.size() > limits.max_elements) return exceeded(NucleusResult::Bound::Elements, limits.max_elements);

  // Products with the base set first, which is cheap and makes the closure of
  // a non-contracting group grow quickly. Once that saturates, a semi-naive
  // pass over all pairs catches the rest; anything new sends us back.
  // Pending elements are taken smallest first.
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t queued = 0;
  std::size_t pairs_done = 0;
  while (pairs_done < pool.size()) {
    for (;;) {
      for (; queued < pool.size(); ++queued) pending.emplace(pool[queued].size(), queued);
      if (pending.empty()) break;
      const CanonicalElement x = pool[pending.begin()->second];
      pending.erase(pending.begin());
      for (const auto& b : base) {
        absorb(multiply(x, b));
        absorb(multiply(b, x));
        if (nucleus.size() > limits.max_elements)
          return exceeded(NucleusResult::Bound::Elements, limits.max_elements);
      }
    }
    const std::size_t end = pool.size();
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = (i < pairs_done ? pairs_done : 0); j < end; ++j) {
        absorb(multiply(pool[i], pool[j]));
        if (nucleus.size() > limits.max_elements)
          return exceeded(NucleusResult::Bound::Elements, limits.max_elements);
      }
    pairs_done = end;
  }

  std::size_t depth = 1;
  for (const auto& x : pool)
    for (const auto& y : pool) {
      depth = std::max(depth, certifying_depth(multiply(x, y), nucleus));
      if (depth > limits.max_depth) return exceeded(NucleusResult::Bound::Depth, limits.max_depth);
    }

  NucleusResult result;
  result.verdict = NucleusResult::Verdict::Contracting;
  result.elements.assign(nucleus.begin(), nucleus.end());
  std::sort(result.elements.begin(), result.elements.end());
  result.depth = depth;
  result.witness_count = nucleus.size();
  return result;
}

std::string verify_nucleus_certificate(std::span<const CanonicalElement> generators,
                                       const NucleusResult& result) {
  if (!result.contracting()) return "verdict is not Contracting";
  if (generators.empty()) return "no generators";
  const std::uint32_t k = generators.front().alphabet_size();
  if (!result.contains(CanonicalElement::identity(k))) return "identity missing from nucleus";

  for (const auto& n : result.elements) {
    if (!result.contains(inverse(n))) return "nucleus not closed under inverse";
    for (Letter x = 0; x < k; ++x) {
      const Letter letter[] = {x};
      if (!result.contains(element_section(n, letter))) return "nucleus not closed under sections";
    }
  }

  std::vector<CanonicalElement> pool = symmetric_generating_set(generators);
  pool.insert(pool.end(), result.elements.begin(), result.elements.end());
  const std::uint64_t words = checked_power(k, result.depth);
  if (words == 0) return "depth too large to enumerate";
  for (const auto& x : pool)
    for (const auto& y : pool)
      for (std::uint64_t i = 0; i < words; ++i) {
        const Word v = word_at(i, k, result.depth);
        const Word yv = element_act(y, v);
        const CanonicalElement s = multiply(element_section(x, yv), element_section(y, v));
        if (!result.contains(s)) return "a depth-k section of a product escapes the nucleus";
      }
  return {};
}

RecurrenceResult is_recurrent(std::span<const CanonicalElement> generators, std::size_t max_word_length,
                              std::size_t max_ball, std::size_t max_element_size) {
  if (generators.empty()) throw DomainError("recurrence test needs at least one generator");
  const std::uint32_t k = generators.front().alphabet_size();

  std::vector<CanonicalElement> symmetric;
  for (const auto& g : generators) {
    symmetric.push_back(g);
    symmetric.push_back(inverse(g));
  }

  // Transversal t_y with t_y(0) = y.
  std::vector<std::optional<CanonicalElement>> transversal(k);
  transversal[0] = CanonicalElement::identity(k);
  std::vector<Letter> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Letter y = queue[head];
    for (const auto& s : symmetric) {
      const Letter z = s.table().out(0, y);
      if (!transversal[z]) {
        transversal[z] = multiply(s, *transversal[y]);
        queue.push_back(z);
      }
    }
  }
  if (queue.size() != k) return {RecurrenceResult::Verdict::NotRecurrent, max_word_length};

  // Sections at 0 of the Schreier generators t_{s(y)}^-1 s t_y of Stab(0).
  const Letter zero[] = {0};
  std::set<CanonicalElement> images;
  for (Letter y = 0; y < k; ++y)
    for (const auto& s : generators) {
      const Letter z = s.table().out(0, y);
      const CanonicalElement h = multiply(inverse(*transversal[z]), multiply(s, *transversal[y]));
      const CanonicalElement image = element_section(h, zero);
      images.insert(image);
      images.insert(inverse(image));
    }

  std::set<CanonicalElement> targets(generators.begin(), generators.end());
  targets.erase(CanonicalElement::identity(k));
  std::unordered_set<CanonicalElement, CanonicalElementHash> ball{CanonicalElement::identity(k)};
  std::vector<CanonicalElement> frontier{CanonicalElement::identity(k)};
  auto found_all = [&] {
    for (const auto& t : targets)
      if (!ball.contains(t)) return false;
    return true;
  };
  if (found_all()) return {RecurrenceResult::Verdict::Recurrent, max_word_length};
  bool truncated = false;
  for (std::size_t length = 1; length <= max_word_length; ++length) {
    std::vector<CanonicalElement> next;
    for (const auto& g : frontier)
      for (const auto& s : images) {
        CanonicalElement h = multiply(s, g);
        if (!ball.insert(h).second) continue;
        if (ball.size() > max_ball) return {RecurrenceResult::Verdict::Inconclusive, max_word_length};
        // Oversized elements are kept as ball members but not expanded.
        if (h.size() > max_element_size)
          truncated = true;
        else
          next.push_back(std::move(h));
      }
    if (found_all()) return {RecurrenceResult::Verdict::Recurrent, max_word_length};
    // The image subgroup was enumerated completely without reaching every
    // generator.
    if (next.empty() && !truncated) return {RecurrenceResult::Verdict::NotRecurrent, max_word_length};
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return {RecurrenceResult::Verdict::Inconclusive, max_word_length};
}

}  // namespace selfsim
