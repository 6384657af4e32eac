#include "selfsim/limit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "selfsim/errors.hpp"

namespace selfsim {

NucleusAutomaton::NucleusAutomaton(const NucleusResult& nucleus) {
  if (!nucleus.contracting())
    throw NucleusUnavailableError("no certified nucleus: the closure stopped at its " +
                                  std::string(nucleus.exceeded == NucleusResult::Bound::Depth ? "depth" : "size") +
                                  " bound of " + std::to_string(nucleus.bound));
  if (nucleus.elements.empty()) throw NucleusUnavailableError("empty nucleus");
  elements_ = nucleus.elements;
  const std::uint32_t k = elements_.front().alphabet_size();
  table_.alphabet_size = k;
  table_.output.resize(elements_.size() * k);
  table_.next.resize(elements_.size() * k);
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    const CanonicalElement& g = elements_[i];
    if (g.is_identity()) identity_ = i;
    for (Letter x = 0; x < k; ++x) {
      table_.output[i * k + x] = g.table().out(0, x);
      table_.next[i * k + x] = static_cast<std::uint32_t>(nucleus.index_of(g.node_element(g.table().succ(0, x))));
    }
  }
}

std::optional<std::uint32_t> NucleusAutomaton::index_of(const CanonicalElement& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || !(*it == g)) return std::nullopt;
  return static_cast<std::uint32_t>(it - elements_.begin());
}

namespace {

void check_point(const NucleusAutomaton& nucleus, const BoundaryPoint& p) {
  if (p.max_letter() >= nucleus.alphabet_size())
    throw DomainError("boundary point " + p.to_string() + " uses letters outside the alphabet");
}

/// Positions i >= 1 collapse to phases: i itself up to `transient`, then
/// transient + 1 ... transient + period cyclically.
struct Phase {
  std::size_t transient;
  std::size_t period;
  std::size_t operator()(std::size_t i) const {
    return i <= transient ? i : transient + 1 + (i - transient - 1) % period;
  }
  std::size_t count() const { return transient + period + 1; }
};

using Subset = std::vector<std::uint32_t>;

}  // namespace

const CanonicalElement& EquivalenceWitness::at(std::size_t i) const {
  if (tail.empty() || cycle.empty()) throw DomainError("incomplete witness");
  const std::size_t t = tail.size() - 1;
  if (i <= t) return tail[i];
  return cycle[(i - t - 1) % cycle.size()];
}

bool EquivalenceWitness::validate(const NucleusAutomaton& nucleus, const BoundaryPoint& p,
                                  const BoundaryPoint& q) const {
  if (tail.empty() || cycle.empty()) return false;
  const std::size_t t = tail.size() - 1;
  const std::size_t len = cycle.size();
  if (t < std::max(p.preperiod().size(), q.preperiod().size())) return false;
  if (len % p.period().size() != 0 || len % q.period().size() != 0) return false;
  if (!(cycle.back() == tail.back())) return false;
  for (const auto& g : tail)
    if (!nucleus.index_of(g)) return false;
  for (const auto& g : cycle)
    if (!nucleus.index_of(g)) return false;
  for (std::size_t i = 1; i <= t + len; ++i) {
    const Letter x = p.letter(i);
    const Letter y = q.letter(i);
    const CanonicalElement& g = at(i);
    if (x >= g.alphabet_size() || g.table().out(0, x) != y) return false;
    const Letter step[] = {x};
    if (!(element_section(g, step) == at(i - 1))) return false;
  }
  return true;
}

EquivalenceResult asymptotic_equivalent(const NucleusAutomaton& nucleus, const BoundaryPoint& p,
                                        const BoundaryPoint& q) {
  check_point(nucleus, p);
  check_point(nucleus, q);
  const TransitionTable& t = nucleus.table();
  const auto n = static_cast<std::uint32_t>(nucleus.size());
  const Phase phase{std::max(p.preperiod().size(), q.preperiod().size()),
                    std::lcm(p.period().size(), q.period().size())};

  std::vector<std::vector<bool>> history;
  history.emplace_back(n, true);
  std::map<std::pair<std::size_t, std::vector<bool>>, std::size_t> seen;
  std::size_t j0 = 0, j1 = 0;
  for (std::size_t i = 1;; ++i) {
    const Letter x = p.letter(i);
    const Letter y = q.letter(i);
    std::vector<bool> next(n, false);
    bool any = false;
    for (std::uint32_t g = 0; g < n; ++g)
      if (t.out(g, x) == y && history.back()[t.succ(g, x)]) next[g] = any = true;
    if (!any) return {};
    history.push_back(next);
    auto [it, inserted] = seen.try_emplace({phase(i), std::move(next)}, i);
    if (!inserted) {
      j0 = it->second;
      j1 = i;
      break;
    }
  }

  // S_{j1} = S_{j0}, so descending from level j1 to level j0 is a self-map of
  // S_{j0}; any periodic point of it closes the path into a cycle.
  auto descend = [&](std::uint32_t g) {
    for (std::size_t i = j1; i > j0; --i) g = t.succ(g, p.letter(i));
    return g;
  };
  std::uint32_t start = 0;
  while (!history[j0][start]) ++start;
  std::map<std::uint32_t, std::size_t> orbit;
  std::vector<std::uint32_t> visits;
  std::uint32_t g = start;
  while (orbit.try_emplace(g, visits.size()).second) {
    visits.push_back(g);
    g = descend(g);
  }
  const std::uint32_t h = g;
  const std::size_t m = visits.size() - orbit[g];
  const std::size_t top = j0 + m * (j1 - j0);

  std::vector<std::uint32_t> path(top + 1);
  path[top] = h;
  for (std::size_t i = top; i > 0; --i) path[i - 1] = t.succ(path[i], p.letter(i));

  EquivalenceWitness w;
  for (std::size_t i = 0; i <= j0; ++i) w.tail.push_back(nucleus.elements()[path[i]]);
  for (std::size_t i = j0 + 1; i <= top; ++i) w.cycle.push_back(nucleus.elements()[path[i]]);
  return {true, std::move(w)};
}

std::vector<BoundaryPoint> equivalence_class(const NucleusAutomaton& nucleus, const BoundaryPoint& p,
                                             std::size_t max_points) {
  check_point(nucleus, p);
  const TransitionTable& t = nucleus.table();
  const std::uint32_t k = nucleus.alphabet_size();
  const auto n = static_cast<std::uint32_t>(nucleus.size());
  const Phase phase{p.preperiod().size(), p.period().size()};

  // live[phase(i)] holds the g_i that extend to an infinite path upward
  // (greatest fixed point; level 0 has phase 0).
  std::vector<std::vector<bool>> live(phase.count(), std::vector<bool>(n, true));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = phase.count() - 1; i + 1 > 0; --i) {
      const Letter x = p.letter(i + 1);
      const auto& above = live[phase(i + 1)];
      std::vector<bool> reached(n, false);
      for (std::uint32_t g = 0; g < n; ++g)
        if (above[g]) reached[t.succ(g, x)] = true;
      for (std::uint32_t g = 0; g < n; ++g)
        if (live[i][g] && !reached[g]) {
          live[i][g] = false;
          changed = true;
        }
    }
  }

  // Depth-first search over the deterministic subset automaton on output
  // letters. Every state has a live continuation, and each infinite path
  // closes into a lasso at its first repeated state.
  struct Node {
    std::size_t phase;
    Subset set;
    auto operator<=>(const Node&) const = default;
  };
  std::set<BoundaryPoint> found;
  std::vector<Node> stack;
  std::vector<Letter> letters;
  std::map<Node, std::size_t> on_stack;

  Subset start;
  for (std::uint32_t g = 0; g < n; ++g)
    if (live[0][g]) start.push_back(g);
  if (start.empty()) throw DomainError("nucleus has no infinite path");

  auto record = [&](std::size_t loop_start) {
    // letters[j] is y_{j+1}; positions loop_start+1 ... letters.size() repeat.
    Word period(letters.rbegin(), letters.rbegin() + static_cast<std::ptrdiff_t>(letters.size() - loop_start));
    Word preperiod(letters.rend() - static_cast<std::ptrdiff_t>(loop_start), letters.rend());
    found.insert(BoundaryPoint(std::move(period), std::move(preperiod)));
    if (found.size() > max_points)
      throw ResourceLimitError("equivalence class exceeds " + std::to_string(max_points) + " points");
  };

  std::size_t steps = 0;
  auto visit = [&](auto&& self, Node node) -> void {
    if (++steps > max_points * std::max<std::size_t>(n, 1) * phase.count() * k * 4)
      throw ResourceLimitError("equivalence class search exceeded its step budget");
    on_stack.emplace(node, stack.size());
    stack.push_back(node);
    const std::size_t i = letters.size() + 1;
    const Letter x = p.letter(i);
    const auto& alive = live[phase(i)];
    for (Letter y = 0; y < k; ++y) {
      Subset next;
      std::vector<bool> below(n, false);
      for (std::uint32_t g : node.set) below[g] = true;
      for (std::uint32_t g = 0; g < n; ++g)
        if (alive[g] && t.out(g, x) == y && below[t.succ(g, x)]) next.push_back(g);
      if (next.empty()) continue;
      letters.push_back(y);
      Node child{phase(i), std::move(next)};
      if (auto it = on_stack.find(child); it != on_stack.end())
        record(it->second);
      else
        self(self, std::move(child));
      letters.pop_back();
    }
    on_stack.erase(stack.back());
    stack.pop_back();
  };
  visit(visit, Node{0, std::move(start)});
  return {found.begin(), found.end()};
}

std::size_t SelfSimilarityGraph::level_of(std::uint32_t v) const {
  if (v >= graph.vertex_count) throw DomainError("vertex out of range");
  auto it = std::upper_bound(level_offset.begin(), level_offset.end(), static_cast<std::size_t>(v));
  return static_cast<std::size_t>(it - level_offset.begin()) - 1;
}

Word SelfSimilarityGraph::vertex_word(std::uint32_t v) const {
  const std::size_t level = level_of(v);
  return word_at(v - level_offset[level], alphabet_size, level);
}

std::uint32_t SelfSimilarityGraph::vertex_index(WordView w) const {
  if (w.size() > depth) throw DomainError("word is deeper than the graph");
  for (Letter x : w)
    if (x >= alphabet_size) throw DomainError("letter outside the alphabet");
  return static_cast<std::uint32_t>(level_offset[w.size()] + word_index(w, alphabet_size));
}

SimplicialGraph SelfSimilarityGraph::horizontal_slice(std::size_t level) const {
  if (level > depth) throw DomainError("level is deeper than the graph");
  const std::size_t lo = level_offset[level];
  const std::size_t hi = level_offset[level + 1];
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges)
    if (e.u >= lo && e.v < hi)
      edges.push_back({static_cast<std::uint32_t>(e.u - lo), static_cast<std::uint32_t>(e.v - lo)});
  return SimplicialGraph::from_edges(hi - lo, std::move(edges));
}

SelfSimilarityGraph self_similarity_graph(std::span<const CanonicalElement> generators, std::size_t depth,
                                          BuildOptions options) {
  if (generators.empty()) throw DomainError("at least one generator is required");
  if (depth == 0) throw DomainError("self-similarity graph depth must be at least 1");
  const std::uint32_t k = generators.front().alphabet_size();

  SelfSimilarityGraph result;
  result.alphabet_size = k;
  result.depth = depth;
  result.level_offset.push_back(0);
  std::uint64_t total = 0;
  for (std::size_t level = 0; level <= depth; ++level) {
    const std::uint64_t size = checked_power(k, level);
    if (size == 0 || total + size > options.vertex_cap || total + size > 0xffffffffull)
      throw ResourceLimitError("self-similarity graph of depth " + std::to_string(depth) +
                               " exceeds the vertex cap of " + std::to_string(options.vertex_cap));
    total += size;
    result.level_offset.push_back(static_cast<std::size_t>(total));
  }

  std::vector<std::string> labels(generators.size());
  std::vector<Edge> edges;
  for (std::size_t level = 1; level <= depth; ++level) {
    const auto lo = static_cast<std::uint32_t>(result.level_offset[level]);
    const auto above = static_cast<std::uint32_t>(result.level_offset[level - 1]);
    const auto block = static_cast<std::uint32_t>(checked_power(k, level - 1));
    // xv sits at x * k^(level-1) + index(v) within its level.
    for (Letter x = 0; x < k; ++x)
      for (std::uint32_t v = 0; v < block; ++v) edges.push_back({lo + x * block + v, above + v});
    const LabeledSchreierGraph g = build_schreier(generators, labels, level, options);
    for (std::size_t s = 0; s < g.generator_count(); ++s) {
      auto map = g.targets(s);
      for (std::uint32_t v = 0; v < map.size(); ++v) edges.push_back({lo + v, lo + map[v]});
    }
  }
  result.graph = SimplicialGraph::from_edges(static_cast<std::size_t>(total), std::move(edges));
  return result;
}

std::vector<PointedGraph> gh_sequence(const MealyAutomaton& aut, std::span<const StateId> generators,
                                      const BoundaryPoint& xi, std::size_t n_max, BuildOptions options) {
  if (n_max == 0) throw DomainError("the sequence needs at least one level");
  std::vector<PointedGraph> result;
  for (std::size_t n = 1; n <= n_max; ++n) result.push_back(pointed_component(aut, generators, xi, n, options));
  return result;
}

}  // namespace selfsim
