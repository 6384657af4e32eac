#include "selfsim/schreier.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <string_view>

#include "selfsim/errors.hpp"

namespace selfsim {

std::uint64_t default_vertex_cap() {
  const char* env = std::getenv("SELFSIM_VERTEX_CAP");
  if (env == nullptr) return kDefaultVertexCap;
  const std::string_view text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return kDefaultVertexCap;
  return value;
}

namespace {

std::size_t level_size(std::uint32_t k, std::size_t level, std::uint64_t cap) {
  const std::uint64_t count = checked_power(k, level);
  if (count == 0 || count > cap || count > std::numeric_limits<std::uint32_t>::max())
    throw ResourceLimitError("level " + std::to_string(level) + " over a " + std::to_string(k) +
                             "-letter alphabet exceeds the vertex cap of " + std::to_string(cap) +
                             " (raise it with --vertex-cap or SELFSIM_VERTEX_CAP)");
  return static_cast<std::size_t>(count);
}

/// Writes s(v) for every v in A^n by descending the tree: at each level the
/// current section q maps the letter x to q(x) and moves to q|_x.
void fill_targets(const TransitionTable& t, std::uint32_t q, std::size_t depth, std::size_t level,
                  std::uint32_t source, std::uint32_t target, std::vector<std::uint32_t>& out) {
  if (depth == level) {
    out[source] = target;
    return;
  }
  const std::uint32_t k = t.alphabet_size;
  for (Letter x = 0; x < k; ++x)
    fill_targets(t, t.succ(q, x), depth + 1, level, source * k + x, target * k + t.out(q, x), out);
}

}  // namespace

LabeledSchreierGraph::LabeledSchreierGraph(std::uint32_t alphabet_size, std::size_t level,
                                           std::vector<std::string> labels,
                                           std::vector<std::vector<std::uint32_t>> targets)
    : alphabet_size_(alphabet_size), level_(level), labels_(std::move(labels)), targets_(std::move(targets)) {
  if (alphabet_size_ == 0) throw DomainError("empty alphabet");
  if (labels_.size() != targets_.size()) throw DomainError("one target map per generator label is required");
  const std::uint64_t count = checked_power(alphabet_size_, level_);
  if (count == 0 || count > std::numeric_limits<std::uint32_t>::max())
    throw ResourceLimitError("level too large");
  vertex_count_ = static_cast<std::size_t>(count);
  for (const auto& map : targets_) {
    if (map.size() != vertex_count_) throw DomainError("target map has the wrong size");
    std::vector<bool> hit(vertex_count_, false);
    for (std::uint32_t v : map) {
      if (v >= vertex_count_ || hit[v]) throw DomainError("generator does not permute the level");
      hit[v] = true;
    }
  }
}

std::uint32_t LabeledSchreierGraph::vertex_index(WordView w) const {
  if (w.size() != level_) throw DomainError("vertex word has the wrong length");
  for (Letter x : w)
    if (x >= alphabet_size_) throw DomainError("letter " + std::to_string(x) + " is outside the alphabet");
  return static_cast<std::uint32_t>(word_index(w, alphabet_size_));
}

std::vector<Arrow> LabeledSchreierGraph::arrows() const {
  std::vector<Arrow> result;
  result.reserve(arrow_count());
  for (std::uint32_t s = 0; s < targets_.size(); ++s)
    for (std::uint32_t v = 0; v < vertex_count_; ++v) result.push_back({v, targets_[s][v], s});
  return result;
}

LabeledSchreierGraph build_schreier(const MealyAutomaton& aut, std::span<const StateId> generators,
                                    std::size_t level, BuildOptions options) {
  const std::uint32_t k = aut.alphabet().size;
  const std::size_t count = level_size(k, level, options.vertex_cap);
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> targets;
  for (StateId q : generators) {
    labels.push_back(aut.name(q));
    std::vector<std::uint32_t> map(count);
    fill_targets(aut.table(), q.value, 0, level, 0, 0, map);
    targets.push_back(std::move(map));
  }
  return LabeledSchreierGraph(k, level, std::move(labels), std::move(targets));
}

LabeledSchreierGraph build_schreier(std::span<const CanonicalElement> generators,
                                    std::span<const std::string> labels, std::size_t level,
                                    BuildOptions options) {
  if (generators.empty()) throw DomainError("at least one generator is required");
  if (labels.size() != generators.size()) throw DomainError("one label per generator is required");
  const std::uint32_t k = generators.front().alphabet_size();
  const std::size_t count = level_size(k, level, options.vertex_cap);
  std::vector<std::vector<std::uint32_t>> targets;
  for (const auto& g : generators) {
    if (g.alphabet_size() != k) throw DomainError("generators act on different alphabets");
    std::vector<std::uint32_t> map(count);
    fill_targets(g.table(), 0, 0, level, 0, 0, map);
    targets.push_back(std::move(map));
  }
  return LabeledSchreierGraph(k, level, {labels.begin(), labels.end()}, std::move(targets));
}

std::vector<std::uint32_t> SymbolicAdjacencyMatrix::entry(std::size_t i, std::size_t j) const {
  std::vector<std::uint32_t> result;
  for (const Entry& e : row(i))
    if (e.column == j) result.push_back(e.label);
  return result;
}

SymbolicAdjacencyMatrix symbolic_matrix(const LabeledSchreierGraph& g) {
  std::vector<std::vector<SymbolicAdjacencyMatrix::Entry>> rows(g.vertex_count());
  for (std::uint32_t s = 0; s < g.generator_count(); ++s) {
    auto map = g.targets(s);
    for (std::uint32_t v = 0; v < map.size(); ++v) rows[v].push_back({map[v], s});
  }
  for (auto& row : rows)
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
      return a.column != b.column ? a.column < b.column : a.label < b.label;
    });
  return SymbolicAdjacencyMatrix(g.labels(), std::move(rows));
}

SimplicialGraph SimplicialGraph::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
  std::vector<Edge> clean;
  clean.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) throw DomainError("edge endpoint out of range");
    if (e.u == e.v) continue;
    if (e.u > e.v) std::swap(e.u, e.v);
    clean.push_back(e);
  }
  std::sort(clean.begin(), clean.end());
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  return {vertex_count, std::move(clean)};
}

std::vector<std::vector<std::uint32_t>> SimplicialGraph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

SimplicialGraph simplicial(const LabeledSchreierGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.arrow_count());
  for (std::uint32_t s = 0; s < g.generator_count(); ++s) {
    auto map = g.targets(s);
    for (std::uint32_t v = 0; v < map.size(); ++v) edges.push_back({v, map[v]});
  }
  return SimplicialGraph::from_edges(g.vertex_count(), std::move(edges));
}

Components connected_components(const SimplicialGraph& g) {
  const auto adj = g.adjacency();
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  Components result;
  result.component_of.assign(g.vertex_count, kUnseen);
  for (std::uint32_t start = 0; start < g.vertex_count; ++start) {
    if (result.component_of[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(result.members.size());
    std::vector<std::uint32_t> members{start};
    result.component_of[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::uint32_t w : adj[members[head]])
        if (result.component_of[w] == kUnseen) {
          result.component_of[w] = id;
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    result.members.push_back(std::move(members));
  }
  return result;
}

Components connected_components(const LabeledSchreierGraph& g) { return connected_components(simplicial(g)); }

PointedGraph pointed_component(const LabeledSchreierGraph& g, WordView root) {
  const std::uint32_t root_index = g.vertex_index(root);
  const SimplicialGraph full = simplicial(g);
  const auto adj = full.adjacency();

  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::uint32_t> members{root_index};
  seen[root_index] = true;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (std::uint32_t w : adj[members[head]])
      if (!seen[w]) {
        seen[w] = true;
        members.push_back(w);
      }
  std::sort(members.begin(), members.end());

  auto local = [&](std::uint32_t v) {
    return static_cast<std::uint32_t>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
  };
  std::vector<Edge> edges;
  for (const Edge& e : full.edges)
    if (seen[e.u]) edges.push_back({local(e.u), local(e.v)});

  PointedGraph result;
  result.alphabet_size = g.alphabet_size();
  result.level = g.level();
  result.graph = SimplicialGraph::from_edges(members.size(), std::move(edges));
  result.root = local(root_index);
  result.vertices = std::move(members);
  return result;
}

PointedGraph pointed_component(const MealyAutomaton& aut, std::span<const StateId> generators,
                               const BoundaryPoint& xi, std::size_t level, BuildOptions options) {
  if (xi.max_letter() >= aut.alphabet().size)
    throw DomainError("boundary point " + xi.to_string() + " uses letters outside the alphabet");
  const LabeledSchreierGraph g = build_schreier(aut, generators, level, options);
  const Word root = xi.prefix(level);
  return pointed_component(g, root);
}

namespace {

/// Breadth-first code of the orbit of `root` under permutation labels: every
/// vertex is numbered on first discovery, and the code lists the number of
/// each label's target vertex by vertex, label by label. Two rooted labeled
/// graphs with permutation labels are isomorphic iff their codes agree.
std::vector<std::uint32_t> rooted_code(const std::vector<std::vector<std::uint32_t>>& targets, std::uint32_t root,
                                       std::vector<std::uint32_t>& number) {
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> order{root};
  number[root] = 0;
  std::vector<std::uint32_t> code;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (const auto& map : targets) {
      const std::uint32_t w = map[order[head]];
      if (number[w] == kUnseen) {
        number[w] = static_cast<std::uint32_t>(order.size());
        order.push_back(w);
      }
      code.push_back(number[w]);
    }
  for (std::uint32_t v : order) number[v] = kUnseen;
  return code;
}

/// Sorted list of per-component minimal rooted codes.
std::vector<std::vector<std::uint32_t>> canonical_form(const std::vector<std::vector<std::uint32_t>>& targets,
                                                       std::size_t vertex_count) {
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> number(vertex_count, kUnseen);
  std::vector<std::uint32_t> component(vertex_count, kUnseen);
  std::map<std::uint32_t, std::vector<std::uint32_t>> best;
  std::uint32_t next_component = 0;
  for (std::uint32_t v = 0; v < vertex_count; ++v) {
    if (component[v] == kUnseen) {
      std::vector<std::uint32_t> queue{v};
      component[v] = next_component;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& map : targets)
          if (component[map[queue[head]]] == kUnseen) {
            component[map[queue[head]]] = next_component;
            queue.push_back(map[queue[head]]);
          }
      ++next_component;
    }
    auto code = rooted_code(targets, v, number);
    auto [it, inserted] = best.try_emplace(component[v], code);
    if (!inserted && code < it->second) it->second = std::move(code);
  }
  std::vector<std::vector<std::uint32_t>> form;
  for (auto& [id, code] : best) form.push_back(std::move(code));
  std::sort(form.begin(), form.end());
  return form;
}

}  // namespace

bool dual_moore_check(const MealyAutomaton& aut, std::size_t level) {
  if (level > kDualMooreMaxLevel)
    throw DomainError("dual Moore check is limited to levels up to " + std::to_string(kDualMooreMaxLevel));
  const std::uint32_t k = aut.alphabet().size;
  const std::size_t count = static_cast<std::size_t>(checked_power(k, level));

  std::vector<StateId> all;
  for (std::uint32_t q = 0; q < aut.state_count(); ++q) all.push_back(StateId{q});
  const LabeledSchreierGraph schreier = build_schreier(aut, all, level, BuildOptions{count});
  std::vector<std::vector<std::uint32_t>> first;
  for (std::size_t s = 0; s < all.size(); ++s) {
    auto map = schreier.targets(s);
    first.emplace_back(map.begin(), map.end());
  }

  // Dual automaton: its states are the letters, its inputs are the states of
  // `aut`; letter x reading q moves to q(x) and emits q|_x. Its n-fold power
  // has the words of A^n as states, and its Moore diagram is the second graph.
  const std::size_t m = aut.state_count();
  const TransitionTable& t = aut.table();
  std::vector<Letter> dual_next(k * m);
  std::vector<std::uint32_t> dual_out(k * m);
  for (Letter x = 0; x < k; ++x)
    for (std::uint32_t q = 0; q < m; ++q) {
      dual_next[x * m + q] = t.out(q, x);
      dual_out[x * m + q] = t.succ(q, x);
    }
  std::vector<std::vector<std::uint32_t>> second(all.size(), std::vector<std::uint32_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    const Word v = word_at(i, k, level);
    for (std::size_t s = 0; s < all.size(); ++s) {
      std::uint32_t input = all[s].value;
      Word image(level);
      for (std::size_t j = 0; j < level; ++j) {
        image[j] = dual_next[v[j] * m + input];
        input = dual_out[v[j] * m + input];
      }
      second[s][i] = static_cast<std::uint32_t>(word_index(image, k));
    }
  }
  return canonical_form(first, count) == canonical_form(second, count);
}

}  // namespace selfsim
