#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "selfsim/catalog.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/limit.hpp"

using namespace selfsim;

namespace {

struct Fixture {
  RealizedAutomaton realized;
  SelfSimilarGroup group;
  NucleusResult result;
  NucleusAutomaton nucleus;

  explicit Fixture(const char* key)
      : realized(to_automaton(catalog_get(key).document)),
        group(realized.automaton, realized.generators),
        result(compute_nucleus(group.generators())),
        nucleus(result) {}
};

// p ~ q iff for every n some nucleus element maps x_n ... x_1 to y_n ... y_1
// (the nucleus is closed under sections). Checked for n <= depth.
class EquivalenceOracle {
 public:
  EquivalenceOracle(const NucleusResult& n, std::size_t depth) : depth_(depth) {
    selfsim::RecursionDocument doc;
    doc.alphabet_size = n.elements.front().alphabet_size();
    for (std::size_t i = 0; i < n.elements.size(); ++i)
      roots_.push_back(oracle::add_element(doc, n.elements[i], "N" + std::to_string(i)));
    machine_ = std::make_unique<oracle::Machine>(doc);
  }

  bool equivalent(const BoundaryPoint& p, const BoundaryPoint& q) const {
    for (std::size_t n = 1; n <= depth_; ++n) {
      std::string x = format_word(p.prefix(n)), y = format_word(q.prefix(n));
      std::reverse(x.begin(), x.end());
      std::reverse(y.begin(), y.end());
      bool hit = false;
      for (const auto& r : roots_) hit = hit || machine_->act(r, x) == y;
      if (!hit) return false;
    }
    return true;
  }

 private:
  std::size_t depth_;
  std::vector<std::string> roots_;
  std::unique_ptr<oracle::Machine> machine_;
};

std::vector<BoundaryPoint> sample_points(std::uint32_t k, std::size_t max_period, std::size_t max_pre) {
  std::set<BoundaryPoint> out;
  for (std::size_t lp = 1; lp <= max_period; ++lp)
    for (const auto& per : oracle::all_words(k, lp))
      for (std::size_t lq = 0; lq <= max_pre; ++lq)
        for (const auto& pre : oracle::all_words(k, lq)) out.insert(BoundaryPoint(parse_word(per), parse_word(pre)));
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("odometer identifies ...111 with ...000") {
  Fixture f("odometer");
  const BoundaryPoint ones = BoundaryPoint::parse("1^w"), zeros = BoundaryPoint::parse("0^w");
  const EquivalenceResult r = asymptotic_equivalent(f.nucleus, ones, zeros);
  REQUIRE(r.equivalent);
  REQUIRE(r.witness);
  CHECK(r.witness->validate(f.nucleus, ones, zeros));
  CHECK_FALSE(r.witness->validate(f.nucleus, ones, BoundaryPoint::parse("01^w")));
  // the witness path runs through a on (1|0)
  CHECK(r.witness->at(1000) == f.group.canonicalize("a"));

  CHECK_FALSE(asymptotic_equivalent(f.nucleus, zeros, BoundaryPoint::parse("0^w 10")).equivalent);
  CHECK_FALSE(asymptotic_equivalent(f.nucleus, zeros, BoundaryPoint::parse("01^w")).equivalent);
  CHECK(equivalence_class(f.nucleus, zeros) == std::vector<BoundaryPoint>{zeros, ones});
}

TEST_CASE("identity automaton classes are singletons") {
  Fixture f("trivial");
  for (const auto& p : sample_points(2, 3, 2)) {
    CHECK(equivalence_class(f.nucleus, p) == std::vector<BoundaryPoint>{p});
    CHECK(asymptotic_equivalent(f.nucleus, p, p).equivalent);
  }
}

TEST_CASE("equivalence agrees with the bounded oracle and is an equivalence relation") {
  for (const char* key : {"odometer", "basilica", "z2", "grigorchuk"}) {
    INFO(key);
    Fixture f(key);
    const EquivalenceOracle oracle(f.result, 24);
    const std::vector<BoundaryPoint> pts = sample_points(2, 3, 2);
    std::vector<std::vector<bool>> rel(pts.size(), std::vector<bool>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const EquivalenceResult r = asymptotic_equivalent(f.nucleus, pts[i], pts[j]);
        rel[i][j] = r.equivalent;
        CHECK_MESSAGE(r.equivalent == oracle.equivalent(pts[i], pts[j]), pts[i].to_string(), " ", pts[j].to_string());
        if (r.equivalent) {
          REQUIRE(r.witness);
          CHECK(r.witness->validate(f.nucleus, pts[i], pts[j]));
        }
      }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(rel[i][i]);
      const std::vector<BoundaryPoint> cls = equivalence_class(f.nucleus, pts[i]);
      CHECK(cls.size() <= f.nucleus.size());
      CHECK(std::find(cls.begin(), cls.end(), pts[i]) != cls.end());
      for (const auto& c : cls) CHECK(asymptotic_equivalent(f.nucleus, pts[i], c).equivalent);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        CHECK(rel[i][j] == rel[j][i]);
        CHECK(rel[i][j] == (std::find(cls.begin(), cls.end(), pts[j]) != cls.end()));
        if (rel[i][j])
          for (std::size_t l = 0; l < pts.size(); ++l)
            if (rel[j][l]) CHECK(rel[i][l]);
      }
    }
  }
}

TEST_CASE("equivalence needs a contracting nucleus") {
  const RealizedAutomaton r = to_automaton(catalog_get("lamplighter").document);
  const SelfSimilarGroup g(r.automaton, r.generators);
  const NucleusResult n = compute_nucleus(g.generators(), NucleusLimits{200, 20});
  CHECK_THROWS_AS(NucleusAutomaton{n}, NucleusUnavailableError);
}

TEST_CASE("self-similarity graph") {
  const RealizedAutomaton trivial = to_automaton(catalog_get("trivial").document);
  const SelfSimilarGroup tg(trivial.automaton, trivial.generators);
  const SelfSimilarityGraph t = self_similarity_graph(tg.generators(), 1);
  CHECK(t.graph.vertex_count == 3);
  const std::uint32_t eps = t.vertex_index(Word{}), v0 = t.vertex_index(parse_word("0")),
                      v1 = t.vertex_index(parse_word("1"));
  CHECK(t.graph.edges == SimplicialGraph::from_edges(3, {{v0, eps}, {v1, eps}}).edges);
  CHECK(t.horizontal_slice(1).edges.empty());

  const RealizedAutomaton b = to_automaton(catalog_get("basilica").document);
  const SelfSimilarGroup bg(b.automaton, b.generators);
  const SelfSimilarityGraph s = self_similarity_graph(bg.generators(), 5);
  const auto adj = s.graph.adjacency();
  const auto& near = adj[s.vertex_index(parse_word("01"))];
  CHECK(std::find(near.begin(), near.end(), s.vertex_index(parse_word("1"))) != near.end());
  CHECK(s.level_of(s.vertex_index(parse_word("011"))) == 3);
  CHECK(s.vertex_word(s.vertex_index(parse_word("0110"))) == parse_word("0110"));
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(s.horizontal_slice(n) == simplicial(build_schreier(b.automaton, b.generators, n)));
}

TEST_CASE("pointed sequence for the Basilica group") {
  const RealizedAutomaton b = to_automaton(catalog_get("basilica").document);
  const auto seq = gh_sequence(b.automaton, b.generators, BoundaryPoint::parse("0^w"), 6);
  REQUIRE(seq.size() == 6);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(seq[n - 1].vertices.size() == (std::size_t{1} << n));
    CHECK(seq[n - 1].vertex_word(seq[n - 1].root) == Word(n, 0));
  }
  const RealizedAutomaton t = to_automaton(catalog_get("trivial").document);
  for (const auto& p : gh_sequence(t.automaton, t.generators, BoundaryPoint::parse("10^w 1"), 5))
    CHECK(p.vertices.size() == 1);
}
