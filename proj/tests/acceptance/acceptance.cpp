// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "selfsim/catalog.hpp"
#include "selfsim/element.hpp"
#include "selfsim/export.hpp"
#include "selfsim/limit.hpp"
#include "selfsim/nucleus.hpp"
#include "selfsim/recursion.hpp"
#include "selfsim/schreier.hpp"
#include "selfsim/spectrum.hpp"

using namespace selfsim;

namespace {

// Pinned tolerances and budgets.
constexpr double kTopEigenvalueTol = 1e-9;
constexpr double kRepeatTol = 1e-12;
constexpr double kBasilica12Seconds = 1.0;
constexpr double kBasilica16Seconds = 10.0;
constexpr double kFreenessSeconds = 30.0;
constexpr NucleusLimits kNucleusLimits{500, 20};

// Frozen BFS-oracle values (tests/oracles/oracle.py).
constexpr std::size_t kLongRangeComponentsAt6 = 1;
constexpr std::size_t kTrivialComponentsAt3 = 8;
constexpr std::size_t kLongRangePointed[][2] = {{4, 16}, {6, 64}, {8, 256}};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

RealizedAutomaton realize(const std::string& key) { return to_automaton(catalog_get(key).document); }

SelfSimilarGroup group(const std::string& key) {
  const RealizedAutomaton r = realize(key);
  return SelfSimilarGroup(r.automaton, r.generators);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

Outcome ac1() {
  Outcome o;
  for (const auto& entry : catalog_list()) {
    const RealizedAutomaton r = to_automaton(entry.document);
    const std::uint32_t k = r.automaton.alphabet().size;
    const std::size_t top = k == 2 ? 12 : 7;
    for (std::size_t n = 0; n <= top; ++n) {
      const LabeledSchreierGraph g = build_schreier(r.automaton, r.generators, n);
      const std::uint64_t vertices = checked_power(k, n);
      if (g.vertex_count() != vertices) o.fail(entry.key + ": vertex count at n=" + std::to_string(n));
      if (g.arrows().size() != r.generators.size() * vertices)
        o.fail(entry.key + ": arrow count at n=" + std::to_string(n));
      for (std::size_t s = 0; s < g.generator_count(); ++s) {
        std::vector<bool> hit(g.vertex_count());
        for (auto t : g.targets(s)) hit[t] = true;
        if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
          o.fail(entry.key + ": generator " + g.labels()[s] + " is not a permutation");
      }
    }
  }
  const RealizedAutomaton b = realize("basilica");
  auto t = Clock::now();
  const LabeledSchreierGraph g12 = build_schreier(b.automaton, b.generators, 12);
  const double s12 = seconds_since(t);
  t = Clock::now();
  const LabeledSchreierGraph g16 = build_schreier(b.automaton, b.generators, 16);
  const double s16 = seconds_since(t);
  if (g12.arrow_count() != 8192 || g16.vertex_count() != 65536) o.fail("Basilica n=12/16 counts");
  if (s12 >= kBasilica12Seconds) o.fail("Basilica n=12 took " + fmt(s12) + " s");
  if (s16 >= kBasilica16Seconds) o.fail("Basilica n=16 took " + fmt(s16) + " s");
  if (o.passed) o.detail = "Basilica n=12 " + fmt(s12) + " s, n=16 " + fmt(s16) + " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  const SelfSimilarGroup g = group("aut882");
  const CanonicalElement sq = g.canonicalize("(c a^-1 c b^-1)^2");
  if (element_act(sq, parse_word("00")) != parse_word("00")) o.fail("does not fix 00");
  if (element_section(sq, parse_word("00")) != g.canonicalize("c a^-1 c b^-1")) o.fail("section at 00 differs");
  return o;
}

Outcome ac3() {
  Outcome o;
  std::set<std::string> contracting;
  for (const auto& entry : catalog_list()) {
    const SelfSimilarGroup g = group(entry.key);
    const NucleusResult n = compute_nucleus(g.generators(), kNucleusLimits);
    if (!n.contracting()) continue;
    contracting.insert(entry.key);
    const std::string why = verify_nucleus_certificate(g.generators(), n);
    if (!why.empty()) o.fail(entry.key + ": " + why);
  }
  for (const char* key : {"trivial", "z2", "basilica", "odometer", "virtually_z3", "half_basilica"})
    if (!contracting.count(key)) o.fail(std::string(key) + " not verdicted Contracting");
  if (o.passed) o.detail = std::to_string(contracting.size()) + " certificates re-verified";
  return o;
}

Outcome ac4() {
  Outcome o;
  for (const auto& entry : catalog_list()) {
    const SelfSimilarGroup g = group(entry.key);
    for (std::size_t i = 0; i < g.rank(); ++i)
      if (!g.canonicalize(g.generator_names()[i] + " " + g.generator_names()[i] + "^-1").is_identity())
        o.fail(entry.key + ": " + g.generator_names()[i] + " times its inverse is not trivial");
  }
  const auto t = Clock::now();
  const auto relators = trivial_words(catalog_get("aleshin").document, 6);
  const double s = seconds_since(t);
  if (!relators.empty()) o.fail("Aleshin relator " + relators.front());
  if (s >= kFreenessSeconds) o.fail("freeness sweep took " + fmt(s) + " s");
  if (o.passed) o.detail = "Aleshin sweep to length 6 in " + fmt(s) + " s";
  return o;
}

std::vector<BoundaryPoint> sample_points(std::uint32_t k) {
  std::set<BoundaryPoint> pts;
  std::vector<Word> words{Word{}};
  for (std::size_t len = 1; len <= 3; ++len)
    for (std::uint64_t i = 0; i < checked_power(k, len); ++i) words.push_back(word_at(i, k, len));
  for (const Word& per : words) {
    if (per.empty()) continue;
    for (const Word& pre : words)
      if (pre.size() <= 2) pts.insert(BoundaryPoint(per, pre));
  }
  return {pts.begin(), pts.end()};
}

Outcome ac5() {
  Outcome o;
  {
    const SelfSimilarGroup g = group("odometer");
    const NucleusAutomaton na(compute_nucleus(g.generators(), kNucleusLimits));
    const BoundaryPoint ones = BoundaryPoint::parse("1^w"), zeros = BoundaryPoint::parse("0^w");
    const EquivalenceResult r = asymptotic_equivalent(na, ones, zeros);
    if (!r.equivalent || !r.witness || !r.witness->validate(na, ones, zeros)) o.fail("odometer 1^w ~ 0^w");
  }
  std::size_t groups = 0;
  for (const auto& entry : catalog_list()) {
    const SelfSimilarGroup g = group(entry.key);
    const NucleusResult n = compute_nucleus(g.generators(), kNucleusLimits);
    if (!n.contracting()) continue;
    ++groups;
    const NucleusAutomaton na(n);
    const auto pts = sample_points(g.alphabet_size());
    std::vector<std::vector<char>> rel(pts.size(), std::vector<char>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const EquivalenceResult r = asymptotic_equivalent(na, pts[i], pts[j]);
        rel[i][j] = r.equivalent;
        if (r.equivalent && !(r.witness && r.witness->validate(na, pts[i], pts[j])))
          o.fail(entry.key + ": witness fails for " + pts[i].to_string() + ", " + pts[j].to_string());
      }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!rel[i][i]) o.fail(entry.key + ": not reflexive at " + pts[i].to_string());
      if (equivalence_class(na, pts[i]).size() > na.size()) o.fail(entry.key + ": class larger than |N|");
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (rel[i][j] != rel[j][i]) o.fail(entry.key + ": not symmetric");
        if (rel[i][j])
          for (std::size_t l = 0; l < pts.size(); ++l)
            if (rel[j][l] && !rel[i][l]) o.fail(entry.key + ": not transitive");
      }
    }
  }
  if (o.passed) o.detail = std::to_string(groups) + " contracting catalog groups";
  return o;
}

Outcome ac6() {
  Outcome o;
  for (const char* key : {"basilica", "trivial"})
    for (std::size_t n = 1; n <= 2; ++n)
      if (!dual_moore_check(realize(key).automaton, n)) o.fail(std::string(key) + " n=" + std::to_string(n));
  return o;
}

Outcome ac7() {
  Outcome o;
  for (const char* key : {"basilica", "aleshin", "z2", "aut878", "aut882", "virtually_z3"}) {
    const RealizedAutomaton r = realize(key);
    for (std::size_t n = 1; n <= 12; ++n)
      if (connected_components(build_schreier(r.automaton, r.generators, n)).count() != 1)
        o.fail(std::string(key) + " disconnected at n=" + std::to_string(n));
  }
  const RealizedAutomaton lr = realize("long_range");
  if (connected_components(build_schreier(lr.automaton, lr.generators, 6)).count() != kLongRangeComponentsAt6)
    o.fail("long_range component count at n=6");
  for (const auto& [n, size] : kLongRangePointed)
    if (pointed_component(lr.automaton, lr.generators, BoundaryPoint::parse("0^w"), n).vertices.size() != size)
      o.fail("long_range pointed size at n=" + std::to_string(n));
  const RealizedAutomaton t = realize("trivial");
  if (connected_components(build_schreier(t.automaton, t.generators, 3)).count() != kTrivialComponentsAt3)
    o.fail("identity automaton component count at n=3");
  return o;
}

Outcome ac8() {
  Outcome o;
  const SelfSimilarGroup g = group("basilica");
  const RealizedAutomaton r = realize("basilica");
  for (std::size_t depth = 1; depth <= 5; ++depth) {
    const SelfSimilarityGraph s = self_similarity_graph(g.generators(), depth);
    for (std::size_t n = 1; n <= depth; ++n)
      if (s.horizontal_slice(n) != simplicial(build_schreier(r.automaton, r.generators, n)))
        o.fail("slice " + std::to_string(n) + " at depth " + std::to_string(depth));
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  const std::pair<const char*, std::size_t> cases[] = {{"trivial", 3}, {"basilica", 6}, {"long_range", 6}};
  for (const auto& [key, n] : cases) {
    const RealizedAutomaton r = realize(key);
    const LabeledSchreierGraph g = build_schreier(r.automaton, r.generators, n);
    const auto v = spectrum(g);
    const auto again = spectrum(g);
    if (std::abs(v.front() - 1.0) > kTopEigenvalueTol) o.fail(std::string(key) + ": top eigenvalue");
    if (multiplicity_of_one(v, kTopEigenvalueTol) != connected_components(g).count())
      o.fail(std::string(key) + ": multiplicity of 1");
    for (std::size_t i = 0; i < v.size(); ++i)
      if (std::abs(v[i] - again[i]) > kRepeatTol) o.fail(std::string(key) + ": eigenvalues differ across runs");
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  for (const auto& entry : catalog_list()) {
    if (parse_recursion(serialize(entry.document)) != entry.document) o.fail(entry.key + ": DSL round-trip");
    const RealizedAutomaton r = to_automaton(entry.document);
    const std::size_t n = r.automaton.alphabet().size == 2 ? 5 : 3;
    auto render = [&] {
      std::string all;
      const LabeledSchreierGraph g = build_schreier(r.automaton, r.generators, n);
      for (GraphFormat f : {GraphFormat::Dot, GraphFormat::GraphML, GraphFormat::Edges, GraphFormat::Matrix}) {
        all += export_graph(g, f);
        all += export_graph(simplicial(g), vertex_names(g), f);
        all += export_graph(pointed_component(g, Word(n, 0)), f);
      }
      return all;
    };
    if (render() != render()) o.fail(entry.key + ": exports differ across runs");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 structural counts", ac1},       {"AC2 882 special element", ac2},
      {"AC3 nucleus certificates", ac3},    {"AC4 word problem and Aleshin freeness", ac4},
      {"AC5 asymptotic equivalence", ac5},  {"AC6 dual Moore coincidence", ac6},
      {"AC7 connectivity", ac7},            {"AC8 self-similarity slices", ac8},
      {"AC9 spectrum sanity", ac9},         {"AC10 determinism and round-trips", ac10},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s%s\n", o.passed ? "PASS" : "FAIL", name.c_str(),
                o.detail.empty() ? "" : (" (" + o.detail + ")").c_str());
    std::fflush(stdout);
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
