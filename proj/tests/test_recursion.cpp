#include <doctest.h>

#include <random>

#include "selfsim/catalog.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/recursion.hpp"

using namespace selfsim;

TEST_CASE("parse the Basilica recursion") {
  const RecursionDocument doc =
      parse_recursion("alphabet 2\na = (0 1)(b, id)\nb = id(a, id)\nid = id(id, id)\ngens a b\n");
  CHECK(doc.alphabet_size == 2);
  REQUIRE(doc.states.size() == 3);
  CHECK(doc.states[0].name == "a");
  CHECK(doc.states[0].sections == std::vector<std::string>{"b", "id"});
  CHECK(doc.generators == std::vector<std::string>{"a", "b"});
  const RealizedAutomaton r = to_automaton(doc);
  CHECK(r.automaton.state_count() == 3);
  CHECK(r.automaton.name(r.automaton.section(StateId{0}, 0)) == "b");
}

TEST_CASE("comments, blank lines and metadata") {
  const RecursionDocument doc = parse_recursion(
      "# a comment\n\ntitle Identity\ncite none\nalphabet 2\n  e = id(e, e)   # trailing\ngens e\n");
  CHECK(doc.title == "Identity");
  CHECK(doc.citation == "none");
  CHECK(doc.states.size() == 1);
}

TEST_CASE("serialize is canonical") {
  const RecursionDocument doc = parse_recursion("alphabet 2\ne=id(e,e)\ngens   e\n");
  CHECK(serialize(doc) == "alphabet 2\ne = id(e, e)\ngens e\n");
  const RecursionDocument perm = parse_recursion("alphabet 4\nx = (3 2)(1 0)(x, x, x, x)\ngens x\n");
  CHECK(serialize(perm) == "alphabet 4\nx = (0 1)(2 3)(x, x, x, x)\ngens x\n");
}

TEST_CASE("parse errors carry positions") {
  auto error_of = [](const char* text) -> std::string {
    try {
      parse_recursion(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  const std::string unresolved = error_of("alphabet 2\na = (0 1)(b, c)\ngens a\n");
  CHECK(unresolved.find("b") != std::string::npos);
  CHECK(unresolved.rfind("2:", 0) == 0);
  CHECK_THROWS_AS(parse_recursion("alphabet 2\na = id(a)\ngens a\n"), ParseError);
  CHECK_THROWS_AS(parse_recursion("alphabet 2\na = (0 0)(a, a)\ngens a\n"), ParseError);
  CHECK_THROWS_AS(parse_recursion("alphabet 2\na = (0 2)(a, a)\ngens a\n"), ParseError);
  CHECK_THROWS_AS(parse_recursion("alphabet 2\na = id(a, a)\na = id(a, a)\ngens a\n"), ParseError);
  CHECK_THROWS_AS(parse_recursion("alphabet 2\na = id(a, a)\n"), ParseError);
  CHECK_THROWS_AS(parse_recursion("alphabet 2\na = id(a, a)\ngens z\n"), ParseError);
  CHECK_THROWS_AS(parse_recursion(""), ParseError);
}

TEST_CASE("catalog documents round-trip through text and automata") {
  for (const auto& entry : catalog_list()) {
    const std::string text = serialize(entry.document);
    CHECK(parse_recursion(text) == entry.document);
    const RealizedAutomaton r = to_automaton(entry.document);
    RecursionDocument back = to_document(r.automaton, r.generators);
    back.title = entry.document.title;
    back.citation = entry.document.citation;
    CHECK(parse_recursion(serialize(back)) == back);
    CHECK(back.states == entry.document.states);
  }
}

TEST_CASE("random small automata round-trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t k = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 5;
    RecursionDocument doc;
    doc.alphabet_size = k;
    for (std::size_t q = 0; q < m; ++q) {
      std::vector<Letter> images(k);
      for (Letter x = 0; x < k; ++x) images[x] = x;
      std::shuffle(images.begin(), images.end(), rng);
      std::vector<std::string> sections;
      for (Letter x = 0; x < k; ++x) sections.push_back("s" + std::to_string(rng() % m));
      doc.states.push_back(StateDefinition{"s" + std::to_string(q), Permutation(images), sections});
    }
    doc.generators = {"s0"};
    CHECK(parse_recursion(serialize(doc)) == doc);
  }
}

TEST_CASE("arbitrary bytes give a document or a ParseError") {
  std::mt19937 rng(11);
  const std::string alphabet = "alphabet gens id()=, 0123abe#\n\t\xff";
  const std::string seed = "alphabet 2\na = (0 1)(b, id)\nb = id(a, id)\nid = id(id, id)\ngens a b\n";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text = seed;
    const int edits = 1 + rng() % 6;
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0: text.insert(text.begin() + pos, alphabet[rng() % alphabet.size()]); break;
        case 1: if (pos < text.size()) text.erase(pos, 1); break;
        default: if (pos < text.size()) text[pos] = alphabet[rng() % alphabet.size()];
      }
    }
    try {
      parse_recursion(text);
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
    } catch (...) {
      FAIL("unexpected exception type for input: ", text);
    }
  }
}
