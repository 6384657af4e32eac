#include "selfsim/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "selfsim/element.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/schreier.hpp"

namespace selfsim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

CatalogEntry entry(std::string key, std::string title, std::string note, bool from_source, std::string_view text,
                   std::vector<PropertyCheck> checks) {
  CatalogEntry e;
  e.key = std::move(key);
  e.title = std::move(title);
  e.note = std::move(note);
  e.from_source = from_source;
  e.document = parse_recursion(text);
  e.checks = std::move(checks);
  return e;
}

NucleusLimits limits(std::size_t max_elements, std::size_t max_depth = 20) { return {max_elements, max_depth}; }

std::string images_name(const Permutation& p, std::uint32_t m) {
  std::string s;
  for (Letter x = 0; x < m; ++x) s += std::to_string(p(x));
  return s;
}

/// Mother group M_{d,m}: a_{k,s} = <a_{k,s}, a_{k-1,s}, 1, ..., 1> with
/// a_{-1,s} = s, and b_{k,r} = <b_{k,r}, b_{k-1,r}, 1, ..., 1> with
/// b_{0,r} = r<b_{0,r}, 1, ..., 1> for r fixing 0. All nontrivial states
/// generate.
std::string mother_text(std::uint32_t d, std::uint32_t m) {
  std::vector<Permutation> perms;
  std::vector<Letter> images(m);
  for (Letter x = 0; x < m; ++x) images[x] = x;
  do {
    Permutation p(images);
    if (!p.is_identity()) perms.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));

  std::ostringstream out;
  std::vector<std::string> gens;
  out << "title Mother group M(" << d << "," << m << ")\nalphabet " << m << "\n";
  auto sections = [&](const std::string& first, const std::string& second) {
    std::string s = "(" + first + ", " + second;
    for (std::uint32_t x = 2; x < m; ++x) s += ", e";
    return s + ")";
  };
  for (const Permutation& s : perms) {
    const std::string tag = images_name(s, m);
    out << "s" << tag << " = " << s.to_string() << sections("e", "e") << "\n";
    gens.push_back("s" + tag);
    for (std::uint32_t k = 0; k <= d; ++k) {
      const std::string name = "a" + std::to_string(k) + "_" + tag;
      const std::string below = k == 0 ? "s" + tag : "a" + std::to_string(k - 1) + "_" + tag;
      out << name << " = id" << sections(name, below) << "\n";
      gens.push_back(name);
    }
  }
  for (const Permutation& r : perms) {
    if (r(0) != 0) continue;
    const std::string tag = images_name(r, m);
    for (std::uint32_t k = 0; k <= d; ++k) {
      const std::string name = "b" + std::to_string(k) + "_" + tag;
      if (k == 0)
        out << name << " = " << r.to_string() << sections(name, "e") << "\n";
      else
        out << name << " = id" << sections(name, "b" + std::to_string(k - 1) + "_" + tag) << "\n";
      gens.push_back(name);
    }
  }
  out << "e = id(e";
  for (std::uint32_t x = 1; x < m; ++x) out << ", e";
  out << ")\ngens";
  for (const auto& g : gens) out << " " << g;
  out << "\n";
  return out.str();
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;

  c.push_back(entry("trivial", "Identity automaton", "Single identity state; degenerate reference case.", false,
                    "title Identity automaton\nalphabet 2\ne = id(e, e)\ngens e\n",
                    {ComponentCount{3, 8}, ContractionVerdict{true, limits(100), 1}}));

  c.push_back(entry("odometer", "Binary odometer", "Adding machine a = (0 1)(e, a); a standard example.", false,
                    "title Binary odometer\nalphabet 2\na = (0 1)(e, a)\ne = id(e, e)\ngens a\n",
                    {ConnectedThrough{12}, ContractionVerdict{true, limits(100), 3}, RecurrentAction{}}));

  c.push_back(entry("basilica", "Basilica group IMG(z^2-1)", "As printed.", true,
                    "title Basilica group IMG(z^2-1)\nalphabet 2\na = (0 1)(b, id)\nb = id(a, id)\nid = id(id, id)\n"
                    "gens a b\n",
                    {ConnectedThrough{12}, ContractionVerdict{true, limits(1000), 7}, RecurrentAction{}}));

  c.push_back(entry("aleshin", "Aleshin automaton", "Free group of rank three. The recursion is listed twice in "
                    "the source list with different commentary; stored once.",
                    true,
                    "title Aleshin automaton\nalphabet 2\na = (0 1)(b, c)\nb = (0 1)(c, b)\nc = id(a, a)\n"
                    "gens a b c\n",
                    {ConnectedThrough{12}, ContractionVerdict{false, limits(500), std::nullopt}, FreeUpTo{4}}));

  c.push_back(entry("aut882", "Automaton 882", "As printed.", true,
                    "title Automaton 882\nalphabet 2\na = (0 1)(c, c)\nb = id(b, c)\nc = id(b, a)\ngens a b c\n",
                    {ConnectedThrough{12}, FixesVertex{"(c a^-1 c b^-1)^2", "00"},
                     SectionEquals{"(c a^-1 c b^-1)^2", "00", "c a^-1 c b^-1"}}));

  c.push_back(entry("aut878", "Automaton 878, C2 x| IMG(1-1/z^2)", "As printed.", true,
                    "title Automaton 878\nalphabet 2\na = (0 1)(b, b)\nb = id(b, c)\nc = id(b, a)\ngens a b c\n",
                    {ConnectedThrough{12}, ContractionVerdict{true, limits(1000), 10}}));

  c.push_back(entry("z2", "Self-similar action of Z^2", "As printed.", true,
                    "title Self-similar action of Z^2\nalphabet 2\na = (0 1)(e, b)\nb = id(a, a)\ne = id(e, e)\n"
                    "gens a b\n",
                    {ConnectedThrough{12}, ContractionVerdict{true, limits(1000), 9}}));

  c.push_back(entry("virtually_z3", "Virtually Z^3 group", "As printed.", true,
                    "title Virtually Z^3 group\nalphabet 2\na = (0 1)(b, b)\nb = id(c, a)\nc = id(a, a)\n"
                    "gens a b c\n",
                    {ConnectedThrough{12}, ContractionVerdict{true, limits(1000), 41}}));

  c.push_back(entry("half_basilica", "Half-Basilica group C2 x| IMG(z^2-1)", "As printed.", true,
                    "title Half-Basilica group\nalphabet 2\na = (0 1)(b, b)\nb = id(c, b)\nc = id(c, a)\n"
                    "gens a b c\n",
                    {ConnectedThrough{12}, ContractionVerdict{true, limits(1000), 8}}));

  c.push_back(entry("aut2853", "IMG(((z-1)/(z+1))^2)", "As printed; c = (c, c) is the identity state.", true,
                    "title IMG(((z-1)/(z+1))^2)\nalphabet 2\na = (0 1)(c, c)\nb = (0 1)(b, a)\nc = id(c, c)\n"
                    "gens a b c\n",
                    {ConnectedThrough{12}, ContractionVerdict{true, limits(1000), 4}}));

  c.push_back(entry("lamplighter", "Lamplighter group Z2 wr Z", "As printed.", true,
                    "title Lamplighter group\nalphabet 2\na = (0 1)(b, a)\nb = id(b, a)\ngens a b\n",
                    {ConnectedThrough{10}, ContractionVerdict{false, limits(500), std::nullopt}}));

  c.push_back(entry("long_range", "Long-range group",
                    "As printed, with the identity state written e instead of 1.", true,
                    "title Long-range group\nalphabet 2\na = id(a, b)\nb = (0 1)(b, e)\ne = id(e, e)\ngens a b\n",
                    {ConnectedThrough{10}, ComponentCount{6, 1}, ContractionVerdict{false, limits(500), std::nullopt}}));

  c.push_back(entry("sierpinski", "Sierpinski gasket group, as printed",
                    "As printed: c uses sigma_2 = (0 1) although sigma_3 = (1 2) is defined and unused. See "
                    "sierpinski_sigma3 for the other reading.",
                    true,
                    "title Sierpinski gasket group\nalphabet 3\na = (0 2)(e, a, e)\nb = (0 1)(e, e, b)\n"
                    "c = (0 1)(c, e, e)\ne = id(e, e, e)\ngens a b c\n",
                    {ConnectedThrough{6}, ContractionVerdict{true, limits(1000), 8}}));

  c.push_back(entry("sierpinski_sigma3", "Sierpinski gasket group, sigma_3 reading",
                    "Variant with c = sigma_3(c, e, e), sigma_3 = (1 2). Coincides with the Hanoi towers "
                    "recursion.",
                    true,
                    "title Sierpinski gasket group (sigma_3 variant)\nalphabet 3\na = (0 2)(e, a, e)\n"
                    "b = (0 1)(e, e, b)\nc = (1 2)(c, e, e)\ne = id(e, e, e)\ngens a b c\n",
                    {ConnectedThrough{7}, ContractionVerdict{true, limits(1000), 4}}));

  c.push_back(entry("grigorchuk", "First Grigorchuk group",
                    "Standard recursion a = (0 1), b = (a, c), c = (a, d), d = (e, b); not printed in the source.",
                    false,
                    "title First Grigorchuk group\nalphabet 2\na = (0 1)(e, e)\nb = id(a, c)\nc = id(a, d)\n"
                    "d = id(e, b)\ne = id(e, e)\ngens a b c d\n",
                    {ConnectedThrough{12}, ContractionVerdict{true, limits(1000), 5}}));

  c.push_back(entry("hanoi", "Hanoi towers group on three pegs",
                    "Standard recursion a_ij = (i j) with section a_ij at the fixed letter; not printed in the "
                    "source.",
                    false,
                    "title Hanoi towers group\nalphabet 3\na01 = (0 1)(e, e, a01)\na02 = (0 2)(e, a02, e)\n"
                    "a12 = (1 2)(a12, e, e)\ne = id(e, e, e)\ngens a01 a02 a12\n",
                    {ConnectedThrough{7}, ContractionVerdict{true, limits(1000), 4}}));

  for (std::uint32_t d = 1; d <= 3; ++d)
    for (std::uint32_t m = 2; m <= 3; ++m)
      c.push_back(entry("mother_" + std::to_string(d) + "_" + std::to_string(m),
                        "Mother group M(" + std::to_string(d) + "," + std::to_string(m) + ")",
                        "Generated from the printed family. b_{0,r} is read as r<b_{0,r}, 1, ..., 1> with r "
                        "fixing 0, so no b states exist for m = 2.",
                        true, mother_text(d, m), {ConnectedThrough{m == 2 ? std::size_t{8} : std::size_t{5}}}));
  return c;
}

SelfSimilarGroup group_of(const RecursionDocument& doc) {
  RealizedAutomaton r = to_automaton(doc);
  return SelfSimilarGroup(r.automaton, r.generators);
}

}  // namespace

std::string describe(const PropertyCheck& check) {
  return std::visit(
      Overloaded{
          [](const ConnectedThrough& c) { return "Gamma_n connected for n <= " + std::to_string(c.max_level); },
          [](const ComponentCount& c) {
            return "Gamma_" + std::to_string(c.level) + " has " + std::to_string(c.count) + " components";
          },
          [](const ContractionVerdict& c) {
            std::string s = c.contracting ? "contracting" : "closure exceeds its bounds";
            s += " (max " + std::to_string(c.limits.max_elements) + " elements, depth " +
                 std::to_string(c.limits.max_depth) + ")";
            if (c.nucleus_size) s += " with |N| = " + std::to_string(*c.nucleus_size);
            return s;
          },
          [](const FixesVertex& c) { return c.word + " fixes " + c.vertex; },
          [](const SectionEquals& c) { return "section of " + c.word + " at " + c.vertex + " is " + c.section; },
          [](const RecurrentAction& c) {
            return "recurrent (stabilizer words up to length " + std::to_string(c.max_word_length) + ")";
          },
          [](const FreeUpTo& c) {
            return "no relation of length <= " + std::to_string(c.max_length) + " among generators";
          },
      },
      check);
}

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys;
  for (const auto& e : catalog_list()) keys.push_back(e.key);
  return keys;
}

const CatalogEntry& catalog_get(std::string_view key) {
  for (const auto& e : catalog_list())
    if (e.key == key) return e;
  throw NotFoundError("no catalog entry named \"" + std::string(key) + "\"");
}

std::vector<std::string> trivial_words(const RecursionDocument& doc, std::size_t max_length, std::size_t max_report) {
  const SelfSimilarGroup group = group_of(doc);
  const auto r = static_cast<std::uint32_t>(group.rank());
  // A reduced relator of length <= L splits as u v^-1 with |u|, |v| <= ceil(L/2),
  // so it suffices to look for two distinct reduced words of that length
  // acting identically.
  const std::size_t half = (max_length + 1) / 2;
  struct Node {
    GroupWord word;
    CanonicalElement element;
  };
  std::vector<Node> level{{GroupWord{}, group.identity()}};
  std::unordered_map<CanonicalElement, GroupWord, CanonicalElementHash> seen{{group.identity(), GroupWord{}}};
  std::vector<std::string> found;
  for (std::size_t len = 1; len <= half && found.size() < max_report; ++len) {
    std::vector<Node> next;
    for (const Node& n : level)
      for (std::uint32_t g = 0; g < r; ++g)
        for (int e : {1, -1}) {
          const auto& f = n.word.factors();
          if (!f.empty() && f.back().generator == g && f.back().exponent == -e) continue;
          std::vector<GroupWord::Factor> factors = f;
          factors.push_back({g, e});
          GroupWord w(std::move(factors));
          // Appending a factor on the right multiplies on the right.
          CanonicalElement h = multiply(n.element, e == 1 ? group.generator(g) : group.generator_inverse(g));
          auto [it, inserted] = seen.try_emplace(h, w);
          if (!inserted) {
            const GroupWord relator = (w * it->second.inverse()).reduced();
            if (!relator.empty() && relator.length() <= max_length && found.size() < max_report)
              found.push_back(relator.to_string(group.generator_names()));
            continue;
          }
          next.push_back({std::move(w), std::move(h)});
        }
    level = std::move(next);
  }
  return found;
}

CheckOutcome run_check(const RecursionDocument& doc, const PropertyCheck& check) {
  CheckOutcome out;
  out.description = describe(check);
  const RealizedAutomaton realized = to_automaton(doc);
  const MealyAutomaton& aut = realized.automaton;
  const std::vector<StateId>& gens = realized.generators;

  std::visit(
      Overloaded{
          [&](const ConnectedThrough& c) {
            out.passed = true;
            for (std::size_t n = 1; n <= c.max_level && out.passed; ++n) {
              const std::size_t count = connected_components(build_schreier(aut, gens, n)).count();
              if (count != 1) {
                out.passed = false;
                out.detail = "Gamma_" + std::to_string(n) + " has " + std::to_string(count) + " components";
              }
            }
          },
          [&](const ComponentCount& c) {
            const std::size_t count = connected_components(build_schreier(aut, gens, c.level)).count();
            out.passed = count == c.count;
            out.detail = std::to_string(count) + " components";
          },
          [&](const ContractionVerdict& c) {
            const SelfSimilarGroup group(aut, gens);
            const NucleusResult r = compute_nucleus(group.generators(), c.limits);
            out.passed = r.contracting() == c.contracting;
            if (r.contracting()) {
              out.detail = "|N| = " + std::to_string(r.elements.size()) + ", depth " + std::to_string(r.depth);
              if (c.nucleus_size && *c.nucleus_size != r.elements.size()) out.passed = false;
            } else {
              out.detail = "bound exceeded with " + std::to_string(r.witness_count) + " elements";
            }
          },
          [&](const FixesVertex& c) {
            const SelfSimilarGroup group(aut, gens);
            const Word v = parse_word(c.vertex);
            const Word image = element_act(group.canonicalize(c.word), v);
            out.passed = image == v;
            out.detail = "image " + format_word(image);
          },
          [&](const SectionEquals& c) {
            const SelfSimilarGroup group(aut, gens);
            const CanonicalElement s = element_section(group.canonicalize(c.word), parse_word(c.vertex));
            out.passed = s == group.canonicalize(c.section);
            out.detail = "section has " + std::to_string(s.size()) + " states";
          },
          [&](const RecurrentAction& c) {
            const SelfSimilarGroup group(aut, gens);
            const RecurrenceResult r = is_recurrent(group.generators(), c.max_word_length);
            out.passed = r.verdict == RecurrenceResult::Verdict::Recurrent;
            out.detail = r.verdict == RecurrenceResult::Verdict::Recurrent      ? "recurrent"
                         : r.verdict == RecurrenceResult::Verdict::NotRecurrent ? "not recurrent"
                                                                                 : "inconclusive";
          },
          [&](const FreeUpTo& c) {
            const auto words = trivial_words(doc, c.max_length, 1);
            out.passed = words.empty();
            if (!words.empty()) out.detail = "trivial word " + words.front();
          },
      },
      check);
  return out;
}

std::vector<CheckOutcome> run_checks(const CatalogEntry& entry) {
  std::vector<CheckOutcome> result;
  for (const auto& check : entry.checks) result.push_back(run_check(entry.document, check));
  return result;
}

}  // namespace selfsim
