#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "selfsim/catalog.hpp"
#include "selfsim/element.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/export.hpp"
#include "selfsim/limit.hpp"
#include "selfsim/nucleus.hpp"
#include "selfsim/recursion.hpp"
#include "selfsim/schreier.hpp"
#include "selfsim/spectrum.hpp"

namespace selfsim::cli {

namespace {

struct Source {
  std::string automaton_file;
  std::string catalog_key;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("--automaton", automaton_file, "recursion file");
    auto* key = cmd->add_option("--catalog", catalog_key, "catalog key (see `selfsim catalog`)");
    file->excludes(key);
  }

  RecursionDocument load() const {
    if (!catalog_key.empty()) return catalog_get(catalog_key).document;
    if (automaton_file.empty()) throw CLI::RequiredError("--automaton or --catalog");
    std::ifstream in(automaton_file, std::ios::binary);
    if (!in) throw DomainError("cannot read " + automaton_file);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_recursion(text.str());
  }
};

struct Generators {
  bool drop_identity = false;
  bool symmetrize = false;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--drop-identity", drop_identity, "leave out generators acting trivially");
    cmd->add_flag("--symmetrize", symmetrize, "adjoin generator inverses");
  }
};

/// The automaton to build graphs from, and the chosen generator states.
struct Realized {
  MealyAutomaton automaton;
  std::vector<StateId> generators;
};

Realized realize(const RecursionDocument& doc, const Generators& options) {
  RealizedAutomaton r = to_automaton(doc);
  MealyAutomaton aut = options.symmetrize ? invert(r.automaton) : r.automaton;
  std::vector<StateId> gens;
  for (StateId q : r.generators) {
    if (options.drop_identity && CanonicalElement::from_state(aut, q).is_identity()) continue;
    gens.push_back(q);
  }
  if (options.symmetrize) {
    const std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(aut.inverse(gens[i]));
  }
  if (gens.empty()) throw DomainError("no generators left to build from");
  return {std::move(aut), std::move(gens)};
}

std::vector<CanonicalElement> generator_elements(const RecursionDocument& doc) {
  RealizedAutomaton r = to_automaton(doc);
  std::vector<CanonicalElement> gens;
  for (StateId q : r.generators) gens.push_back(CanonicalElement::from_state(r.automaton, q));
  return gens;
}

/// Writes to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string fixed(double x, int digits) {
  char buf[64];
  // keeps "-0.000..." out of the output
  std::snprintf(buf, sizeof buf, "%.*f", digits, std::fabs(x) < 0.5 * std::pow(10.0, -digits) ? 0.0 : x);
  return buf;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-similar groups: Schreier graphs, nucleus, limit-space approximations"};
  app.name("selfsim");
  app.require_subcommand(1);

  std::uint64_t vertex_cap = default_vertex_cap();
  std::string format_text = "edges";
  std::string out_path;

  // gen
  Source gen_source;
  Generators gen_options;
  std::size_t gen_level = 0;
  bool gen_simplicial = false;
  auto* gen = app.add_subcommand("gen", "build the level-n Schreier graph");
  gen_source.attach(gen);
  gen_options.attach(gen);
  gen->add_option("--level", gen_level, "tree level n")->required();
  gen->add_option("--format", format_text, "dot, graphml, edges or matrix")->capture_default_str();
  gen->add_flag("--simplicial", gen_simplicial, "forget loops and multiple edges");
  gen->add_option("--out", out_path, "output file (default: standard output)");
  gen->add_option("--vertex-cap", vertex_cap, "largest vertex count to build")->capture_default_str();

  // nucleus
  Source nucleus_source;
  NucleusLimits limits;
  auto* nucleus = app.add_subcommand("nucleus", "compute the nucleus or report that the bounds were exceeded");
  nucleus_source.attach(nucleus);
  nucleus->add_option("--max-elements", limits.max_elements, "element bound")->capture_default_str();
  nucleus->add_option("--max-depth", limits.max_depth, "certifying depth bound")->capture_default_str();

  // check
  std::string check_key;
  auto* check = app.add_subcommand("check", "run the expected-property list of a catalog entry");
  check->add_option("--catalog", check_key, "catalog key")->required();

  // equiv
  Source equiv_source;
  NucleusLimits equiv_limits;
  std::string point_p, point_q;
  bool equiv_class = false;
  auto* equiv = app.add_subcommand("equiv", "asymptotic equivalence of two boundary points, e.g. \"1^w\" \"0^w\"");
  equiv_source.attach(equiv);
  equiv->add_option("p", point_p, "boundary point PERIOD^w PREPERIOD")->required();
  equiv->add_option("q", point_q, "second boundary point");
  equiv->add_flag("--class", equiv_class, "list the equivalence class of p");
  equiv->add_option("--max-elements", equiv_limits.max_elements, "nucleus element bound")->capture_default_str();
  equiv->add_option("--max-depth", equiv_limits.max_depth, "nucleus depth bound")->capture_default_str();

  // ssg
  Source ssg_source;
  std::size_t ssg_depth = 0;
  auto* ssg = app.add_subcommand("ssg", "self-similarity graph on words of length <= depth");
  ssg_source.attach(ssg);
  ssg->add_option("--depth", ssg_depth, "deepest level")->required();
  ssg->add_option("--format", format_text, "dot, graphml, edges or matrix")->capture_default_str();
  ssg->add_option("--out", out_path, "output file");
  ssg->add_option("--vertex-cap", vertex_cap, "largest vertex count to build")->capture_default_str();

  // spectrum
  Source spectrum_source;
  Generators spectrum_options;
  std::size_t spectrum_level = 0;
  auto* spec = app.add_subcommand("spectrum", "eigenvalues of the symmetrized random walk on Gamma_n");
  spectrum_source.attach(spec);
  spectrum_options.attach(spec);
  spec->add_option("--level", spectrum_level, "tree level n")->required();

  // pointed
  Source pointed_source;
  Generators pointed_options;
  std::string xi_text;
  std::size_t pointed_level = 0;
  bool pointed_sequence = false;
  auto* pointed = app.add_subcommand("pointed", "component of Gamma_n rooted at the prefix of a boundary point");
  pointed_source.attach(pointed);
  pointed_options.attach(pointed);
  pointed->add_option("--xi", xi_text, "boundary point PERIOD^w PREPERIOD")->required();
  pointed->add_option("--level", pointed_level, "tree level n")->required();
  pointed->add_flag("--sequence", pointed_sequence, "emit every level 1..n");
  pointed->add_option("--format", format_text, "dot, graphml, edges or matrix")->capture_default_str();
  pointed->add_option("--out", out_path, "output file");
  pointed->add_option("--vertex-cap", vertex_cap, "largest vertex count to build")->capture_default_str();

  // catalog, show
  auto* list = app.add_subcommand("catalog", "list the built-in automata");
  std::string show_key;
  auto* show = app.add_subcommand("show", "print a catalog entry as recursion text");
  show->add_option("key", show_key, "catalog key")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const BuildOptions build{vertex_cap};

    if (*gen) {
      const GraphFormat format = parse_graph_format(format_text);
      const Realized r = realize(gen_source.load(), gen_options);
      const LabeledSchreierGraph g = build_schreier(r.automaton, r.generators, gen_level, build);
      Sink sink(out_path, out);
      if (gen_simplicial)
        write_graph(sink.stream(), simplicial(g), vertex_names(g), format);
      else
        write_graph(sink.stream(), g, format);
      return kOk;
    }

    if (*nucleus) {
      const RecursionDocument doc = nucleus_source.load();
      const auto gens = generator_elements(doc);
      const NucleusResult result = compute_nucleus(gens, limits);
      if (!result.contracting()) {
        out << "bound exceeded: "
            << (result.exceeded == NucleusResult::Bound::Depth
                    ? "certifying depth above " + std::to_string(result.bound)
                    : "more than " + std::to_string(result.bound) + " elements")
            << " (" << result.witness_count << " elements collected)\n";
        return kOk;
      }
      out << "# contracting: |N| = " << result.elements.size() << ", certifying depth " << result.depth << "\n";
      // Each nucleus element becomes one state n<i> of a recursion document.
      const RealizedAutomaton realized = to_automaton(doc);
      const SelfSimilarGroup group(realized.automaton, realized.generators);
      for (std::size_t i = 0; i < result.elements.size(); ++i) {
        const CanonicalElement& e = result.elements[i];
        std::string name;
        if (e.is_identity()) name = "1";
        for (std::size_t g = 0; g < group.rank() && name.empty(); ++g) {
          if (e == group.generator(g)) name = group.generator_names()[g];
          if (e == group.generator_inverse(g)) name = group.generator_names()[g] + "^-1";
        }
        if (!name.empty()) out << "# n" << i << " = " << name << "\n";
      }
      RecursionDocument nd;
      nd.alphabet_size = doc.alphabet_size;
      for (std::size_t i = 0; i < result.elements.size(); ++i) {
        const CanonicalElement& e = result.elements[i];
        std::vector<std::string> sections;
        for (Letter x = 0; x < doc.alphabet_size; ++x)
          sections.push_back("n" + std::to_string(result.index_of(e.node_element(e.table().succ(0, x)))));
        nd.states.push_back(StateDefinition{"n" + std::to_string(i), e.root_permutation(), std::move(sections)});
        nd.generators.push_back("n" + std::to_string(i));
      }
      out << serialize(nd);
      return kOk;
    }

    if (*check) {
      const CatalogEntry& entry = catalog_get(check_key);
      bool all = true;
      for (const CheckOutcome& o : run_checks(entry)) {
        out << (o.passed ? "[pass] " : "[FAIL] ") << o.description;
        if (!o.detail.empty()) out << " (" << o.detail << ")";
        out << "\n";
        all = all && o.passed;
      }
      if (entry.checks.empty()) out << "no expected properties recorded for " << entry.key << "\n";
      return all ? kOk : kValidation;
    }

    if (*equiv) {
      const RecursionDocument doc = equiv_source.load();
      const NucleusResult result = compute_nucleus(generator_elements(doc), equiv_limits);
      const NucleusAutomaton na(result);
      const BoundaryPoint p = BoundaryPoint::parse(point_p);
      if (equiv_class) {
        for (const BoundaryPoint& x : equivalence_class(na, p)) out << x.to_string() << "\n";
        return kOk;
      }
      if (point_q.empty()) throw CLI::RequiredError("q");
      const BoundaryPoint q = BoundaryPoint::parse(point_q);
      const EquivalenceResult r = asymptotic_equivalent(na, p, q);
      if (!r.equivalent) {
        out << "not equivalent\n";
        return kOk;
      }
      out << "equivalent\n";
      const EquivalenceWitness& w = *r.witness;
      auto name = [&](const CanonicalElement& g) { return "n" + std::to_string(*na.index_of(g)); };
      out << "tail:";
      for (const auto& g : w.tail) out << " " << name(g);
      out << "\ncycle:";
      for (const auto& g : w.cycle) out << " " << name(g);
      out << "\n";
      return kOk;
    }

    if (*ssg) {
      const GraphFormat format = parse_graph_format(format_text);
      const SelfSimilarityGraph g = self_similarity_graph(generator_elements(ssg_source.load()), ssg_depth, build);
      std::vector<std::string> names;
      for (std::uint32_t v = 0; v < g.graph.vertex_count; ++v) {
        const std::string w = format_word(g.vertex_word(v));
        names.push_back(w.empty() ? "e" : w);
      }
      Sink sink(out_path, out);
      write_graph(sink.stream(), g.graph, names, format);
      return kOk;
    }

    if (*spec) {
      const Realized r = realize(spectrum_source.load(), spectrum_options);
      const LabeledSchreierGraph g = build_schreier(r.automaton, r.generators, spectrum_level);
      const std::vector<double> values = spectrum(g);
      out << "# " << values.size() << " eigenvalues, multiplicity of 1: " << multiplicity_of_one(values)
          << ", components: " << connected_components(g).count() << "\n";
      for (double x : values) out << fixed(x, 12) << "\n";
      return kOk;
    }

    if (*pointed) {
      const GraphFormat format = parse_graph_format(format_text);
      const Realized r = realize(pointed_source.load(), pointed_options);
      const BoundaryPoint xi = BoundaryPoint::parse(xi_text);
      Sink sink(out_path, out);
      if (pointed_sequence) {
        for (const PointedGraph& g : gh_sequence(r.automaton, r.generators, xi, pointed_level, build)) {
          sink.stream() << "# level " << g.level << ", root " << format_word(g.vertex_word(g.root)) << ", "
                        << g.vertices.size() << " vertices\n";
          sink.stream() << export_graph(g, format);
        }
      } else {
        sink.stream() << export_graph(pointed_component(r.automaton, r.generators, xi, pointed_level, build), format);
      }
      return kOk;
    }

    if (*list) {
      for (const CatalogEntry& e : catalog_list())
        out << e.key << "\t" << e.title << (e.from_source ? "" : " [not from the source list]") << "\n";
      return kOk;
    }

    if (*show) {
      const CatalogEntry& e = catalog_get(show_key);
      out << "# " << e.note << "\n" << serialize(e.document);
      return kOk;
    }
  } catch (const CLI::Error& e) {
    err << "selfsim: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "selfsim: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "selfsim: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}

}  // namespace selfsim::cli
