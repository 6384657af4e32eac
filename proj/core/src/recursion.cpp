#include "selfsim/recursion.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

constexpr std::uint32_t kMaxAlphabet = 1u << 16;

enum class TokenKind { Identifier, Integer, LParen, RParen, Comma, Equals, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t column = 1;
};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

/// Splits one line (comment already stripped) into tokens.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    const std::size_t column = i + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && is_ident_char(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({TokenKind::Identifier, std::string(line.substr(i, j - i)), column});
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({TokenKind::Integer, std::string(line.substr(i, j - i)), column});
      i = j;
    } else {
      TokenKind kind;
      switch (c) {
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case ',': kind = TokenKind::Comma; break;
        case '=': kind = TokenKind::Equals; break;
        default: {
          std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c))
                                              : "byte " + std::to_string(static_cast<unsigned>(c));
          throw ParseError(line_no, column, "unexpected character '" + shown + "'");
        }
      }
      tokens.push_back({kind, std::string(1, static_cast<char>(c)), column});
      ++i;
    }
  }
  tokens.push_back({TokenKind::End, "", line.size() + 1});
  return tokens;
}

std::uint32_t parse_number(const Token& token, std::size_t line_no) {
  if (token.text.size() > 9) throw ParseError(line_no, token.column, "number too large");
  return static_cast<std::uint32_t>(std::stoul(token.text));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct NameUse {
  std::string name;
  std::size_t line;
  std::size_t column;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no)
      : tokens_(std::move(tokens)), line_(line_no) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  const Token& expect(TokenKind kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) fail(t, std::string("expected ") + what);
    return take();
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(line_, t.column, message + (t.kind == TokenKind::End ? " at end of line" : " near '" + t.text + "'"));
  }

  std::size_t line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

/// PERM(SECTIONS) after the '='.
StateDefinition parse_state_body(LineParser& p, std::string name, std::uint32_t k,
                                 std::vector<NameUse>& uses) {
  std::vector<std::vector<Letter>> cycles;
  const Token& first = p.peek();
  if (first.kind == TokenKind::Identifier && first.text == "id" && p.peek(1).kind == TokenKind::LParen) {
    p.take();
  } else {
    while (p.peek().kind == TokenKind::LParen && p.peek(1).kind == TokenKind::Integer) {
      const Token open = p.take();
      std::vector<Letter> cycle;
      std::unordered_set<Letter> seen;
      for (;;) {
        const Token& t = p.expect(TokenKind::Integer, "letter in cycle");
        const std::uint32_t x = parse_number(t, p.line());
        if (x >= k)
          throw ParseError(p.line(), t.column,
                           "malformed cycle: letter " + t.text + " outside alphabet of size " + std::to_string(k));
        if (!seen.insert(x).second)
          throw ParseError(p.line(), t.column, "malformed cycle: letter " + t.text + " repeated");
        cycle.push_back(x);
        if (p.peek().kind == TokenKind::Comma) p.take();
        if (p.peek().kind == TokenKind::RParen) break;
        if (p.peek().kind != TokenKind::Integer) p.fail(p.peek(), "malformed cycle: expected letter or ')'");
      }
      p.take();
      for (const auto& earlier : cycles)
        for (Letter x : cycle)
          for (Letter y : earlier)
            if (x == y)
              throw ParseError(p.line(), open.column,
                               "malformed cycle: letter " + std::to_string(x) + " appears in two cycles");
      cycles.push_back(std::move(cycle));
    }
  }

  const Token& open = p.expect(TokenKind::LParen, "'(' opening the section list");
  std::vector<std::string> sections;
  for (;;) {
    const Token& t = p.expect(TokenKind::Identifier, "section state name");
    uses.push_back({t.text, p.line(), t.column});
    sections.push_back(t.text);
    if (p.peek().kind == TokenKind::Comma) {
      p.take();
      continue;
    }
    p.expect(TokenKind::RParen, "',' or ')' in section list");
    break;
  }
  if (sections.size() != k)
    throw ParseError(p.line(), open.column,
                     "wrong section arity for '" + name + "': " + std::to_string(sections.size()) +
                         " sections, alphabet size " + std::to_string(k));
  if (p.peek().kind != TokenKind::End) p.fail(p.peek(), "unexpected trailing input");

  return {std::move(name), Permutation::from_cycles(k, cycles), std::move(sections)};
}

}  // namespace

RecursionDocument parse_recursion(std::string_view text) {
  RecursionDocument doc;
  bool have_alphabet = false;
  bool have_gens = false;
  std::unordered_map<std::string, std::size_t> defined;
  std::vector<NameUse> uses;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    // Metadata keeps the raw remainder of the line, so handle it before
    // tokenizing.
    {
      std::size_t i = 0;
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && is_ident_char(static_cast<unsigned char>(line[j]))) ++j;
      std::string_view keyword = line.substr(i, j - i);
      if (keyword == "title" || keyword == "cite") {
        std::string rest = trim(line.substr(j));
        if (rest.empty() || rest[0] != '=') {
          if (rest.empty()) throw ParseError(line_no, j + 1, std::string(keyword) + " needs a value");
          (keyword == "title" ? doc.title : doc.citation) = rest;
          continue;
        }
      }
    }

    LineParser p(tokenize(line, line_no), line_no);
    const Token& head = p.peek();
    if (head.kind == TokenKind::End) continue;
    if (head.kind != TokenKind::Identifier) p.fail(head, "expected a directive or state definition");

    if (p.peek(1).kind == TokenKind::Equals) {
      if (!have_alphabet) throw ParseError(line_no, head.column, "state defined before the alphabet line");
      if (have_gens) throw ParseError(line_no, head.column, "state defined after the gens line");
      Token name = p.take();
      p.take();
      if (defined.contains(name.text))
        throw ParseError(line_no, name.column, "duplicate state name '" + name.text + "'");
      defined.emplace(name.text, doc.states.size());
      doc.states.push_back(parse_state_body(p, name.text, doc.alphabet_size, uses));
    } else if (head.text == "alphabet") {
      if (have_alphabet) throw ParseError(line_no, head.column, "duplicate alphabet line");
      p.take();
      const Token& size = p.expect(TokenKind::Integer, "alphabet size");
      const std::uint32_t k = parse_number(size, line_no);
      if (k == 0 || k > kMaxAlphabet)
        throw ParseError(line_no, size.column, "alphabet size must be between 1 and " + std::to_string(kMaxAlphabet));
      if (p.peek().kind != TokenKind::End) p.fail(p.peek(), "unexpected trailing input");
      doc.alphabet_size = k;
      have_alphabet = true;
    } else if (head.text == "gens") {
      if (have_gens) throw ParseError(line_no, head.column, "duplicate gens line");
      p.take();
      if (p.peek().kind == TokenKind::End) p.fail(p.peek(), "gens needs at least one state name");
      while (p.peek().kind != TokenKind::End) {
        const Token& g = p.expect(TokenKind::Identifier, "generator state name");
        uses.push_back({g.text, line_no, g.column});
        doc.generators.push_back(g.text);
      }
      have_gens = true;
    } else {
      p.fail(head, "expected 'alphabet', 'gens', 'title', 'cite' or 'NAME ='");
    }
  }

  if (!have_alphabet) throw ParseError(line_no, 1, "missing alphabet line");
  if (!have_gens) throw ParseError(line_no, 1, "missing gens line");

  const NameUse* first_unresolved = nullptr;
  std::vector<std::string> unresolved;
  for (const NameUse& use : uses) {
    if (defined.contains(use.name)) continue;
    if (!first_unresolved) first_unresolved = &use;
    if (std::find(unresolved.begin(), unresolved.end(), use.name) == unresolved.end())
      unresolved.push_back(use.name);
  }
  if (first_unresolved) {
    std::string list;
    for (const auto& name : unresolved) list += (list.empty() ? "" : ", ") + name;
    throw ParseError(first_unresolved->line, first_unresolved->column, "unresolved names " + list);
  }
  return doc;
}

std::string serialize(const RecursionDocument& doc) {
  std::string out;
  if (doc.title) out += "title " + *doc.title + "\n";
  if (doc.citation) out += "cite " + *doc.citation + "\n";
  out += "alphabet " + std::to_string(doc.alphabet_size) + "\n";
  for (const StateDefinition& s : doc.states) {
    out += s.name + " = " + s.permutation.to_string() + "(";
    for (std::size_t i = 0; i < s.sections.size(); ++i) {
      if (i) out += ", ";
      out += s.sections[i];
    }
    out += ")\n";
  }
  out += "gens";
  for (const auto& g : doc.generators) out += " " + g;
  out += "\n";
  return out;
}

RealizedAutomaton to_automaton(const RecursionDocument& doc) {
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::size_t q = 0; q < doc.states.size(); ++q)
    if (!index.emplace(doc.states[q].name, static_cast<std::uint32_t>(q)).second)
      throw DomainError("duplicate state name '" + doc.states[q].name + "'");
  auto resolve = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw DomainError("unresolved state name '" + name + "'");
    return StateId{it->second};
  };

  std::vector<StateSpec> specs;
  specs.reserve(doc.states.size());
  for (const StateDefinition& s : doc.states) {
    std::vector<StateId> sections;
    for (const auto& name : s.sections) sections.push_back(resolve(name));
    specs.push_back({s.name, s.permutation, std::move(sections)});
  }
  RealizedAutomaton result{MealyAutomaton(Alphabet{doc.alphabet_size}, std::move(specs)), {}};
  for (const auto& g : doc.generators) result.generators.push_back(resolve(g));
  return result;
}

RecursionDocument to_document(const MealyAutomaton& aut, std::span<const StateId> generators) {
  RecursionDocument doc;
  doc.alphabet_size = aut.alphabet().size;
  for (const StateSpec& spec : aut.specs()) {
    std::vector<std::string> sections;
    for (StateId q : spec.sections) sections.push_back(aut.name(q));
    doc.states.push_back({spec.name, spec.output, std::move(sections)});
  }
  for (StateId g : generators) doc.generators.push_back(aut.name(g));
  return doc;
}

}  // namespace selfsim
