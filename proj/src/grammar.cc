#include "tagimpact/grammar.h"

#include <algorithm>
#include <bitset>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "tagimpact/errors.h"

namespace tagimpact {
namespace {

using SymbolSet = std::bitset<kNumSymbols>;

const std::map<std::string, GrammarPosition, std::less<>> &class_positions() {
  static const std::map<std::string, GrammarPosition, std::less<>> table = {
      {"PREDET", GrammarPosition::NpPredeterminer},
      {"DET", GrammarPosition::NpDeterminer},
      {"NMOD", GrammarPosition::NpModifier},
      {"PART", GrammarPosition::NpModifier},
      {"NHEAD", GrammarPosition::NpHead},
      {"STANDALONE", GrammarPosition::NpStandalone},
      {"POSLINK", GrammarPosition::NpPossessiveLink},
      {"ADVG", GrammarPosition::VpAdverb},
      {"MODAL", GrammarPosition::VpModal},
      {"VCORE", GrammarPosition::VpVerbCore},
      {"PARTICLE", GrammarPosition::VpParticle},
      {"INFMARK", GrammarPosition::VpInfinitiveMarker},
      {"INFVERB", GrammarPosition::VpInfinitiveVerb},
      {"INFADV", GrammarPosition::VpInfinitiveAdverb},
  };
  return table;
}

// Expression tree after name expansion.
struct Node {
  enum Kind { kLiteral, kConcat, kAlternate, kOptional, kStar, kPlus };
  Kind kind = kLiteral;
  SymbolSet symbols;
  std::optional<GrammarPosition> position;
  std::vector<Node> children;
};

struct Token {
  enum Kind { kName, kOperator } kind;
  std::string text;
};

bool is_operator(char c) {
  return c == '(' || c == ')' || c == '|' || c == '?' || c == '*' || c == '+';
}

std::vector<Token> lex(std::string_view expr) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < expr.size()) {
    char c = expr[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == '\\' && i + 1 < expr.size()) {
      tokens.push_back({Token::kName, std::string(1, expr[i + 1])});
      i += 2;
    } else if (is_operator(c)) {
      tokens.push_back({Token::kOperator, std::string(1, c)});
      ++i;
    } else {
      std::size_t j = i;
      while (j < expr.size() && expr[j] != ' ' && expr[j] != '\t' &&
             !is_operator(expr[j])) {
        ++j;
      }
      tokens.push_back({Token::kName, std::string(expr.substr(i, j - i))});
      i = j;
    }
  }
  return tokens;
}

class ExpressionParser {
 public:
  ExpressionParser(const std::map<std::string, std::string, std::less<>> &defs)
      : definitions_(defs) {}

  Node expand(const std::string &name, std::optional<GrammarPosition> position,
              std::vector<std::string> &stack) {
    if (std::find(stack.begin(), stack.end(), name) != stack.end()) {
      throw FormatError("grammar: recursive definition of " + name);
    }
    auto def = definitions_.find(name);
    if (def == definitions_.end()) {
      throw FormatError("grammar: undefined name " + name);
    }
    auto labelled = class_positions().find(name);
    if (labelled != class_positions().end()) position = labelled->second;

    stack.push_back(name);
    State state{lex(def->second), 0, position, &stack};
    Node node = parse_alternation(state);
    if (state.pos != state.tokens.size()) {
      throw FormatError("grammar: unexpected '" + state.tokens[state.pos].text +
                        "' in " + name);
    }
    stack.pop_back();
    return node;
  }

 private:
  struct State {
    std::vector<Token> tokens;
    std::size_t pos;
    std::optional<GrammarPosition> position;
    std::vector<std::string> *stack;

    const Token *peek() const {
      return pos < tokens.size() ? &tokens[pos] : nullptr;
    }
    bool at_operator(char op) const {
      const Token *t = peek();
      return t && t->kind == Token::kOperator && t->text[0] == op;
    }
  };

  Node parse_alternation(State &s) {
    Node first = parse_concatenation(s);
    if (!s.at_operator('|')) return first;
    Node alt;
    alt.kind = Node::kAlternate;
    alt.children.push_back(std::move(first));
    while (s.at_operator('|')) {
      ++s.pos;
      alt.children.push_back(parse_concatenation(s));
    }
    return alt;
  }

  Node parse_concatenation(State &s) {
    Node cat;
    cat.kind = Node::kConcat;
    while (s.peek() && !s.at_operator(')') && !s.at_operator('|')) {
      cat.children.push_back(parse_postfix(s));
    }
    if (cat.children.empty()) throw FormatError("grammar: empty expression");
    if (cat.children.size() == 1) return std::move(cat.children.front());
    return cat;
  }

  Node parse_postfix(State &s) {
    Node atom = parse_atom(s);
    while (s.at_operator('?') || s.at_operator('*') || s.at_operator('+')) {
      Node wrapped;
      char op = s.peek()->text[0];
      wrapped.kind = op == '?' ? Node::kOptional
                   : op == '*' ? Node::kStar
                               : Node::kPlus;
      wrapped.children.push_back(std::move(atom));
      atom = std::move(wrapped);
      ++s.pos;
    }
    return atom;
  }

  Node parse_atom(State &s) {
    const Token *t = s.peek();
    if (!t) throw FormatError("grammar: unexpected end of expression");
    if (t->kind == Token::kOperator) {
      if (t->text[0] != '(') {
        throw FormatError("grammar: unexpected '" + t->text + "'");
      }
      ++s.pos;
      Node inner = parse_alternation(s);
      if (!s.at_operator(')')) throw FormatError("grammar: missing ')'");
      ++s.pos;
      return inner;
    }
    ++s.pos;
    if (definitions_.count(t->text)) {
      return expand(t->text, s.position, *s.stack);
    }
    PosTag tag = parse_tag(t->text);
    if (!s.position) {
      throw FormatError("grammar: tag " + t->text +
                        " is not inside a positional class");
    }
    Node lit;
    lit.kind = Node::kLiteral;
    lit.symbols.set(symbol_of(tag));
    lit.position = s.position;
    return lit;
  }

  const std::map<std::string, std::string, std::less<>> &definitions_;
};

}  // namespace

// Thompson construction followed by subset construction.
class PatternCompiler {
 public:
  TagPattern compile(const Node &root,
                     std::array<std::vector<GrammarPosition>, kNumSymbols>
                         &positions) {
    Fragment f = build(root, positions);
    accept_ = f.end;
    return determinize(f.start);
  }

 private:
  struct NfaState {
    SymbolSet symbols;
    int target = -1;
    std::vector<int> epsilon;
  };
  struct Fragment {
    int start;
    int end;
  };

  int add_state() {
    states_.emplace_back();
    return static_cast<int>(states_.size()) - 1;
  }

  void link(int from, int to) { states_[from].epsilon.push_back(to); }

  Fragment build(const Node &node,
                 std::array<std::vector<GrammarPosition>, kNumSymbols>
                     &positions) {
    int start = add_state();
    int end = add_state();
    switch (node.kind) {
      case Node::kLiteral: {
        states_[start].symbols = node.symbols;
        states_[start].target = end;
        for (std::size_t s = 0; s < kNumSymbols; ++s) {
          if (!node.symbols.test(s)) continue;
          auto &list = positions[s];
          if (std::find(list.begin(), list.end(), *node.position) == list.end()) {
            list.push_back(*node.position);
          }
        }
        break;
      }
      case Node::kConcat: {
        int prev = start;
        for (const Node &child : node.children) {
          Fragment f = build(child, positions);
          link(prev, f.start);
          prev = f.end;
        }
        link(prev, end);
        break;
      }
      case Node::kAlternate:
        for (const Node &child : node.children) {
          Fragment f = build(child, positions);
          link(start, f.start);
          link(f.end, end);
        }
        break;
      case Node::kOptional:
      case Node::kStar:
      case Node::kPlus: {
        Fragment f = build(node.children.front(), positions);
        link(start, f.start);
        link(f.end, end);
        if (node.kind != Node::kPlus) link(start, end);
        if (node.kind != Node::kOptional) link(f.end, f.start);
        break;
      }
    }
    return {start, end};
  }

  std::vector<bool> closure(std::vector<int> seeds) const {
    std::vector<bool> in(states_.size(), false);
    while (!seeds.empty()) {
      int s = seeds.back();
      seeds.pop_back();
      if (in[s]) continue;
      in[s] = true;
      for (int e : states_[s].epsilon) {
        if (!in[e]) seeds.push_back(e);
      }
    }
    return in;
  }

  TagPattern determinize(int start) {
    TagPattern pattern;
    std::map<std::vector<bool>, int> ids;
    std::vector<std::vector<bool>> pending;

    auto intern = [&](std::vector<bool> set) {
      auto it = ids.find(set);
      if (it != ids.end()) return it->second;
      int id = static_cast<int>(pattern.accepting_.size());
      ids.emplace(set, id);
      pattern.accepting_.push_back(set[accept_]);
      pattern.transitions_.emplace_back();
      pattern.transitions_.back().fill(-1);
      pending.push_back(std::move(set));
      return id;
    };

    intern(closure({start}));
    for (std::size_t done = 0; done < pending.size(); ++done) {
      std::vector<bool> current = pending[done];
      for (std::size_t sym = 0; sym < kNumSymbols; ++sym) {
        std::vector<int> next;
        for (std::size_t s = 0; s < current.size(); ++s) {
          if (current[s] && states_[s].target >= 0 &&
              states_[s].symbols.test(sym)) {
            next.push_back(states_[s].target);
          }
        }
        if (next.empty()) continue;
        int id = intern(closure(std::move(next)));
        pattern.transitions_[done][sym] = id;
      }
    }
    return pattern;
  }

  std::vector<NfaState> states_;
  int accept_ = -1;
};

std::size_t TagPattern::longest_match(std::span<const std::uint8_t> symbols,
                                      std::size_t start,
                                      std::size_t limit) const {
  limit = std::min(limit, symbols.size());
  std::size_t best = 0;
  std::int32_t state = 0;
  for (std::size_t i = start; i < limit; ++i) {
    state = transitions_[state][symbols[i]];
    if (state < 0) break;
    if (accepting_[state]) best = i - start + 1;
  }
  return best;
}

std::string canonical_grammar_text(GrammarFlags flags) {
  std::ostringstream out;
  out << "PREDET     := PDT\n"
         "DET        := DT | PRP$ | WDT | WP$\n"
         "DETG       := PREDET? DET\n"
         "NMOD       := JJ | JJR | JJS | , | CC | NN | NNS | NNP | NNPS | CD\n"
         "NHEAD      := NN | NNS | NNP | NNPS | CD\n";
  if (flags.np_participle_modifiers) {
    out << "PART       := VBG/VX | VBD/VX | VBN/VX\n"
           "BASE       := (DETG (NMOD | PART)* | NMOD*) NHEAD+\n";
  } else {
    out << "BASE       := DETG? NMOD* NHEAD+\n";
  }
  out << "STANDALONE := EX | PRP | WP | WDT\n"
         "POSLINK    := POS\n"
         "NP         := (BASE POSLINK)? BASE | STANDALONE\n"
         "ADVG       := RB | RBR | RBS | WRB\n"
         "MODAL      := MD\n"
         "VCORE      := VB | VBD | VBG | VBN | VBP | VBZ\n"
         "PARTICLE   := RP\n"
         "INFMARK    := TO\n";
  out << (flags.literal_infinitive_adverbs ? "INFADV     := RB\n"
                                           : "INFADV     := ADVG\n");
  out << "INFVERB    := VB | VBN\n"
         "VP         := ADVG* MODAL? ADVG* VCORE (VCORE | ADVG)* PARTICLE? "
         "(INFMARK INFADV* INFVERB PARTICLE?)?\n";
  return out.str();
}

ChunkGrammar ChunkGrammar::canonical(GrammarFlags flags) {
  return from_text(canonical_grammar_text(flags), flags);
}

ChunkGrammar ChunkGrammar::from_text(std::string_view text,
                                     GrammarFlags flags) {
  std::map<std::string, std::string, std::less<>> definitions;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line.compare(first, 2, "//") == 0) {
      continue;
    }
    std::size_t sep = line.find(":=");
    if (sep == std::string::npos) {
      throw FormatError("grammar: expected 'NAME := expr' in: " + line);
    }
    std::string name = line.substr(first, sep - first);
    name.erase(name.find_last_not_of(" \t") + 1);
    std::string expr = line.substr(sep + 2);
    if (!expr.empty() && expr.back() == '\r') expr.pop_back();
    definitions[name] = expr;
  }
  if (!definitions.count("NP") || !definitions.count("VP")) {
    throw FormatError("grammar: NP and VP must both be defined");
  }

  ChunkGrammar grammar;
  grammar.flags_ = flags;
  grammar.text_ = std::string(text);
  ExpressionParser parser(definitions);
  std::vector<std::string> stack;
  Node np = parser.expand("NP", std::nullopt, stack);
  Node vp = parser.expand("VP", std::nullopt, stack);
  grammar.np_ = PatternCompiler().compile(np, grammar.np_positions_);
  grammar.vp_ = PatternCompiler().compile(vp, grammar.vp_positions_);
  return grammar;
}

OccurrenceProfile occurrence_profile(PosTag tag, const ChunkGrammar &grammar) {
  PosTag bare = tag.unprotect();
  PosTag at_np = bare.protectable() ? bare.protect() : bare;
  OccurrenceProfile profile;
  for (auto p : grammar.np_positions(symbol_of(at_np))) profile.insert(p);
  for (auto p : grammar.vp_positions(symbol_of(bare))) profile.insert(p);
  if (profile.empty()) profile.insert(GrammarPosition::Unused);
  return profile;
}

OccurrenceProfile occurrence_profile(PosTag tag) {
  static const ChunkGrammar grammar = ChunkGrammar::canonical();
  return occurrence_profile(tag, grammar);
}

}  // namespace tagimpact
