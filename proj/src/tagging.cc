#include "tagimpact/tagging.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tagimpact/errors.h"

namespace tagimpact {
namespace {

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

bool looks_numeric(const std::string &word) {
  bool digit = false;
  for (char c : word) {
    if (is_digit(c)) {
      digit = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '+' && c != '%' &&
               c != '/') {
      return false;
    }
  }
  return digit;
}

std::vector<std::string> split_fields(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> fields;
  std::string f;
  while (in >> f) fields.push_back(f);
  return fields;
}

bool skip_line(const std::string &line) {
  std::size_t first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line.compare(first, 2, "//") == 0;
}

}  // namespace

Lexicon Lexicon::load(std::istream &in) {
  Lexicon lexicon;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    auto fields = split_fields(line);
    if (fields.size() < 2) {
      throw FormatError("lexicon line " + std::to_string(lineno) +
                        ": expected 'word TAG...'");
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
      lexicon.add(fields[0], parse_tag(fields[i]));
    }
  }
  return lexicon;
}

Lexicon Lexicon::load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open lexicon " + path);
  return load(in);
}

void Lexicon::add(const std::string &word, PosTag tag) {
  auto &ranked = entries_[word];
  if (std::find(ranked.begin(), ranked.end(), tag) == ranked.end()) {
    ranked.push_back(tag);
  }
}

const std::vector<PosTag> *Lexicon::find(const std::string &word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

PosTag guess_unknown(const std::string &word, bool sentence_initial) {
  if (looks_numeric(word)) return Tag::CD;
  if (!word.empty() && is_upper(word.front())) {
    bool mixed = std::any_of(word.begin() + 1, word.end(),
                             [](char c) { return is_upper(c) || is_digit(c); });
    if (!sentence_initial || mixed) return Tag::NNP;
  }
  if (word.size() > 1 && word.back() == 's') return Tag::NNS;
  return Tag::NN;
}

TaggedSentence tag_with_lexicon(const TokenizedSentence &sentence,
                                const Lexicon &lexicon) {
  TaggedSentence out;
  out.source = sentence.source;
  out.words = sentence.tokens;
  out.tags.reserve(sentence.tokens.size());
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const std::string &word = sentence.tokens[i];
    const std::vector<PosTag> *ranked = lexicon.find(word);
    if (!ranked && i == 0) {
      std::string lowered = word;
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (lowered != word) ranked = lexicon.find(lowered);
    }
    out.tags.push_back(ranked ? ranked->front() : guess_unknown(word, i == 0));
  }
  return out;
}

bool ContextualRule::matches(const TaggedSentence &s, std::size_t i) const {
  if (s.tags[i] != from) return false;
  auto tag_at = [&](std::ptrdiff_t offset) -> std::optional<PosTag> {
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + offset;
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(s.size())) return std::nullopt;
    return s.tags[static_cast<std::size_t>(j)];
  };
  if (left2 && tag_at(-2) != left2) return false;
  if (left1 && tag_at(-1) != left1) return false;
  if (right1 && tag_at(1) != right1) return false;
  if (right2 && tag_at(2) != right2) return false;
  if (word) {
    const std::string &w = s.words[i];
    switch (word->kind) {
      case WordCondition::kExact:
        if (w != word->text) return false;
        break;
      case WordCondition::kSuffix:
        if (!w.ends_with(word->text)) return false;
        break;
      case WordCondition::kCapitalized:
        if (w.empty() || !is_upper(w.front())) return false;
        break;
    }
  }
  return true;
}

std::vector<ContextualRule> load_rules(std::istream &in) {
  std::vector<ContextualRule> rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    auto f = split_fields(line);
    auto fail = [&](const std::string &why) {
      return FormatError("rules line " + std::to_string(lineno) + ": " + why);
    };
    if (f.size() < 3) throw fail("expected 'FROM TO TEMPLATE [args]'");
    ContextualRule rule;
    rule.from = parse_tag(f[0]);
    rule.to = parse_tag(f[1]);
    const std::string &tmpl = f[2];
    auto need = [&](std::size_t n) {
      if (f.size() != 3 + n) throw fail(tmpl + " takes " + std::to_string(n) + " argument(s)");
    };
    if (tmpl == "PREVTAG") {
      need(1);
      rule.left1 = parse_tag(f[3]);
    } else if (tmpl == "PREV2TAG") {
      need(1);
      rule.left2 = parse_tag(f[3]);
    } else if (tmpl == "NEXTTAG") {
      need(1);
      rule.right1 = parse_tag(f[3]);
    } else if (tmpl == "NEXT2TAG") {
      need(1);
      rule.right2 = parse_tag(f[3]);
    } else if (tmpl == "PREVBIGRAM") {
      need(2);
      rule.left2 = parse_tag(f[3]);
      rule.left1 = parse_tag(f[4]);
    } else if (tmpl == "NEXTBIGRAM") {
      need(2);
      rule.right1 = parse_tag(f[3]);
      rule.right2 = parse_tag(f[4]);
    } else if (tmpl == "SURROUNDTAG") {
      need(2);
      rule.left1 = parse_tag(f[3]);
      rule.right1 = parse_tag(f[4]);
    } else if (tmpl == "CURWD") {
      need(1);
      rule.word = {ContextualRule::WordCondition::kExact, f[3]};
    } else if (tmpl == "SUFFIX") {
      need(1);
      rule.word = {ContextualRule::WordCondition::kSuffix, f[3]};
    } else if (tmpl == "CAP") {
      need(0);
      rule.word = {ContextualRule::WordCondition::kCapitalized, ""};
    } else {
      throw fail("unknown template " + tmpl);
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<ContextualRule> load_rules_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open rules " + path);
  return load_rules(in);
}

TaggedSentence apply_contextual_rules(TaggedSentence tagged,
                                      const std::vector<ContextualRule> &rules) {
  for (const ContextualRule &rule : rules) {
    for (std::size_t i = 0; i < tagged.size(); ++i) {
      if (rule.matches(tagged, i)) tagged.tags[i] = rule.to;
    }
  }
  return tagged;
}

std::vector<TaggedSentence> BaselineTagger::tag_all(
    const std::vector<TokenizedSentence> &sentences) const {
  std::vector<TaggedSentence> out(sentences.size());
  const auto n = static_cast<std::ptrdiff_t>(sentences.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = tag(sentences[i]);
  }
  return out;
}

}  // namespace tagimpact
