#ifndef TAGIMPACT_TAGGING_H_
#define TAGIMPACT_TAGGING_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tagimpact/tagset.h"
#include "tagimpact/textprep.h"

namespace tagimpact {

// Parallel arrays of token texts and tags; words.size() == tags.size().
struct TaggedSentence {
  std::vector<std::string> words;
  std::vector<PosTag> tags;
  SentenceId source;

  std::size_t size() const { return words.size(); }
  bool empty() const { return words.empty(); }

  friend bool operator==(const TaggedSentence &, const TaggedSentence &) = default;
};

// Word -> tags, most frequent first.
class Lexicon {
 public:
  Lexicon() = default;

  // Brill-style lexicon: "word TAG [TAG...]" per line. Lines starting with
  // "//" and blank lines are skipped. Throws UnknownTag / FormatError.
  static Lexicon load(std::istream &in);
  static Lexicon load_file(const std::string &path);

  // Appends `tag` to the word's ranking unless already present.
  void add(const std::string &word, PosTag tag);

  const std::vector<PosTag> *find(const std::string &word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<PosTag>> entries_;
};

// Tag for a word the lexicon does not know: NNP for capitalised words that
// are sentence-internal or mixed-case (GerE, IL-2), CD for numbers, NNS for
// words ending in "s", NN otherwise.
PosTag guess_unknown(const std::string &word, bool sentence_initial);

TaggedSentence tag_with_lexicon(const TokenizedSentence &sentence,
                                const Lexicon &lexicon);

// Rewrites `from` to `to` where every present condition holds. Offsets are
// relative to the current token, within +-2.
struct ContextualRule {
  struct WordCondition {
    enum Kind { kExact, kSuffix, kCapitalized } kind = kExact;
    std::string text;
  };

  PosTag from;
  PosTag to;
  std::optional<PosTag> left2, left1, right1, right2;
  std::optional<WordCondition> word;

  bool matches(const TaggedSentence &s, std::size_t i) const;
};

// One rule per line: "FROM TO TEMPLATE [args]". Templates:
//   PREVTAG t, PREV2TAG t, NEXTTAG t, NEXT2TAG t, PREVBIGRAM t1 t2,
//   NEXTBIGRAM t1 t2, SURROUNDTAG l r, CURWD w, SUFFIX s, CAP.
std::vector<ContextualRule> load_rules(std::istream &in);
std::vector<ContextualRule> load_rules_file(const std::string &path);

// Rules run in order; each scans left to right and sees its own earlier
// rewrites.
TaggedSentence apply_contextual_rules(TaggedSentence tagged,
                                      const std::vector<ContextualRule> &rules);

// Lexicon lookup followed by the rules.
class BaselineTagger {
 public:
  BaselineTagger(Lexicon lexicon, std::vector<ContextualRule> rules)
      : lexicon_(std::move(lexicon)), rules_(std::move(rules)) {}

  TaggedSentence tag(const TokenizedSentence &sentence) const {
    return apply_contextual_rules(tag_with_lexicon(sentence, lexicon_), rules_);
  }

  // Parallel over sentences; output order follows input order.
  std::vector<TaggedSentence> tag_all(
      const std::vector<TokenizedSentence> &sentences) const;

 private:
  Lexicon lexicon_;
  std::vector<ContextualRule> rules_;
};

}  // namespace tagimpact

#endif  // TAGIMPACT_TAGGING_H_
