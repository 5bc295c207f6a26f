#ifndef TAGIMPACT_TEXTPREP_H_
#define TAGIMPACT_TEXTPREP_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tagimpact {

struct Document {
  std::string id;
  std::string text;
};

// Where a sentence came from.
struct SentenceId {
  std::string doc_id;
  std::size_t index = 0;

  friend bool operator==(const SentenceId &, const SentenceId &) = default;
};

struct TokenizedSentence {
  std::vector<std::string> tokens;
  SentenceId source;
};

// Short form -> long form.
using AbbreviationTable = std::map<std::string, std::string>;

// Replaces every short form bounded by non-word characters with its long
// form. Longer short forms win when several start at the same offset. With an
// empty table this is the identity.
std::string expand_abbreviations(std::string_view text,
                                 const AbbreviationTable &table = {});

// Tokens ending in '.' that never end a sentence (lower-cased, with the
// trailing period), e.g. "e.g.", "fig.".
const std::set<std::string> &default_non_splitting_tokens();

class SentenceSplitter {
 public:
  SentenceSplitter() : exceptions_(default_non_splitting_tokens()) {}
  explicit SentenceSplitter(std::set<std::string> exceptions)
      : exceptions_(std::move(exceptions)) {}

  // Splits at '.', '!' or '?' (optionally followed by closing brackets or
  // quotes) when followed by whitespace and an uppercase letter, or by the end
  // of the text. A period closing a single uppercase letter, a listed
  // abbreviation or a number does not end a sentence.
  std::vector<std::string> split(std::string_view text) const;

 private:
  bool is_exception(std::string_view word) const;

  std::set<std::string> exceptions_;
};

std::vector<std::string> split_sentences(std::string_view text);

// Whitespace split, then leading ( [ { " ` ' and trailing ) ] } " ' , ; :
// are detached; the sentence-final . ! ? is detached from the last word.
// Hyphens, digits and internal periods stay inside words.
TokenizedSentence tokenize(std::string_view sentence, SentenceId source = {});

// split_sentences + tokenize over one document.
std::vector<TokenizedSentence> prepare_document(
    const Document &doc, const AbbreviationTable &abbreviations = {},
    const SentenceSplitter &splitter = SentenceSplitter());

}  // namespace tagimpact

#endif  // TAGIMPACT_TEXTPREP_H_
