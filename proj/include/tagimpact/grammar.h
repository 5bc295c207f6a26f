#ifndef TAGIMPACT_GRAMMAR_H_
#define TAGIMPACT_GRAMMAR_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tagimpact/tagset.h"

namespace tagimpact {

struct GrammarFlags {
  // Admit protected VBG/VBD/VBN as noun-phrase modifiers after a determiner.
  bool np_participle_modifiers = false;
  // Use the original "TO RB* (VB|VBN)" infinitive tail instead of allowing
  // any adverb class between TO and the verb.
  bool literal_infinitive_adverbs = false;

  friend bool operator==(const GrammarFlags &, const GrammarFlags &) = default;
};

// A tag-sequence pattern compiled to a DFA over the symbol alphabet.
class TagPattern {
 public:
  TagPattern() = default;

  // Length of the longest match that starts at `start` and ends at or before
  // `limit`; 0 when nothing (non-empty) matches.
  std::size_t longest_match(std::span<const std::uint8_t> symbols,
                            std::size_t start, std::size_t limit) const;

  std::size_t num_states() const { return accepting_.size(); }

 private:
  friend class PatternCompiler;

  std::vector<std::array<std::int32_t, kNumSymbols>> transitions_;
  std::vector<bool> accepting_;
};

// NP and VP patterns plus the grammar position each tag symbol can fill.
//
// Grammars are written as definitions "NAME := expr", one per line. An
// expression is a sequence of tags and names combined with ( ) | ? * +.
// Tags are separated by whitespace; the bracket tags are written \( and \).
// A line starting with "//" is a comment. Every tag literal must sit inside a
// named class that maps to a grammar position (DET, NMOD, VCORE, ...), and
// the definitions NP and VP must exist.
class ChunkGrammar {
 public:
  // The default grammar (see canonical_grammar_text).
  static ChunkGrammar canonical(GrammarFlags flags = {});

  static ChunkGrammar from_text(std::string_view text,
                                GrammarFlags flags = {});

  const TagPattern &np() const { return np_; }
  const TagPattern &vp() const { return vp_; }
  const GrammarFlags &flags() const { return flags_; }
  const std::string &text() const { return text_; }

  // Positions available to `symbol` (see symbol_of) in each phrase pattern.
  const std::vector<GrammarPosition> &np_positions(std::size_t symbol) const {
    return np_positions_[symbol];
  }
  const std::vector<GrammarPosition> &vp_positions(std::size_t symbol) const {
    return vp_positions_[symbol];
  }

 private:
  GrammarFlags flags_;
  std::string text_;
  TagPattern np_;
  TagPattern vp_;
  std::array<std::vector<GrammarPosition>, kNumSymbols> np_positions_;
  std::array<std::vector<GrammarPosition>, kNumSymbols> vp_positions_;
};

std::string canonical_grammar_text(GrammarFlags flags = {});

// Every position the (unprotected) tag can be consumed in, taking verb-tag
// protection into account: VBD/VBG/VBN are seen by the NP pattern in their
// protected form. Tags that no pattern consumes get {unused}.
OccurrenceProfile occurrence_profile(PosTag tag, const ChunkGrammar &grammar);
OccurrenceProfile occurrence_profile(PosTag tag);

}  // namespace tagimpact

#endif  // TAGIMPACT_GRAMMAR_H_
