#ifndef TAGIMPACT_CHUNKING_H_
#define TAGIMPACT_CHUNKING_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tagimpact/grammar.h"
#include "tagimpact/tagging.h"

namespace tagimpact {

enum class ChunkKind : std::uint8_t { NounPhrase, VerbPhrase };

// Half-open token range [start, end).
struct ChunkSpan {
  ChunkKind kind;
  std::size_t start;
  std::size_t end;

  friend bool operator==(const ChunkSpan &, const ChunkSpan &) = default;
};

struct ChunkedSentence {
  TaggedSentence tagged;
  std::vector<ChunkSpan> spans;  // disjoint, sorted by start

  friend bool operator==(const ChunkedSentence &, const ChunkedSentence &) = default;
};

// Marks every VBD, VBG and VBN. Throws AlreadyProtected if any tag already is.
TaggedSentence protect_verb_tags(TaggedSentence tagged);
TaggedSentence deprotect_verb_tags(TaggedSentence tagged);

// Leftmost-longest, non-overlapping NP matches. Expects protected verb tags.
std::vector<ChunkSpan> recognize_noun_phrases(std::span<const PosTag> tags,
                                              const ChunkGrammar &grammar);

// Leftmost-longest VP matches inside each maximal run of indices with
// blocked[i] == false. `blocked` is empty or has one entry per tag.
std::vector<ChunkSpan> recognize_verb_phrases(std::span<const PosTag> tags,
                                              const std::vector<bool> &blocked,
                                              const ChunkGrammar &grammar);

// protect -> NP -> de-protect -> VP (blocked by NPs). Returns sorted spans.
// This is the hot kernel used by the substitution oracle.
std::vector<ChunkSpan> chunk_tags(std::span<const PosTag> tags,
                                  const ChunkGrammar &grammar);

ChunkedSentence chunk_tagged(const TaggedSentence &tagged,
                             const ChunkGrammar &grammar);

// Sentence-parallel; output order follows input order.
std::vector<ChunkedSentence> chunk_corpus(
    const std::vector<TaggedSentence> &corpus, const ChunkGrammar &grammar);
// Serial reference for chunk_corpus.
std::vector<ChunkedSentence> chunk_corpus_serial(
    const std::vector<TaggedSentence> &corpus, const ChunkGrammar &grammar);

// "(NP The_DT protein_NN) (VP activates_VBZ) (NP the_DT gene_NN) ._."
std::string render_chunked(const ChunkedSentence &sentence);
// Inverse of render_chunked. Throws FormatError / UnknownTag.
ChunkedSentence parse_chunked(std::string_view line, SentenceId source = {});

}  // namespace tagimpact

#endif  // TAGIMPACT_CHUNKING_H_
