#ifndef TAGIMPACT_PIPELINE_H_
#define TAGIMPACT_PIPELINE_H_

#include <functional>
#include <vector>

#include "tagimpact/chunking.h"
#include "tagimpact/extraction.h"
#include "tagimpact/textprep.h"

namespace tagimpact {

using TaggerFn = std::function<std::vector<TaggedSentence>(
    const std::vector<TokenizedSentence> &)>;

// prepare_document over every document, in order.
std::vector<TokenizedSentence> prepare_corpus(
    const std::vector<Document> &docs, const AbbreviationTable &abbreviations = {});

// SVO extraction and relation mapping per document. Documents appear in the
// order of their first sentence.
std::vector<DocRelation> relations_from_chunked(
    const std::vector<ChunkedSentence> &corpus, const EntityDictionary &dict,
    bool directional, const VerbTable &verbs = {});

// Raw documents to relations in one process.
std::vector<DocRelation> extract_relations(const std::vector<Document> &docs,
                                           const TaggerFn &tagger,
                                           const ChunkGrammar &grammar,
                                           const EntityDictionary &dict,
                                           bool directional,
                                           const AbbreviationTable &abbreviations = {});

}  // namespace tagimpact

#endif  // TAGIMPACT_PIPELINE_H_
