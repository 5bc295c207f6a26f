#include "tagimpact/pipeline.h"

#include <map>

namespace tagimpact {

std::vector<TokenizedSentence> prepare_corpus(const std::vector<Document> &docs,
                                              const AbbreviationTable &abbreviations) {
  std::vector<TokenizedSentence> out;
  for (const Document &doc : docs) {
    for (TokenizedSentence &s : prepare_document(doc, abbreviations)) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<DocRelation> relations_from_chunked(
    const std::vector<ChunkedSentence> &corpus, const EntityDictionary &dict,
    bool directional, const VerbTable &verbs) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<SvoTriple>> by_doc;
  for (const ChunkedSentence &s : corpus) {
    const std::string &doc = s.tagged.source.doc_id;
    auto [it, inserted] = by_doc.try_emplace(doc);
    if (inserted) order.push_back(doc);
    for (SvoTriple &t : extract_svo(s)) it->second.push_back(std::move(t));
  }
  std::vector<DocRelation> out;
  for (const std::string &doc : order) {
    for (Relation &r : map_to_relations(by_doc[doc], dict, directional, verbs)) {
      out.push_back({doc, std::move(r)});
    }
  }
  return out;
}

std::vector<DocRelation> extract_relations(const std::vector<Document> &docs,
                                           const TaggerFn &tagger,
                                           const ChunkGrammar &grammar,
                                           const EntityDictionary &dict,
                                           bool directional,
                                           const AbbreviationTable &abbreviations) {
  std::vector<TokenizedSentence> sentences = prepare_corpus(docs, abbreviations);
  std::vector<TaggedSentence> tagged;
  if (!sentences.empty()) tagged = tagger(sentences);
  return relations_from_chunked(chunk_corpus(tagged, grammar), dict, directional);
}

}  // namespace tagimpact
