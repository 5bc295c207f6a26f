#ifndef TAGIMPACT_EXTRACTION_H_
#define TAGIMPACT_EXTRACTION_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tagimpact/chunking.h"

namespace tagimpact {

struct PhraseRef {
  ChunkSpan span;
  std::string text;   // words of the span joined by spaces
  std::size_t head;   // token index of the head (NP) or main verb (VP)

  friend bool operator==(const PhraseRef &, const PhraseRef &) = default;
};

struct SvoTriple {
  PhraseRef subject;
  PhraseRef verb;
  std::vector<PhraseRef> objects;
  SentenceId source;

  friend bool operator==(const SvoTriple &, const SvoTriple &) = default;
};

// Index of the last NN/NNS/NNP/NNPS/CD token in the span, else its last token.
std::size_t noun_phrase_head(const TaggedSentence &s, const ChunkSpan &span);
// Index of the last verb-core token before any TO-introduced tail.
std::size_t main_verb(const TaggedSentence &s, const ChunkSpan &span);

// One triple per VP that has an NP before it (the nearest one is the subject)
// and at least one NP between it and the next VP (the objects).
std::vector<SvoTriple> extract_svo(const ChunkedSentence &chunked);

class EntityDictionary {
 public:
  EntityDictionary() = default;
  explicit EntityDictionary(const std::vector<std::string> &forms,
                            bool case_sensitive = false);

  // One surface form per line; blank lines ignored.
  static EntityDictionary load(std::istream &in, bool case_sensitive = false);
  static EntityDictionary load_file(const std::string &path,
                                    bool case_sensitive = false);

  // Greedy left-to-right longest whole-token matches; returns the
  // dictionary's spelling of each entity found.
  std::vector<std::string> find_all(const std::vector<std::string> &tokens) const;

  bool contains(const std::string &form) const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::string key(const std::string &token) const;

  bool case_sensitive_ = false;
  // key of the first token -> (key tokens, canonical form), longest first
  std::map<std::string, std::vector<std::pair<std::vector<std::string>, std::string>>>
      entries_;
  std::size_t max_tokens_ = 0;
};

struct Relation {
  std::string agent;
  std::string target;
  std::string verb;
  bool directional = true;

  // Nondirectional relations store (agent, target) in lexicographic order.
  Relation canonical() const;

  friend bool operator==(const Relation &, const Relation &) = default;
  friend auto operator<=>(const Relation &, const Relation &) = default;
};

struct DocRelation {
  std::string doc_id;
  Relation relation;

  friend bool operator==(const DocRelation &, const DocRelation &) = default;
  friend auto operator<=>(const DocRelation &, const DocRelation &) = default;
};

// Optional verb-form normalisation (binds -> bind).
using VerbTable = std::map<std::string, std::string>;

// One relation per (subject entity, object entity) pair; duplicates collapse.
// Throws InvalidArgument when the dictionary is empty.
std::vector<Relation> map_to_relations(const std::vector<SvoTriple> &triples,
                                       const EntityDictionary &dict,
                                       bool directional,
                                       const VerbTable &verbs = {});

}  // namespace tagimpact

#endif  // TAGIMPACT_EXTRACTION_H_
