#ifndef TAGIMPACT_CORPUS_IO_H_
#define TAGIMPACT_CORPUS_IO_H_

#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "tagimpact/chunking.h"
#include "tagimpact/extraction.h"
#include "tagimpact/textprep.h"

namespace tagimpact {

// "id<TAB>text" per line; blank lines skipped.
std::vector<Document> read_raw_corpus(std::istream &in);

// "short<TAB>long" per line; blank lines and "//" comments skipped.
AbbreviationTable read_abbreviations(std::istream &in);

// One sentence per line, word_TAG tokens. A line starting with '#' whose first
// field is not a word_TAG token is a comment naming the document of the
// sentences that follow it.
std::vector<TaggedSentence> read_tagged_corpus(std::istream &in);
void write_tagged_corpus(const std::vector<TaggedSentence> &corpus,
                         std::ostream &out);

// Same layout as the tagged corpus, with chunk brackets.
std::vector<ChunkedSentence> read_chunked_corpus(std::istream &in);
void write_chunked_corpus(const std::vector<ChunkedSentence> &corpus,
                          std::ostream &out);

// "doc_id<TAB>agent<TAB>target<TAB>verb" with a header line. On reading the
// header is optional and the verb column may be missing.
void write_relations_tsv(const std::vector<DocRelation> &relations,
                         std::ostream &out);
std::vector<DocRelation> read_relations_tsv(std::istream &in, bool directional);

// Opens `path` or throws FormatError.
std::ifstream open_input(const std::filesystem::path &path);

// Writes through a temporary file in the same directory and renames it over
// `path`, so readers never see a partial file.
void write_atomically(const std::filesystem::path &path,
                      const std::function<void(std::ostream &)> &writer);

}  // namespace tagimpact

#endif  // TAGIMPACT_CORPUS_IO_H_
