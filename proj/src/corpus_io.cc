#include "tagimpact/corpus_io.h"

#include <sys/stat.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tagimpact/errors.h"
#include "tagimpact/external_tagger.h"

namespace tagimpact {
namespace {

std::vector<std::string> split_tabs(const std::string &line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

void strip_cr(std::string &line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_word_tag(const std::string &token) {
  try {
    parse_word_tag(token);
    return true;
  } catch (const DataError &) {
    return false;
  }
}

// Returns true and sets doc_id for a document comment line.
bool doc_comment(const std::string &line, std::string &doc_id) {
  if (line.empty() || line[0] != '#') return false;
  std::istringstream fields(line);
  std::string first;
  fields >> first;
  if (is_word_tag(first)) return false;
  std::string rest = line.substr(1);
  std::size_t b = rest.find_first_not_of(" \t");
  std::size_t e = rest.find_last_not_of(" \t");
  doc_id = b == std::string::npos ? "" : rest.substr(b, e - b + 1);
  return true;
}

// Calls fn(line, source) for every sentence line.
template <typename Fn>
void for_each_sentence(std::istream &in, Fn fn) {
  std::string line, doc;
  std::size_t index = 0, line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (doc_comment(line, doc)) {
      index = 0;
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      fn(line, SentenceId{doc, index++});
    } catch (const FormatError &e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void write_doc_header(const SentenceId &source, const std::string *&last,
                      std::ostream &out) {
  if (!source.doc_id.empty() && (!last || *last != source.doc_id)) {
    out << "# " << source.doc_id << '\n';
  }
  last = &source.doc_id;
}

}  // namespace

std::vector<Document> read_raw_corpus(std::istream &in) {
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw FormatError("raw corpus line " + std::to_string(line_no) +
                        ": expected id<TAB>text");
    }
    docs.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return docs;
}

AbbreviationTable read_abbreviations(std::istream &in) {
  AbbreviationTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() || line.rfind("//", 0) == 0) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw FormatError("abbreviation line " + std::to_string(line_no) +
                        ": expected short<TAB>long");
    }
    table[fields[0]] = fields[1];
  }
  return table;
}

std::vector<TaggedSentence> read_tagged_corpus(std::istream &in) {
  std::vector<TaggedSentence> corpus;
  for_each_sentence(in, [&](const std::string &line, SentenceId source) {
    TaggedSentence s;
    s.source = std::move(source);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      auto [word, tag] = parse_word_tag(token);
      s.words.push_back(std::move(word));
      s.tags.push_back(tag);
    }
    corpus.push_back(std::move(s));
  });
  return corpus;
}

void write_tagged_corpus(const std::vector<TaggedSentence> &corpus,
                         std::ostream &out) {
  const std::string *last = nullptr;
  for (const TaggedSentence &s : corpus) {
    write_doc_header(s.source, last, out);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << s.words[i] << '_' << serialize(s.tags[i]);
    }
    out << '\n';
  }
}

std::vector<ChunkedSentence> read_chunked_corpus(std::istream &in) {
  std::vector<ChunkedSentence> corpus;
  for_each_sentence(in, [&](const std::string &line, SentenceId source) {
    corpus.push_back(parse_chunked(line, std::move(source)));
  });
  return corpus;
}

void write_chunked_corpus(const std::vector<ChunkedSentence> &corpus,
                          std::ostream &out) {
  const std::string *last = nullptr;
  for (const ChunkedSentence &s : corpus) {
    write_doc_header(s.tagged.source, last, out);
    out << render_chunked(s) << '\n';
  }
}

void write_relations_tsv(const std::vector<DocRelation> &relations,
                         std::ostream &out) {
  out << "doc_id\tagent\ttarget\tverb\n";
  for (const DocRelation &r : relations) {
    out << r.doc_id << '\t' << r.relation.agent << '\t' << r.relation.target
        << '\t' << r.relation.verb << '\n';
  }
}

std::vector<DocRelation> read_relations_tsv(std::istream &in, bool directional) {
  std::vector<DocRelation> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("doc_id\t", 0) == 0) continue;
    auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 4) {
      throw FormatError("relations line " + std::to_string(line_no) +
                        ": expected doc_id<TAB>agent<TAB>target[<TAB>verb]");
    }
    Relation r{fields[1], fields[2], fields.size() == 4 ? fields[3] : "",
               directional};
    out.push_back({fields[0], std::move(r)});
  }
  return out;
}

std::ifstream open_input(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  return in;
}

void write_atomically(const std::filesystem::path &path,
                      const std::function<void(std::ostream &)> &writer) {
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::string pattern = (dir / ("." + path.filename().string() + ".XXXXXX")).string();
  int fd = mkstemp(pattern.data());
  if (fd < 0) throw Error("cannot create a temporary file next to " + path.string());
  ::fchmod(fd, 0644);
  ::close(fd);
  std::filesystem::path tmp = pattern;
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      writer(out);
      out.flush();
      if (!out) throw Error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

}  // namespace tagimpact
