#include "tagimpact/corpus_io.h"

#include <gtest/gtest.h>

#include <sstream>

#include "tagimpact/errors.h"
#include "tagimpact/stress.h"
#include "test_util.h"

namespace tagimpact {
namespace {

using testing::TempDir;

TEST(RawCorpus, Reads) {
  std::istringstream in("d1\tGerE binds sigK.\n\nd2\tSecond text\twith tab\n");
  auto docs = read_raw_corpus(in);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[1].id, "d2");
  EXPECT_EQ(docs[1].text, "Second text\twith tab");
  std::istringstream bad("no tab here\n");
  EXPECT_THROW(read_raw_corpus(bad), FormatError);
}

TEST(Abbreviations, Reads) {
  std::istringstream in("// table\nIL-2\tinterleukin-2\n");
  auto t = read_abbreviations(in);
  EXPECT_EQ(t.at("IL-2"), "interleukin-2");
  std::istringstream bad("IL-2\n");
  EXPECT_THROW(read_abbreviations(bad), FormatError);
}

TEST(TaggedCorpus, DocumentComments) {
  std::istringstream in("# doc1\nGerE_NNP binds_VBZ ._.\nIt_PRP ._.\n# doc2\n#_# 5_CD\n");
  auto c = read_tagged_corpus(in);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[1].source, (SentenceId{"doc1", 1}));
  EXPECT_EQ(c[2].source, (SentenceId{"doc2", 0}));
  EXPECT_EQ(c[2].words[0], "#");
  EXPECT_EQ(c[2].tags[0], PosTag(Tag::Hash));
}

TEST(TaggedCorpus, RoundTrip) {
  auto corpus = random_tag_corpus(300, 1, 20, 3);
  for (std::size_t i = 0; i < corpus.size(); ++i) corpus[i].source = {"d" + std::to_string(i / 7), i % 7};
  std::stringstream buf;
  write_tagged_corpus(corpus, buf);
  EXPECT_EQ(read_tagged_corpus(buf), corpus);
}

TEST(TaggedCorpus, Errors) {
  std::istringstream bad_tag("a_DT b_QQ\n");
  EXPECT_THROW(read_tagged_corpus(bad_tag), UnknownTag);
  std::istringstream no_tag("a_DT b\n");
  EXPECT_THROW(read_tagged_corpus(no_tag), FormatError);
}

TEST(ChunkedCorpus, RoundTrip) {
  auto g = ChunkGrammar::canonical();
  auto corpus = random_tag_corpus(300, 1, 20, 4);
  for (std::size_t i = 0; i < corpus.size(); ++i) corpus[i].source = {"d" + std::to_string(i / 5), i % 5};
  auto chunked = chunk_corpus(corpus, g);
  std::stringstream buf;
  write_chunked_corpus(chunked, buf);
  EXPECT_EQ(read_chunked_corpus(buf), chunked);
}

TEST(Relations, RoundTrip) {
  std::vector<DocRelation> rels{{"d1", {"GerE", "sigK", "binds", true}},
                                {"d2", {"A", "B", "inhibits", true}}};
  std::stringstream buf;
  write_relations_tsv(rels, buf);
  EXPECT_EQ(read_relations_tsv(buf, true), rels);
  std::istringstream three("d1\tA\tB\n");
  EXPECT_EQ(read_relations_tsv(three, true)[0].relation.verb, "");
  std::istringstream bad("d1\tA\n");
  EXPECT_THROW(read_relations_tsv(bad, true), FormatError);
}

TEST(AtomicWrite, ReplacesAndCleansUp) {
  TempDir dir;
  std::string path = dir.file("out.txt");
  write_atomically(path, [](std::ostream &o) { o << "first\n"; });
  write_atomically(path, [](std::ostream &o) { o << "second\n"; });
  std::ifstream in(path);
  std::string text;
  std::getline(in, text);
  EXPECT_EQ(text, "second");
  EXPECT_THROW(write_atomically(path, [](std::ostream &) { throw FormatError("boom"); }), FormatError);
  std::size_t files = 0;
  for (auto &e : std::filesystem::directory_iterator(dir.path())) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 1u);
  std::ifstream again(path);
  std::getline(again, text);
  EXPECT_EQ(text, "second");
}

}  // namespace
}  // namespace tagimpact
