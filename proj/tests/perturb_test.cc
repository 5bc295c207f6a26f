#include "tagimpact/perturb.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tagimpact/corpus_io.h"
#include "tagimpact/errors.h"
#include "tagimpact/pipeline.h"
#include "tagimpact/stress.h"

namespace tagimpact {
namespace {

const ChunkGrammar &grammar() {
  static const ChunkGrammar g = ChunkGrammar::canonical();
  return g;
}

// Baseline-tagged sample corpus.
const std::vector<TaggedSentence> &sample() {
  static const auto corpus = [] {
    std::ifstream in(TAGIMPACT_TEST_DATA "/sample/corpus.tsv");
    BaselineTagger tagger(Lexicon::load_file(TAGIMPACT_TEST_DATA "/lexicon.txt"),
                          load_rules_file(TAGIMPACT_TEST_DATA "/contextual_rules.txt"));
    return tagger.tag_all(prepare_corpus(read_raw_corpus(in)));
  }();
  return corpus;
}

ConfusionMatrix identity() {
  ConfusionMatrix m;
  for (PosTag t : all_tags()) m.add(t, t, 10);
  return m;
}

ConfusionMatrix send_nn_to(Tag target) {
  ConfusionMatrix m;
  for (PosTag t : all_tags()) {
    if (t == PosTag(Tag::NN)) {
      m.add(t, target, 10);
    } else {
      m.add(t, t, 10);
    }
  }
  return m;
}

TEST(Perturb, IdentityMatrixChangesNothing) {
  auto r = perturb_corpus(sample(), identity(), 100, 1, grammar());
  ASSERT_EQ(r.trials.size(), 100u);
  for (const auto &t : r.trials) {
    EXPECT_EQ(t.changed_sentences, 0u);
    EXPECT_EQ(t.substitutions, 0u);
    EXPECT_EQ(t.sentences, sample().size());
  }
  EXPECT_DOUBLE_EQ(r.changed_sentence_fraction(), 0.0);
}

TEST(Perturb, ProfileEqualSubstitutionChangesNothing) {
  auto r = perturb_corpus(sample(), send_nn_to(Tag::NNP), 100, 2, grammar());
  EXPECT_EQ(r.total.changed_sentences, 0u);
  EXPECT_EQ(r.total.changed_triples, 0u);
  EXPECT_GT(r.total.substitutions, 0u);
  EXPECT_EQ(r.total.substitutions, r.total.nullified_substitutions);
}

TEST(Perturb, ProtectedSubstitutionChangesSentences) {
  auto r = perturb_corpus(sample(), send_nn_to(Tag::VBG), 20, 3, grammar());
  EXPECT_GT(r.changed_sentence_fraction(), 0.0);
  EXPECT_GT(r.changed_triple_fraction(), 0.0);
  EXPECT_EQ(r.total.changed_sentences, r.total.changed_with_detrimental);
}

TEST(Perturb, SeedsDetermineReports) {
  auto m = identity();
  m.add(Tag::NN, Tag::VBG, 3);
  m.add(Tag::NN, Tag::NNP, 3);
  m.add(Tag::DT, Tag::JJ, 2);
  auto a = perturb_corpus(sample(), m, 30, 42, grammar());
  auto b = perturb_corpus(sample(), m, 30, 42, grammar());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, perturb_corpus_serial(sample(), m, 30, 42, grammar()));
  auto c = perturb_corpus(sample(), m, 30, 43, grammar());
  EXPECT_NE(a.total, c.total);
}

TEST(Perturb, TotalsAreSums) {
  auto m = identity();
  m.add(Tag::NN, Tag::JJ, 5);
  m.add(Tag::VBZ, Tag::NNS, 5);
  auto r = perturb_corpus(sample(), m, 10, 5, grammar());
  TrialCounts sum;
  for (const auto &t : r.trials) sum += t;
  EXPECT_EQ(sum, r.total);
  EXPECT_EQ(r.total.changed_sentences, r.total.changed_all_nullified +
                                           r.total.changed_with_detrimental +
                                           r.total.changed_context_only);
  EXPECT_EQ(r.total.substitutions, r.total.nullified_substitutions +
                                       r.total.detrimental_substitutions +
                                       r.total.context_substitutions);
}

TEST(Perturb, SubstitutionRateFollowsMatrix) {
  // Every token resampled with probability 1/2 to a different tag.
  auto corpus = random_tag_corpus(2000, 1, 20, 4);
  ConfusionMatrix m;
  for (PosTag t : all_tags()) {
    m.add(t, t, 1);
    m.add(t, t == PosTag(Tag::SYM) ? PosTag(Tag::LS) : PosTag(Tag::SYM), 1);
  }
  auto r = perturb_corpus(corpus, m, 4, 9, grammar());
  std::uint64_t tokens = 0;
  for (const auto &s : corpus) tokens += s.size();
  double rate = static_cast<double>(r.total.substitutions) / static_cast<double>(4 * tokens);
  EXPECT_NEAR(rate, 0.5, 0.01);
}

TEST(Perturb, Errors) {
  ConfusionMatrix only_nn;
  only_nn.add(Tag::NN, Tag::NN, 1);
  EXPECT_THROW(perturb_corpus(sample(), only_nn, 1, 1, grammar()), DegenerateMatrix);
  EXPECT_THROW(perturb_corpus(sample(), identity(), 0, 1, grammar()), InvalidArgument);
}

TEST(Perturb, ReportTsv) {
  auto r = perturb_corpus(sample(), identity(), 3, 1, grammar());
  std::ostringstream out;
  write_degradation_tsv(r, out);
  std::istringstream lines(out.str());
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].substr(0, 6), "trial\t");
  EXPECT_EQ(rows[4].substr(0, 4), "all\t");
}

}  // namespace
}  // namespace tagimpact
