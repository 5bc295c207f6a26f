#include "tagimpact/impact.h"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "tagimpact/errors.h"
#include "tagimpact/stress.h"
#include "test_util.h"

namespace tagimpact {
namespace {

using testing::sentence_of;

const ChunkGrammar &grammar() {
  static const ChunkGrammar g = ChunkGrammar::canonical();
  return g;
}

ConfusionMatrix reference_like() {
  std::ifstream in(TAGIMPACT_TEST_DATA "/reference_confusion.tsv");
  return ConfusionMatrix::read_tsv(in);
}

TEST(Groups, Examples) {
  ConfusionMatrix diag;
  diag.add(Tag::NN, Tag::NN, 10);
  EXPECT_TRUE(group_errors(diag).empty());

  ConfusionMatrix m;
  m.add(Tag::NN, Tag::NNP, 2);
  m.add(Tag::JJ, Tag::NN, 1);
  auto g = group_errors(m);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].gold, PosTag(Tag::NN));
  EXPECT_EQ(g[0].total, 2u);
  EXPECT_EQ(g[1].gold, PosTag(Tag::JJ));
  EXPECT_DOUBLE_EQ(g[1].cumulative_fraction, 1.0);
}

TEST(Groups, SubgroupsOrderedWithTies) {
  ConfusionMatrix m;
  m.add(Tag::NN, Tag::VBG, 3);
  m.add(Tag::NN, Tag::JJ, 3);
  m.add(Tag::NN, Tag::CD, 5);
  auto g = group_errors(m);
  ASSERT_EQ(g[0].subgroups.size(), 3u);
  EXPECT_EQ(g[0].subgroups[0].assigned, PosTag(Tag::CD));
  EXPECT_EQ(g[0].subgroups[1].assigned, PosTag(Tag::JJ));
  EXPECT_EQ(g[0].subgroups[2].assigned, PosTag(Tag::VBG));
  EXPECT_DOUBLE_EQ(g[0].subgroups[2].cumulative_fraction, 1.0);
}

TEST(Selection, Thresholds) {
  ConfusionMatrix m;
  m.add(Tag::NN, Tag::NNP, 6);
  m.add(Tag::NN, Tag::JJ, 1);
  m.add(Tag::JJ, Tag::NN, 2);
  m.add(Tag::SYM, Tag::NN, 1);
  auto groups = group_errors(m);
  EXPECT_EQ(select_examined(groups, 1.0, 1.0).size(), 4u);
  // The crossing group is included.
  auto half = select_examined(groups, 0.5, 1.0);
  EXPECT_EQ(half, (std::vector<TagPair>{{Tag::NN, Tag::NNP}, {Tag::NN, Tag::JJ}}));
  EXPECT_EQ(select_examined(groups, 0.5, 0.5), (std::vector<TagPair>{{Tag::NN, Tag::NNP}}));
  EXPECT_THROW(select_examined(groups, 0.0, 1.0), InvalidArgument);
  EXPECT_THROW(select_examined(groups, 1.0, 1.5), InvalidArgument);
}

TEST(Selection, SingleGroup) {
  ConfusionMatrix m;
  m.add(Tag::NN, Tag::NNP, 4);
  EXPECT_EQ(select_examined(group_errors(m), 0.5, 1.0).size(), 1u);
}

TEST(Selection, ReferenceLikeMatrix) {
  auto groups = group_errors(reference_like());
  ASSERT_GE(groups.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(groups[i].gold, reference_examined_tags()[i]);
  EXPECT_NEAR(groups[5].cumulative_fraction, 0.866, 0.001);
  EXPECT_NEAR(groups[4].cumulative_fraction, 0.8418, 0.001);

  // The 80% rule stops after five groups.
  auto by_rule = select_examined(groups, 0.8, 1.0);
  for (const auto &p : by_rule) EXPECT_NE(p.first, PosTag(Tag::VBD));

  // 90% of each reference group: every published row except VBD -> JJ, which
  // lies past the 90% point.
  auto examined = select_examined(groups, reference_examined_tags(), 0.9);
  std::vector<TagPair> published;
  for (const auto &r : reference_verdicts()) published.emplace_back(r.gold, r.assigned);
  std::vector<TagPair> expected(published.begin(), published.end() - 1);
  EXPECT_EQ(examined, expected);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_pair(Tag::NN, Tag::NNP, grammar(), false).verdict, Verdict::Nullified);
  EXPECT_EQ(classify_pair(Tag::JJ, Tag::VBN, grammar(), false).verdict, Verdict::Detrimental);
  EXPECT_EQ(classify_pair(Tag::SYM, Tag::NN, grammar(), false).verdict, Verdict::Detrimental);
  EXPECT_EQ(classify_pair(Tag::NNS, Tag::VBZ, grammar(), true).verdict, Verdict::Nullified);
  EXPECT_EQ(classify_pair(Tag::NNS, Tag::VBZ, grammar(), false).verdict, Verdict::Detrimental);
  EXPECT_EQ(classify_pair(Tag::NN, Tag::JJ, grammar(), false).verdict, Verdict::ContextDependent);
  EXPECT_EQ(classify_pair(Tag::NN, Tag::JJ, grammar(), true).verdict, Verdict::Nullified);
  EXPECT_EQ(classify_pair(Tag::VBD, Tag::VBG, grammar(), false).verdict, Verdict::Nullified);
  EXPECT_EQ(classify_pair(Tag::SYM, Tag::SYM, grammar(), false).verdict, Verdict::Nullified);
}

TEST(Classify, ReasonsAreFilled) {
  for (PosTag g : all_tags()) {
    for (PosTag a : all_tags()) {
      EXPECT_FALSE(classify_pair(g, a, grammar(), false).reason.empty());
    }
  }
}

TEST(Classify, ReferenceTableInCompatMode) {
  ASSERT_EQ(reference_verdicts().size(), 18u);
  for (const auto &row : reference_verdicts()) {
    EXPECT_EQ(classify_pair(row.gold, row.assigned, grammar(), true).verdict, row.verdict)
        << serialize(row.gold) << "->" << serialize(row.assigned);
  }
}

TEST(Classify, CompatIsBinary) {
  for (PosTag g : all_tags()) {
    for (PosTag a : all_tags()) {
      EXPECT_NE(classify_pair(g, a, grammar(), true).verdict, Verdict::ContextDependent);
    }
  }
}

TEST(VerdictFixture, ShippedFileMatches) {
  std::ifstream in(TAGIMPACT_TEST_DATA "/reference_verdicts.tsv");
  ASSERT_TRUE(in);
  auto rows = read_verdicts_tsv(in);
  ASSERT_EQ(rows.size(), 18u);
  std::size_t nullified = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].gold, reference_verdicts()[i].gold);
    EXPECT_EQ(rows[i].assigned, reference_verdicts()[i].assigned);
    EXPECT_EQ(rows[i].verdict, reference_verdicts()[i].verdict);
    nullified += rows[i].verdict == Verdict::Nullified;
  }
  EXPECT_EQ(nullified, 11u);
}

TEST(VerdictFixture, TsvRoundTrip) {
  std::stringstream buf;
  write_verdicts_tsv(reference_verdicts(), buf);
  auto rows = read_verdicts_tsv(buf);
  ASSERT_EQ(rows.size(), reference_verdicts().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].reason, reference_verdicts()[i].reason);
  }
  std::istringstream bad("gold\tassigned\tverdict\treason\nNN\tJJ\tMaybe\tx\n");
  EXPECT_THROW(read_verdicts_tsv(bad), FormatError);
}

TEST(Oracle, Examples) {
  auto s = sentence_of("DT NN");
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(substitution_oracle(s, i, s.tags[i], grammar()));
  EXPECT_TRUE(substitution_oracle(s, 1, Tag::NNP, grammar()));
  EXPECT_FALSE(substitution_oracle(s, 1, Tag::VBG, grammar()));
  EXPECT_THROW(substitution_oracle(s, 2, Tag::NN, grammar()), InvalidArgument);
}

TEST(Oracle, IdentityOnStressCorpus) {
  for (const auto &s : random_tag_corpus(500, 1, 40, 77)) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      ASSERT_TRUE(substitution_oracle(s, i, s.tags[i], grammar()));
    }
  }
}

TEST(FunctionalAccuracy, PublishedArithmetic) {
  ConfusionMatrix m;
  m.add(Tag::NN, Tag::NN, 151663);
  m.add(Tag::NN, Tag::NNP, 20928);
  m.add(Tag::NN, Tag::VBG, 182399 - 151663 - 20928);
  VerdictMap v{{{Tag::NN, Tag::NNP}, {Verdict::Nullified, ""}},
               {{Tag::NN, Tag::VBG}, {Verdict::Detrimental, ""}}};
  auto r = functional_accuracy(m, v);
  EXPECT_NEAR(r.raw_accuracy, 0.8315, 0.0001);
  EXPECT_NEAR(r.functional_accuracy, 0.9462, 0.0001);
  EXPECT_EQ(r.nullified_errors, 20928u);
}

TEST(FunctionalAccuracy, ReferenceLikeMatrixInCompatMode) {
  auto m = reference_like();
  EXPECT_EQ(m.total(), 182399u);
  EXPECT_EQ(m.diagonal(), 151663u);
  EXPECT_EQ(m.errors(), 30736u);
  auto examined = select_examined(group_errors(m), reference_examined_tags(), 1.0);
  VerdictMap v;
  for (const auto &p : examined) v[p] = classify_pair(p.first, p.second, grammar(), true);
  auto r = functional_accuracy(m, v);
  EXPECT_EQ(r.examined_errors, 26630u);
  EXPECT_EQ(r.nullified_errors, 20928u);
  EXPECT_NEAR(r.functional_accuracy, 0.9462, 0.0001);

  // The 18 published rows alone.
  VerdictMap rows;
  for (const auto &row : reference_verdicts()) rows[{row.gold, row.assigned}] = {row.verdict, ""};
  auto t = functional_accuracy(m, rows);
  EXPECT_EQ(t.examined_errors, 25086u);
  EXPECT_EQ(t.nullified_errors, 20028u);
}

TEST(FunctionalAccuracy, Bounds) {
  ConfusionMatrix diag;
  diag.add(Tag::NN, Tag::NN, 5);
  auto d = functional_accuracy(diag, {});
  EXPECT_DOUBLE_EQ(d.functional_accuracy, 1.0);
  EXPECT_DOUBLE_EQ(d.raw_accuracy, 1.0);

  ConfusionMatrix m;
  m.add(Tag::NN, Tag::NN, 5);
  m.add(Tag::NN, Tag::VBG, 5);
  VerdictMap all_bad{{{Tag::NN, Tag::VBG}, {Verdict::Detrimental, ""}}};
  auto r = functional_accuracy(m, all_bad);
  EXPECT_DOUBLE_EQ(r.functional_accuracy, r.raw_accuracy);
  EXPECT_THROW(functional_accuracy(ConfusionMatrix(), {}), EmptyMatrix);
}

TEST(FunctionalAccuracy, NeverBelowRawAccuracy) {
  auto corpus = random_tag_corpus(300, 1, 30, 5);
  auto noisy = random_tag_corpus(300, 1, 30, 5);
  std::mt19937_64 rng(6);
  for (auto &s : noisy) {
    for (auto &t : s.tags) {
      if (rng() % 3 == 0) t = all_tags()[rng() % kNumTags];
    }
  }
  ConfusionMatrix m;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t k = 0; k < corpus[i].size(); ++k) m.add(corpus[i].tags[k], noisy[i].tags[k]);
  }
  for (bool compat : {false, true}) {
    VerdictMap v;
    for (const auto &p : select_examined(group_errors(m), 1.0, 1.0)) {
      v[p] = classify_pair(p.first, p.second, grammar(), compat);
    }
    auto r = functional_accuracy(m, v);
    EXPECT_GE(r.functional_accuracy, r.raw_accuracy);
    EXPECT_EQ(r.functional_accuracy == r.raw_accuracy, r.nullified_errors == 0);
  }
}

TEST(Report, MentionsAccuracy) {
  auto m = reference_like();
  auto groups = group_errors(m);
  auto examined = select_examined(groups, reference_examined_tags(), 1.0);
  VerdictMap v;
  for (const auto &p : examined) v[p] = classify_pair(p.first, p.second, grammar(), true);
  std::ostringstream out;
  write_impact_report(groups, examined, v, functional_accuracy(m, v), out);
  EXPECT_NE(out.str().find("functional accuracy 0.9462"), std::string::npos) << out.str();
}

}  // namespace
}  // namespace tagimpact
