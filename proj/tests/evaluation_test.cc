#include "tagimpact/evaluation.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "tagimpact/errors.h"
#include "tagimpact/stress.h"
#include "test_util.h"

namespace tagimpact {
namespace {

using testing::parse_tagged;

TEST(Confusion, TwoTokenCase) {
  auto m = build_confusion({parse_tagged("a_DT b_NN")}, {parse_tagged("a_DT b_NNP")});
  EXPECT_EQ(m.count(Tag::DT, Tag::DT), 1u);
  EXPECT_EQ(m.count(Tag::NN, Tag::NNP), 1u);
  EXPECT_EQ(m.total(), 2u);
  EXPECT_EQ(m.errors(), 1u);
}

TEST(Confusion, IdenticalCorporaAreDiagonal) {
  auto corpus = random_tag_corpus(100, 1, 20, 1);
  auto m = build_confusion(corpus, corpus);
  EXPECT_EQ(m.diagonal(), m.total());
  EXPECT_DOUBLE_EQ(tagging_accuracy(m), 1.0);
}

TEST(Confusion, Misalignment) {
  EXPECT_THROW(build_confusion({parse_tagged("a_DT b_NN")}, {parse_tagged("a_DT c_NN")}),
               AlignmentError);
  EXPECT_THROW(build_confusion({parse_tagged("a_DT b_NN")}, {parse_tagged("a_DT")}),
               AlignmentError);
  EXPECT_THROW(build_confusion({parse_tagged("a_DT")}, {}), AlignmentError);
}

TEST(Confusion, TsvRoundTrip) {
  auto corpus = random_tag_corpus(200, 1, 20, 2);
  auto noisy = random_tag_corpus(200, 1, 20, 2);
  std::mt19937_64 rng(4);
  for (auto &s : noisy) {
    for (auto &t : s.tags) {
      if (rng() % 3 == 0) t = all_tags()[rng() % kNumTags];
    }
  }
  auto m = build_confusion(corpus, noisy);
  std::stringstream buf;
  m.write_tsv(buf);
  EXPECT_EQ(ConfusionMatrix::read_tsv(buf), m);
}

TEST(Confusion, MalformedTsv) {
  std::istringstream bad_tag("gold\tassigned\tcount\nQQ\tNN\t3\n");
  EXPECT_THROW(ConfusionMatrix::read_tsv(bad_tag), UnknownTag);
  std::istringstream bad_count("gold\tassigned\tcount\nNN\tNN\tx\n");
  EXPECT_THROW(ConfusionMatrix::read_tsv(bad_count), FormatError);
  std::istringstream short_row("gold\tassigned\tcount\nNN\tNN\n");
  EXPECT_THROW(ConfusionMatrix::read_tsv(short_row), FormatError);
}

TEST(Accuracy, Values) {
  ConfusionMatrix m;
  m.add(Tag::NN, Tag::NN, 151663);
  m.add(Tag::NN, Tag::NNP, 182399 - 151663);
  EXPECT_NEAR(tagging_accuracy(m), 0.8315, 0.0001);
  ConfusionMatrix wrong;
  wrong.add(Tag::NN, Tag::JJ, 5);
  EXPECT_DOUBLE_EQ(tagging_accuracy(wrong), 0.0);
  EXPECT_THROW(tagging_accuracy(ConfusionMatrix()), EmptyMatrix);
}

TEST(FScore, PublishedPairs) {
  EXPECT_NEAR(f_score(0.556, 0.198), 0.292, 0.001);
  EXPECT_NEAR(f_score(0.568, 0.248), 0.345, 0.001);
  EXPECT_NEAR(f_score(0.861, 0.307), 0.453, 0.001);
  EXPECT_NEAR(f_score(0.818, 0.356), 0.496, 0.001);
  EXPECT_DOUBLE_EQ(f_score(0, 0), 0.0);
}

DocRelation rel(const std::string &doc, const std::string &a, const std::string &b,
                bool directional) {
  return {doc, Relation{a, b, "", directional}};
}

TEST(RelationEval, DirectionMatters) {
  std::vector<DocRelation> gold{rel("d", "A", "B", true)};
  std::vector<DocRelation> pred{rel("d", "B", "A", true)};
  EXPECT_DOUBLE_EQ(evaluate_relations(pred, gold, true).precision, 0.0);
  EXPECT_DOUBLE_EQ(evaluate_relations(pred, gold, false).precision, 1.0);
}

TEST(RelationEval, CountsAndVerbsIgnored) {
  std::vector<DocRelation> gold{rel("d1", "A", "B", true), rel("d1", "C", "D", true),
                                rel("d2", "A", "B", true)};
  std::vector<DocRelation> pred{{"d1", Relation{"A", "B", "binds", true}},
                                {"d1", Relation{"A", "B", "activates", true}},
                                rel("d2", "C", "D", true)};
  auto r = evaluate_relations(pred, gold, true);
  EXPECT_EQ(r.true_positives, 1u);
  EXPECT_EQ(r.false_positives, 1u);
  EXPECT_EQ(r.false_negatives, 2u);
  EXPECT_DOUBLE_EQ(r.precision, 0.5);
  EXPECT_NEAR(r.recall, 1.0 / 3, 1e-12);
}

TEST(RelationEval, EmptyInputs) {
  auto r = evaluate_relations({}, {}, true);
  EXPECT_EQ(r.true_positives, 0u);
  EXPECT_DOUBLE_EQ(r.f_score, 0.0);
}

TEST(EvaluationProperties, MergeOverPartitions) {
  auto gold = random_tag_corpus(600, 1, 30, 10);
  auto pred = gold;
  std::mt19937_64 rng(10);
  for (auto &s : pred) {
    for (auto &t : s.tags) {
      if (rng() % 4 == 0) t = all_tags()[rng() % kNumTags];
    }
  }
  auto whole = build_confusion(gold, pred);
  for (std::size_t cut : {0u, 1u, 250u, 599u, 600u}) {
    std::vector<TaggedSentence> g1(gold.begin(), gold.begin() + cut), g2(gold.begin() + cut, gold.end());
    std::vector<TaggedSentence> p1(pred.begin(), pred.begin() + cut), p2(pred.begin() + cut, pred.end());
    auto a = build_confusion(g1, p1), b = build_confusion(g2, p2);
    auto ab = a, ba = b;
    ab += b;
    ba += a;
    EXPECT_EQ(ab, whole);
    EXPECT_EQ(ba, whole);
  }
  double acc = tagging_accuracy(whole);
  EXPECT_GE(acc, 0.0);
  EXPECT_LT(acc, 1.0);
}

TEST(EvaluationProperties, SwapPredictedAndGold) {
  std::mt19937_64 rng(21);
  const std::vector<std::string> names = {"A", "B", "C", "D"};
  for (int n = 0; n < 200; ++n) {
    std::vector<DocRelation> x, y;
    for (int k = 0; k < 6; ++k) {
      bool dir = n % 2;
      x.push_back(rel("d" + std::to_string(rng() % 2), names[rng() % 4], names[rng() % 4], dir));
      y.push_back(rel("d" + std::to_string(rng() % 2), names[rng() % 4], names[rng() % 4], dir));
    }
    for (bool directional : {true, false}) {
      auto xy = evaluate_relations(x, y, directional);
      auto yx = evaluate_relations(y, x, directional);
      EXPECT_EQ(xy.true_positives, yx.true_positives);
      EXPECT_EQ(xy.false_positives, yx.false_negatives);
      EXPECT_EQ(xy.false_negatives, yx.false_positives);
    }
  }
}

TEST(Reports, TsvLayout) {
  std::ostringstream out;
  write_report_tsv(EvalReport::from_counts(1, 1, 2), out);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "tp\tfp\tfn\tprecision\trecall\tf_score");
}

}  // namespace
}  // namespace tagimpact
