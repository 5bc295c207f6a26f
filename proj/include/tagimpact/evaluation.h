#ifndef TAGIMPACT_EVALUATION_H_
#define TAGIMPACT_EVALUATION_H_

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "tagimpact/extraction.h"
#include "tagimpact/tagging.h"

namespace tagimpact {

// Gold x assigned tag counts.
class ConfusionMatrix {
 public:
  std::uint64_t count(PosTag gold, PosTag assigned) const {
    return counts_[gold.index()][assigned.index()];
  }
  void add(PosTag gold, PosTag assigned, std::uint64_t n = 1) {
    counts_[gold.index()][assigned.index()] += n;
    total_ += n;
  }

  std::uint64_t total() const { return total_; }
  std::uint64_t diagonal() const;
  std::uint64_t row_total(PosTag gold) const;
  std::uint64_t errors() const { return total_ - diagonal(); }

  ConfusionMatrix &operator+=(const ConfusionMatrix &other);
  friend bool operator==(const ConfusionMatrix &, const ConfusionMatrix &) = default;

  // TSV "gold<TAB>assigned<TAB>count" with a header line; zero cells omitted.
  void write_tsv(std::ostream &out) const;
  static ConfusionMatrix read_tsv(std::istream &in);

 private:
  std::array<std::array<std::uint64_t, kNumTags>, kNumTags> counts_{};
  std::uint64_t total_ = 0;
};

// Throws AlignmentError unless both corpora have the same sentences and
// token texts.
ConfusionMatrix build_confusion(const std::vector<TaggedSentence> &gold,
                                const std::vector<TaggedSentence> &predicted);

// Diagonal / total. Throws EmptyMatrix when total is 0.
double tagging_accuracy(const ConfusionMatrix &m);

struct EvalReport {
  std::uint64_t true_positives = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;
  double precision = 0;
  double recall = 0;
  double f_score = 0;

  static EvalReport from_counts(std::uint64_t tp, std::uint64_t fp,
                                std::uint64_t fn);
};

// Harmonic mean; 0 when p + r == 0.
double f_score(double precision, double recall);

// Pairs are matched on (doc, agent, target), ordered when directional and
// unordered otherwise; verbs are ignored.
EvalReport evaluate_relations(const std::vector<DocRelation> &predicted,
                              const std::vector<DocRelation> &gold,
                              bool directional);

// TSV header + one row: tp fp fn precision recall f_score.
void write_report_tsv(const EvalReport &report, std::ostream &out);
// Human-readable table.
void write_report_text(const EvalReport &report, std::ostream &out);

}  // namespace tagimpact

#endif  // TAGIMPACT_EVALUATION_H_
