#ifndef TAGIMPACT_IMPACT_H_
#define TAGIMPACT_IMPACT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tagimpact/evaluation.h"
#include "tagimpact/grammar.h"

namespace tagimpact {

// Errors for one gold tag, broken down by the tag assigned instead.
struct TagErrorGroup {
  struct Subgroup {
    PosTag assigned;
    std::uint64_t count = 0;
    double cumulative_fraction = 0;  // within this group, inclusive
  };

  PosTag gold;
  std::uint64_t total = 0;
  std::vector<Subgroup> subgroups;  // count descending, ties by tag name
  double cumulative_fraction = 0;   // of all errors, inclusive of this group
};

// One group per gold tag with off-diagonal mass, largest first (ties by tag
// name). Diagonal cells are ignored.
std::vector<TagErrorGroup> group_errors(const ConfusionMatrix &m);

using TagPair = std::pair<PosTag, PosTag>;  // (gold, assigned)

// Takes groups while the mass accumulated before them is below
// `group_threshold`, and inside each taken group takes subgroups the same way
// against `subgroup_threshold`. Thresholds must lie in (0, 1].
std::vector<TagPair> select_examined(const std::vector<TagErrorGroup> &groups,
                                     double group_threshold,
                                     double subgroup_threshold);

// Same, for an explicit list of gold tags instead of a group threshold.
std::vector<TagPair> select_examined(const std::vector<TagErrorGroup> &groups,
                                     const std::vector<PosTag> &gold_tags,
                                     double subgroup_threshold);

// NN, JJ, NNS, SYM, VBP, VBD: the six examined error groups of the reference table.
const std::vector<PosTag> &reference_examined_tags();

enum class Verdict : std::uint8_t { Nullified, Detrimental, ContextDependent };

std::string_view verdict_name(Verdict v);
Verdict parse_verdict(std::string_view text);

struct ImpactVerdict {
  Verdict verdict = Verdict::Nullified;
  std::string reason;
};

// Decides whether tagging `gold` as `assigned` can change the chunker output.
//
//   identical tags or identical occurrence profiles   -> Nullified
//   exactly one side is a protected verb tag           -> Detrimental
//   profiles share no position                         -> Detrimental
//   otherwise                                          -> ContextDependent
//
// With paper_compat the answer is collapsed to the binary reference table:
// ContextDependent pairs sharing an NP modifier/head position count as
// Nullified, the rest as Detrimental, and the 18 rows of the reference verdict
// table override the rule.
ImpactVerdict classify_pair(PosTag gold, PosTag assigned,
                            const ChunkGrammar &grammar, bool paper_compat);

struct ReferenceVerdict {
  PosTag gold;
  PosTag assigned;
  Verdict verdict;
  std::string reason;
};

// The reference verdict table (18 rows).
const std::vector<ReferenceVerdict> &reference_verdicts();

// TSV "gold<TAB>assigned<TAB>verdict<TAB>reason" with a header line.
std::vector<ReferenceVerdict> read_verdicts_tsv(std::istream &in);
void write_verdicts_tsv(const std::vector<ReferenceVerdict> &rows,
                        std::ostream &out);

// True iff replacing the tag at `position` by `assigned` leaves the chunk
// spans of the sentence unchanged.
bool substitution_oracle(const TaggedSentence &tagged, std::size_t position,
                         PosTag assigned, const ChunkGrammar &grammar);

struct AccuracyReport {
  std::uint64_t total_tokens = 0;
  std::uint64_t correct_tokens = 0;
  std::uint64_t examined_errors = 0;
  std::uint64_t nullified_errors = 0;
  double raw_accuracy = 0;
  double functional_accuracy = 0;
};

using VerdictMap = std::map<TagPair, ImpactVerdict>;

// (correct + nullified) / total. Error cells without a verdict count as
// detrimental, so this is a lower bound. Throws EmptyMatrix.
AccuracyReport functional_accuracy(const ConfusionMatrix &m,
                                   const VerdictMap &verdicts);

// Text summary of groups, examined pairs and verdicts.
void write_impact_report(const std::vector<TagErrorGroup> &groups,
                         const std::vector<TagPair> &examined,
                         const VerdictMap &verdicts,
                         const AccuracyReport &accuracy, std::ostream &out);

}  // namespace tagimpact

#endif  // TAGIMPACT_IMPACT_H_
