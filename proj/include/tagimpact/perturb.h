#ifndef TAGIMPACT_PERTURB_H_
#define TAGIMPACT_PERTURB_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "tagimpact/evaluation.h"
#include "tagimpact/grammar.h"
#include "tagimpact/tagging.h"

namespace tagimpact {

// Counts from one Monte Carlo trial (or the sum over trials).
struct TrialCounts {
  std::uint64_t sentences = 0;
  std::uint64_t changed_sentences = 0;  // chunk spans differ from gold
  std::uint64_t triples = 0;            // SVO triples in the gold chunking
  std::uint64_t changed_triples = 0;    // gold triples not reproduced
  std::uint64_t substitutions = 0;      // tokens whose tag was resampled away
  // Substitutions by the (non-compat) verdict of their (gold, assigned) pair.
  std::uint64_t nullified_substitutions = 0;
  std::uint64_t detrimental_substitutions = 0;
  std::uint64_t context_substitutions = 0;
  // Changed sentences by the worst verdict among their substitutions.
  std::uint64_t changed_all_nullified = 0;
  std::uint64_t changed_with_detrimental = 0;
  std::uint64_t changed_context_only = 0;

  TrialCounts &operator+=(const TrialCounts &o);
  friend bool operator==(const TrialCounts &, const TrialCounts &) = default;
};

struct DegradationReport {
  std::uint64_t seed = 0;
  std::vector<TrialCounts> trials;
  TrialCounts total;

  double changed_sentence_fraction() const;
  double changed_triple_fraction() const;

  friend bool operator==(const DegradationReport &, const DegradationReport &) = default;
};

// For each trial, replaces every gold tag by a draw from its row of `m`,
// re-chunks and re-extracts, and counts what changed. Trials are independent
// with seeds derived from (seed, trial index), so the report depends only on
// the inputs. Throws InvalidArgument for trials == 0 and DegenerateMatrix when
// a gold tag of the corpus has an all-zero row.
DegradationReport perturb_corpus(const std::vector<TaggedSentence> &gold,
                                 const ConfusionMatrix &m, std::uint32_t trials,
                                 std::uint64_t seed, const ChunkGrammar &grammar);

// Serial reference for perturb_corpus.
DegradationReport perturb_corpus_serial(const std::vector<TaggedSentence> &gold,
                                        const ConfusionMatrix &m,
                                        std::uint32_t trials, std::uint64_t seed,
                                        const ChunkGrammar &grammar);

// Per-trial rows plus an "all" row.
void write_degradation_tsv(const DegradationReport &report, std::ostream &out);

}  // namespace tagimpact

#endif  // TAGIMPACT_PERTURB_H_
