#ifndef TAGIMPACT_STRESS_H_
#define TAGIMPACT_STRESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tagimpact/grammar.h"
#include "tagimpact/impact.h"
#include "tagimpact/tagging.h"

namespace tagimpact {

// Sentences of uniformly random tags (every member of the closed set) with
// lengths uniform in [min_length, max_length]. Words are "w<i>".
std::vector<TaggedSentence> random_tag_corpus(std::size_t sentences,
                                              std::size_t min_length,
                                              std::size_t max_length,
                                              std::uint64_t seed);

struct SubstitutionStats {
  TagPair pair;
  std::uint64_t trials = 0;   // positions holding the gold tag
  std::uint64_t changed = 0;  // substitutions that changed the spans
  // Smallest (sentence, position) where the spans changed.
  std::optional<std::pair<std::size_t, std::size_t>> first_counterexample;

  friend bool operator==(const SubstitutionStats &, const SubstitutionStats &) = default;
};

// Applies the substitution oracle to every position of every sentence for
// every pair whose gold tag sits there. Parallel over sentences; the result
// does not depend on the thread count. Output order follows `pairs`.
std::vector<SubstitutionStats> substitution_sweep(
    const std::vector<TaggedSentence> &corpus, const std::vector<TagPair> &pairs,
    const ChunkGrammar &grammar);

// Serial reference for substitution_sweep.
std::vector<SubstitutionStats> substitution_sweep_serial(
    const std::vector<TaggedSentence> &corpus, const std::vector<TagPair> &pairs,
    const ChunkGrammar &grammar);

// All ordered pairs of distinct tags within each class.
std::vector<TagPair> pairs_within(const std::vector<std::vector<PosTag>> &classes);

}  // namespace tagimpact

#endif  // TAGIMPACT_STRESS_H_
