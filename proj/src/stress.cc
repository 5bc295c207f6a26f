#include "tagimpact/stress.h"

#include <algorithm>
#include <random>

#include "tagimpact/chunking.h"

namespace tagimpact {
namespace {

struct Accumulator {
  std::vector<SubstitutionStats> stats;

  void merge(const Accumulator &other) {
    for (std::size_t k = 0; k < stats.size(); ++k) {
      auto &mine = stats[k];
      const auto &theirs = other.stats[k];
      mine.trials += theirs.trials;
      mine.changed += theirs.changed;
      if (theirs.first_counterexample &&
          (!mine.first_counterexample ||
           *theirs.first_counterexample < *mine.first_counterexample)) {
        mine.first_counterexample = theirs.first_counterexample;
      }
    }
  }
};

std::vector<std::vector<std::size_t>> index_by_gold(const std::vector<TagPair> &pairs) {
  std::vector<std::vector<std::size_t>> by_gold(kNumTags);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    by_gold[pairs[k].first.index()].push_back(k);
  }
  return by_gold;
}

Accumulator empty_accumulator(const std::vector<TagPair> &pairs) {
  Accumulator acc;
  acc.stats.resize(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) acc.stats[k].pair = pairs[k];
  return acc;
}

void sweep_sentence(const TaggedSentence &sentence, std::size_t index,
                    const std::vector<std::vector<std::size_t>> &by_gold,
                    const std::vector<TagPair> &pairs,
                    const ChunkGrammar &grammar, Accumulator &acc) {
  const auto original = chunk_tags(sentence.tags, grammar);
  std::vector<PosTag> tags = sentence.tags;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const PosTag gold = tags[i];
    for (std::size_t k : by_gold[gold.index()]) {
      tags[i] = pairs[k].second;
      auto &s = acc.stats[k];
      ++s.trials;
      if (chunk_tags(tags, grammar) != original) {
        ++s.changed;
        std::pair<std::size_t, std::size_t> where{index, i};
        if (!s.first_counterexample || where < *s.first_counterexample) {
          s.first_counterexample = where;
        }
      }
    }
    tags[i] = gold;
  }
}

}  // namespace

std::vector<TaggedSentence> random_tag_corpus(std::size_t sentences,
                                              std::size_t min_length,
                                              std::size_t max_length,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TaggedSentence> corpus(sentences);
  const std::uint64_t span = max_length - min_length + 1;
  for (std::size_t s = 0; s < sentences; ++s) {
    std::size_t len = min_length + static_cast<std::size_t>(rng() % span);
    TaggedSentence &out = corpus[s];
    out.source = {"stress", s};
    for (std::size_t i = 0; i < len; ++i) {
      out.words.push_back("w" + std::to_string(i));
      out.tags.push_back(all_tags()[rng() % kNumTags]);
    }
  }
  return corpus;
}

std::vector<SubstitutionStats> substitution_sweep(
    const std::vector<TaggedSentence> &corpus, const std::vector<TagPair> &pairs,
    const ChunkGrammar &grammar) {
  const auto by_gold = index_by_gold(pairs);
  Accumulator total = empty_accumulator(pairs);
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel
  {
    Accumulator local = empty_accumulator(pairs);
#pragma omp for schedule(dynamic, 32) nowait
    for (std::ptrdiff_t s = 0; s < n; ++s) {
      sweep_sentence(corpus[s], static_cast<std::size_t>(s), by_gold, pairs,
                     grammar, local);
    }
#pragma omp critical(tagimpact_sweep_merge)
    total.merge(local);
  }
  return total.stats;
}

std::vector<SubstitutionStats> substitution_sweep_serial(
    const std::vector<TaggedSentence> &corpus, const std::vector<TagPair> &pairs,
    const ChunkGrammar &grammar) {
  const auto by_gold = index_by_gold(pairs);
  Accumulator acc = empty_accumulator(pairs);
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    sweep_sentence(corpus[s], s, by_gold, pairs, grammar, acc);
  }
  return acc.stats;
}

std::vector<TagPair> pairs_within(const std::vector<std::vector<PosTag>> &classes) {
  std::vector<TagPair> pairs;
  for (const auto &cls : classes) {
    for (PosTag a : cls) {
      for (PosTag b : cls) {
        if (a != b) pairs.emplace_back(a, b);
      }
    }
  }
  return pairs;
}

}  // namespace tagimpact
