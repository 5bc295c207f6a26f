#include "tagimpact/perturb.h"

#include <algorithm>
#include <array>
#include <iomanip>
#include <random>

#include "tagimpact/chunking.h"
#include "tagimpact/errors.h"
#include "tagimpact/extraction.h"
#include "tagimpact/impact.h"

namespace tagimpact {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Everything a trial needs that does not depend on the trial.
struct Setup {
  // Cumulative counts per gold row.
  std::array<std::array<std::uint64_t, kNumTags>, kNumTags> cumulative{};
  std::array<std::array<Verdict, kNumTags>, kNumTags> verdicts{};
  std::vector<std::vector<ChunkSpan>> gold_spans;
  std::vector<std::vector<SvoTriple>> gold_triples;
};

Setup prepare(const std::vector<TaggedSentence> &gold, const ConfusionMatrix &m,
              std::uint32_t trials, const ChunkGrammar &grammar) {
  if (trials == 0) throw InvalidArgument("perturb_corpus: trials must be >= 1");
  Setup setup;
  for (PosTag g : all_tags()) {
    std::uint64_t running = 0;
    for (PosTag a : all_tags()) {
      running += m.count(g, a);
      setup.cumulative[g.index()][a.index()] = running;
      setup.verdicts[g.index()][a.index()] =
          classify_pair(g, a, grammar, false).verdict;
    }
  }
  for (const TaggedSentence &s : gold) {
    for (PosTag t : s.tags) {
      if (setup.cumulative[t.index()].back() == 0) {
        throw DegenerateMatrix("confusion row for " + serialize(t) +
                               " is empty but the tag occurs in the corpus");
      }
    }
  }
  setup.gold_spans.reserve(gold.size());
  setup.gold_triples.reserve(gold.size());
  for (const TaggedSentence &s : gold) {
    ChunkedSentence c = chunk_tagged(s, grammar);
    setup.gold_triples.push_back(extract_svo(c));
    setup.gold_spans.push_back(std::move(c.spans));
  }
  return setup;
}

TrialCounts run_trial(const std::vector<TaggedSentence> &gold, const Setup &setup,
                      std::uint64_t seed, std::uint32_t trial,
                      const ChunkGrammar &grammar) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial)));
  TrialCounts counts;
  counts.sentences = gold.size();
  for (std::size_t s = 0; s < gold.size(); ++s) {
    TaggedSentence perturbed = gold[s];
    bool any_detrimental = false;
    bool any_context = false;
    for (PosTag &t : perturbed.tags) {
      const auto &row = setup.cumulative[t.index()];
      std::uint64_t draw = rng() % row.back();
      auto it = std::upper_bound(row.begin(), row.end(), draw);
      PosTag sampled = all_tags()[static_cast<std::size_t>(it - row.begin())];
      if (sampled == t) continue;
      ++counts.substitutions;
      switch (setup.verdicts[t.index()][sampled.index()]) {
        case Verdict::Nullified: ++counts.nullified_substitutions; break;
        case Verdict::Detrimental:
          ++counts.detrimental_substitutions;
          any_detrimental = true;
          break;
        case Verdict::ContextDependent:
          ++counts.context_substitutions;
          any_context = true;
          break;
      }
      t = sampled;
    }

    const auto &triples = setup.gold_triples[s];
    counts.triples += triples.size();
    if (counts.substitutions == 0) continue;

    ChunkedSentence chunked = chunk_tagged(perturbed, grammar);
    if (chunked.spans != setup.gold_spans[s]) {
      ++counts.changed_sentences;
      if (any_detrimental) {
        ++counts.changed_with_detrimental;
      } else if (any_context) {
        ++counts.changed_context_only;
      } else {
        ++counts.changed_all_nullified;
      }
      auto now = extract_svo(chunked);
      for (const SvoTriple &t : triples) {
        if (std::find(now.begin(), now.end(), t) == now.end()) {
          ++counts.changed_triples;
        }
      }
    }
  }
  return counts;
}

}  // namespace

TrialCounts &TrialCounts::operator+=(const TrialCounts &o) {
  sentences += o.sentences;
  changed_sentences += o.changed_sentences;
  triples += o.triples;
  changed_triples += o.changed_triples;
  substitutions += o.substitutions;
  nullified_substitutions += o.nullified_substitutions;
  detrimental_substitutions += o.detrimental_substitutions;
  context_substitutions += o.context_substitutions;
  changed_all_nullified += o.changed_all_nullified;
  changed_with_detrimental += o.changed_with_detrimental;
  changed_context_only += o.changed_context_only;
  return *this;
}

double DegradationReport::changed_sentence_fraction() const {
  return total.sentences ? static_cast<double>(total.changed_sentences) /
                               static_cast<double>(total.sentences)
                         : 0.0;
}

double DegradationReport::changed_triple_fraction() const {
  return total.triples ? static_cast<double>(total.changed_triples) /
                             static_cast<double>(total.triples)
                       : 0.0;
}

DegradationReport perturb_corpus(const std::vector<TaggedSentence> &gold,
                                 const ConfusionMatrix &m, std::uint32_t trials,
                                 std::uint64_t seed, const ChunkGrammar &grammar) {
  const Setup setup = prepare(gold, m, trials, grammar);
  DegradationReport report;
  report.seed = seed;
  report.trials.resize(trials);
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < n; ++t) {
    report.trials[t] =
        run_trial(gold, setup, seed, static_cast<std::uint32_t>(t), grammar);
  }
  for (const TrialCounts &c : report.trials) report.total += c;
  return report;
}

DegradationReport perturb_corpus_serial(const std::vector<TaggedSentence> &gold,
                                        const ConfusionMatrix &m,
                                        std::uint32_t trials, std::uint64_t seed,
                                        const ChunkGrammar &grammar) {
  const Setup setup = prepare(gold, m, trials, grammar);
  DegradationReport report;
  report.seed = seed;
  for (std::uint32_t t = 0; t < trials; ++t) {
    report.trials.push_back(run_trial(gold, setup, seed, t, grammar));
    report.total += report.trials.back();
  }
  return report;
}

void write_degradation_tsv(const DegradationReport &report, std::ostream &out) {
  out << "trial\tsentences\tchanged_sentences\tchanged_sentence_fraction"
         "\ttriples\tchanged_triples\tchanged_triple_fraction\tsubstitutions"
         "\tnullified_substitutions\tdetrimental_substitutions"
         "\tcontext_substitutions\tchanged_all_nullified"
         "\tchanged_with_detrimental\tchanged_context_only\n";
  auto frac = [](std::uint64_t a, std::uint64_t b) {
    return b ? static_cast<double>(a) / static_cast<double>(b) : 0.0;
  };
  auto row = [&](const std::string &label, const TrialCounts &c) {
    out << label << '\t' << c.sentences << '\t' << c.changed_sentences << '\t'
        << std::fixed << std::setprecision(6)
        << frac(c.changed_sentences, c.sentences) << '\t' << c.triples << '\t'
        << c.changed_triples << '\t' << frac(c.changed_triples, c.triples)
        << '\t' << c.substitutions << '\t' << c.nullified_substitutions << '\t'
        << c.detrimental_substitutions << '\t' << c.context_substitutions
        << '\t' << c.changed_all_nullified << '\t' << c.changed_with_detrimental
        << '\t' << c.changed_context_only << '\n';
    out.unsetf(std::ios::fixed);
  };
  for (std::size_t t = 0; t < report.trials.size(); ++t) {
    row(std::to_string(t), report.trials[t]);
  }
  row("all", report.total);
}

}  // namespace tagimpact
