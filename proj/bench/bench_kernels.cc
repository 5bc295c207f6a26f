// Serial vs OpenMP timings for the three parallel kernels.
#include <benchmark/benchmark.h>

#include "tagimpact/chunking.h"
#include "tagimpact/perturb.h"
#include "tagimpact/stress.h"

using namespace tagimpact;

namespace {

const ChunkGrammar &grammar() {
  static const ChunkGrammar g = ChunkGrammar::canonical();
  return g;
}

const std::vector<TaggedSentence> &corpus() {
  static const auto c = random_tag_corpus(20000, 1, 40, 7);
  return c;
}

const std::vector<TagPair> &pairs() {
  static const auto p = pairs_within({{Tag::NN, Tag::NNS, Tag::NNP, Tag::JJ, Tag::VBG},
                                      {Tag::VBD, Tag::VBN, Tag::VB}});
  return p;
}

const ConfusionMatrix &matrix() {
  static const ConfusionMatrix m = [] {
    ConfusionMatrix m;
    for (PosTag t : all_tags()) m.add(t, t, 90);
    m.add(Tag::NN, Tag::NNP, 10);
    m.add(Tag::NN, Tag::VBG, 5);
    m.add(Tag::JJ, Tag::VBN, 8);
    m.add(Tag::VBD, Tag::VBN, 7);
    return m;
  }();
  return m;
}

const std::vector<TaggedSentence> &perturb_gold() {
  static const std::vector<TaggedSentence> g(corpus().begin(), corpus().begin() + 2000);
  return g;
}

void BM_ChunkSerial(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(chunk_corpus_serial(corpus(), grammar()));
  state.SetItemsProcessed(state.iterations() * corpus().size());
}

void BM_ChunkParallel(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(chunk_corpus(corpus(), grammar()));
  state.SetItemsProcessed(state.iterations() * corpus().size());
}

void BM_SweepSerial(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(substitution_sweep_serial(corpus(), pairs(), grammar()));
  }
}

void BM_SweepParallel(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(substitution_sweep(corpus(), pairs(), grammar()));
}

void BM_PerturbSerial(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(perturb_corpus_serial(perturb_gold(), matrix(), 20, 1, grammar()));
  }
}

void BM_PerturbParallel(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(perturb_corpus(perturb_gold(), matrix(), 20, 1, grammar()));
  }
}

}  // namespace

BENCHMARK(BM_ChunkSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ChunkParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PerturbSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PerturbParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
